from .runner import RunResult, run

__all__ = ["RunResult", "run"]
