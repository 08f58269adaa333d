from typing import Optional

from pydantic import BaseModel, root_validator


class HypParams(BaseModel):
    """Parameters (a, b; c) of the Gauss hypergeometric function F(a, b; c; z)."""
    a: float
    b: Optional[float] = None  # defaults to a
    c: float = 1.0

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check(cls, values):
        if values.get("b") is None:
            values["b"] = values["a"]
        c = values["c"]
        if c <= 0 and c == round(c):
            raise ValueError(f"c must not be a nonpositive integer, got {c}")
        return values

    def shifted(self, k: int = 1) -> "HypParams":
        """(a+k, b+k; c+k), the parameters of the k-th z-derivative."""
        return HypParams(a=self.a + k, b=self.b + k, c=self.c + k)
