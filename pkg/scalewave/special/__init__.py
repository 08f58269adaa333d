from .hypergeom import hyp2f1, hyp2f1_connection, hyp2f1_deriv, hyp2f1_series

__all__ = ["hyp2f1", "hyp2f1_connection", "hyp2f1_deriv", "hyp2f1_series"]
