"""Exact computation of spin-colored so(2n+1) and colored sl_N link polynomials."""

__version__ = "0.1.0"
