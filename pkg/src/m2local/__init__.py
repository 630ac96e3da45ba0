"""Exact computation of Euler characteristics of symplectic local systems on M_1,1 and M_2."""

__version__ = "0.1.0"
