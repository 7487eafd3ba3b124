"""Certified arithmetic for floor(1/(zeta(n) - 1)) and the fractional parts of (4/3)^n."""

__version__ = "0.1.0"
