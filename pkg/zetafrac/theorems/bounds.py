"""
Exact bound functions and proof witnesses, all as rationals.

    eps_x(s)  = (2x)^s * ((2/3)^s + (1/2)^s)^2 = (2x)^s * (4^s + 3^s)^2 / 36^s
    eps(s)    = eps_1(s)
    delta(s)  = 2^s * ((2/3)^s + (2/5)^s)^2 - (4/5)^s
"""
from __future__ import annotations

from fractions import Fraction

from zetafrac.arith.bigratio import Rational, as_rational
from zetafrac.exceptions import DomainError

MIN_GAP_EXPONENT = 7


def _check_exponent(s: int) -> None:
    if isinstance(s, bool) or not isinstance(s, int) or s < 0:
        raise DomainError(f"exponent must be a non-negative integer, got {s!r}")


def eval_epsilon(x: Rational | int, s: int) -> Rational:
    x = as_rational(x)
    if x <= 0:
        raise DomainError(f"eval_epsilon requires x > 0, got {x}")
    _check_exponent(s)
    return (2 * x) ** s * Fraction((4 ** s + 3 ** s) ** 2, 36 ** s)


def eval_delta(s: int) -> Rational:
    _check_exponent(s)
    return 2 ** s * (Fraction(2, 3) ** s + Fraction(2, 5) ** s) ** 2 - Fraction(4, 5) ** s


def zeta_lower_witness(n: int) -> Rational:
    """Auxiliary function of the lower zeta bound's proof by contradiction.

    The bound holds at n as soon as this is positive:
    5^n/(6^n - 4^n - 3^n) * ((16^n + 9^n)/12^n + 2) - (n + 4)/(n - 1).
    """
    if n < 2:
        raise DomainError(f"zeta_lower_witness requires n >= 2, got {n}")
    return (
        Fraction(5 ** n, 6 ** n - 4 ** n - 3 ** n) * (Fraction(16 ** n + 9 ** n, 12 ** n) + 2)
        - Fraction(n + 4, n - 1)
    )


def prime_lower_witness(s: int) -> Rational:
    """10^s/(9^s - 6^s) - (2s + 3)/(2s - 2); positive exactly where the lower prime bound's proof closes."""
    if s < 2:
        raise DomainError(f"prime_lower_witness requires s >= 2, got {s}")
    return Fraction(10 ** s, 9 ** s - 6 ** s) - Fraction(2 * s + 3, 2 * s - 2)
