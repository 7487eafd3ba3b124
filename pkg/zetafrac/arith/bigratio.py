"""
Exact integer and rational arithmetic.

Rational is the standard library Fraction: canonical after every operation,
hashable, immutable. Large modular powers go through gmpy2.
"""
from __future__ import annotations

import decimal
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

import gmpy2

from zetafrac.exceptions import DomainError

Rational = Fraction

ROUND_FLOOR = "floor"
ROUND_CEILING = "ceiling"
ROUND_NEAREST = "nearest"

_DECIMAL_ROUNDING = {
    ROUND_FLOOR: decimal.ROUND_FLOOR,
    ROUND_CEILING: decimal.ROUND_CEILING,
    ROUND_NEAREST: decimal.ROUND_HALF_EVEN,
}


def rat(num: int, den: int = 1) -> Rational:
    """Canonical rational num/den with the sign on the numerator."""
    if den == 0:
        raise DomainError(f"zero denominator in rat({num}, {den})")
    return Fraction(int(num), int(den))


def as_rational(value: Rational | int | str) -> Rational:
    """Accept ints, Fractions and decimal or 'a/b' strings ('1e-9', '2/3')."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise DomainError(f"not a rational value: {value!r}", e)


def int_text(value: int) -> str:
    """Base-10 digits of an integer of any size; str() refuses past the interpreter's digit limit."""
    return gmpy2.mpz(value).digits(10)


def int_from_text(text: str) -> int:
    return int(gmpy2.mpz(text, 10))


def rational_text(x: Rational | int) -> str:
    """'num/den', or 'num' for integers: str(Fraction) without the digit limit."""
    x = Fraction(x)
    if x.denominator == 1:
        return int_text(x.numerator)
    return f"{int_text(x.numerator)}/{int_text(x.denominator)}"


def _json_scalar(value) -> str:
    if isinstance(value, Fraction):
        return json.dumps(rational_text(value))
    if isinstance(value, Enum):
        value = value.value
    return json.dumps(value, default=str)


def json_text(value) -> str:
    """Compact JSON with integers of any size written as JSON numbers.

    Fractions become 'num/den' strings. Read it back with
    json.loads(text, parse_int=int_from_text).
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return int_text(value)
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{json_text(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(json_text(v) for v in value) + "]"
    return _json_scalar(value)


def floor_rational(x: Rational) -> int:
    return x.numerator // x.denominator


def ceil_rational(x: Rational) -> int:
    return -((-x.numerator) // x.denominator)


def frac_part(x: Rational) -> Rational:
    return x - floor_rational(x)


@dataclass(frozen=True, slots=True)
class RationalPower:
    """(p/q)^n split as int_part + frac_num / q^n."""

    p: int
    q: int
    n: int
    frac_num: int
    den: int
    int_part: int | None = None

    @property
    def fraction(self) -> Rational:
        # gcd(p^n mod q^n, q^n) = gcd(p^n, q^n) = 1, so this is already canonical
        return Fraction(self.frac_num, self.den)

    @property
    def value(self) -> Rational:
        if self.int_part is None:
            raise DomainError("integer part was not requested for this power")
        return self.int_part + self.fraction


def pow_decompose(p: int, q: int, n: int, *, with_int_part: bool = True) -> RationalPower:
    """Exact integer/fractional split of (p/q)^n via p^n mod q^n."""
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (p, q, n)):
        raise DomainError(f"pow_decompose expects integers, got ({p!r}, {q!r}, {n!r})")
    if q < 1 or p <= q:
        raise DomainError(f"pow_decompose requires p > q >= 1, got p={p} q={q}")
    if gcd(p, q) != 1:
        raise DomainError(f"pow_decompose requires coprime p, q, got p={p} q={q}")
    if n < 0:
        raise DomainError(f"pow_decompose requires n >= 0, got n={n}")

    if n == 0:
        return RationalPower(p=p, q=q, n=0, frac_num=0, den=1, int_part=1)

    den = gmpy2.mpz(q) ** n
    frac_num = gmpy2.powmod(p, n, den)
    int_part = None
    if with_int_part:
        int_part = int((gmpy2.mpz(p) ** n - frac_num) // den)
    return RationalPower(p=p, q=q, n=n, frac_num=int(frac_num), den=int(den), int_part=int_part)


def frac_lt(rp: RationalPower, bound: Rational) -> bool:
    """{(p/q)^n} < bound, by cross-multiplication."""
    if bound < 0:
        raise DomainError(f"frac_lt bound must be non-negative, got {bound}")
    return rp.frac_num * bound.denominator < bound.numerator * rp.den


def to_decimal(x: Rational, digits: int = 60, rounding: str = ROUND_NEAREST) -> str:
    """Scientific-notation rendering of an exact rational with `digits` significant digits.

    floor/ceiling give directed results, so [to_decimal(lo, floor), to_decimal(hi, ceiling)]
    still contains the enclosed value.
    """
    return decimal_from_parts(x.numerator, x.denominator, digits, rounding)


def decimal_from_parts(num: int, den: int, digits: int = 60, rounding: str = ROUND_NEAREST) -> str:
    """to_decimal of num/den, den > 0, without reducing the fraction first."""
    if rounding not in _DECIMAL_ROUNDING:
        raise DomainError(f"unknown rounding mode {rounding!r}")
    if den <= 0:
        raise DomainError(f"denominator must be positive, got {den}")
    num, den = int(num), int(den)
    if num == 0:
        return "0"

    # Scale so the integer quotient carries a few digits more than requested.
    shift = digits + 3 + max(0, (den.bit_length() - abs(num).bit_length()) * 30103 // 100000 + 1)
    scaled = num * 10 ** shift
    if rounding == ROUND_CEILING:
        quotient = -((-scaled) // den)
    else:
        quotient = scaled // den
    exact_tail = quotient * den == scaled

    ctx = decimal.Context(prec=digits, rounding=_DECIMAL_ROUNDING[rounding], Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN)
    value = decimal.Decimal(quotient).scaleb(-shift, context=decimal.Context(prec=decimal.MAX_PREC, Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN))
    if rounding == ROUND_NEAREST and not exact_tail:
        # push a sticky digit so a truncated ...5000 does not round half-even downward
        value = value.fma(1, decimal.Decimal(1).scaleb(-shift - 1), context=decimal.Context(prec=decimal.MAX_PREC, Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN))
    return format(ctx.plus(value), "E")
