"""
Float-contract evaluation for non-integer exponents.

Terms i^-s are computed with mpmath at `prec = max(64, 3*ceil(s) + 64)` bits
(plus 64 per refinement level). Each mpmath power, sum and tail is taken to
carry a relative error of at most 2^(4 - prec) <= 2^-60; the accumulated
budget is added on both sides before the result is handed back as an exact
rational Enclosure. The result is trustworthy under that error model only,
and records built from it say "contract": "float".
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil

import mpmath

from zetafrac.arith.enclosure import Enclosure, enc_recip
from zetafrac.exceptions import DomainError
from zetafrac.series.primes import PrimeTable, sieve
from zetafrac.series.schedule import BITS_PER_LEVEL, DEFAULT_PRIME_LIMIT, MIN_TERMS, cap_level
from zetafrac.series.zeta import MIN_PRIME_LIMIT
from zetafrac.settings import settings

ULP_SLACK_BITS = 4


def float_precision(s: Fraction, precision_bits: int | None = None) -> int:
    return max(64, precision_bits or 3 * ceil(s) + 64)


def mpf_to_rational(x: mpmath.mpf) -> Fraction:
    man, exp = x.man_exp
    if exp >= 0:
        return Fraction(int(man) << exp)
    return Fraction(int(man), 1 << -exp)


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _widen(value: mpmath.mpf, ops: int, prec: int) -> Enclosure:
    center = mpf_to_rational(value)
    err = abs(center) * ops * Fraction(1, 1 << (prec - ULP_SLACK_BITS))
    return Enclosure(center - err, center + err)


def _check_real_exponent(s) -> Fraction:
    s = Fraction(s)
    if s <= 1:
        raise DomainError(f"series diverges for s={s}")
    return s


def float_power(base: Fraction, s: Fraction, prec: int) -> Enclosure:
    """Enclosure of base^s for base > 0 under the float contract."""
    if base <= 0:
        raise DomainError(f"float_power needs a positive base, got {base}")
    with mpmath.workprec(prec):
        value = mpmath.power(_mpf(Fraction(base)), _mpf(Fraction(s)))
    return _widen(value, 2, prec)


def _power_sum(bases, s: Fraction, prec: int) -> tuple[mpmath.mpf, int]:
    with mpmath.workprec(prec):
        neg_s = -_mpf(s)
        total = mpmath.fsum(mpmath.power(b, neg_s) for b in bases)
    return total, len(bases)


def zeta_minus1_real(s, terms: int, prec: int) -> Enclosure:
    s = _check_real_exponent(s)
    if terms < 2:
        raise DomainError(f"at least two terms are required, got {terms}")
    total, count = _power_sum(range(2, terms + 1), s, prec)
    with mpmath.workprec(prec):
        sm1 = _mpf(s - 1)
        t_lo = mpmath.power(terms + 1, -sm1) / sm1
        t_hi = mpmath.power(terms, -sm1) / sm1
    body = _widen(total, count + 2, prec)
    return Enclosure(body.lo + _widen(t_lo, 3, prec).lo, body.hi + _widen(t_hi, 3, prec).hi)


def prime_zeta_real(s, table: PrimeTable, prec: int) -> Enclosure:
    s = _check_real_exponent(s)
    if table.limit < MIN_PRIME_LIMIT:
        raise DomainError(f"prime table limit must be >= {MIN_PRIME_LIMIT}, got {table.limit}")
    total, count = _power_sum(table.primes, s, prec)
    with mpmath.workprec(prec):
        sm1 = _mpf(s - 1)
        tail = mpmath.power(table.limit, -sm1) / sm1
    body = _widen(total, count + 2, prec)
    return Enclosure(body.lo, body.hi + _widen(tail, 3, prec).hi)


class RealZetaSchedule:
    """Float-contract counterpart of ZetaSchedule and PrimeSchedule for rational s."""

    def __init__(
        self,
        s,
        prime_limit: int = DEFAULT_PRIME_LIMIT,
        precision_bits: int | None = None,
        max_level: int | None = None,
    ):
        self.s = _check_real_exponent(s)
        self.prime_limit = prime_limit
        self.base_prec = float_precision(self.s, precision_bits)
        self.max_level = settings.max_level if max_level is None else max_level
        self._zeta: dict[int, Enclosure] = {}
        self._pzeta: dict[int, Enclosure] = {}

    def prec(self, level: int) -> int:
        return self.base_prec + BITS_PER_LEVEL * cap_level(level, self.max_level)

    def terms(self, level: int) -> int:
        return max(MIN_TERMS, ceil(self.s)) << cap_level(level, self.max_level)

    def zeta(self, level: int) -> Enclosure:
        level = cap_level(level, self.max_level)
        if level not in self._zeta:
            self._zeta[level] = zeta_minus1_real(self.s, self.terms(level), self.prec(level))
        return self._zeta[level]

    def pzeta(self, level: int) -> Enclosure:
        level = cap_level(level, self.max_level)
        if level not in self._pzeta:
            self._pzeta[level] = prime_zeta_real(self.s, sieve(self.prime_limit << level), self.prec(level))
        return self._pzeta[level]

    def recip_zeta(self, level: int) -> Enclosure:
        return enc_recip(self.zeta(level))

    def recip_pzeta(self, level: int) -> Enclosure:
        return enc_recip(self.pzeta(level))
