"""
Certified enclosures of zeta(s) - 1 and of the prime zeta function P(s).

Partial sums run in dyadic fixed point: each term is rounded down into the
lower accumulator and up into the upper one, so the enclosure stays sound
while numerators grow only linearly in the precision. With
`precision_bits=None` the partial sum is accumulated as an exact Fraction.
Tails are bounded by the integral pair

    (M+1)^(1-s)/(s-1) < sum_{i>M} i^-s < M^(1-s)/(s-1)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from zetafrac.arith.enclosure import Enclosure
from zetafrac.exceptions import DomainError
from zetafrac.series.primes import PrimeTable

MIN_PRIME_LIMIT = 5


@dataclass(frozen=True, slots=True)
class SeriesRequest:
    s: int | Fraction
    terms: int
    precision_bits: int | None = None

    def __post_init__(self):
        if self.s <= 1:
            raise DomainError(f"series diverges for s={self.s}")
        if self.terms < 2:
            raise DomainError(f"at least two terms are required, got {self.terms}")
        if self.precision_bits is not None and self.precision_bits < 1:
            raise DomainError(f"precision_bits must be positive, got {self.precision_bits}")


def _integer_exponent(s) -> int:
    if isinstance(s, bool) or Fraction(s).denominator != 1:
        raise DomainError(f"certified mode needs an integer exponent, got s={s}")
    s = int(s)
    if s < 2:
        raise DomainError(f"certified mode needs s >= 2, got s={s}")
    return s


def _power_sum(bases: Sequence[int], s: int, bits: int | None) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds of sum(b**-s for b in bases); bases ascending."""
    if bits is None:
        total = sum((Fraction(1, b ** s) for b in bases), Fraction(0))
        return total, total

    scale = 1 << bits
    lo = hi = 0
    for idx, b in enumerate(bases):
        t = b ** s
        if t > scale:
            # every remaining term lies in (0, 2^-bits)
            hi += len(bases) - idx
            break
        q, r = divmod(scale, t)
        lo += q
        hi += q + (1 if r else 0)
    return Fraction(lo, scale), Fraction(hi, scale)


def _tail_bound(start: int, s: int, bits: int | None, upward: bool) -> Fraction:
    """start^(1-s)/(s-1), rounded to 2^-bits in the requested direction."""
    den = (s - 1) * start ** (s - 1)
    if bits is None:
        return Fraction(1, den)
    scale = 1 << bits
    num = -((-scale) // den) if upward else scale // den
    return Fraction(num, scale)


def zeta_minus1(req: SeriesRequest) -> Enclosure:
    s = _integer_exponent(req.s)
    m = req.terms
    lo, hi = _power_sum(range(2, m + 1), s, req.precision_bits)
    t_lo = _tail_bound(m + 1, s, req.precision_bits, upward=False)
    t_hi = _tail_bound(m, s, req.precision_bits, upward=True)
    return Enclosure(lo + t_lo, hi + t_hi)


def prime_zeta(req: SeriesRequest, table: PrimeTable) -> Enclosure:
    """Enclosure of P(s) from the primes <= table.limit; req.terms is not used."""
    s = _integer_exponent(req.s)
    if table.limit < MIN_PRIME_LIMIT:
        raise DomainError(f"prime table limit must be >= {MIN_PRIME_LIMIT}, got {table.limit}")
    lo, hi = _power_sum(table.primes, s, req.precision_bits)
    return Enclosure(lo, hi + _tail_bound(table.limit, s, req.precision_bits, upward=True))
