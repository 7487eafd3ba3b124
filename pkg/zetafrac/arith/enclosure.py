"""
Interval arithmetic over exact rational endpoints.

Every operation returns an interval containing the exact result whenever the
inputs contain their values. No endpoint is ever rounded except through
`Enclosure.simplified`, which rounds outward.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from zetafrac.arith.bigratio import Rational, ceil_rational, floor_rational, rational_text
from zetafrac.exceptions import DomainError, IntegrityError, StraddlesIntegerError

DEFAULT_MAX_ROUNDS = 64


@dataclass(frozen=True, slots=True)
class Enclosure:
    lo: Rational
    hi: Rational

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise DomainError(f"enclosure endpoints out of order: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: Rational | int) -> "Enclosure":
        return cls(value, value)

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Rational | int) -> bool:
        return self.lo <= value <= self.hi

    def contains_integer(self) -> bool:
        return ceil_rational(self.lo) <= self.hi

    def endpoints_text(self) -> list[str]:
        return [rational_text(self.lo), rational_text(self.hi)]

    def is_subset(self, other: "Enclosure") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def strictly_inside(self, lower: Rational | None, upper: Rational | None) -> bool:
        """lower < lo and hi < upper; a None bound is unbounded."""
        return (lower is None or lower < self.lo) and (upper is None or self.hi < upper)

    def outside(self, lower: Rational | None, upper: Rational | None) -> bool:
        """Every point of the enclosure violates (lower, upper)."""
        return (lower is not None and self.hi <= lower) or (upper is not None and self.lo >= upper)

    def intersect(self, other: "Enclosure") -> "Enclosure":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise IntegrityError(
                "two enclosures of the same value are disjoint",
                evidence={"first": self.endpoints_text(), "second": other.endpoints_text()},
            )
        return Enclosure(lo, hi)

    def simplified(self, bits: int) -> "Enclosure":
        """Round outward to denominators 2**bits once the exact endpoints outgrow that."""
        if max(self.lo.denominator, self.hi.denominator).bit_length() <= bits:
            return self
        scale = 1 << bits
        lo = Fraction(floor_rational(self.lo * scale), scale)
        hi = Fraction(ceil_rational(self.hi * scale), scale)
        return Enclosure(lo, hi)

    def __add__(self, other):
        return enc_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return enc_sub(self, _coerce(other))

    def __rsub__(self, other):
        return enc_sub(_coerce(other), self)

    def __mul__(self, other):
        return enc_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return enc_neg(self)

    def __repr__(self):
        lo, hi = self.endpoints_text()
        return f"Enclosure([{lo}, {hi}])"


def _coerce(value) -> Enclosure:
    if isinstance(value, Enclosure):
        return value
    return Enclosure.point(Fraction(value))


def enc_add(a: Enclosure, b: Enclosure) -> Enclosure:
    return Enclosure(a.lo + b.lo, a.hi + b.hi)


def enc_sub(a: Enclosure, b: Enclosure) -> Enclosure:
    return Enclosure(a.lo - b.hi, a.hi - b.lo)


def enc_neg(a: Enclosure) -> Enclosure:
    return Enclosure(-a.hi, -a.lo)


def enc_mul(a: Enclosure, b: Enclosure) -> Enclosure:
    if a.lo >= 0 and b.lo >= 0:
        return Enclosure(a.lo * b.lo, a.hi * b.hi)
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Enclosure(min(products), max(products))


def enc_recip(a: Enclosure) -> Enclosure:
    if a.lo <= 0 <= a.hi:
        raise DomainError(f"reciprocal of an enclosure containing zero: {a!r}")
    return Enclosure(1 / a.hi, 1 / a.lo)


@dataclass(frozen=True, slots=True)
class FloorCertificate:
    value: int
    witness: Enclosure


Refine = Callable[[Enclosure], Enclosure]


def certified_floor(a: Enclosure, refine: Refine | None = None, max_rounds: int = DEFAULT_MAX_ROUNDS) -> FloorCertificate:
    """Floor of the enclosed value, once the enclosure contains no integer.

    `refine` must return a sub-enclosure still containing the value; it is
    called at most `max_rounds` times.
    """
    current = a
    rounds = 0
    while True:
        if not current.contains_integer():
            return FloorCertificate(value=floor_rational(current.lo), witness=current)
        if refine is None or rounds >= max_rounds:
            break
        refined = refine(current)
        rounds += 1
        if not refined.is_subset(current):
            raise DomainError(f"refinement widened the enclosure: {current!r} -> {refined!r}")
        current = refined
    raise StraddlesIntegerError(
        f"enclosure still contains an integer after {rounds} refinement rounds: {current!r}",
        enclosure=current,
        rounds=rounds,
    )


def enc_frac(a: Enclosure, refine: Refine | None = None, max_rounds: int = DEFAULT_MAX_ROUNDS) -> tuple[FloorCertificate, Enclosure]:
    cert = certified_floor(a, refine, max_rounds)
    return cert, Enclosure(cert.witness.lo - cert.value, cert.witness.hi - cert.value)


class LevelRefiner:
    """Refinement callback backed by a level-indexed evaluator.

    Each call evaluates the next level and intersects it with the current
    enclosure, so successive enclosures are nested.
    """

    def __init__(self, evaluate: Callable[[int], Enclosure], level: int = 0):
        self.evaluate = evaluate
        self.level = level

    def __call__(self, current: Enclosure) -> Enclosure:
        self.level += 1
        return current.intersect(self.evaluate(self.level))
