"""
Level-indexed refinement schedules.

Level l evaluates zeta(s) - 1 with max(16, s) * 2^l terms, P(s) with the
primes up to prime_limit * 2^l, and both at base + 64*l bits of dyadic
precision, where base defaults to 3*s + 64. Enclosures are cached per level
so a verifier that needs several derived quantities pays for each level once.

Levels stop deepening at max_level (settings.max_level): later rounds reuse
the deepest enclosure, so a value stuck on an integer runs out of rounds and
is reported INCONCLUSIVE instead of exhausting memory in the sieve.
"""
from __future__ import annotations

from math import ceil

from zetafrac.arith.enclosure import Enclosure, LevelRefiner, enc_recip
from zetafrac.exceptions import DomainError
from zetafrac.series.primes import sieve
from zetafrac.series.zeta import SeriesRequest, prime_zeta, zeta_minus1
from zetafrac.settings import settings

MIN_TERMS = 16
BITS_PER_LEVEL = 64
DEFAULT_PRIME_LIMIT = 100_000


def default_bits(s) -> int:
    return 3 * ceil(s) + 64


def cap_level(level: int, max_level: int) -> int:
    if level < 0:
        raise DomainError(f"refinement level must be >= 0, got {level}")
    return min(level, max_level)


class ZetaSchedule:
    def __init__(self, s: int, precision_bits: int | None = None, max_level: int | None = None):
        if s < 2:
            raise DomainError(f"zeta schedule needs s >= 2, got {s}")
        self.s = s
        self.base_bits = precision_bits or default_bits(s)
        self.max_level = settings.max_level if max_level is None else max_level
        self._zeta: dict[int, Enclosure] = {}
        self._recip: dict[int, Enclosure] = {}

    def terms(self, level: int) -> int:
        return max(MIN_TERMS, self.s) << cap_level(level, self.max_level)

    def bits(self, level: int) -> int:
        return self.base_bits + BITS_PER_LEVEL * cap_level(level, self.max_level)

    def zeta(self, level: int) -> Enclosure:
        """Enclosure of zeta(s) - 1 at this level."""
        level = cap_level(level, self.max_level)
        if level not in self._zeta:
            self._zeta[level] = zeta_minus1(SeriesRequest(self.s, self.terms(level), self.bits(level)))
        return self._zeta[level]

    def recip(self, level: int) -> Enclosure:
        """Enclosure of 1/(zeta(s) - 1) at this level."""
        level = cap_level(level, self.max_level)
        if level not in self._recip:
            self._recip[level] = enc_recip(self.zeta(level))
        return self._recip[level]

    def refiner(self) -> LevelRefiner:
        return LevelRefiner(self.recip)


class PrimeSchedule:
    def __init__(
        self,
        s: int,
        prime_limit: int = DEFAULT_PRIME_LIMIT,
        precision_bits: int | None = None,
        max_level: int | None = None,
    ):
        if s < 2:
            raise DomainError(f"prime schedule needs s >= 2, got {s}")
        self.s = s
        self.prime_limit = prime_limit
        self.base_bits = precision_bits or default_bits(s)
        self.max_level = settings.max_level if max_level is None else max_level
        self._pzeta: dict[int, Enclosure] = {}
        self._recip: dict[int, Enclosure] = {}

    def limit(self, level: int) -> int:
        return self.prime_limit << cap_level(level, self.max_level)

    def bits(self, level: int) -> int:
        return self.base_bits + BITS_PER_LEVEL * cap_level(level, self.max_level)

    def pzeta(self, level: int) -> Enclosure:
        """Enclosure of P(s) at this level."""
        level = cap_level(level, self.max_level)
        if level not in self._pzeta:
            req = SeriesRequest(self.s, 2, self.bits(level))
            self._pzeta[level] = prime_zeta(req, sieve(self.limit(level)))
        return self._pzeta[level]

    def recip(self, level: int) -> Enclosure:
        """Enclosure of 1/P(s) at this level."""
        level = cap_level(level, self.max_level)
        if level not in self._recip:
            self._recip[level] = enc_recip(self.pzeta(level))
        return self._recip[level]
