from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from zetafrac.exceptions import DomainError


@dataclass(frozen=True, slots=True)
class PrimeTable:
    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)


@lru_cache(maxsize=8)
def sieve(limit: int) -> PrimeTable:
    """All primes <= limit by array marking."""
    if limit < 2:
        raise DomainError(f"sieve requires limit >= 2, got {limit}")
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    primes = tuple(int(p) for p in np.flatnonzero(is_prime))
    return PrimeTable(limit=limit, primes=primes)
