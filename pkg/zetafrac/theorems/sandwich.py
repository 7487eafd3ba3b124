"""
Certified checks of the two-sided bounds on 1/(zeta(n) - 1) and 1/P(s).

    1 < 1/(zeta(n)-1) - 2^n + (4/3)^n + 2 < 1 + eps(n)          n >= 2
    0 < 1/P(s) - 2^s + (4/3)^s < delta(s)                       lower side s >= 4
    1 - eps(s) < 1/P(s) - 1/(zeta(s)-1) < 1 + delta(s)          s >= 7
"""
from __future__ import annotations

from fractions import Fraction

from zetafrac.arith.enclosure import DEFAULT_MAX_ROUNDS, Enclosure
from zetafrac.exceptions import DomainError
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.series.schedule import DEFAULT_PRIME_LIMIT, PrimeSchedule, ZetaSchedule
from zetafrac.theorems.bounds import MIN_GAP_EXPONENT, eval_delta, eval_epsilon
from zetafrac.theorems.certify import certify_between, raise_if_false
from zetafrac.theorems.real_exponent import check_prime_gap_real
from zetafrac.theorems.schemas import ClaimId, VerdictRecord


def _claim(lower: bool, upper: bool, lower_id: ClaimId, upper_id: ClaimId) -> str:
    if not (lower or upper):
        raise DomainError("at least one side of the bound must be checked")
    return "+".join(c.value for c, on in ((lower_id, lower), (upper_id, upper)) if on)


def _require_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def zeta_sandwich_value(schedule: ZetaSchedule, level: int) -> Enclosure:
    n = schedule.s
    return schedule.recip(level) - 2 ** n + Fraction(4, 3) ** n + 2


def check_zeta_sandwich(
    n: int,
    *,
    lower: bool = True,
    upper: bool = True,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> VerdictRecord:
    _require_int(n, "n", 2)
    claim_id = _claim(lower, upper, ClaimId.ZETA_LOWER, ClaimId.ZETA_UPPER)
    schedule = ZetaSchedule(n, precision_bits)
    lo_bound = 1 if lower else None
    hi_bound = 1 + eval_epsilon(1, n) if upper else None

    cert = certify_between(lambda level: zeta_sandwich_value(schedule, level), lo_bound, hi_bound, max_rounds)
    raise_if_false(cert, claim_id, lo_bound, hi_bound, n=n)
    logger.debug(f"[check_zeta_sandwich] n={n} verdict={cert.verdict.value} rounds={cert.rounds}")
    return VerdictRecord.build(claim_id, cert.verdict, cert.enclosure, n=n)


def check_prime_sandwich(
    s: int,
    *,
    lower: bool = True,
    upper: bool = True,
    prime_limit: int = DEFAULT_PRIME_LIMIT,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> VerdictRecord:
    _require_int(s, "s", 4 if lower else 2)
    claim_id = _claim(lower, upper, ClaimId.PRIME_LOWER, ClaimId.PRIME_UPPER)
    schedule = PrimeSchedule(s, prime_limit, precision_bits)
    shift = Fraction(4, 3) ** s - 2 ** s
    lo_bound = 0 if lower else None
    hi_bound = eval_delta(s) if upper else None

    cert = certify_between(lambda level: schedule.recip(level) + shift, lo_bound, hi_bound, max_rounds)
    raise_if_false(cert, claim_id, lo_bound, hi_bound, s=s)
    logger.debug(f"[check_prime_sandwich] s={s} verdict={cert.verdict.value} rounds={cert.rounds}")
    return VerdictRecord.build(claim_id, cert.verdict, cert.enclosure, n=s)


def prime_gap_value(zeta: ZetaSchedule, primes: PrimeSchedule, level: int) -> Enclosure:
    return primes.recip(level) - zeta.recip(level)


def check_prime_gap(
    s,
    *,
    prime_limit: int = DEFAULT_PRIME_LIMIT,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> VerdictRecord:
    """Gap check for s >= 7. Integer s is certified exactly; other rationals use the float contract."""
    s = Fraction(s)
    if s < MIN_GAP_EXPONENT:
        raise DomainError(f"prime gap bound requires s >= {MIN_GAP_EXPONENT}, got {s}")
    if s.denominator != 1:
        return check_prime_gap_real(s, prime_limit=prime_limit, precision_bits=precision_bits, max_rounds=max_rounds)

    s = int(s)
    zeta = ZetaSchedule(s, precision_bits)
    primes = PrimeSchedule(s, prime_limit, precision_bits)
    lo_bound = 1 - eval_epsilon(1, s)
    hi_bound = 1 + eval_delta(s)

    cert = certify_between(lambda level: prime_gap_value(zeta, primes, level), lo_bound, hi_bound, max_rounds)
    raise_if_false(cert, ClaimId.PRIME_GAP.value, lo_bound, hi_bound, s=s)
    logger.debug(f"[check_prime_gap] s={s} verdict={cert.verdict.value} rounds={cert.rounds}")
    return VerdictRecord.build(ClaimId.PRIME_GAP.value, cert.verdict, cert.enclosure, n=s)
