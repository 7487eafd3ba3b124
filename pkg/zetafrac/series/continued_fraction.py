from __future__ import annotations

from zetafrac.arith.enclosure import (
    DEFAULT_MAX_ROUNDS,
    Enclosure,
    FloorCertificate,
    LevelRefiner,
    certified_floor,
    enc_recip,
)
from zetafrac.exceptions import DomainError
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.series.schedule import ZetaSchedule


def certify_cf_second_term(
    n: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    schedule: ZetaSchedule | None = None,
) -> FloorCertificate:
    """Certified floor of 1/(zeta(n) - 1), the term a1 of zeta(n) = [1; a1, ...]."""
    if n < 2:
        raise DomainError(f"cf_second_term requires n >= 2, got {n}")
    schedule = schedule or ZetaSchedule(n, precision_bits)
    return certified_floor(schedule.recip(0), schedule.refiner(), max_rounds)


def cf_second_term(n: int, *, precision_bits: int | None = None, max_rounds: int = DEFAULT_MAX_ROUNDS) -> int:
    return certify_cf_second_term(n, precision_bits=precision_bits, max_rounds=max_rounds).value


def cf_terms(
    n: int,
    count: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> list[int]:
    """The first `count` simple continued fraction terms of zeta(n), each floor certified.

    The complete quotient x_{i+1} = 1/(x_i - a_i) is re-evaluated from the
    zeta enclosure at every level and clipped to the witness that certified
    a_i, so x_i - a_i never reaches zero. Refinement rounds are shared across
    all terms. Small n needs many terms per level, so deep expansions of
    zeta(2) are slow.
    """
    if count < 1:
        raise DomainError(f"cf_terms requires count >= 1, got {count}")
    if n < 2:
        raise DomainError(f"cf_terms requires n >= 2, got {n}")

    schedule = ZetaSchedule(n, precision_bits)
    terms = [1]
    witnesses: list[Enclosure] = []

    def quotient(level: int) -> Enclosure:
        x = schedule.recip(level)
        for a, witness in zip(terms[1:], witnesses):
            x = enc_recip(x.intersect(witness) - a)
        return x

    refiner = LevelRefiner(quotient)
    while len(terms) < count:
        budget = max_rounds - refiner.level
        cert = certified_floor(quotient(refiner.level), refiner, max(0, budget))
        terms.append(cert.value)
        witnesses.append(cert.witness)
        logger.debug(f"[cf_terms] n={n} term={len(terms) - 1} value={cert.value} level={refiner.level}")
    return terms
