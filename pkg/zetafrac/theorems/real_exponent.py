"""
Prime gap bound at rational, non-integer s under the float contract.

Both the gap and the bound functions eps(s), delta(s) are float-contract
enclosures; certify_between compares against the far side of each bound
enclosure, so TRUE still means strictly inside under that contract.
"""
from __future__ import annotations

from fractions import Fraction

from zetafrac.arith.enclosure import DEFAULT_MAX_ROUNDS, Enclosure, enc_recip
from zetafrac.exceptions import DomainError
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.series.real_exponent import RealZetaSchedule, float_power, float_precision
from zetafrac.series.schedule import DEFAULT_PRIME_LIMIT
from zetafrac.theorems.bounds import MIN_GAP_EXPONENT
from zetafrac.theorems.certify import certify_between, raise_if_false
from zetafrac.theorems.schemas import ClaimId, VerdictRecord


def epsilon_real(s: Fraction, prec: int) -> Enclosure:
    """(4^s + 3^s)^2 / 18^s"""
    head = float_power(Fraction(4), s, prec) + float_power(Fraction(3), s, prec)
    return head * head * enc_recip(float_power(Fraction(18), s, prec))


def delta_real(s: Fraction, prec: int) -> Enclosure:
    inner = float_power(Fraction(2, 3), s, prec) + float_power(Fraction(2, 5), s, prec)
    return float_power(Fraction(2), s, prec) * inner * inner - float_power(Fraction(4, 5), s, prec)


def check_prime_gap_real(
    s,
    *,
    prime_limit: int = DEFAULT_PRIME_LIMIT,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> VerdictRecord:
    s = Fraction(s)
    if s < MIN_GAP_EXPONENT:
        raise DomainError(f"prime gap bound requires s >= {MIN_GAP_EXPONENT}, got {s}")
    schedule = RealZetaSchedule(s, prime_limit, precision_bits)
    prec = float_precision(s, precision_bits)
    lo_bound = 1 - epsilon_real(s, prec)
    hi_bound = 1 + delta_real(s, prec)

    cert = certify_between(
        lambda level: schedule.recip_pzeta(level) - schedule.recip_zeta(level), lo_bound, hi_bound, max_rounds
    )
    raise_if_false(cert, ClaimId.PRIME_GAP.value, lo_bound, hi_bound, s=s)
    logger.debug(f"[check_prime_gap_real] s={s} verdict={cert.verdict.value} rounds={cert.rounds}")
    return VerdictRecord.build(ClaimId.PRIME_GAP.value, cert.verdict, cert.enclosure, s=str(s), contract="float")
