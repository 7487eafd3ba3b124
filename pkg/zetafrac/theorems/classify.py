"""
Integer classifications behind the floor identity

    floor(1/(zeta(n)-1)) = 2^n - floor((4/3)^n) - k,      k in {1, 2}

and its companions for x^n/(zeta(n)-1) (k in {-1, 0}) and for the sum of
fractional parts at x = 2/3 (m in {0, 1, 2}). Every floor used here is
certified; the bound windows are exact rationals.
"""
from __future__ import annotations

from fractions import Fraction

from zetafrac.arith.bigratio import Rational, as_rational, floor_rational, frac_part, int_text, pow_decompose, rational_text
from zetafrac.arith.enclosure import DEFAULT_MAX_ROUNDS, Enclosure, FloorCertificate, LevelRefiner, certified_floor
from zetafrac.exceptions import DomainError, IntegrityError, StraddlesIntegerError
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.series.continued_fraction import certify_cf_second_term
from zetafrac.series.schedule import ZetaSchedule
from zetafrac.theorems.bounds import eval_epsilon
from zetafrac.theorems.certify import certify_between, raise_if_false
from zetafrac.theorems.schemas import ClaimId, GeneralKRecord, KRecord, MRecord, Verdict, VerdictRecord

X_LOWER = Fraction(1, 2)
X_UPPER = Fraction(3, 4)
M_CLASS_X = Fraction(2, 3)


def _require_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    return n


def _frac_of(schedule: ZetaSchedule, cert: FloorCertificate, scale: Rational = 1):
    """Level evaluator of {scale/(zeta(n)-1)}, clipped to the certifying witness."""

    def evaluate(level: int) -> Enclosure:
        return (schedule.recip(level) * scale).intersect(cert.witness) - cert.value

    return evaluate


def classify_k(
    n: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    schedule: ZetaSchedule | None = None,
) -> KRecord:
    _require_n(n)
    schedule = schedule or ZetaSchedule(n, precision_bits)
    cert = certify_cf_second_term(n, max_rounds=max_rounds, schedule=schedule)
    power = pow_decompose(4, 3, n)
    k = 2 ** n - power.int_part - cert.value
    if k not in (1, 2):
        raise IntegrityError(
            f"floor identity gives k={k} at n={n}",
            evidence={"n": n, "k": k, "floor_lhs": int_text(cert.value), "floor_pow": int_text(power.int_part),
                      "lo": rational_text(cert.witness.lo), "hi": rational_text(cert.witness.hi)},
        )

    # {1/(zeta(n)-1)} + {(4/3)^n} in (k-1, k-1+eps(n))
    frac_recip = _frac_of(schedule, cert)
    lo_bound, hi_bound = k - 1, k - 1 + eval_epsilon(1, n)
    sandwich = certify_between(lambda level: frac_recip(level) + power.fraction, lo_bound, hi_bound, max_rounds)
    raise_if_false(sandwich, ClaimId.FRACTIONAL_SUM.value, lo_bound, hi_bound, n=n, k=k)

    logger.debug(f"[classify_k] n={n} k={k} sandwich={sandwich.verdict.value}")
    return KRecord(
        n=n,
        k=k,
        floor_lhs=cert.value,
        floor_pow=power.int_part,
        floor_enclosure=cert.witness,
        frac_sum_enclosure=sandwich.enclosure,
        sandwich=sandwich.verdict,
    )


def floor_identity_record(record: KRecord) -> VerdictRecord:
    """lo/hi enclose 1/(zeta(n)-1); floor_lhs + floor_pow + k = 2^n exactly."""
    return VerdictRecord.build(
        ClaimId.FLOOR_IDENTITY.value,
        Verdict.TRUE,
        record.floor_enclosure,
        n=record.n,
        k=record.k,
        floor_lhs=record.floor_lhs,
        floor_pow=record.floor_pow,
    )


def check_floor_identity(n: int, **kwargs) -> VerdictRecord:
    return floor_identity_record(classify_k(n, **kwargs))


def check_fractional_sum(n: int, **kwargs) -> VerdictRecord:
    record = classify_k(n, **kwargs)
    return VerdictRecord.build(ClaimId.FRACTIONAL_SUM.value, record.sandwich, record.frac_sum_enclosure, n=n, k=record.k)


def general_k_window(x: Rational, n: int, k: int) -> tuple[Rational, Rational]:
    """(-(4x/3)^n - x^n - k, eps_x(n) - (4x/3)^n - x^n - k)"""
    a = (Fraction(4, 3) * x) ** n + x ** n
    return -a - k, eval_epsilon(x, n) - a - k


def general_k_applicable(x: Rational, n: int) -> bool:
    """Both bounds of floor(x^n/(zeta-1)) - floor((2x)^n) lie in (-2, 1), so k is -1 or 0."""
    a = (Fraction(4, 3) * x) ** n + x ** n
    return a < 1 and eval_epsilon(x, n) - a < 0


def classify_general_k(
    x: Rational | str,
    n: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    schedule: ZetaSchedule | None = None,
) -> GeneralKRecord:
    x = as_rational(x)
    if not X_LOWER < x < X_UPPER:
        raise DomainError(f"classify_general_k requires 1/2 < x < 3/4, got x={x}")
    _require_n(n)
    schedule = schedule or ZetaSchedule(n, precision_bits)
    xn = x ** n
    two_x_n = (2 * x) ** n
    applicable = general_k_applicable(x, n)

    try:
        cert = certified_floor(schedule.recip(0) * xn, LevelRefiner(lambda level: schedule.recip(level) * xn), max_rounds)
    except StraddlesIntegerError as e:
        verdict = Verdict.INCONCLUSIVE if applicable else Verdict.NOT_APPLICABLE
        return GeneralKRecord(x=str(x), n=n, k=None, verdict=verdict, enclosure=e.enclosure)

    k = cert.value - floor_rational(two_x_n)
    if not applicable:
        return GeneralKRecord(x=str(x), n=n, k=k, verdict=Verdict.NOT_APPLICABLE, enclosure=cert.witness)
    if k not in (-1, 0):
        raise IntegrityError(
            f"general floor identity gives k={k} at x={x} n={n}",
            evidence={"x": str(x), "n": n, "k": k, "lo": rational_text(cert.witness.lo), "hi": rational_text(cert.witness.hi)},
        )

    frac_scaled = _frac_of(schedule, cert, xn)
    lo_bound, hi_bound = general_k_window(x, n, k)
    frac_two_x = frac_part(two_x_n)
    window = certify_between(lambda level: frac_scaled(level) - frac_two_x, lo_bound, hi_bound, max_rounds)
    raise_if_false(window, ClaimId.GENERAL_K.value, lo_bound, hi_bound, x=x, n=n, k=k)
    return GeneralKRecord(x=str(x), n=n, k=k, verdict=window.verdict, enclosure=window.enclosure)


def check_general_k(x: Rational | str, n: int, **kwargs) -> VerdictRecord:
    record = classify_general_k(x, n, **kwargs)
    return VerdictRecord.build(ClaimId.GENERAL_K.value, record.verdict, record.enclosure, n=n, x=record.x, k=record.k)


def m_window(n: int, m: int) -> tuple[Rational, Rational]:
    a = Fraction(8, 9) ** n + Fraction(2, 3) ** n
    e = eval_epsilon(1, n) + eval_epsilon(M_CLASS_X, n)
    return max(Fraction(0), m - a), min(Fraction(2), m + e - a)


def classify_m(
    n: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> MRecord:
    """m = (k' - 1) - k from the floor identity (k') and the x = 2/3 identity (k)."""
    _require_n(n)
    schedule = ZetaSchedule(n, precision_bits)
    general = classify_general_k(M_CLASS_X, n, max_rounds=max_rounds, schedule=schedule)
    if general.verdict is Verdict.NOT_APPLICABLE:
        return MRecord(n=n, m=None, verdict=Verdict.NOT_APPLICABLE, sum_enclosure=None)
    if general.k is None:
        return MRecord(n=n, m=None, verdict=Verdict.INCONCLUSIVE, sum_enclosure=general.enclosure)

    k_prime = classify_k(n, max_rounds=max_rounds, schedule=schedule).k
    m = (k_prime - 1) - general.k
    if m not in (0, 1, 2):
        raise IntegrityError(f"m={m} outside {{0, 1, 2}} at n={n}", evidence={"n": n, "m": m, "k_prime": k_prime, "k": general.k})

    xn = M_CLASS_X ** n
    recip_cert = certify_cf_second_term(n, max_rounds=max_rounds, schedule=schedule)
    scaled_cert = certified_floor(
        schedule.recip(0) * xn, LevelRefiner(lambda level: schedule.recip(level) * xn), max_rounds
    )
    frac_recip = _frac_of(schedule, recip_cert)
    frac_scaled = _frac_of(schedule, scaled_cert, xn)

    lo_bound, hi_bound = m_window(n, m)
    window = certify_between(lambda level: frac_recip(level) + frac_scaled(level), lo_bound, hi_bound, max_rounds)
    raise_if_false(window, ClaimId.M_CLASS.value, lo_bound, hi_bound, n=n, m=m)
    if m != 1:
        logger.warning(f"[classify_m] exceptional case m={m} at n={n}")
    return MRecord(n=n, m=m, verdict=window.verdict, sum_enclosure=window.enclosure)


def check_m_class(n: int, **kwargs) -> VerdictRecord:
    record = classify_m(n, **kwargs)
    return VerdictRecord.build(ClaimId.M_CLASS.value, record.verdict, record.sum_enclosure, n=n, m=record.m)


def check_egypt(
    n: int,
    *,
    precision_bits: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> VerdictRecord:
    """zeta(n) is not 1 + 1/m whenever k(n) = 2: 1/(zeta(n)-1) is certified to avoid every integer."""
    _require_n(n)
    claim_id = ClaimId.EGYPT.value
    schedule = ZetaSchedule(n, precision_bits)
    try:
        record = classify_k(n, max_rounds=max_rounds, schedule=schedule)
    except StraddlesIntegerError as e:
        return VerdictRecord.build(claim_id, Verdict.INCONCLUSIVE, e.enclosure, n=n, note="1/(zeta(n)-1) not separated from an integer")
    if record.k == 1:
        return VerdictRecord.build(claim_id, Verdict.SKIPPED, n=n, k=1, note="k=1")
    return VerdictRecord.build(claim_id, Verdict.TRUE, record.floor_enclosure, n=n, k=record.k, floor_lhs=record.floor_lhs)
