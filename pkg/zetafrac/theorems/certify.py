from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from zetafrac.arith.bigratio import Rational, rational_text
from zetafrac.arith.enclosure import DEFAULT_MAX_ROUNDS, Enclosure, LevelRefiner
from zetafrac.exceptions import IntegrityError
from zetafrac.theorems.schemas import Verdict

Bound = Rational | int | Enclosure | None


@dataclass(frozen=True, slots=True)
class Certification:
    verdict: Verdict
    enclosure: Enclosure
    rounds: int


def _as_bound(bound: Bound) -> Enclosure | None:
    if bound is None or isinstance(bound, Enclosure):
        return bound
    return Enclosure.point(Fraction(bound))


def certify_between(
    evaluate: Callable[[int], Enclosure],
    lower: Bound,
    upper: Bound,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> Certification:
    """Decide lower < value < upper for the value enclosed by evaluate(level).

    Bounds may themselves be enclosures (float-contract bound functions); a
    None bound is unbounded. TRUE needs the whole enclosure strictly inside,
    FALSE needs it wholly on the wrong side of a bound.
    """
    lo_bound, hi_bound = _as_bound(lower), _as_bound(upper)
    refiner = LevelRefiner(evaluate)
    current = evaluate(0)
    rounds = 0
    while True:
        above = lo_bound is None or current.lo > lo_bound.hi
        below = hi_bound is None or current.hi < hi_bound.lo
        if above and below:
            return Certification(Verdict.TRUE, current, rounds)
        if (lo_bound is not None and current.hi <= lo_bound.lo) or (hi_bound is not None and current.lo >= hi_bound.hi):
            return Certification(Verdict.FALSE, current, rounds)
        if rounds >= max_rounds:
            return Certification(Verdict.INCONCLUSIVE, current, rounds)
        current = refiner(current)
        rounds += 1


def _evidence_text(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, Enclosure):
        lo, hi = value.endpoints_text()
        return f"[{lo}, {hi}]"
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return rational_text(value)
    return str(value)


def raise_if_false(cert: Certification, claim_id: str, lower: Bound, upper: Bound, **context) -> Certification:
    if cert.verdict is Verdict.FALSE:
        raise IntegrityError(
            f"certified violation of {claim_id}",
            evidence={
                "claim-id": claim_id,
                "lo": rational_text(cert.enclosure.lo),
                "hi": rational_text(cert.enclosure.hi),
                "lower": _evidence_text(lower),
                "upper": _evidence_text(upper),
                **{k: _evidence_text(v) for k, v in context.items()},
            },
        )
    return cert
