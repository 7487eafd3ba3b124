"""Claim-id registry used by the range runner and the CLI."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from zetafrac.exceptions import UsageError
from zetafrac.theorems.classify import (
    check_egypt,
    check_floor_identity,
    check_fractional_sum,
    check_general_k,
    check_m_class,
)
from zetafrac.theorems.sandwich import check_prime_gap, check_prime_sandwich, check_zeta_sandwich
from zetafrac.theorems.schemas import ClaimId, VerdictRecord

DEFAULT_X = Fraction(2, 3)

# (minimum n, uses the prime table)
CLAIM_DOMAINS: dict[str, tuple[int, bool]] = {
    ClaimId.ZETA_LOWER.value: (2, False),
    ClaimId.ZETA_UPPER.value: (2, False),
    ClaimId.PRIME_UPPER.value: (2, True),
    ClaimId.PRIME_LOWER.value: (4, True),
    ClaimId.FRACTIONAL_SUM.value: (2, False),
    ClaimId.GENERAL_K.value: (2, False),
    ClaimId.FLOOR_IDENTITY.value: (2, False),
    ClaimId.M_CLASS.value: (2, False),
    ClaimId.PRIME_GAP.value: (7, True),
    ClaimId.EGYPT.value: (2, False),
}


def _dispatch(claim_id: str) -> Callable[..., VerdictRecord]:
    return {
        ClaimId.ZETA_LOWER.value: lambda n, **kw: check_zeta_sandwich(n, lower=True, upper=False, **kw),
        ClaimId.ZETA_UPPER.value: lambda n, **kw: check_zeta_sandwich(n, lower=False, upper=True, **kw),
        ClaimId.PRIME_UPPER.value: lambda n, **kw: check_prime_sandwich(n, lower=False, upper=True, **kw),
        ClaimId.PRIME_LOWER.value: lambda n, **kw: check_prime_sandwich(n, lower=True, upper=False, **kw),
        ClaimId.FRACTIONAL_SUM.value: check_fractional_sum,
        ClaimId.FLOOR_IDENTITY.value: check_floor_identity,
        ClaimId.M_CLASS.value: check_m_class,
        ClaimId.PRIME_GAP.value: check_prime_gap,
        ClaimId.EGYPT.value: check_egypt,
    }[claim_id]


def validate_claim(claim_id: str, n_from: int, n_to: int) -> None:
    if claim_id not in CLAIM_DOMAINS:
        raise UsageError(f"unknown claim-id {claim_id!r}; expected one of {', '.join(CLAIM_DOMAINS)}")
    minimum, _ = CLAIM_DOMAINS[claim_id]
    if n_from > n_to:
        raise UsageError(f"empty range --from {n_from} --to {n_to}")
    if n_from < minimum:
        raise UsageError(f"{claim_id} is stated for n >= {minimum}, got --from {n_from}")


def run_claim(
    claim_id: str,
    n: int,
    *,
    x: str | None = None,
    precision_bits: int | None = None,
    max_rounds: int = 64,
    prime_limit: int | None = None,
) -> VerdictRecord:
    options = {"precision_bits": precision_bits, "max_rounds": max_rounds}
    if CLAIM_DOMAINS[claim_id][1] and prime_limit is not None:
        options["prime_limit"] = prime_limit
    if claim_id == ClaimId.GENERAL_K.value:
        return check_general_k(x or DEFAULT_X, n, **options)
    return _dispatch(claim_id)(n, **options)
