from zetafrac.theorems.bounds import eval_delta, eval_epsilon, prime_lower_witness, zeta_lower_witness
from zetafrac.theorems.certify import Certification, certify_between
from zetafrac.theorems.claims import CLAIM_DOMAINS, run_claim, validate_claim
from zetafrac.theorems.classify import (
    check_egypt,
    check_floor_identity,
    check_fractional_sum,
    check_general_k,
    check_m_class,
    classify_general_k,
    classify_k,
    classify_m,
)
from zetafrac.theorems.sandwich import check_prime_gap, check_prime_sandwich, check_zeta_sandwich
from zetafrac.theorems.schemas import ClaimId, GeneralKRecord, KRecord, MRecord, Verdict, VerdictRecord

__all__ = [
    "CLAIM_DOMAINS",
    "Certification",
    "ClaimId",
    "GeneralKRecord",
    "KRecord",
    "MRecord",
    "Verdict",
    "VerdictRecord",
    "certify_between",
    "check_egypt",
    "check_floor_identity",
    "check_fractional_sum",
    "check_general_k",
    "check_m_class",
    "check_prime_gap",
    "check_prime_sandwich",
    "check_zeta_sandwich",
    "classify_general_k",
    "classify_k",
    "classify_m",
    "eval_delta",
    "eval_epsilon",
    "prime_lower_witness",
    "run_claim",
    "validate_claim",
    "zeta_lower_witness",
]
