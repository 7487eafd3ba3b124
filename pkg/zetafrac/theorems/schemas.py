## Pydantic records for verdicts and classifications
from __future__ import annotations

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, InstanceOf

from zetafrac.arith.bigratio import ROUND_CEILING, ROUND_FLOOR, json_text, to_decimal
from zetafrac.arith.enclosure import Enclosure

DECIMAL_DIGITS = 60


class Verdict(str, Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    SKIPPED = "SKIPPED"


class ClaimId(str, Enum):
    ZETA_LOWER = "prop2.1"
    ZETA_UPPER = "prop2.2"
    PRIME_UPPER = "prop2.3"
    PRIME_LOWER = "prop2.4"
    FRACTIONAL_SUM = "prop3.3"
    GENERAL_K = "prop3.5"
    EGYPT = "cor1.3"
    FLOOR_IDENTITY = "thm1"
    M_CLASS = "thm1.5"
    PRIME_GAP = "thm1.6"


class VerdictRecord(BaseModel):
    """One JSON line per (claim, n). lo/hi are outward-rounded decimals of the final enclosure;
    floor_lhs/floor_pow are the certified floors behind the floor identity."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int | None = None
    s: str | None = None
    x: str | None = None
    claim_id: str = Field(alias="claim-id")
    verdict: Verdict
    k: int | None = None
    m: int | None = None
    floor_lhs: int | None = None
    floor_pow: int | None = None
    lo: str | None = None
    hi: str | None = None
    contract: Literal["exact", "float"] = "exact"
    note: str | None = None

    @classmethod
    def build(cls, claim_id: str, verdict: Verdict, enclosure: Enclosure | None = None, **fields) -> "VerdictRecord":
        if enclosure is not None:
            fields["lo"] = to_decimal(enclosure.lo, DECIMAL_DIGITS, ROUND_FLOOR)
            fields["hi"] = to_decimal(enclosure.hi, DECIMAL_DIGITS, ROUND_CEILING)
        return cls(claim_id=claim_id, verdict=verdict, **fields)

    def to_json(self) -> str:
        return json_text(self.model_dump(by_alias=True, exclude_none=True))


class KRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    k: int
    floor_lhs: int
    floor_pow: int
    floor_enclosure: InstanceOf[Enclosure]
    frac_sum_enclosure: InstanceOf[Enclosure]
    sandwich: Verdict


class GeneralKRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: str
    n: int = Field(ge=2)
    k: int | None
    verdict: Verdict
    enclosure: InstanceOf[Enclosure] | None = None


class MRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    m: int | None
    verdict: Verdict
    sum_enclosure: InstanceOf[Enclosure] | None = None
