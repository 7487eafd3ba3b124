## Pydantic schemas for scan configuration and output
from __future__ import annotations

import hashlib
import json
from enum import Enum
from fractions import Fraction
from math import gcd

from pydantic import BaseModel, ConfigDict, Field, model_validator

from zetafrac.arith.bigratio import ROUND_FLOOR, as_rational, decimal_from_parts

# fields that change the output stream; chunking, pre-filter and paths do not
HASHED_FIELDS = ("p", "q", "n_min", "n_max", "threshold_mode", "threshold", "sample_stride", "histogram_bins")


class ThresholdMode(str, Enum):
    FIXED = "fixed"
    ADAPTIVE = "adaptive"


class ScanConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int = 4
    q: int = 3
    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(ge=1)
    threshold_mode: ThresholdMode = ThresholdMode.FIXED
    threshold: str = "1e-9"
    chunk_size: int = Field(default=2_000, ge=1)
    sample_stride: int = Field(default=1_000, ge=1)
    histogram_bins: int = Field(default=10, ge=1)
    prefilter: bool = True
    checkpoint_path: str | None = None
    max_rounds: int = Field(default=64, ge=0)

    @model_validator(mode="after")
    def _check(self) -> "ScanConfig":
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got p={self.p} q={self.q}")
        if not self.p > self.q >= 2:
            raise ValueError(f"scan requires p > q >= 2, got p={self.p} q={self.q}")
        if self.n_max < self.n_min:
            raise ValueError(f"empty range n_min={self.n_min} n_max={self.n_max}")
        if self.threshold_mode is ThresholdMode.ADAPTIVE and (self.p, self.q) != (4, 3):
            raise ValueError("the eps(n)-adaptive threshold is defined for p/q = 4/3 only")
        if self.threshold_mode is ThresholdMode.FIXED and self.threshold_value < 0:
            raise ValueError(f"threshold must be non-negative, got {self.threshold}")
        return self

    @property
    def threshold_value(self) -> Fraction:
        return as_rational(self.threshold)

    def hashed_view(self) -> dict:
        view = self.model_dump(mode="json", include=set(HASHED_FIELDS))
        # "1e-9" and "1/1000000000" describe the same scan
        view["threshold"] = str(self.threshold_value) if self.threshold_mode is ThresholdMode.FIXED else None
        return view

    def config_hash(self) -> str:
        canonical = json.dumps(self.hashed_view(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


class ScanRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    frac_num: int
    den: int
    below_threshold: bool
    mahler_margin: str
    is_running_min: bool = Field(default=False, exclude=True)

    @property
    def frac(self) -> Fraction:
        return Fraction(self.frac_num, self.den)

    def frac_decimal(self) -> str:
        return decimal_from_parts(self.frac_num, self.den, 60, ROUND_FLOOR)

    def to_row(self) -> dict:
        return {
            "n": self.n,
            "frac": self.frac_decimal(),
            "below_threshold": self.below_threshold,
            "mahler_margin": self.mahler_margin,
        }


class ScanSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    config_hash: str
    n_min: int
    n_max: int
    last_n: int
    completed: bool
    count: int
    hits: list[int]
    min_frac_n: int | None
    min_frac: str | None
    min_mahler_n: int | None
    min_mahler_margin: str | None
    histogram: list[int]
