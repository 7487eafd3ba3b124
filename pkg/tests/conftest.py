import os
import sys
import pathlib
from fractions import Fraction
from types import SimpleNamespace

import mpmath
import pytest

# Set up test environment before zetafrac.settings is imported
os.environ.setdefault("ZETAFRAC_THREADS", "1")
os.environ.setdefault("ZETAFRAC_LOG_LEVEL", "WARNING")
os.environ.setdefault("ZETAFRAC_OUTPUT_FORMAT", "text")

# Ensure repository root is importable
ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from zetafrac.arith.enclosure import Enclosure
from zetafrac.jobs.schemas import ScanConfig

ORACLE_DPS = 60


def _to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _inside(enc: Enclosure, value) -> bool:
    with mpmath.workdps(ORACLE_DPS + 20):
        return _to_mpf(enc.lo) <= value <= _to_mpf(enc.hi)


def _zeta_minus1(s):
    with mpmath.workdps(ORACLE_DPS):
        return mpmath.zeta(mpmath.mpf(Fraction(s).numerator) / Fraction(s).denominator) - 1


def _prime_zeta(s):
    with mpmath.workdps(ORACLE_DPS):
        return mpmath.primezeta(mpmath.mpf(Fraction(s).numerator) / Fraction(s).denominator)


@pytest.fixture
def oracle():
    """Independent high-precision values from mpmath (60 digits)."""
    return SimpleNamespace(
        zeta_minus1=_zeta_minus1,
        prime_zeta=_prime_zeta,
        inside=_inside,
        to_mpf=_to_mpf,
    )


@pytest.fixture
def scan_config():
    """Factory for scan configurations with small test defaults."""
    def make(**overrides) -> ScanConfig:
        fields = {"p": 4, "q": 3, "n_min": 1, "n_max": 1000, "chunk_size": 250, "sample_stride": 100}
        fields.update(overrides)
        return ScanConfig(**fields)

    return make


@pytest.fixture
def checkpoint_path(tmp_path: pathlib.Path) -> str:
    """Path of a not-yet-existing checkpoint file."""
    return str(tmp_path / "scan.ckpt")
