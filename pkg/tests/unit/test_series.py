from fractions import Fraction

import mpmath
import pytest

from zetafrac.arith.enclosure import certified_floor
from zetafrac.exceptions import DomainError
from zetafrac.series.continued_fraction import certify_cf_second_term, cf_second_term, cf_terms
from zetafrac.series.primes import sieve
from zetafrac.series.real_exponent import (
    RealZetaSchedule,
    float_power,
    float_precision,
    prime_zeta_real,
    zeta_minus1_real,
)
from zetafrac.series.schedule import PrimeSchedule, ZetaSchedule, default_bits
from zetafrac.series.zeta import SeriesRequest, prime_zeta, zeta_minus1
from zetafrac.theorems.certify import certify_between
from zetafrac.theorems.schemas import Verdict

pytestmark = [pytest.mark.unit, pytest.mark.series]


class TestSieve:
    """Prime tables."""

    def test_small(self):
        assert sieve(10).primes == (2, 3, 5, 7)

    def test_thirty(self):
        table = sieve(30)
        assert len(table) == 10
        assert table.primes[-1] == 29

    def test_million(self):
        assert len(sieve(10 ** 6)) == 78498

    def test_limit_too_small(self):
        with pytest.raises(DomainError):
            sieve(1)


class TestZetaMinus1:
    """Certified enclosures of zeta(s) - 1."""

    def test_s2_dyadic(self, oracle):
        enc = zeta_minus1(SeriesRequest(2, 10 ** 5, 128))
        assert oracle.inside(enc, oracle.zeta_minus1(2))
        assert enc.width < Fraction(1, 10 ** 9)

    def test_s7_dyadic(self, oracle):
        enc = zeta_minus1(SeriesRequest(7, 1000, 256))
        assert oracle.inside(enc, oracle.zeta_minus1(7))
        assert abs(float(enc.lo) - 0.0083492774) < 1e-10

    def test_exact_partial_sum(self, oracle):
        enc = zeta_minus1(SeriesRequest(3, 50))
        assert oracle.inside(enc, oracle.zeta_minus1(3))
        assert enc.hi - enc.lo == Fraction(1, 2 * 50 ** 2) - Fraction(1, 2 * 51 ** 2)

    def test_requires_integer_exponent(self):
        with pytest.raises(DomainError):
            zeta_minus1(SeriesRequest(Fraction(5, 2), 100))

    @pytest.mark.parametrize("s,terms,bits", [(1, 10, None), (3, 1, None), (3, 10, 0)])
    def test_request_validation(self, s, terms, bits):
        with pytest.raises(DomainError):
            SeriesRequest(s, terms, bits)


class TestPrimeZeta:
    """Certified enclosures of the prime zeta function."""

    def test_s7(self, oracle):
        enc = prime_zeta(SeriesRequest(7, 2, 256), sieve(1000))
        assert oracle.inside(enc, oracle.prime_zeta(7))

    def test_s2(self, oracle):
        enc = prime_zeta(SeriesRequest(2, 2, 128), sieve(10 ** 4))
        assert oracle.inside(enc, oracle.prime_zeta(2))
        assert enc.contains(Fraction("0.4522474200"))

    def test_table_too_small(self):
        with pytest.raises(DomainError):
            prime_zeta(SeriesRequest(3, 2), sieve(3))


class TestSchedules:
    """Level-indexed refinement."""

    def test_levels_tighten_and_stay_sound(self, oracle):
        schedule = ZetaSchedule(3)
        value = oracle.zeta_minus1(3)
        widths = []
        for level in range(4):
            enc = schedule.zeta(level)
            assert oracle.inside(enc, value)
            widths.append(enc.width)
        assert widths == sorted(widths, reverse=True)
        assert schedule.terms(2) == 64
        assert schedule.bits(1) == default_bits(3) + 64

    def test_refiner_nests(self):
        schedule = ZetaSchedule(2)
        refiner = schedule.refiner()
        current = schedule.recip(0)
        for _ in range(3):
            nxt = refiner(current)
            assert nxt.is_subset(current)
            current = nxt

    def test_prime_schedule(self, oracle):
        schedule = PrimeSchedule(5, prime_limit=1000)
        assert schedule.limit(2) == 4000
        assert oracle.inside(schedule.pzeta(1), oracle.prime_zeta(5))
        assert schedule.pzeta(1).width < schedule.pzeta(0).width

    def test_negative_level(self):
        with pytest.raises(DomainError):
            ZetaSchedule(3).zeta(-1)

    def test_levels_stop_at_max_level(self):
        schedule = ZetaSchedule(3, max_level=2)
        assert schedule.terms(10) == schedule.terms(2) == 64
        assert schedule.bits(40) == schedule.bits(2)
        assert schedule.zeta(7) is schedule.zeta(2)
        assert PrimeSchedule(5, prime_limit=1000, max_level=1).limit(40) == 2000

    def test_capped_levels_end_inconclusive(self):
        schedule = ZetaSchedule(3, max_level=2)
        nested = schedule.recip(0).intersect(schedule.recip(1)).intersect(schedule.recip(2))
        cert = certify_between(schedule.recip, nested.lo, nested.hi, max_rounds=64)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.rounds == 64
        assert cert.enclosure == nested

    def test_capped_real_schedule(self):
        schedule = RealZetaSchedule(Fraction(29, 4), prime_limit=1000, max_level=1)
        assert schedule.prec(5) == schedule.prec(1)
        assert schedule.zeta(5) is schedule.zeta(1)


class TestContinuedFraction:
    """Certified continued fraction terms of zeta(n)."""

    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 4), (4, 12)])
    def test_second_term(self, n, expected):
        assert cf_second_term(n) == expected

    def test_floor_of_reciprocal_at_2(self, oracle):
        schedule = ZetaSchedule(2)
        cert = certified_floor(schedule.recip(0), schedule.refiner())
        assert cert.value == 1
        with mpmath.workdps(60):
            assert oracle.inside(cert.witness, 1 / oracle.zeta_minus1(2))

    def test_fractional_part_at_3(self, oracle):
        cert = certify_cf_second_term(3)
        assert cert.value == 4
        frac = cert.witness - 4
        with mpmath.workdps(60):
            assert oracle.inside(frac, 1 / oracle.zeta_minus1(3) - 4)
        assert abs(float(frac.lo) - 0.9491) < 1e-3

    def test_first_terms(self):
        assert cf_terms(3, 2) == [1, 4]
        assert cf_terms(2, 5) == [1, 1, 1, 1, 4]

    def test_preconditions(self):
        with pytest.raises(DomainError):
            cf_second_term(1)
        with pytest.raises(DomainError):
            cf_terms(3, 0)


class TestRealExponent:
    """Float-contract evaluation at rational s."""

    def test_precision(self):
        assert float_precision(Fraction(15, 2)) == 3 * 8 + 64
        assert float_precision(Fraction(7), 10) == 64

    def test_zeta_at_rational(self, oracle):
        enc = zeta_minus1_real(Fraction(15, 2), 64, 128)
        assert oracle.inside(enc, oracle.zeta_minus1(Fraction(15, 2)))

    def test_prime_zeta_at_rational(self, oracle):
        enc = prime_zeta_real(Fraction(15, 2), sieve(1000), 128)
        assert oracle.inside(enc, oracle.prime_zeta(Fraction(15, 2)))

    def test_agrees_with_exact_mode(self):
        exact = zeta_minus1(SeriesRequest(7, 64, 200))
        real = zeta_minus1_real(7, 64, 128)
        # both contain zeta(7) - 1, so they overlap
        assert exact.intersect(real).width >= 0

    def test_schedule_levels(self, oracle):
        schedule = RealZetaSchedule(Fraction(29, 4), prime_limit=1000)
        assert oracle.inside(schedule.zeta(1), oracle.zeta_minus1(Fraction(29, 4)))
        assert schedule.prec(1) == schedule.prec(0) + 64

    def test_power_needs_positive_base(self):
        with pytest.raises(DomainError):
            float_power(Fraction(0), Fraction(3, 2), 64)
