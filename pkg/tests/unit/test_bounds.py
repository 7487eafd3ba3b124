import json
import random
from decimal import Decimal
from fractions import Fraction

import pytest

from zetafrac.arith.bigratio import int_from_text, int_text
from zetafrac.arith.enclosure import Enclosure
from zetafrac.exceptions import DomainError, IntegrityError
from zetafrac.theorems.bounds import eval_delta, eval_epsilon, prime_lower_witness, zeta_lower_witness
from zetafrac.theorems.certify import certify_between, raise_if_false
from zetafrac.theorems.schemas import Verdict, VerdictRecord

pytestmark = pytest.mark.unit


class TestBoundFunctions:
    """Exact eps and delta."""

    def test_epsilon_at_2(self):
        assert eval_epsilon(1, 2) == Fraction(625, 324)

    def test_epsilon_at_7(self):
        assert Fraction("0.5633") < eval_epsilon(1, 7) < Fraction("0.5634")

    def test_epsilon_crosses_1e9_at_176(self):
        assert eval_epsilon(1, 176) < Fraction(1, 10 ** 9)
        assert eval_epsilon(1, 175) > Fraction(1, 10 ** 9)

    def test_delta(self):
        assert eval_delta(0) == 3
        assert Fraction("0.2535") < eval_delta(7) < Fraction("0.2538")
        assert Fraction("0.386") < eval_delta(4) < Fraction("0.388")

    def test_epsilon_scaling(self):
        rng = random.Random(99)
        for _ in range(100):
            x = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            y = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            s = rng.randint(0, 50)
            assert eval_epsilon(x * y, s) == x ** s * eval_epsilon(y, s)

    def test_epsilon_accepts_string_x(self):
        assert eval_epsilon("2/3", 3) == eval_epsilon(Fraction(2, 3), 3)

    @pytest.mark.parametrize("x,s", [(0, 2), (-1, 2), (1, -1), (1, 2.0)])
    def test_epsilon_preconditions(self, x, s):
        with pytest.raises(DomainError):
            eval_epsilon(x, s)


class TestProofWitnesses:
    """Auxiliary functions whose positivity closes the lower-bound proofs."""

    def test_zeta_witness_positive(self):
        assert Fraction("3.8") < zeta_lower_witness(2) < Fraction("3.9")
        assert all(zeta_lower_witness(n) > 0 for n in range(2, 101))

    def test_prime_witness_sign_change(self):
        assert prime_lower_witness(3) < 0
        assert Fraction("0.06") < prime_lower_witness(4) < Fraction("0.07")
        assert all(prime_lower_witness(s) > 0 for s in range(4, 201))

    def test_witness_domains(self):
        with pytest.raises(DomainError):
            zeta_lower_witness(1)
        with pytest.raises(DomainError):
            prime_lower_witness(1)


class TestCertifyBetween:
    """Three-valued interval decisions."""

    def test_true(self):
        cert = certify_between(lambda level: Enclosure(Fraction(3, 2), Fraction(8, 5)), 1, 2)
        assert cert.verdict is Verdict.TRUE
        assert cert.rounds == 0

    def test_false(self):
        cert = certify_between(lambda level: Enclosure(3, 4), 1, 2)
        assert cert.verdict is Verdict.FALSE

    def test_inconclusive_after_budget(self):
        cert = certify_between(lambda level: Enclosure(0, 2), 1, None, max_rounds=3)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.rounds == 3
        assert cert.enclosure == Enclosure(0, 2)

    def test_refines_until_decided(self):
        cert = certify_between(lambda level: Enclosure(Fraction(1, 2) - Fraction(1, 2 ** level), 1), 0, None)
        assert cert.verdict is Verdict.TRUE
        assert cert.rounds == 2

    def test_enclosure_bounds_use_far_side(self):
        value = lambda level: Enclosure(Fraction(11, 10), Fraction(12, 10))
        assert certify_between(value, Enclosure(1, Fraction(105, 100)), None).verdict is Verdict.TRUE
        assert certify_between(value, Enclosure(1, Fraction(115, 100)), None, max_rounds=1).verdict is Verdict.INCONCLUSIVE

    def test_raise_if_false(self):
        cert = certify_between(lambda level: Enclosure(3, 4), 1, 2)
        with pytest.raises(IntegrityError) as exc:
            raise_if_false(cert, "prop2.2", 1, 2, n=9)
        assert exc.value.evidence["claim-id"] == "prop2.2"
        assert exc.value.evidence["n"] == "9"

    def test_raise_if_false_with_huge_values(self):
        big = 2 ** 20_000
        cert = certify_between(lambda level: Enclosure(big, big + 1), None, Fraction(1, 3 ** 9_000))
        with pytest.raises(IntegrityError) as exc:
            raise_if_false(cert, "thm1", None, Fraction(1, 3 ** 9_000), floor_lhs=big, bound=Enclosure(0, big))
        evidence = exc.value.evidence
        assert evidence["floor_lhs"] == int_text(big)
        assert evidence["lo"] == int_text(big)
        assert evidence["upper"] == "1/" + int_text(3 ** 9_000)
        assert evidence["bound"] == f"[0, {int_text(big)}]"


class TestVerdictRecord:
    """Record rendering."""

    def test_outward_decimal_endpoints(self):
        record = VerdictRecord.build("thm1.6", Verdict.TRUE, Enclosure(Fraction(1, 3), Fraction(2, 3)), n=7)
        assert Fraction(record.lo) <= Fraction(1, 3)
        assert Fraction(record.hi) >= Fraction(2, 3)

    def test_json_uses_alias_and_drops_none(self):
        record = VerdictRecord.build("thm1", Verdict.TRUE, n=5, k=1)
        text = record.to_json()
        assert '"claim-id":"thm1"' in text
        assert '"lo"' not in text
        assert '"contract":"exact"' in text

    def test_json_writes_huge_floors_as_numbers(self):
        big = 2 ** 15_000
        record = VerdictRecord.build("thm1", Verdict.TRUE, Enclosure(big - 1, big), n=15_000, k=2, floor_lhs=big - 1, floor_pow=1)
        parsed = json.loads(record.to_json(), parse_int=int_from_text)
        assert parsed["floor_lhs"] == big - 1
        assert Decimal(parsed["lo"]) < Decimal(parsed["hi"])
