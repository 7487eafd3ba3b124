import math
import random
from fractions import Fraction

import pytest

from zetafrac.arith.enclosure import (
    Enclosure,
    LevelRefiner,
    certified_floor,
    enc_add,
    enc_frac,
    enc_mul,
    enc_recip,
    enc_sub,
)
from zetafrac.exceptions import DomainError, IntegrityError, StraddlesIntegerError

pytestmark = [pytest.mark.unit, pytest.mark.arith]

F = Fraction


def E(lo, hi) -> Enclosure:
    return Enclosure(F(lo), F(hi))


class TestEnclosureOps:
    """Endpoint arithmetic."""

    def test_add(self):
        assert enc_add(E(F(1, 2), F(2, 3)), E(F(1, 3), F(1, 2))) == E(F(5, 6), F(7, 6))

    def test_mul_mixed_signs(self):
        assert enc_mul(E(-1, 2), E(3, 4)) == E(-4, 8)

    def test_sub_points(self):
        assert enc_sub(E(0, 0), E(1, 1)) == E(-1, -1)

    def test_recip(self):
        assert enc_recip(E(F(1, 2), F(2, 3))) == E(F(3, 2), 2)
        assert enc_recip(E(-4, -2)) == E(F(-1, 2), F(-1, 4))

    def test_recip_through_zero(self):
        with pytest.raises(DomainError):
            enc_recip(E(-1, 1))

    def test_operators_accept_scalars(self):
        e = E(1, 2)
        assert e + 1 == E(2, 3)
        assert 1 - e == E(-1, 0)
        assert e * F(1, 2) == E(F(1, 2), 1)
        assert -e == E(-2, -1)

    def test_out_of_order(self):
        with pytest.raises(DomainError):
            E(2, 1)

    def test_intersect_disjoint(self):
        with pytest.raises(IntegrityError) as exc:
            E(0, 1).intersect(E(2, 3))
        assert exc.value.evidence["second"] == ["2", "3"]

    def test_huge_endpoints_render(self):
        big = 2 ** 20_000
        assert repr(E(big, big + 1)).endswith("7]])")  # 2^20000 + 1 ends in 7
        with pytest.raises(IntegrityError) as exc:
            E(0, 1).intersect(E(big, big + 1))
        lo_text, hi_text = exc.value.evidence["second"]
        assert len(lo_text) == len(hi_text) == 6021

    def test_simplified_rounds_outward(self):
        e = E(F(1, 3), F(2, 3))
        assert e.simplified(1) == E(0, 1)
        s = E(F(1, 3 ** 40), F(2, 3 ** 40)).simplified(32)
        assert E(F(1, 3 ** 40), F(2, 3 ** 40)).is_subset(s)
        assert s.lo.denominator <= 2 ** 32 and s.hi.denominator <= 2 ** 32
        assert E(F(1, 2), F(3, 4)).simplified(8) == E(F(1, 2), F(3, 4))

    def test_contains_integer_is_closed(self):
        assert E(1, F(3, 2)).contains_integer()
        assert not E(F(3, 2), F(8, 5)).contains_integer()


class TestCertifiedFloor:
    """Floors certified by integer-free enclosures."""

    def test_integer_free(self):
        cert = certified_floor(E(F(3, 2), F(8, 5)), None, 0)
        assert cert.value == 1
        assert cert.witness == E(F(3, 2), F(8, 5))

    def test_straddles_without_progress(self):
        start = E(1, 1 + F(1, 10 ** 9))
        with pytest.raises(StraddlesIntegerError) as exc:
            certified_floor(start, lambda e: e, 5)
        assert exc.value.rounds == 5
        assert exc.value.enclosure == start

    def test_refinement_used(self):
        widths = iter([E(F(5, 4), F(7, 4)), E(F(5, 4), F(3, 2))])
        cert = certified_floor(E(F(1, 2), F(7, 4)), lambda e: next(widths), 5)
        assert cert.value == 1

    def test_widening_refinement_rejected(self):
        with pytest.raises(DomainError):
            certified_floor(E(F(1, 2), F(3, 2)), lambda e: E(0, 2), 3)

    def test_frac(self):
        cert, frac = enc_frac(E(F(3, 2), F(8, 5)))
        assert cert.value == 1
        assert frac == E(F(1, 2), F(3, 5))

    def test_frac_point(self):
        cert, frac = enc_frac(E(F(7, 2), F(7, 2)))
        assert cert.value == 3
        assert frac == E(F(1, 2), F(1, 2))

    def test_level_refiner_nests(self):
        refiner = LevelRefiner(lambda level: E(F(1, 2) - F(1, 2 ** (level + 2)), F(1, 2) + F(1, 2 ** (level + 1))))
        current = E(0, 1)
        for _ in range(5):
            nxt = refiner(current)
            assert nxt.is_subset(current)
            current = nxt
        assert refiner.level == 5


def _random_leaf(rng: random.Random) -> tuple[Fraction, Enclosure]:
    value = F(rng.randint(-50, 50), rng.randint(1, 20))
    below = F(rng.randint(0, 5), rng.randint(1, 50))
    above = F(rng.randint(0, 5), rng.randint(1, 50))
    return value, Enclosure(value - below, value + above)


def _random_dag(rng: random.Random, size: int) -> tuple[Fraction, Enclosure]:
    nodes = [_random_leaf(rng) for _ in range(3)]
    for _ in range(size):
        (va, ea), (vb, eb) = rng.choice(nodes), rng.choice(nodes)
        op = rng.choice(("add", "sub", "mul", "recip", "neg", "simplify"))
        if op == "add":
            node = (va + vb, ea + eb)
        elif op == "sub":
            node = (va - vb, ea - eb)
        elif op == "mul":
            node = (va * vb, ea * eb)
        elif op == "neg":
            node = (-va, -ea)
        elif op == "simplify":
            node = (va, ea.simplified(rng.randint(4, 40)))
        elif ea.lo > 0 or ea.hi < 0:
            node = (1 / va, enc_recip(ea))
        else:
            continue
        nodes.append(node)
    return nodes[-1]


def run_soundness_suite(count: int, seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(count):
        value, enc = _random_dag(rng, rng.randint(1, 12))
        assert enc.contains(value), (value, enc)

        tighter = enc.intersect(Enclosure(value - F(1, 10 ** 6), value + F(1, 10 ** 6)))
        assert tighter.is_subset(enc)
        if not enc.contains_integer():
            # a certified floor agrees with every tighter enclosure
            assert certified_floor(enc).value == certified_floor(tighter).value == math.floor(value)


class TestEnclosureSoundness:
    """Exact values stay inside random expression DAG enclosures."""

    def test_random_dags(self):
        run_soundness_suite(500, seed=7)

    @pytest.mark.slow
    def test_random_dags_full_suite(self):
        run_soundness_suite(10_000, seed=2024)
