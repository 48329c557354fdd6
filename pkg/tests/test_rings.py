import math
import random
from fractions import Fraction

import pytest

from edr.errors import DescriptorMismatch, NotDivisible, UnsupportedRing
from edr.rings import (
    IntegerRing,
    ModularRing,
    PrimeFieldPolynomialRing,
    ProductRing,
    TruncatedSeriesRing,
    bezout_combination,
    canonical_associate,
    divide_exact,
    gcd_bezout,
    is_unit,
    jacobson_member,
    ring_arith,
    unit_inverse,
)

from oracles import jacobson_brute_zn

Z = IntegerRing()
M12 = ModularRing(12)
GF2 = PrimeFieldPolynomialRing(2)
GF5 = PrimeFieldPolynomialRing(5)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        ModularRing(1)
    with pytest.raises(ValueError):
        PrimeFieldPolynomialRing(4)
    with pytest.raises(ValueError):
        TruncatedSeriesRing(0)
    with pytest.raises(ValueError):
        ProductRing([Z])


def test_descriptor_equality_is_structural():
    assert ModularRing(12) == ModularRing(12)
    assert ModularRing(12) != ModularRing(13)
    assert ProductRing([Z, M12]) == ProductRing([IntegerRing(), ModularRing(12)])
    assert hash(ModularRing(12)) == hash(ModularRing(12))


def test_arith_examples():
    assert ring_arith("add", Z.from_int(3), Z.from_int(-3)) == Z.zero
    assert ring_arith("mul", M12.from_int(8), M12.from_int(9)) == M12.zero
    x_plus_1 = GF2.element([1, 1])
    assert ring_arith("add", x_plus_1, x_plus_1) == GF2.zero
    assert ring_arith("neg", Z.from_int(5)) == Z.from_int(-5)


def test_descriptor_mismatch_raises():
    with pytest.raises(DescriptorMismatch):
        ring_arith("add", Z.from_int(1), M12.from_int(1))
    with pytest.raises(DescriptorMismatch):
        Z.from_int(1) * ModularRing(7).from_int(1)


def test_is_unit_examples():
    assert unit_inverse(Z.from_int(-1)) == Z.from_int(-1)
    assert unit_inverse(Z.from_int(2)) is None
    assert unit_inverse(M12.from_int(5)) == M12.from_int(5)
    assert unit_inverse(M12.from_int(8)) is None
    # brute cross-check over Z/12
    for v in range(12):
        brute = any(v * t % 12 == 1 for t in range(12))
        assert is_unit(M12.from_int(v)) == brute


def test_unit_inverse_is_exact():
    rng = random.Random(11)
    rings = [Z, M12, ModularRing(35), GF5]
    for ring in rings:
        for _ in range(50):
            x = _random_element(ring, rng)
            inv = unit_inverse(x)
            if inv is not None:
                assert x * inv == ring.one


def test_gcd_bezout_examples():
    bd = gcd_bezout(Z.from_int(4), Z.from_int(6))
    assert bd.g == Z.from_int(2)
    assert bd.a1 == Z.from_int(2) and bd.b1 == Z.from_int(3)
    assert bd.holds_for(Z.from_int(4), Z.from_int(6))

    bd0 = gcd_bezout(Z.zero, Z.zero)
    assert bd0.g == Z.zero
    assert bd0.holds_for(Z.zero, Z.zero)

    a = GF5.element([4, 0, 1])  # x^2 - 1
    b = GF5.element([4, 1])  # x - 1
    bd = gcd_bezout(a, b)
    assert bd.g == GF5.element([4, 1])  # monic x - 1
    assert bd.a1 == GF5.element([1, 1]) and bd.b1 == GF5.one
    assert bd.holds_for(a, b)


def test_gcd_bezout_unsupported_over_series():
    S = TruncatedSeriesRing(3)
    with pytest.raises(UnsupportedRing):
        gcd_bezout(S.from_int(2), S.from_int(4))


def test_divide_exact_examples():
    assert divide_exact(Z.from_int(12), Z.from_int(4)) == Z.from_int(3)
    with pytest.raises(NotDivisible):
        divide_exact(Z.from_int(5), Z.from_int(2))
    # canonical solution among all residue solutions
    solutions = [q for q in range(12) if 4 * q % 12 == 8]
    assert solutions == [2, 5, 8, 11]
    assert divide_exact(M12.from_int(8), M12.from_int(4)) == M12.from_int(2)


def test_jacobson_examples():
    assert jacobson_member(M12.from_int(6))
    assert not jacobson_member(M12.from_int(4))
    assert jacobson_member(Z.zero)
    assert not jacobson_member(Z.from_int(3))
    assert jacobson_member(TruncatedSeriesRing(3).element([0, 1, 1]))
    assert not jacobson_member(GF5.element([0, 1]))


def test_jacobson_matches_brute_definition():
    for n in range(2, 61):
        ring = ModularRing(n)
        for a in range(n):
            assert jacobson_member(ring.from_int(a)) == jacobson_brute_zn(n, a)


def test_canonical_associate_examples():
    u, norm = canonical_associate(Z.from_int(-6))
    assert (u, norm) == (Z.from_int(-1), Z.from_int(6))
    u, norm = canonical_associate(Z.zero)
    assert (u, norm) == (Z.one, Z.zero)
    u, norm = canonical_associate(GF5.element([1, 3]))  # 3x + 1
    assert u == GF5.from_int(3) and norm == GF5.element([2, 1])
    assert u * norm == GF5.element([1, 3])


def test_canonical_associate_modular():
    for n in (12, 16, 36, 100):
        ring = ModularRing(n)
        for v in range(n):
            u, norm = canonical_associate(ring.from_int(v))
            assert is_unit(u)
            assert u * norm == ring.from_int(v)
            expected = math.gcd(v, n) % n
            assert norm.payload == expected


def _random_element(ring, rng):
    if isinstance(ring, IntegerRing):
        return ring.from_int(rng.randint(-80, 80))
    if isinstance(ring, ModularRing):
        return ring.from_int(rng.randrange(ring.n))
    if isinstance(ring, PrimeFieldPolynomialRing):
        deg = rng.randint(-1, 3)
        if deg < 0:
            return ring.zero
        return ring.element([rng.randrange(ring.p) for _ in range(deg)] + [rng.randrange(1, ring.p)])
    raise AssertionError


@pytest.mark.parametrize("ring", [Z, M12, ModularRing(16), ModularRing(36), GF2, GF5])
def test_bezout_identities_hold_on_random_pairs(ring):
    rng = random.Random(hash(str(ring)) & 0xFFFF)
    for _ in range(200):
        a = _random_element(ring, rng)
        b = _random_element(ring, rng)
        bd = gcd_bezout(a, b)
        assert bd.holds_for(a, b)
        # gcd is symmetric up to (and here including) canonical associates
        assert canonical_associate(gcd_bezout(b, a).g)[1] == canonical_associate(bd.g)[1]


def test_product_bezout_componentwise():
    ring = ProductRing([Z, M12])
    a = ring.element((4, 8))
    b = ring.element((6, 6))
    bd = gcd_bezout(a, b)
    assert bd.holds_for(a, b)
    assert bd.g.payload[0] == Z.from_int(2)
    assert bd.g.payload[1].payload == 2


def test_divide_round_trip():
    rng = random.Random(5)
    for ring in (Z, GF5):
        for _ in range(100):
            a = _random_element(ring, rng)
            b = _random_element(ring, rng)
            if b.is_zero():
                continue
            q = divide_exact(a * b, b)
            assert canonical_associate(q)[1] == canonical_associate(a)[1]
            assert q == a  # exact, not just up to associates, over these rings
    for _ in range(200):
        b = M12.from_int(rng.randrange(12))
        t = M12.from_int(rng.randrange(12))
        a = b * t
        q = divide_exact(a, b)
        assert b * q == a


def test_series_arithmetic_and_inverse():
    S = TruncatedSeriesRing(4)
    f = S.element([1, 1])
    g = S.element([1, -1])
    assert f * g == S.element([1, 0, -1])
    h = S.element([-1, 5, 0, Fraction(2, 3)])  # constant -1 is a unit
    inv = unit_inverse(h)
    assert inv is not None and h * inv == S.one
    assert unit_inverse(S.from_int(2)) is None
    assert unit_inverse(S.element([0, 1])) is None


def test_series_exact_division():
    S = TruncatedSeriesRing(4)
    x = S.element([0, 1])
    two = S.from_int(2)
    q = divide_exact(x, two)
    assert two * q == x
    assert divide_exact(x * x, x) * x == x * x
    with pytest.raises(NotDivisible):
        divide_exact(S.one, two)
    with pytest.raises(NotDivisible):
        divide_exact(x, x * x)


def test_product_unit_iff_all_components():
    ring = ProductRing([M12, ModularRing(5)])
    assert is_unit(ring.element((5, 2)))
    assert not is_unit(ring.element((4, 2)))
    inv = unit_inverse(ring.element((5, 2)))
    assert inv * ring.element((5, 2)) == ring.one


def test_bezout_combination_folds():
    g, coeffs = bezout_combination([Z.from_int(6), Z.from_int(10), Z.from_int(15)])
    assert g == Z.one
    total = Z.zero
    for c, a in zip(coeffs, [Z.from_int(6), Z.from_int(10), Z.from_int(15)]):
        total = total + c * a
    assert total == g
