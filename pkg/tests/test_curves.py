import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from prismforge.curves import (Curve, GeneratorSet, NotOnCurveError, SingularCurveError, add,
                               combinations, combine, find_points, is_torsion, mul, neg, on_curve,
                               order, select_generators, torsion, torsion_order_bound)

C52 = Curve(29, 100)           # height curve for lengths 5 and 2
G = (F(2), F(18))


def test_singular_rejected():
    with pytest.raises(SingularCurveError):
        Curve(2, 1)
    with pytest.raises(SingularCurveError):
        Curve(0, 0, 0)


def test_add_validates():
    with pytest.raises(NotOnCurveError):
        add(C52, G, (F(1), F(1)))


def test_inverse_and_identity():
    assert add(C52, G, neg(C52, G)) is None
    assert add(C52, None, G) == G
    assert mul(C52, 0, G) is None


def test_torsion_shift_gives_a4_point():
    # both sign patterns that really land on (-20, +-40)
    assert add(C52, G, (F(-10), F(30))) == (F(-20), F(-40))
    assert add(C52, (F(2), F(-18)), (F(-10), F(-30))) == (F(-20), F(40))


@pytest.mark.parametrize("n", [-7, -2, -1, 1, 2, 3, 10])
def test_mul_matches_repeated_addition(n):
    acc = None
    step = G if n > 0 else neg(C52, G)
    for _ in range(abs(n)):
        acc = add(C52, acc, step)
    assert mul(C52, n, G) == acc


@settings(max_examples=40, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_associativity_on_multiples(a, b, c):
    T = (F(-10), F(30))
    P, Q, R = mul(C52, a, G), add(C52, mul(C52, b, G), T), mul(C52, c, G)
    assert add(C52, add(C52, P, Q), R) == add(C52, P, add(C52, Q, R))
    assert on_curve(C52, add(C52, P, Q))


def test_torsion_list_for_2_3():
    C = Curve(13, 36)
    info = torsion(C)
    assert info.structure == "Z2xZ4"
    pts = set(info.group)
    assert pts == {None, (0, 0), (-4, 0), (-9, 0), (6, 30), (6, -30), (-6, 6), (-6, -6)}
    assert dict(info.points)[(F(6), F(30))] == 4


@pytest.mark.parametrize("coeffs, structure", [
    ((0, -1, 0), "Z2xZ2"),
    ((0, 0, 1), "Z6"),
    ((0, 0, 4), "Z3"),
    ((0, 4, 0), "Z4"),
    ((0, 1, 0), "Z2"),
    ((0, -43, 166), "Z7"),
    ((0, 0, -2), "trivial"),
    ((12, -4, 0), "Z2"),
    ((-4, -36, 0), "Z2"),
    ((0, -1, 1), "trivial"),
])
def test_torsion_structures(coeffs, structure):
    info = torsion(Curve(*coeffs))
    assert info.structure == structure
    # certification: each listed order is the true order
    for P, k in info.points:
        assert order(Curve(*coeffs), P) == k


def test_torsion_order_bound_divides_counts():
    C = Curve(13, 36)
    assert torsion_order_bound(C) % len(torsion(C)) == 0


def _brute_points(C, N, E):
    out = set()
    for e in range(1, E + 1):
        for m in range(-N * e * e, N * e * e + 1):
            if math.gcd(m, e) != 1:
                continue
            u = F(m, e * e)
            r = C.rhs(u)
            if r >= 0:
                a, b = math.isqrt(r.numerator), math.isqrt(r.denominator)
                if a * a == r.numerator and b * b == r.denominator:
                    out |= {(u, F(a, b)), (u, -F(a, b))}
    return out


@pytest.mark.parametrize("coeffs", [(29, 100, 0), (13, 36, 0), (12, -4, 0), (0, -43, 166),
                                    (229, 10404, 0)])
def test_find_points_matches_brute_scan(coeffs):
    C = Curve(*coeffs)
    assert set(find_points(C, 300, 3)) == _brute_points(C, 300, 3)


def test_find_points_fractional_model():
    C = Curve(F(1, 4), -1)
    pts = find_points(C, 200, 2)
    assert pts and all(on_curve(C, P) for P in pts)


def test_select_generators_drops_dependent_points():
    pts = [G, mul(C52, 2, G), add(C52, G, (F(0), F(0))), neg(C52, G)]
    gens = select_generators(C52, pts)
    assert len(gens) == 1 and gens[0] in (G, neg(C52, G))


def test_combinations_box():
    gens = GeneratorSet((G,), 2)
    got = [(c, Q) for c, _, Q in combinations(C52, gens)]
    assert [c for c, _ in got] == [(-2,), (-1,), (1,), (2,)]
    assert dict(got)[(2,)] == mul(C52, 2, G)
    assert combine(C52, gens, (2,)) == mul(C52, 2, G)
    with pytest.raises(ValueError):
        combine(C52, gens, (3,))


def test_combinations_up_to_sign():
    gens = GeneratorSet((G, (F(-20), F(40))), 1)
    coeffs = [c for c, _, _ in combinations(C52, gens, up_to_sign=True)]
    assert (1, -1) in coeffs and (-1, 1) not in coeffs
    assert len(coeffs) == 4


def test_is_torsion():
    assert is_torsion(C52, (F(0), F(0)))
    assert not is_torsion(C52, G)
