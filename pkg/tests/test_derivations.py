"""Re-derive the catalog quartics from the geometry that defines them."""

import math
import random
from fractions import Fraction as F

import sympy as sp

from prismforge.shapes import rhombus_from_quartic
from prismforge.transforms import NamedTransform, quartic_of

k, mu, a, b, c = sp.symbols("k mu a b c")
T = sp.symbols("T", positive=True)


def par_substitution():
    # x : y = 2(k - mu) : (mu^2 - 1) put into both parallelogram diagonals
    x, y = 2 * (k - mu), mu ** 2 - 1
    return sp.expand(x ** 2 + y ** 2 + 2 * x * y * k), sp.expand(x ** 2 + y ** 2 - 2 * x * y * k)


def par_quartic():
    return mu ** 4 + 4 * k * mu ** 3 + 2 * (1 - 2 * k ** 2) * mu ** 2 - 12 * k * mu + 8 * k ** 2 + 1


def rhombus_conditions():
    # m = 2ab, n = 2ac and h = 2(a^2 + s)(a^2 - s) with s = b^2 + c^2 make x^2 + h^2 square
    A, s = a ** 2, b ** 2 + c ** 2
    m, n = 2 * a * b, 2 * a * c
    z, w, h = 2 * (m ** 2 - n ** 2), 4 * m * n, 2 * (A + s) * (A - s)
    return sp.expand(z ** 2 + h ** 2), sp.expand(w ** 2 + h ** 2)


def rhombus_quartics():
    s4 = (b ** 2 + c ** 2) ** 4
    qz = 4 * (a ** 8 + 2 * (7 * b ** 4 - 18 * b ** 2 * c ** 2 + 7 * c ** 4) * a ** 4 + s4)
    qw = 4 * (a ** 8 - 2 * (b ** 4 - 30 * b ** 2 * c ** 2 + c ** 4) * a ** 4 + s4)
    return qz, qw


def test_parallelogram_quartic_symbolic():
    zsq, wsq = par_substitution()
    assert sp.expand(zsq - (mu ** 2 - 2 * k * mu + 1) ** 2) == 0
    assert sp.expand(wsq - par_quartic()) == 0


def test_rhombus_quartics_symbolic():
    lhs = rhombus_conditions()
    for got, want in zip(lhs, rhombus_quartics()):
        assert sp.expand(got - want) == 0


def test_squared_trailing_term_does_not_match():
    bad = 4 * (a ** 8 + 2 * (7 * b ** 4 - 18 * b ** 2 * c ** 2 + 7 * c ** 4) * a ** 4
               + (b ** 2 + c ** 2) ** 2)
    assert sp.expand(rhombus_conditions()[0] - bad) != 0


def test_catalog_quartics_at_random_points():
    rng = random.Random(20)
    zsq, wsq = par_substitution()
    qz, qw = rhombus_quartics()
    for _ in range(50):
        m, n = rng.randint(1, 40), rng.randint(1, 40)
        if m == n:
            n += 1
        g = math.gcd(m, n)
        m, n = m // g, n // g
        t = F(rng.randint(-99, 99), rng.randint(1, 99))
        val = wsq.subs({k: sp.Rational(m, n), mu: sp.Rational(t.numerator, t.denominator)})
        if m != n:
            assert quartic_of(NamedTransform("T_PAR", (m, n)))(t) == F(int(val.p), int(val.q))
        bb = rng.randint(2, 30)
        cc = rng.randint(1, bb - 1)
        if math.gcd(bb, cc) != 1:
            continue
        A = F(rng.randint(1, 99), rng.randint(1, 99))
        sub = {T: sp.Rational(A.numerator, A.denominator), b: bb, c: cc}
        for tid, q in (("T_RHOM_Z", qz), ("T_RHOM_W", qw)):
            got = quartic_of(NamedTransform(tid, (bb, cc)))(A)
            # the quartic variable is a^2
            want = sp.expand(q.subs(a, sp.sqrt(T))).subs(sub)
            assert got == F(int(want.p), int(want.q))
        cand = rhombus_from_quartic(bb, cc, A)
        base, h, sq = cand.base, cand.h, bb * bb + cc * cc
        assert base.x ** 2 + h ** 2 == 4 * (A * A + sq * sq) ** 2
        assert base.z ** 2 + h ** 2 == quartic_of(NamedTransform("T_RHOM_Z", (bb, cc)))(A)
        assert base.w ** 2 + h ** 2 == quartic_of(NamedTransform("T_RHOM_W", (bb, cc)))(A)
