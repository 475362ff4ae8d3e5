"""Acceptance criteria 1-12, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line.  Run with
``pytest -s tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import math
import random
import sys
import time
from fractions import Fraction as F

import pytest
import sympy as sp

from prismforge.arith import height, pyth_ratio_inverse, rational_sqrt
from prismforge.curves import Curve, add, find_points, on_curve, torsion
from prismforge.heights import compatible_heights
from prismforge.search import (SearchBounds, kite_seeds, search_kite, search_parallelogram,
                               search_rhombus, search_trapezium, special_par_condition_scan)
from prismforge.shapes import (Shape, candidate, classify, cyclic_base, kite_base,
                               special_parallelogram_base, trap_special_chain)
from prismforge.tables import CYCLIC_EXAMPLE, KITE_EXTRAS, TABLE_1, TABLE_2, TABLE_3, TABLE_4
from prismforge.transforms import (PARAM_NAMES, TRANSFORM_IDS, InvalidParameters, NamedTransform,
                                   curve_of, param_of_point, verify_square)

# desk bounds for the negative-result criterion: parameter heights up to 60,
# generator multiples up to 20, one generator per curve
DESK = SearchBounds(param_height_max=60, L=20, max_generators=1)


def report(n, ok, detail, elapsed, limit):
    ok = ok and elapsed < limit
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  ({elapsed:.2f}s, limit {limit}s)  {detail}"
    print(line, file=sys.__stdout__, flush=True)
    return ok


def run_criterion(n, fn, limit):
    t = time.perf_counter()
    ok, detail = fn()
    return report(n, ok, detail, time.perf_counter() - t, limit)


# --- 1-6: fixture rows --------------------------------------------------------

def criterion_1():
    bad = []
    for row in TABLE_3:
        x, y, z, v, h = row
        rep = classify(candidate(Shape.TRAPEZIUM, dict(x=x, y=y, z=z, v=v), h))
        if not (rep.perfect and rep.square_count == 4 and v * v == z * z + x * y):
            bad.append(row)
    return not bad, f"{len(TABLE_3) - len(bad)}/10 rows perfect with v^2 = z^2 + xy"


def criterion_2():
    bad = []
    for row in TABLE_1:
        x, y, z, w, u, v, h, ca, cb = row
        rep = classify(candidate(Shape.GENERAL, dict(x=x, y=y, z=z, w=w, u=u, v=v), h))
        v_from = rational_sqrt(x * x + w * w - 2 * x * w * ca)
        u_from = rational_sqrt(x * x + y * y - 2 * x * y * cb)
        if not (rep.square_count == 5 and v_from == v and u_from == u):
            bad.append(row[:7])
    return not bad, f"{9 - len(bad)}/9 rows with 5/6 squares and cosines reproducing v, u"


def criterion_3():
    bad = []
    for row in TABLE_2:
        x, y, z, w, u, v, h = row[:7]
        rep = classify(candidate(Shape.GENERAL, dict(x=x, y=y, z=z, w=w, u=u, v=v), h))
        if not (rep.square_count == 4 and len({x, y, z, w, u, v}) == 6):
            bad.append(row[:7])
    return not bad, f"{5 - len(bad)}/5 rows with 4/6 squares and distinct lengths"


def criterion_4():
    base = cyclic_base(F(11, 2), 4, 2)
    sides = sorted(3 * getattr(base, n) for n in "xyzw")
    diags = sorted(3 * getattr(base, n) for n in "uv")
    ex = CYCLIC_EXAMPLE
    rep = classify(candidate(Shape.CYCLIC, {n: ex[n] for n in "xyzwuv"}, 400))
    ok = (sides == [561, 750, 1275, 1560] and diags == [1197, 1575] and rep.square_count == 3
          and 1197 * 1575 == 561 * 1275 + 750 * 1560)
    return ok, f"sides {list(map(int, sides))}, diagonals {list(map(int, diags))}, " \
               f"{rep.square_count} squares"


def criterion_5():
    base = special_parallelogram_base(13, 1)
    x, y, z, w = (97 * getattr(base, n) for n in "xyzw")
    h = 9240
    diags = sorted(rational_sqrt(t * t + h * h) for t in (x, y, z, w))
    rep = classify(candidate(Shape.PARALLELOGRAM, dict(x=x, y=y, z=z, w=w), h))
    ok = (x, y, z) == (2522, 16199, 16587) and w == 16199 and \
        diags == [9578, 18649, 18649, 18987] and rep.perfect
    return ok, f"({x}, {y}, {z}, {w}) h={h} diagonals {list(map(int, diags))} perfect={rep.perfect}"


def criterion_6():
    rows = [r[:5] for r in TABLE_4] + [KITE_EXTRAS[0]]
    fails, ok = [], True
    for x, y, z, w, h in rows:
        rep = classify(candidate(Shape.KITE, dict(x=x, y=y, z=z, w=w), h))
        fails.append("".join(rep.failing))
        ok &= rep.square_count == 3
    # the two derivations that are checked in full: row 1 and the 8745 kite
    ok &= fails[0] == "z" and fails[-1] == "z"
    kb = kite_base(2, 5)
    ok &= tuple(4 * getattr(kb, n) for n in "xyzw") == TABLE_4[1][:4]
    return ok, f"failing conditions {fails}; kite_base(2,5)x4 = row 2"


# --- 7-8: heights and curves --------------------------------------------------

def criterion_7():
    empty = compatible_heights(2, 3)
    hs = compatible_heights(5, 2)
    want = [F(8, 3), F(15, 4)]
    scaled = (3 * 5, 3 * 2, 3 * F(8, 3))
    ok = (list(empty) == [] and list(hs) == want and math.prod(want) == 10
          and scaled == (15, 6, 8))
    return ok, f"(2,3) -> {list(map(str, empty))}; (5,2) -> {[str(h) for h in hs]}"


def criterion_8():
    notes, ok = [], True
    C23 = Curve(13, 36)
    info = torsion(C23)
    expected = {None, (0, 0), (-4, 0), (-9, 0), (6, 30), (6, -30), (-6, 6), (-6, -6)}
    t_ok = info.structure == "Z2xZ4" and set(info.group) == expected
    ok &= t_ok
    notes.append(f"torsion {info.structure}")

    C52 = Curve(29, 100)
    G = (F(2), F(18))
    s1 = add(C52, G, (F(10), F(-70)))
    s2 = add(C52, G, (F(10), F(70)))
    a_ok = s1 == (F(-20), F(40)) and s2 == (F(-20), F(-40))
    ok &= a_ok
    notes.append(f"(2,18)+(10,-70)={_pt(s1)} (2,18)+(10,70)={_pt(s2)}")

    d_ok = True
    for j in range(2, 11):
        for i in range(1, j):
            if math.gcd(i, j) != 1:
                continue
            C = curve_of(NamedTransform("T_TRAP", (i, j)))
            P = (F(j * j), F(i * j * j))
            d_ok &= add(C, P, P) == (F(j ** 4, i * i), F(-j ** 6, i ** 3))
    ok &= d_ok
    notes.append(f"doubling {'ok' if d_ok else 'BAD'}")

    k_ok = True
    for p in range(1, 11):
        for q in range(1, 11):
            if math.gcd(p, q) != 1:
                continue
            for tid in ("T_KITE_X", "T_KITE_ZW"):
                C = curve_of(NamedTransform(tid, (p, q)))
                k_ok &= all(on_curve(C, P) for P in kite_seeds(tid, p, q, check=False))
            if p != 2 * q:
                C = curve_of(NamedTransform("T_KITE_X", (p, q)))
                P = kite_seeds("T_KITE_X", p, q, check=False)[0]
                D = add(C, P, P)
                k_ok &= D[0] == F((p ** 4 + 72 * p * p * q * q + 16 * q ** 4) ** 2,
                                  16 * (p * p - 4 * q * q) ** 2)
    ok &= k_ok
    notes.append(f"kite points {'ok' if k_ok else 'BAD'}")

    e_ok = on_curve(Curve(12, -4), (F(1), F(3))) and on_curve(Curve(-4, -36), (F(9), F(9)))
    ok &= e_ok
    notes.append(f"E1/E2 generators {'ok' if e_ok else 'BAD'}")
    return ok, "; ".join(notes)


def _pt(P):
    return "O" if P is None else f"({P[0]}, {P[1]})"


# --- 9: transform round trips ---------------------------------------------------

def _random_params(tid, rng):
    if not PARAM_NAMES[tid]:
        return ()
    while True:
        a, b = rng.randint(1, 30), rng.randint(1, 30)
        try:
            NamedTransform(tid, (a, b))
            return (a, b)
        except InvalidParameters:
            continue


def criterion_9():
    rng = random.Random(9)
    checked, bad = 0, []
    for tid in TRANSFORM_IDS:
        for _ in range(20):
            t = NamedTransform(tid, _random_params(tid, rng))
            for P in find_points(curve_of(t), 50, 3):
                r = param_of_point(t, P)
                if r is None:
                    continue
                checked += 1
                if not verify_square(t, r):
                    bad.append((str(t), P))
    return not bad, f"{checked} points mapped, {len(bad)} failures"


# --- 10: trapezium reproduction and the brute-force oracle ---------------------

def _brute_trapezia(H, M=400):
    def sq(n):
        r = math.isqrt(n)
        return r * r == n
    found = set()
    for h in range(1, M + 1):
        legs = [t for t in range(1, M + 1) if sq(t * t + h * h)
                and height(pyth_ratio_inverse(F(t, h))) <= H]
        for x in legs:
            for y in legs:
                if y >= x:
                    continue
                for z in legs:
                    if 2 * z < x - y or not sq(z * z + x * y):
                        continue
                    v = math.isqrt(z * z + x * y)
                    if sq(v * v + h * h) and math.gcd(x, y, z, h) == 1:
                        found.add((x, y, z, v, h))
    return found


def _trap_tuple(r):
    b = r.candidate.base
    return tuple(int(getattr(b, n)) for n in "xyzv") + (int(r.candidate.h),)


def criterion_10():
    recs = search_trapezium(SearchBounds(13))
    got13 = [_trap_tuple(r) for r in recs]
    ok = (364, 275, 320, 450, 240) in got13
    agree = []
    for H in range(2, 7):
        mine = {g for g in map(_trap_tuple, search_trapezium(SearchBounds(H)))
                if max(g[0], g[1], g[2], g[4]) <= 400}
        agree.append(mine == _brute_trapezia(H))
    ok &= all(agree)
    return ok, f"H=13 gives {len(got13)} records incl. row 1; oracle agreement H=2..6: {agree}"


# --- 11: desk-bound negative results -------------------------------------------

def criterion_11():
    notes, ok = [], True
    runs = [("rhombus", s, lambda s=s: search_rhombus(DESK, s)) for s in ("Z_CURVE", "W_CURVE")]
    runs += [("kite", s, lambda s=s: search_kite(DESK, s))
             for s in ("X_FIRST", "Y_FIRST", "ZW_FIRST")]
    runs += [("parallelogram", "CURVE", lambda: search_parallelogram(DESK))]
    for shape, strat, fn in runs:
        t = time.perf_counter()
        recs = fn()
        perfect = sum(r.report.perfect for r in recs)
        ok &= perfect == 0
        notes.append(f"{shape}:{strat} {len(recs)} rec/{perfect} perfect "
                     f"{time.perf_counter() - t:.0f}s")
    scan = special_par_condition_scan(20) + special_par_condition_scan(20, "E2")
    hits = [r.n for r in scan if r.cond2_square]
    ok &= not hits
    notes.append(f"condition scan square hits {hits}")
    y_true = [(i, j) for j in range(2, 51) for i in range(1, j)
              if math.gcd(i, j) == 1 and trap_special_chain(i, j).y_cond]
    ok &= not y_true
    notes.append(f"trap chain y_cond true at {y_true}")
    return ok, "; ".join(notes)


# --- 12: derivation oracles --------------------------------------------------------

def criterion_12():
    rng = random.Random(12)
    k, mu, a, b, c = sp.symbols("k mu a b c")
    x, y = 2 * (k - mu), mu ** 2 - 1
    w2 = sp.expand(x ** 2 + y ** 2 - 2 * x * y * k)
    q63 = mu ** 4 + 4 * k * mu ** 3 + 2 * (1 - 2 * k ** 2) * mu ** 2 - 12 * k * mu + 8 * k ** 2 + 1
    sym_par = sp.expand(w2 - q63) == 0

    A, s = a ** 2, b ** 2 + c ** 2
    m, n = 2 * a * b, 2 * a * c
    z, w, h = 2 * (m ** 2 - n ** 2), 4 * m * n, 2 * (A + s) * (A - s)
    q83 = 4 * (a ** 8 + 2 * (7 * b ** 4 - 18 * b ** 2 * c ** 2 + 7 * c ** 4) * a ** 4 + s ** 4)
    q84 = 4 * (a ** 8 - 2 * (b ** 4 - 30 * b ** 2 * c ** 2 + c ** 4) * a ** 4 + s ** 4)
    sym_rh = sp.expand(z ** 2 + h ** 2 - q83) == 0 and sp.expand(w ** 2 + h ** 2 - q84) == 0

    num_ok = 0
    for _ in range(50):
        kk = F(rng.randint(1, 50), rng.randint(1, 50))
        mm = F(rng.randint(-99, 99), rng.randint(1, 99))
        xv, yv = 2 * (kk - mm), mm * mm - 1
        par = xv * xv + yv * yv - 2 * xv * yv * kk == \
            mm ** 4 + 4 * kk * mm ** 3 + 2 * (1 - 2 * kk * kk) * mm ** 2 - 12 * kk * mm + 8 * kk * kk + 1
        av, bv, cv = (F(rng.randint(1, 60), rng.randint(1, 20)) for _ in range(3))
        Av, sv = av * av, bv * bv + cv * cv
        mv, nv = 2 * av * bv, 2 * av * cv
        zv, wv, hv = 2 * (mv * mv - nv * nv), 4 * mv * nv, 2 * (Av + sv) * (Av - sv)
        rz = zv * zv + hv * hv == 4 * (av ** 8 + 2 * (7 * bv ** 4 - 18 * bv ** 2 * cv ** 2
                                                    + 7 * cv ** 4) * av ** 4 + sv ** 4)
        rw = wv * wv + hv * hv == 4 * (av ** 8 - 2 * (bv ** 4 - 30 * bv ** 2 * cv ** 2
                                                    + cv ** 4) * av ** 4 + sv ** 4)
        num_ok += par and rz and rw
    ok = sym_par and sym_rh and num_ok == 50
    return ok, f"symbolic parallelogram={sym_par} rhombus={sym_rh}; numeric {num_ok}/50"


# --- pytest entry points ----------------------------------------------------------

LIMITS = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 5, 8: 10, 9: 120, 10: 300, 11: 1800, 12: 10}
CRITERIA = {n: globals()[f"criterion_{n}"] for n in LIMITS}


@pytest.mark.parametrize("n", [pytest.param(n, marks=pytest.mark.slow) if n == 11 else n
                               for n in sorted(LIMITS)], ids=lambda n: f"criterion_{n}")
def test_criterion(n):
    assert run_criterion(n, CRITERIA[n], LIMITS[n])


if __name__ == "__main__":
    only = [int(a) for a in sys.argv[1:]] or sorted(LIMITS)
    results = [run_criterion(n, CRITERIA[n], LIMITS[n]) for n in only]
    print(f"{sum(results)}/{len(results)} criteria PASS")
    sys.exit(0 if all(results) else 1)
