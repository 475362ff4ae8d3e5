"""Known solution and near-solution rows, with checks that re-derive each claim.

Rows are stored verbatim; ``check_table`` recomputes every
square count, cosine and relation from the lengths alone.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import NamedTuple

from .arith import rational_sqrt
from .shapes import (INVALID, Shape, _primitive_base, candidate, classify,
                     cyclic_base, general_quad_assemble, kite_base,
                     special_parallelogram_base)

FIXTURE_VERSION = 1

# x, y, z, w, u, v, h, cos(alpha), cos(B)
TABLE_1 = (
    (91, 80, 45, 63, 45, 35, 60, F(25, 26), F(113, 130)),
    (128, 56, 36, 56, 88, 88, 105, F(23, 28), F(23, 28)),
    (171, 150, 84, 150, 192, 192, 80, F(29, 100), F(29, 100)),
    (159, 147, 48, 147, 171, 171, 140, F(37, 98), F(37, 98)),
    (273, 112, 385, 273, 343, 273, 180, F(1, 2), F(-1, 2)),
    (441, 210, 96, 210, 294, 294, 280, F(23, 28), F(23, 28)),
    (2223, 2185, 513, 2185, 2432, 2432, 420, F(9, 23), F(9, 23)),
    (7735, 7616, 3927, 7616, 9401, 9401, 3960, F(1, 4), F(1, 4)),
    (23205, 16779, 5712, 16779, 20349, 20349, 2860, F(49, 94), F(49, 94)),
)

TABLE_2 = (
    (152, 140, 56, 36, 88, 154, 105, F(1, 16), F(23, 28)),
    (390, 380, 315, 95, 374, 425, 168, F(-5, 19), F(251, 475)),
    (420, 60, 600, 288, 472, 540, 175, F(-2, 15), F(-191, 225)),
    (728, 504, 462, 266, 640, 735, 2520, F(5, 32), F(25, 49)),
    (1672, 616, 396, 1540, 1664, 968, 1155, F(23, 28), F(167, 847)),
)

# x, y, z, v, h
TABLE_3 = (
    (364, 275, 320, 450, 240),
    (1152, 507, 780, 1092, 1040),
    (3325, 1053, 1620, 2475, 2160),
    (3328, 361, 1824, 2128, 3420),
    (3549, 2601, 1326, 3315, 1768),
    (4225, 2527, 2223, 3952, 2964),
    (5632, 4693, 1368, 5320, 1824),
    (2754, 1984, 4455, 5031, 7560),
    (6647, 3168, 5950, 7514, 2040),
    (10633, 2300, 4550, 6720, 5040),
)

# x, y, z, w, h, cos(alpha), cos(beta)
TABLE_4 = (
    (75, 435, 450, 144, 308, F(7, 25), F(143, 145)),
    (100, 208, 252, 160, 105, F(3, 5), F(12, 13)),
    (585, 1190, 1375, 1008, 1200, F(33, 65), F(77, 85)),
    (3300, 13260, 13800, 6336, 9625, F(7, 25), F(1073, 1105)),
)

# cyclic example: lengths, h, and (f, g, t)
CYCLIC_EXAMPLE = dict(x=561, y=750, z=1275, w=1560, u=1575, v=1197, h=400,
                      params=(F(11, 2), F(4), F(2)))

# special parallelogram solution: (p, q), scale, lengths, h, vertical diagonals
PARALLELOGRAM_SOLUTION = dict(pq=(13, 1), scale=97, x=2522, y=16199, z=16587, w=16199, h=9240,
                              cos_alpha=F(13, 167), face=(9578, 18649), space=(18649, 18987))

# extra near-perfect kites (x, y, z, w, h)
KITE_EXTRAS = ((8745, 4182, 10881, 6336, 14840), (1883, 1924, 1107, 3640, 2400))

# rhombus examples (x, z, w, h) with the lengths that should be square
RHOMBUS_EXAMPLES = (((75, 42, 144, 40), ("x", "z")), ((988, 760, 1824, 315), ("x", "w")))

TABLE_IDS = ("1", "2", "3", "4", "S5", "S6", "S7", "S8")


class Check(NamedTuple):
    label: str
    ok: bool
    detail: str = ""


def _general_row(row):
    x, y, z, w, u, v, h, ca, cb = row
    c = candidate(Shape.GENERAL, dict(x=x, y=y, z=z, w=w, u=u, v=v), h)
    return c, classify(c)


def _law_of_cosines(row) -> tuple:
    """v from (x, w, cos alpha) and u from (x, y, cos B)."""
    x, y, z, w, u, v, h, ca, cb = row
    v2 = rational_sqrt(x * x + w * w - 2 * x * w * ca)
    u2 = rational_sqrt(x * x + y * y - 2 * x * y * cb)
    return v2, u2


def check_table_1() -> list:
    out = []
    for i, row in enumerate(TABLE_1, 1):
        c, rep = _general_row(row)
        v2, u2 = _law_of_cosines(row)
        base = general_quad_assemble(row[0], row[3], row[7], row[1], row[2])
        ok = (rep.square_count == 5 and v2 == row[5] and u2 == row[4]
              and base is not None and base.u == row[4] and base.get_info("cos_B") == row[8])
        out.append(Check(f"table 1 row {i}", ok,
                         f"5/6 squares, fails {','.join(rep.failing)}; {c.base.geometry_status}"))
    return out


def check_table_2() -> list:
    out = []
    for i, row in enumerate(TABLE_2, 1):
        c, rep = _general_row(row)
        v2, u2 = _law_of_cosines(row)
        distinct = len(set(row[:6])) == 6
        ok = rep.square_count == 4 and distinct and v2 == row[5] and u2 == row[4]
        out.append(Check(f"table 2 row {i}", ok,
                         f"4/6 squares, fails {','.join(rep.failing)}; distinct={distinct}"))
    return out


def check_table_3() -> list:
    out = []
    for i, (x, y, z, v, h) in enumerate(TABLE_3, 1):
        c = candidate(Shape.TRAPEZIUM, dict(x=x, y=y, z=z, v=v), h)
        rep = classify(c)
        ok = rep.perfect and v * v == z * z + x * y
        out.append(Check(f"table 3 row {i}", ok, f"{rep.square_count}/4 squares"))
    return out


def _half_angle_param(cos):
    """t > 0 with (t^2 - 1) / (t^2 + 1) = cos."""
    return rational_sqrt((1 + cos) / (1 - cos))


def check_table_4() -> list:
    out = []
    for i, (x, y, z, w, h, ca, cb) in enumerate(TABLE_4, 1):
        c = candidate(Shape.KITE, dict(x=x, y=y, z=z, w=w), h)
        rep = classify(c)
        f, g = _half_angle_param(ca), _half_angle_param(cb)
        same = False
        if f is not None and g is not None and f > 1 and g > 1:
            kb = kite_base(f, g)
            mine = _primitive_base(c.base)
            same = (kb.x, kb.y, kb.z, kb.w) == (mine.x, mine.y, mine.z, mine.w)
        ok = rep.square_count == 3 and same and c.base.geometry_status != INVALID
        out.append(Check(f"table 4 row {i}", ok,
                         f"3/4 squares, fails {','.join(rep.failing)}; f, g = {f}, {g}"))
    kb = kite_base(2, 5)
    row = TABLE_4[1]
    ok = tuple(t * 4 for t in (kb.x, kb.y, kb.z, kb.w)) == row[:4]
    out.append(Check("kite_base(2, 5) x 4 = table 4 row 2", ok))
    return out


def check_cyclic() -> list:
    ex = CYCLIC_EXAMPLE
    base = cyclic_base(*ex["params"])
    scaled = {n: getattr(base, n) * 3 for n in ("x", "y", "z", "w", "u", "v")}
    sides = sorted(scaled[n] for n in "xyzw")
    diags = sorted(scaled[n] for n in "uv")
    out = [Check("cyclic sides", sides == sorted(ex[n] for n in "xyzw"), str(sides)),
           Check("cyclic diagonals", diags == sorted((ex["u"], ex["v"])), str(diags))]
    c = candidate(Shape.CYCLIC, {n: ex[n] for n in "xyzwuv"}, ex["h"])
    rep = classify(c)
    out.append(Check("cyclic 3 squares", rep.square_count == 3, ",".join(rep.squares)))
    ptolemy = ex["u"] * ex["v"] == ex["x"] * ex["z"] + ex["y"] * ex["w"]
    out.append(Check("cyclic Ptolemy", ptolemy, "1197*1575 = 561*1275 + 750*1560"))
    return out


def check_parallelogram() -> list:
    s = PARALLELOGRAM_SOLUTION
    base = special_parallelogram_base(*s["pq"])
    k = s["scale"]
    lengths = tuple(getattr(base, n) * k for n in "xyzw")
    out = [Check("special parallelogram (13, 1) x 97", lengths == (s["x"], s["y"], s["z"], s["w"]),
                 str(tuple(map(str, lengths)))),
           Check("cos alpha", base.get_info("cos_alpha") == s["cos_alpha"])]
    h = s["h"]
    face = sorted({rational_sqrt(t * t + h * h) for t in (s["x"], s["y"])})
    space = sorted({rational_sqrt(t * t + h * h) for t in (s["z"], s["w"])})
    out.append(Check("face diagonals", face == list(s["face"]), str(face)))
    out.append(Check("space diagonals", space == list(s["space"]), str(space)))
    c = candidate(Shape.PARALLELOGRAM, {n: s[n] for n in "xyzw"}, h)
    out.append(Check("perfect", classify(c).perfect))
    return out


def check_kites() -> list:
    out = []
    for x, y, z, w, h in KITE_EXTRAS:
        c = candidate(Shape.KITE, dict(x=x, y=y, z=z, w=w), h)
        rep = classify(c)
        ok = rep.square_count == 3 and c.base.geometry_status != INVALID
        out.append(Check(f"kite {(x, y, z, w, h)}", ok, f"3/4 squares, fails {','.join(rep.failing)}"))
    return out


def check_rhombi() -> list:
    out = []
    for (x, z, w, h), squares in RHOMBUS_EXAMPLES:
        c = candidate(Shape.RHOMBUS, dict(x=x, z=z, w=w), h)
        rep = classify(c)
        ok = tuple(rep.squares) == squares and c.base.geometry_status != INVALID
        out.append(Check(f"rhombus {(x, z, w, h)}", ok, f"squares {','.join(rep.squares)}"))
    return out


CHECKS = {"1": check_table_1, "2": check_table_2, "3": check_table_3, "4": check_table_4,
          "S5": check_cyclic, "S6": check_parallelogram, "S7": check_kites, "S8": check_rhombi}


def check_table(table_id: str) -> list:
    key = str(table_id).upper()
    if key not in CHECKS:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    return CHECKS[key]()
