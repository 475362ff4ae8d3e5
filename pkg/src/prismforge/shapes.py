"""Base quadrilaterals, their diagonals, scaling, and the perfection verdict."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

from .arith import RatLike, half_angle, is_square, rat, rational_sqrt
from .curves import _add
from .transforms import NamedTransform, curve_of, param_of_point

LENGTH_NAMES = ("x", "y", "z", "w", "u", "v")


class Shape(str, Enum):
    GENERAL = "general"
    TRAPEZIUM = "trapezium"
    CYCLIC = "cyclic"
    PARALLELOGRAM = "parallelogram"
    KITE = "kite"
    RHOMBUS = "rhombus"


# lengths whose t^2 + h^2 must be square; coincident lengths are listed once
REQUIRED = {
    Shape.GENERAL: ("x", "y", "z", "w", "u", "v"),
    Shape.CYCLIC: ("x", "y", "z", "w", "u", "v"),
    Shape.TRAPEZIUM: ("x", "y", "z", "v"),
    Shape.PARALLELOGRAM: ("x", "y", "z", "w"),
    Shape.KITE: ("x", "y", "z", "w"),
    Shape.RHOMBUS: ("x", "z", "w"),
}

CONVEX, DEGENERATE, INVALID = "convex", "degenerate", "invalid"


@dataclass(frozen=True)
class PrismBase:
    kind: Shape
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None
    z: Optional[Fraction] = None
    w: Optional[Fraction] = None
    u: Optional[Fraction] = None
    v: Optional[Fraction] = None
    params: tuple = ()
    geometry_status: str = CONVEX
    # derived quantities kept for reporting (cosines, trapezium gap, ...)
    info: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", Shape(self.kind))
        for name in LENGTH_NAMES:
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, rat(val))

    def lengths(self) -> dict:
        return {n: getattr(self, n) for n in REQUIRED[self.kind]}

    def get_info(self, key, default=None):
        return dict(self.info).get(key, default)


@dataclass(frozen=True)
class PrismCandidate:
    base: PrismBase
    h: Fraction
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "h", rat(self.h))
        if self.h <= 0:
            raise ValueError("prism height must be positive")


@dataclass(frozen=True)
class DiagonalReport:
    conditions: tuple  # (name, length, square?) triples
    square_count: int
    required_count: int
    perfect: bool
    integral: bool

    @property
    def failing(self) -> list:
        return [name for name, _, ok in self.conditions if not ok]

    @property
    def squares(self) -> list:
        return [name for name, _, ok in self.conditions if ok]


def classify(c: PrismCandidate) -> DiagonalReport:
    h = c.h
    conds = []
    for name, t in c.base.lengths().items():
        ok = t is not None and t > 0 and is_square(t * t + h * h)
        conds.append((name, t, ok))
    count = sum(ok for _, _, ok in conds)
    integral = h.denominator == 1 and all(t is not None and t.denominator == 1 for _, t, _ in conds)
    perfect = (count == len(conds) and integral and c.base.geometry_status != INVALID)
    return DiagonalReport(tuple(conds), count, len(conds), perfect, integral)


def primitive_scale(base: PrismBase, h: RatLike) -> PrismCandidate:
    """Scale lengths and height by one rational factor to coprime integers."""
    h = rat(h)
    names = [n for n in LENGTH_NAMES if getattr(base, n) is not None]
    values = [getattr(base, n) for n in names] + [h]
    if any(v <= 0 for v in values):
        raise ValueError("primitive_scale needs positive lengths and height")
    den = math.lcm(*(v.denominator for v in values))
    g = math.gcd(*(int(v * den) for v in values))
    factor = Fraction(den, g)
    scaled = {n: getattr(base, n) * factor for n in names}
    return PrismCandidate(replace(base, **scaled), h * factor, factor)


def _primitive_base(base: PrismBase) -> PrismBase:
    """The base alone scaled to coprime integer lengths."""
    names = [n for n in LENGTH_NAMES if getattr(base, n) is not None]
    values = [getattr(base, n) for n in names]
    den = math.lcm(*(v.denominator for v in values))
    g = math.gcd(*(int(v * den) for v in values))
    factor = Fraction(den, g)
    return replace(base, **{n: getattr(base, n) * factor for n in names})


def measure(c: PrismCandidate) -> Fraction:
    """Sum of the shape's reported lengths plus the height."""
    return sum(t for t in c.base.lengths().values()) + c.h


# --- general quadrilateral ---------------------------------------------------

def general_quad_assemble(x, w, cos_alpha, y, z) -> Optional[PrismBase]:
    """Build ABCD from AB = x, DA = w, the angle at A, BC = y and CD = z.

    Returns ``None`` when BD or AC is irrational or a triangle cannot close.
    """
    x, w, y, z, ca = (rat(t) for t in (x, w, y, z, cos_alpha))
    if not -1 < ca < 1:
        raise ValueError("cos_alpha must lie strictly between -1 and 1")
    v = rational_sqrt(x * x + w * w - 2 * x * w * ca)
    if v is None or v == 0:
        return None
    c_abd = (x * x + v * v - w * w) / (2 * x * v)
    c_dbc = (v * v + y * y - z * z) / (2 * v * y)
    if abs(c_dbc) > 1:
        return None
    sin_prod = rational_sqrt((1 - c_abd ** 2) * (1 - c_dbc ** 2))
    if sin_prod is None:
        return None
    cos_b = c_abd * c_dbc - sin_prod
    u = rational_sqrt(x * x + y * y - 2 * x * y * cos_b)
    if u is None or u == 0:
        return None
    c_adb = (w * w + v * v - x * x) / (2 * w * v)
    c_bdc = (v * v + z * z - y * y) / (2 * v * z)
    if abs(c_dbc) == 1 or abs(c_bdc) == 1:
        status = DEGENERATE
    else:
        at_b, at_d = c_abd + c_dbc, c_adb + c_bdc
        if at_b < 0 or at_d < 0:
            status = INVALID
        elif at_b == 0 or at_d == 0:
            status = DEGENERATE
        else:
            status = CONVEX
    return PrismBase(Shape.GENERAL, x=x, y=y, z=z, w=w, u=u, v=v,
                     params=(x, w, ca, y, z), geometry_status=status,
                     info=(("cos_alpha", ca), ("cos_B", cos_b)))


def general_base(x, y, z, w, u, v) -> PrismBase:
    """General quadrilateral from its six lengths; invalid unless they close up."""
    x, y, z, w, u, v = (rat(t) for t in (x, y, z, w, u, v))
    ca = (x * x + w * w - v * v) / (2 * x * w)
    built = general_quad_assemble(x, w, ca, y, z) if -1 < ca < 1 else None
    if built is not None and built.u == u:
        return built
    return PrismBase(Shape.GENERAL, x=x, y=y, z=z, w=w, u=u, v=v,
                     geometry_status=INVALID, info=(("cos_alpha", ca),))


# --- isosceles trapezium -----------------------------------------------------

def trapezium_base(x, y, z) -> Optional[PrismBase]:
    """Parallel sides x > y, equal legs z; ``None`` unless the diagonal is rational."""
    x, y, z = rat(x), rat(y), rat(z)
    if not (x > y > 0 and z > 0):
        raise ValueError("trapezium needs x > y > 0 and z > 0")
    v = rational_sqrt(z * z + x * y)
    if v is None:
        return None
    gap2 = z * z - (x - y) ** 2 / 4
    status = CONVEX if gap2 > 0 else (DEGENERATE if gap2 == 0 else INVALID)
    return PrismBase(Shape.TRAPEZIUM, x=x, y=y, z=z, v=v, params=(x, y, z), geometry_status=status,
                     info=(("cos_alpha", (x - y) / (2 * z)), ("gap_squared", gap2)))


def trapezium_param(c, d) -> PrismBase:
    """Rational trapezium with cos(alpha) = c from the one-parameter family in d."""
    c, d = rat(c), rat(d)
    if not (0 < c < 1 and 0 < d < 1):
        raise ValueError("trapezium_param needs 0 < c, d < 1")
    x = 2 * (c + d)
    y = 2 * d * (1 + c * d)
    z = 1 - d * d
    v = 2 * c * d + 1 + d * d
    gap2 = z * z - (x - y) ** 2 / 4
    status = CONVEX if gap2 > 0 else (DEGENERATE if gap2 == 0 else INVALID)
    return PrismBase(Shape.TRAPEZIUM, x=x, y=y, z=z, v=v, params=(c, d), geometry_status=status,
                     info=(("cos_alpha", c), ("gap_squared", gap2)))


@dataclass(frozen=True)
class TrapeziumChain:
    i: int
    j: int
    d: Fraction
    h: Fraction
    x_cond: bool
    y_cond: bool


def trap_special_chain(i: int, j: int) -> TrapeziumChain:
    """Follow the doubled point (j^2, i j^2) on the trapezium curve to d and h = 2d."""
    if not (0 < i < j and math.gcd(i, j) == 1):
        raise ValueError("need coprime 0 < i < j")
    t = NamedTransform("T_TRAP", (i, j))
    C = curve_of(t)
    P = (Fraction(j * j), Fraction(i * j * j))
    twice = _add(C, P, P)
    # 2P = (j^4/i^2, -j^6/i^3); the heights use the opposite sign of V
    d = param_of_point(t, (twice[0], -twice[1]))
    i2, j2 = i * i, j * j
    x_cond = is_square(i2 ** 4 + 3 * i2 ** 2 * j2 ** 2 - 2 * i2 * j2 ** 3 + 2 * j2 ** 4)
    y_cond = is_square(i2 ** 2 + 2 * i2 * j2 + 5 * j2 ** 2)
    return TrapeziumChain(i, j, d, 2 * d, x_cond, y_cond)


# --- cyclic ------------------------------------------------------------------

def cyclic_lengths(f, g, t) -> tuple:
    """The six signed lengths of the inscribed quadrilateral (unscaled)."""
    f, g, t = rat(f), rat(g), rat(t)
    f1, g1, t1 = f * f + 1, g * g + 1, t * t + 1
    x = f * g1 * t1
    y = g * f1 * t1
    z = t * f1 * g1
    w = (f * (g + t) + g * t - 1) * (f * (g * t - 1) - g - t)
    u = (f + g) * (f * g - 1) * t1
    v = (g + t) * (g * t - 1) * f1
    return x, y, z, w, u, v


def cyclic_base(f, g, t) -> PrismBase:
    lengths = cyclic_lengths(f, g, t)
    params = (rat(f), rat(g), rat(t))
    if any(L <= 0 for L in lengths):
        return PrismBase(Shape.CYCLIC, *(abs(L) for L in lengths), params=params,
                         geometry_status=INVALID)
    base = PrismBase(Shape.CYCLIC, *lengths, params=params)
    return _primitive_base(base)


# --- parallelograms ----------------------------------------------------------

def parallelogram_base(x, y, cos_alpha) -> Optional[PrismBase]:
    x, y, k = rat(x), rat(y), rat(cos_alpha)
    if not -1 < k < 1:
        raise ValueError("cos_alpha must lie strictly between -1 and 1")
    z = rational_sqrt(x * x + y * y + 2 * x * y * k)
    w = rational_sqrt(x * x + y * y - 2 * x * y * k)
    if z is None or w is None:
        return None
    return PrismBase(Shape.PARALLELOGRAM, x=x, y=y, z=z, w=w, params=(x, y, k),
                     info=(("cos_alpha", k),))


def special_parallelogram_base(p: int, q: int) -> PrismBase:
    """Parallelogram whose short diagonal equals the side y (cos alpha = x / 2y)."""
    if not p * p > 2 * q * q or q < 1:
        raise ValueError("need p^2 > 2 q^2 and q >= 1")
    x, y, z = 2 * p * q, p * p - 2 * q * q, p * p + 2 * q * q
    k = Fraction(x, 2 * y)
    status = CONVEX if k < 1 else (DEGENERATE if k == 1 else INVALID)
    return PrismBase(Shape.PARALLELOGRAM, x=x, y=y, z=z, w=y, params=(p, q),
                     geometry_status=status, info=(("cos_alpha", k),))


# --- kite and rhombus --------------------------------------------------------

def kite_base(f, g, primitive: bool = True) -> PrismBase:
    """Kite from half-angle parameters; ``primitive=False`` keeps the raw scale that
    matches the height 4 f^2 - g^2."""
    f, g = rat(f), rat(g)
    if not (f > 1 and g > 1):
        raise ValueError("kite parameters must exceed 1")
    x = g * (f * f + 1)
    y = f * (g * g + 1)
    z = f * (g * g - 1) + g * (f * f - 1)
    w = 4 * f * g
    base = PrismBase(Shape.KITE, x=x, y=y, z=z, w=w, params=(f, g),
                     info=(("cos_alpha", half_angle(f).cos), ("cos_beta", half_angle(g).cos)))
    return _primitive_base(base) if primitive else base


def kite_g_from_k(k) -> Optional[Fraction]:
    """Root g = k + sqrt(k^2 - 1) of g^2 - 2kg + 1 = 0, when rational."""
    k = rat(k)
    if k < 1:
        raise ValueError("k must be at least 1")
    root = rational_sqrt(k * k - 1)
    return None if root is None else k + root


def rhombus_base(m: int, n: int) -> PrismBase:
    if not (m > n >= 1 and math.gcd(m, n) == 1):
        raise ValueError("need coprime m > n >= 1")
    x, z, w = m * m + n * n, 2 * (m * m - n * n), 4 * m * n
    return PrismBase(Shape.RHOMBUS, x=x, y=x, z=z, w=w, params=(m, n),
                     info=(("cos_alpha", half_angle(Fraction(m, n)).cos),))


def rhombus_from_quartic(b: int, c: int, A) -> Optional[PrismCandidate]:
    """Prism from the rhombus sub-family a-squared = A: m = 2ab, n = 2ac, h = 2pq."""
    A = rat(A)
    s = b * b + c * c
    h = abs(2 * (A + s) * (A - s))
    if A <= 0 or h == 0 or b <= c:
        return None
    base = PrismBase(Shape.RHOMBUS, x=4 * A * s, y=4 * A * s, z=8 * A * (b * b - c * c),
                     w=16 * A * b * c, params=(b, c, A),
                     info=(("cos_alpha", half_angle(Fraction(b, c)).cos),))
    return PrismCandidate(base, h)


def candidate(shape, lengths: dict, h) -> PrismCandidate:
    """Candidate from explicit lengths; derived slots are filled per shape."""
    shape = Shape(shape)
    L = {k: rat(v) for k, v in lengths.items()}
    if shape is Shape.TRAPEZIUM:
        base = trapezium_base(L["x"], L["y"], L["z"])
        if base is None or ("v" in L and L["v"] != base.v):
            base = PrismBase(shape, x=L["x"], y=L["y"], z=L["z"], v=L.get("v"),
                             geometry_status=INVALID)
    elif shape is Shape.RHOMBUS:
        x, z, w = L["x"], L["z"], L["w"]
        status = CONVEX if z * z + w * w == 4 * x * x else INVALID
        base = PrismBase(shape, x=x, y=x, z=z, w=w, geometry_status=status)
    elif shape is Shape.PARALLELOGRAM:
        x, y, z, w = L["x"], L["y"], L["z"], L["w"]
        status = CONVEX if z * z + w * w == 2 * (x * x + y * y) else INVALID
        base = PrismBase(shape, x=x, y=y, z=z, w=w, geometry_status=status)
    elif shape is Shape.KITE:
        base = PrismBase(shape, **{k: L[k] for k in ("x", "y", "z", "w")})
        base = replace(base, geometry_status=_kite_status(base))
    elif shape is Shape.CYCLIC:
        base = PrismBase(shape, **{k: L[k] for k in LENGTH_NAMES})
        ok = base.u * base.v == base.x * base.z + base.y * base.w
        base = replace(base, geometry_status=CONVEX if ok else INVALID)
    else:
        base = general_base(*(L[k] for k in LENGTH_NAMES))
    return PrismCandidate(base, rat(h))


def _kite_status(base: PrismBase) -> str:
    x, y, z, w = base.x, base.y, base.z, base.w
    half = w / 2
    ca = rational_sqrt(x * x - half * half)
    cb = rational_sqrt(y * y - half * half)
    if ca is None or cb is None or x <= half or y <= half:
        return INVALID
    return CONVEX if ca + cb == z else INVALID
