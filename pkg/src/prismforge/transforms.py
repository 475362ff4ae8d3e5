"""Catalog of quartic-square problems and their Weierstrass curves.

Each entry pairs a quartic ``q(t)`` (whose rational square values are the
object of a search) with a curve and the inverse map taking a curve point
to a parameter ``t``.  Every entry is written out explicitly so it can be
tested on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import RatLike, is_square, rat
from .curves import Curve, Point, on_curve, NotOnCurveError

TRANSFORM_IDS = (
    "T_SEC2", "T_TRAP", "T_PAR", "T_PAR_E1", "T_PAR_E2",
    "T_KITE_X", "T_KITE_Y", "T_KITE_ZW", "T_RHOM_Z", "T_RHOM_W",
)

# short names used on the command line
ALIASES = {
    "sec2": "T_SEC2", "trap": "T_TRAP", "par": "T_PAR", "par-e1": "T_PAR_E1",
    "par-e2": "T_PAR_E2", "kite-x": "T_KITE_X", "kite-y": "T_KITE_Y",
    "kite-zw": "T_KITE_ZW", "rhom-z": "T_RHOM_Z", "rhom-w": "T_RHOM_W",
}

PARAM_NAMES = {
    "T_SEC2": ("x", "y"),
    "T_TRAP": ("i", "j"),
    "T_PAR": ("m", "n"),
    "T_PAR_E1": (),
    "T_PAR_E2": (),
    "T_KITE_X": ("p", "q"),
    "T_KITE_Y": ("p", "q"),
    "T_KITE_ZW": ("p", "q"),
    "T_RHOM_Z": ("b", "c"),
    "T_RHOM_W": ("b", "c"),
}


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True)
class QuarticCoeffs:
    """q(t) = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 with one known point s0^2 = q(t0)."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction
    t0: Fraction
    s0: Fraction

    def __call__(self, t: RatLike) -> Fraction:
        t = rat(t)
        return (((self.c4 * t + self.c3) * t + self.c2) * t + self.c1) * t + self.c0

    @property
    def coeffs(self) -> tuple:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)


def _quartic(c4, c3, c2, c1, c0, t0, s0) -> QuarticCoeffs:
    q = QuarticCoeffs(*(Fraction(v) for v in (c4, c3, c2, c1, c0, t0, s0)))
    assert q(q.t0) == q.s0 ** 2, "catalog entry has a wrong base point"
    return q


@dataclass(frozen=True)
class NamedTransform:
    id: str
    params: tuple = ()

    def __post_init__(self):
        tid = ALIASES.get(self.id, self.id)
        if tid not in TRANSFORM_IDS:
            raise InvalidParameters(f"unknown transform {self.id!r}")
        object.__setattr__(self, "id", tid)
        params = tuple(int(p) for p in self.params)
        object.__setattr__(self, "params", params)
        _validate(tid, params)

    def __str__(self):
        names = PARAM_NAMES[self.id]
        body = ", ".join(f"{n}={v}" for n, v in zip(names, self.params))
        return f"{self.id}({body})"


def _validate(tid: str, params: tuple):
    want = len(PARAM_NAMES[tid])
    if len(params) != want:
        raise InvalidParameters(f"{tid} takes {want} parameters, got {len(params)}")
    if tid == "T_SEC2":
        x, y = params
        if x <= 0 or y <= 0 or x == y:
            raise InvalidParameters("T_SEC2 needs distinct positive x, y")
    elif want == 2:
        a, b = params
        if a <= 0 or b <= 0 or math.gcd(a, b) != 1:
            raise InvalidParameters(f"{tid} needs coprime positive parameters, got {params}")
        if tid in ("T_RHOM_Z", "T_RHOM_W") and a == b:
            raise InvalidParameters(f"{tid} needs b != c")
        if tid == "T_PAR" and a == b:
            raise InvalidParameters("T_PAR needs m != n")


def curve_of(t: NamedTransform) -> Curve:
    tid, prm = t.id, t.params
    if tid == "T_SEC2":
        x, y = prm
        return Curve(x * x + y * y, x * x * y * y)
    if tid == "T_TRAP":
        i, j = prm
        return Curve(i * i, -j ** 4)
    if tid == "T_PAR":
        m, n = prm
        return Curve(2 * (m * m + n * n), (m * m - n * n) ** 2)
    if tid == "T_PAR_E1":
        return Curve(12, -4)
    if tid == "T_PAR_E2":
        return Curve(-4, -36)
    if tid == "T_KITE_X":
        p, q = prm
        pq2 = p * p * q * q
        return Curve(12 * pq2, -4 * pq2 * (p * p + 4 * q * q) ** 2)
    if tid == "T_KITE_Y":
        p, q = prm
        return Curve(-2 * (p ** 4 - 6 * p * p * q * q + q ** 4),
                     (p * p + q * q) ** 2 * (p * p + 4 * p * q + q * q) * (p * p - 4 * p * q + q * q))
    if tid == "T_KITE_ZW":
        p, q = prm
        pq2 = p * p * q * q
        return Curve(p ** 4 + 18 * pq2 + q ** 4, 12 * pq2 * (p ** 4 - 4 * q ** 4))
    b, c = prm
    K, M = _rhombus_km(tid, b, c)
    # s^2 = A^4 + 2K A^2 + M^2  <->  V^2 = U^3 - K U^2 + (K^2 - M^2)/4 U,  A = V/U
    return Curve(-K, (K * K - M * M) // 4)


def _rhombus_km(tid: str, b: int, c: int) -> tuple[int, int]:
    b2, c2 = b * b, c * c
    if tid == "T_RHOM_Z":
        K = 7 * b2 * b2 - 18 * b2 * c2 + 7 * c2 * c2
    else:
        K = -(b2 * b2 - 30 * b2 * c2 + c2 * c2)
    return K, (b2 + c2) ** 2


def quartic_of(t: NamedTransform) -> QuarticCoeffs:
    tid, prm = t.id, t.params
    if tid == "T_SEC2":
        x, y = prm
        return _quartic(y * y, 0, 4 * x * x - 2 * y * y, 0, y * y, 0, y)
    if tid == "T_TRAP":
        i, j = prm
        c = Fraction(i, j)
        return _quartic(1, 4 * c, 4 * c * c + 6, 4 * c, 1, 0, 1)
    if tid == "T_PAR":
        m, n = prm
        k = Fraction(m, n)
        return _quartic(1, 4 * k, 2 * (1 - 2 * k * k), -12 * k, 8 * k * k + 1, k, 1 - k * k)
    if tid == "T_PAR_E1":
        # y^2 + h^2 for y = p^2 - 2q^2, h = p^2 - q^2, in t = p/q
        return _quartic(2, 0, -6, 0, 5, 1, 1)
    if tid == "T_PAR_E2":
        # z^2 + h^2 for z = p^2 + 2q^2
        return _quartic(2, 0, 2, 0, 5, 1, 3)
    if tid == "T_KITE_X":
        p, q = prm
        g = Fraction(p, q)
        return _quartic(g * g + 16, 0, -6 * g * g, 0, g * g * (g * g + 1), g / 2, g * (g * g / 4 + 1))
    if tid == "T_KITE_Y":
        p, q = prm
        g = Fraction(p, q)
        return _quartic(16, 0, g ** 4 - 6 * g * g + 1, 0, g ** 4, 0, g * g)
    if tid == "T_KITE_ZW":
        p, q = prm
        g = Fraction(p, q)
        q4 = _quartic_kite_zw(g)
        return _quartic(*q4, g / 2, _kite_zw_s0(g))
    b, c = prm
    K, M = _rhombus_km(tid, b, c)
    return _quartic(4, 0, 8 * K, 0, 4 * M * M, 0, 2 * M)


def _quartic_kite_zw(g: Fraction) -> tuple:
    return (g * g + 16, 2 * g * (g * g - 1), g ** 4 - 12 * g * g + 1, -2 * g * (g * g - 1), g * g * (g * g + 1))


def _kite_zw_s0(g: Fraction) -> Fraction:
    # h = 4f^2 - g^2 vanishes at f = g/2, leaving q = z^2
    return abs(g / 2 * (g * g - 1) + g * (g * g / 4 - 1))


def _div(num: Fraction, den: Fraction) -> Optional[Fraction]:
    return None if den == 0 else num / den


def param_of_point(t: NamedTransform, P: Point) -> Optional[Fraction]:
    """Quartic parameter of a curve point, or ``None`` at infinity and at poles."""
    C = curve_of(t)
    if not on_curve(C, P):
        raise NotOnCurveError(f"{P} is not on {C}")
    if P is None:
        return None
    U, V = P
    tid, prm = t.id, t.params
    if tid == "T_SEC2":
        x, y = prm
        return _div(V, y * (U + x * x))
    if tid == "T_TRAP":
        i, j = prm
        return _div(V - i * U, j * (U + j * j))
    if tid == "T_PAR":
        m, n = prm
        e = m * m - n * n
        mu = _div(V - 2 * m * e, n * (U - e))
        # mu is measured from k, the quartic variable is mu - k
        return None if mu is None else mu - Fraction(m, n)
    if tid == "T_PAR_E1":
        return _div(4 * U + V + 4, 2 * U + V - 4)
    if tid == "T_PAR_E2":
        return _div(4 * U + V + 12, V - 2 * U - 12)
    if tid == "T_KITE_X":
        p, q = prm
        r = p * p + 4 * q * q
        k = 8 * p * p * q * q * r
        return _div(p * (V + 4 * q * q * U + k), 2 * q * (V - p * p * U - k))
    if tid == "T_KITE_Y":
        p, q = prm
        return _div(V, 8 * q * q * U)
    if tid == "T_KITE_ZW":
        p, q = prm
        k = 24 * p * p * q * q * (p * p - 2 * q * q)
        return _div(p * (V + (p * p - 5 * q * q) * U + k), 2 * q * (V + (q * q - 2 * p * p) * U - k))
    return _div(V, U)


def verify_square(t: NamedTransform, param: RatLike) -> bool:
    return is_square(quartic_of(t)(param))
