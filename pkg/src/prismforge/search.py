"""Bounded sweeps for perfect and near-perfect prisms, one strategy per base family.

Every sweep is a fixed list of outer items (its cursor space) and a pure
``step`` that turns one item into records, so a run can be split into
contiguous cursor ranges, resumed from any position, or spread over
worker processes without changing the output.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .arith import enumerate_rationals, is_square, isqrt, maybe_square, pyth_ratio
from .curves import (GeneratorSet, _add, combinations, find_points, naive_key, select_generators,
                     torsion)
from .heights import compatible_heights
from .shapes import (INVALID, LENGTH_NAMES, REQUIRED, DiagonalReport, PrismBase, PrismCandidate,
                     Shape, _primitive_base, classify, cyclic_base, general_quad_assemble, kite_base,
                     measure, parallelogram_base, primitive_scale, rhombus_base,
                     rhombus_from_quartic, special_parallelogram_base, trapezium_base)
from .transforms import NamedTransform, curve_of, param_of_point, quartic_of


@dataclass(frozen=True)
class SearchBounds:
    """Sweep limits.

    ``param_height_max`` bounds the height of every swept rational (for the
    general sweep it is the largest side instead).  ``min_square_count=None``
    asks for every condition of the shape.  ``max_generators`` caps how many
    curve generators enter the combination box.
    """

    param_height_max: int = 10
    point_numerator_bound: int = 10_000
    point_denominator_bound: int = 4
    L: int = 3
    min_square_count: Optional[int] = None
    scale_cap: int = 10 ** 6
    max_generators: Optional[int] = 2
    distinct: bool = False

    def __post_init__(self):
        for name in ("param_height_max", "point_numerator_bound", "point_denominator_bound",
                     "L", "scale_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.min_square_count is not None and self.min_square_count < 0:
            raise ValueError("min_square_count must be non-negative")
        if self.max_generators is not None and self.max_generators < 1:
            raise ValueError("max_generators must be at least 1")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchBounds":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


@dataclass(frozen=True)
class SearchRecord:
    candidate: PrismCandidate
    report: DiagonalReport
    strategy: str
    params: tuple
    measure: int

    @property
    def shape(self) -> Shape:
        return self.candidate.base.kind

    def lengths(self) -> tuple:
        b = self.candidate.base
        return tuple(getattr(b, n) for n in LENGTH_NAMES)

    def sort_key(self):
        return (self.measure, tuple(-1 if t is None else t for t in self.lengths()), self.candidate.h)

    def key(self):
        return record_key(self.candidate)


@dataclass(frozen=True)
class Checkpoint:
    strategy: str
    bounds: SearchBounds
    cursor: int
    emitted_count: int


class UnknownStrategy(ValueError):
    pass


def record_key(c: PrismCandidate) -> tuple:
    """Identity of a prism up to relabelling the quadrilateral."""
    b = c.base
    if b.kind in (Shape.GENERAL, Shape.CYCLIC):
        sides = (b.x, b.y, b.z, b.w)
        images = []
        for r in range(4):
            rot = sides[r:] + sides[:r]
            images += [rot, (rot[0],) + rot[:0:-1]]
        return (b.kind.value, min(images), tuple(sorted((b.u, b.v))), c.h)
    if b.kind is Shape.PARALLELOGRAM:
        return (b.kind.value, tuple(sorted((b.x, b.y))), tuple(sorted((b.z, b.w))), c.h)
    return (b.kind.value, tuple(getattr(b, n) for n in LENGTH_NAMES), c.h)


# --- emission helpers ---------------------------------------------------------

def _required_count(shape: Shape, bounds: SearchBounds) -> int:
    full = len(REQUIRED[shape])
    k = full if bounds.min_square_count is None else bounds.min_square_count
    if k > full:
        raise ValueError(f"min_square_count {k} exceeds the {full} conditions of a {shape.value}")
    return k


def _emit(base: PrismBase, h, strategy: str, params: tuple, bounds: SearchBounds,
          k: int) -> Optional[SearchRecord]:
    if base is None or base.geometry_status == INVALID:
        return None
    h = Fraction(h)
    if h <= 0:
        return None
    pb = _primitive_base(base)
    factor = pb.x / base.x
    cand = primitive_scale(pb, h * factor)
    if cand.scale > bounds.scale_cap:
        return None
    report = classify(cand)
    if report.square_count < k:
        return None
    if bounds.distinct:
        present = [getattr(cand.base, n) for n in LENGTH_NAMES if getattr(cand.base, n) is not None]
        if len(set(present)) < len(present):
            return None
    return SearchRecord(cand, report, strategy, tuple(params), int(measure(cand)))


def cover_pairs(base: PrismBase, k: int) -> list:
    """Length pairs such that any candidate with k squares has some pair fully square.

    With f = n - k failures allowed, f + 1 disjoint pairs of distinct lengths
    suffice; when there are too few distinct lengths every pair is used.
    """
    values = []
    for name in REQUIRED[base.kind]:
        t = getattr(base, name)
        if t not in values:
            values.append(t)
    n = len(REQUIRED[base.kind])
    need = n - k + 1
    if len(values) < 2:
        return []
    if len(values) >= 2 * need:
        return [(values[2 * i], values[2 * i + 1]) for i in range(need)]
    return list(itertools.combinations(values, 2))


@lru_cache(maxsize=4096)
def _heights(x: int, y: int, N: int, E: int, L: int, G: Optional[int]) -> tuple:
    x, y = sorted((x, y))
    return tuple(compatible_heights(x, y, N, E, L, max_generators=G))


def _heights_for(base: PrismBase, k: int, bounds: SearchBounds) -> list:
    hs = set()
    for s, t in cover_pairs(base, k):
        if s.denominator != 1 or t.denominator != 1 or s == t:
            continue
        hs.update(_heights(int(s), int(t), bounds.point_numerator_bound,
                           bounds.point_denominator_bound, bounds.L, bounds.max_generators))
    return sorted(hs)


def curve_points(C, bounds: SearchBounds, seeds=()) -> list:
    """Non-torsion points found on ``C`` plus torsion-shifted combinations of generators."""
    tors = torsion(C)
    tgroup = tors.group
    tset = set(p for p in tgroup if p is not None)
    found = [P for P in find_points(C, bounds.point_numerator_bound, bounds.point_denominator_bound)
             if P not in tset]
    found += [P for P in seeds if P is not None and P not in tset]
    pts = set()
    for P in found:
        for T in tgroup:
            Q = _add(C, P, T)
            if Q is not None and Q not in tset:
                pts.add(Q)
    gens = select_generators(C, found, max_generators=bounds.max_generators, tors=tors)
    if gens:
        for _, _, Q in combinations(C, GeneratorSet(tuple(gens), bounds.L), torsion_points=tgroup):
            if Q is not None and Q not in tset:
                pts.add(Q)
    return sorted(pts, key=naive_key)


def _rationals_above_one(H: int) -> list:
    return list(enumerate_rationals(H, 1))


def _coprime_pairs(H: int, lower: int = 1) -> list:
    return [(m, n) for m in range(2, H + 1) for n in range(lower, m) if math.gcd(m, n) == 1]


# --- trapezium ------------------------------------------------------------------

def _trap_items(b: SearchBounds):
    return _rationals_above_one(b.param_height_max)


def _trap_step(a: Fraction, b: SearchBounds, k: int, strategy: str) -> list:
    out = []
    rats = _rationals_above_one(b.param_height_max)
    Pa = pyth_ratio(a)
    A1, A2 = Pa.numerator, Pa.denominator
    for bb in rats:
        if bb >= a:
            continue
        Pb = pyth_ratio(bb)
        B1, B2 = Pb.numerator, Pb.denominator
        D = A2 * B2
        AB = A1 * B1
        for c in rats:
            Pc = pyth_ratio(c)
            C1, C2 = Pc.numerator, Pc.denominator
            # z^2 + xy with h = 1, cleared of denominators
            N = C1 * C1 * D + AB * C2 * C2
            if not is_square(N * D):
                continue
            if not is_square((N + C2 * C2 * D) * D):
                continue
            base = trapezium_base(Pa, Pb, Pc)
            rec = _emit(base, 1, strategy, (a, bb, c), b, k)
            if rec is not None:
                out.append(rec)
    return out


# --- general quadrilateral ----------------------------------------------------

@lru_cache(maxsize=8)
def _spf(n: int) -> list:
    spf = list(range(n + 1))
    for p in range(2, isqrt(n)[0] + 1):
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def _kernel(terms, spf) -> int:
    odd = {}
    for t in terms:
        while t > 1:
            p = spf[t]
            odd[p] = odd.get(p, 0) ^ 1
            t //= p
    return math.prod(p for p, e in odd.items() if e)


def _general_items(b: SearchBounds):
    return list(range(1, 2 * b.param_height_max + 1))


def _triangles_on(v: int, X: int, spf) -> tuple:
    """Integer triangles (s, t) on a segment of length v with s, t <= X.

    Returns flat triangles and the rest grouped by the squarefree kernel K of
    the Heron product, each as (s, t, K, sqrt(Heron / K)).
    """
    flat, groups = [], {}
    for a in range(1, X + 1):
        for c in range(max(1, a - v), a + 1):
            if a + c < v:
                continue
            terms = (v + a + c, a + c - v, v + a - c, v - a + c)
            orient = ((a, c), (c, a)) if a != c else ((a, c),)
            if 0 in terms:
                flat += [(s, t, 0, 0) for s, t in orient]
                continue
            K = _kernel(terms, spf)
            r = isqrt(math.prod(terms) // K)[0]
            for s, t in orient:
                groups.setdefault(K, []).append((s, t, K, r))
    return flat, groups


def _general_step(v: int, b: SearchBounds, k: int, strategy: str) -> list:
    X = b.param_height_max
    flat, groups = _triangles_on(v, X, _spf(4 * X + 4))
    v2 = v * v
    nonflat = [t for g in groups.values() for t in g]

    def pairs():
        # triangle ABD = (x, w) and BCD = (y, z); sine product rational iff kernels agree
        for T1 in nonflat + flat:
            for T2 in flat:
                yield T1, T2
        for T1 in flat:
            for T2 in nonflat:
                yield T1, T2
        for g in groups.values():
            for T1 in g:
                for T2 in g:
                    yield T1, T2

    out = []
    for (x, w, K, r1), (y, z, K2, r2) in pairs():
        if x < w or x < y or x < z:
            continue
        N2 = 2 * (2 * v2 * (x * x + y * y) - (x * x + v2 - w * w) * (y * y + v2 - z * z) + K * r1 * r2)
        if not maybe_square(N2):
            continue
        root, exact = isqrt(N2)
        if not exact:
            continue
        u = Fraction(root, 2 * v)
        # one of the two mirror labellings (w <-> y, u <-> v) is kept; a quad with a
        # flat triangle has no convex mirror, so it is kept as found
        if K and K2 and (y, z, w, u, v) > (w, z, y, v, u):
            continue
        if u.denominator == 1 and math.gcd(x, y, z, w, v, int(u)) > 1:
            continue
        ca = Fraction(x * x + w * w - v2, 2 * x * w)
        if abs(ca) == 1:
            continue
        base = general_quad_assemble(x, w, ca, y, z)
        if base is None or base.geometry_status == INVALID:
            continue
        pb = _primitive_base(base)
        for h in _heights_for(pb, k, b):
            rec = _emit(pb, h, strategy, (x, w, ca, y, z), b, k)
            if rec is not None:
                out.append(rec)
    return out


# --- cyclic -----------------------------------------------------------------------

def _positive_rationals(H: int) -> list:
    return list(enumerate_rationals(H, 0))


def _cyclic_items(b: SearchBounds):
    rats = _positive_rationals(b.param_height_max)
    return [(f, g) for f in rats for g in rats]


def _cyclic_step(item, b: SearchBounds, k: int, strategy: str) -> list:
    f, g = item
    out = []
    for t in _positive_rationals(b.param_height_max):
        base = cyclic_base(f, g, t)
        if base.geometry_status == INVALID:
            continue
        if b.distinct and len({getattr(base, n) for n in LENGTH_NAMES}) < 6:
            continue
        for h in _heights_for(base, k, b):
            rec = _emit(base, h, strategy, (f, g, t), b, k)
            if rec is not None:
                out.append(rec)
    return out


# --- parallelograms -------------------------------------------------------------

def _par_items(b: SearchBounds):
    return [q for q in enumerate_rationals(b.param_height_max, 0, 1)]


def parallelogram_sides(k: Fraction, b: SearchBounds) -> list:
    """Side pairs (x, y) with rational diagonals at cos(alpha) = k, from curve points."""
    t = NamedTransform("T_PAR", (k.numerator, k.denominator))
    C = curve_of(t)
    sides = set()
    for Q in curve_points(C, b):
        mu = param_of_point(t, Q)
        if mu is None or mu * mu == 1:
            continue
        ratio = 2 * (k - mu) / (mu * mu - 1)
        if ratio <= 0:
            continue
        sides.add((ratio.numerator, ratio.denominator))
    return sorted(sides)


def _par_step(k: Fraction, b: SearchBounds, req: int, strategy: str) -> list:
    out = []
    for x, y in parallelogram_sides(k, b):
        base = parallelogram_base(x, y, k)
        if base is None:
            continue
        base = _primitive_base(base)
        for h in _heights_for(base, req, b):
            rec = _emit(base, h, strategy, (k, x, y), b, req)
            if rec is not None:
                out.append(rec)
    return out


def _spar_items(b: SearchBounds):
    return list(range(2, b.param_height_max + 1))


def _spar_step(p: int, b: SearchBounds, k: int, strategy: str) -> list:
    out = []
    for q in range(1, p):
        if math.gcd(p, q) != 1 or p * p <= 2 * q * q:
            continue
        base = special_parallelogram_base(p, q)
        if base.geometry_status == INVALID:
            continue
        base = _primitive_base(base)
        for h in _heights_for(base, k, b):
            rec = _emit(base, h, strategy, (p, q), b, k)
            if rec is not None:
                out.append(rec)
    return out


@dataclass(frozen=True)
class ConditionScanRecord:
    n: int
    point: tuple
    p_over_q: Optional[Fraction]
    cond1_square: bool
    cond2_square: bool


def special_par_condition_scan(n_max: int, curve: str = "E1") -> list:
    """Walk n*G on E1 (or E2) and test the other special-parallelogram quartic at p/q."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if curve == "E1":
        t, G = NamedTransform("T_PAR_E1", ()), (Fraction(1), Fraction(3))
        other = lambda r: 2 * r ** 4 + 2 * r ** 2 + 5
    elif curve == "E2":
        t, G = NamedTransform("T_PAR_E2", ()), (Fraction(9), Fraction(9))
        other = lambda r: 2 * r ** 4 - 6 * r ** 2 + 5
    else:
        raise ValueError(f"unknown curve {curve!r}")
    C = curve_of(t)
    quartic = quartic_of(t)
    out, P = [], None
    for n in range(1, n_max + 1):
        P = _add(C, P, G)
        r = param_of_point(t, P)
        if r is None:
            out.append(ConditionScanRecord(n, P, None, False, False))
            continue
        out.append(ConditionScanRecord(n, P, r, is_square(quartic(r)), is_square(other(r))))
    return out


# --- kites ------------------------------------------------------------------------

KITE_TRANSFORMS = {"X_FIRST": "T_KITE_X", "Y_FIRST": "T_KITE_Y", "ZW_FIRST": "T_KITE_ZW"}
# quartics even in f let a negative f stand for |f|
_KITE_EVEN = {"X_FIRST": True, "Y_FIRST": True, "ZW_FIRST": False}


def kite_seeds(tid: str, p: int, q: int, check: bool = True) -> list:
    """Known points of infinite order on the X-first and ZW-first curves."""
    p2, q2 = p * p, q * q
    if tid == "T_KITE_X":
        pts = [(-16 * p2 * q2, 8 * p2 * q2 * (p2 - 4 * q2))]
    elif tid == "T_KITE_ZW":
        pts = [(-16 * p2 * q2, 8 * p2 * q2 * (p2 + 4 * q2)),
               (-(p2 + q2) ** 2, 2 * p * q * (p2 + q2) * (p2 + 4 * q2))]
    else:
        return []
    pts = [(Fraction(u), Fraction(s * v)) for u, v in pts for s in (1, -1)]
    if check:
        C = curve_of(NamedTransform(tid, (p, q)))
        pts = [P for P in pts if C.rhs(P[0]) == P[1] * P[1]]
    return pts


def _kite_items(b: SearchBounds):
    return _rationals_above_one(b.param_height_max)


def _kite_curve_step(g: Fraction, b: SearchBounds, k: int, strategy: str, name: str) -> list:
    tid = KITE_TRANSFORMS[name]
    t = NamedTransform(tid, (g.numerator, g.denominator))
    C = curve_of(t)
    out, seen = [], set()
    for Q in curve_points(C, b, kite_seeds(tid, g.numerator, g.denominator)):
        f = param_of_point(t, Q)
        if f is None:
            continue
        if _KITE_EVEN[name]:
            f = abs(f)
        if f <= 1 or f in seen:
            continue
        seen.add(f)
        base = kite_base(f, g, primitive=False)
        rec = _emit(base, abs(4 * f * f - g * g), strategy, (f, g), b, k)
        if rec is not None:
            out.append(rec)
    return out


def _kite_direct_step(f: Fraction, b: SearchBounds, k: int, strategy: str) -> list:
    out = []
    for g in _rationals_above_one(b.param_height_max):
        base = kite_base(f, g)
        for h in _heights_for(base, k, b):
            rec = _emit(base, h, strategy, (f, g), b, k)
            if rec is not None:
                out.append(rec)
    return out


# --- rhombi -------------------------------------------------------------------------

RHOMBUS_TRANSFORMS = {"Z_CURVE": "T_RHOM_Z", "W_CURVE": "T_RHOM_W"}


def _rhom_items(b: SearchBounds):
    return list(range(2, b.param_height_max + 1))


def _rhom_curve_step(bb: int, b: SearchBounds, k: int, strategy: str, name: str) -> list:
    out = []
    for c in range(1, bb):
        if math.gcd(bb, c) != 1:
            continue
        t = NamedTransform(RHOMBUS_TRANSFORMS[name], (bb, c))
        C = curve_of(t)
        seen = set()
        for Q in curve_points(C, b):
            A = param_of_point(t, Q)
            if A is None or A <= 0 or A in seen:
                continue
            seen.add(A)
            cand = rhombus_from_quartic(bb, c, A)
            if cand is None:
                continue
            rec = _emit(cand.base, cand.h, strategy, (bb, c, A), b, k)
            if rec is not None:
                out.append(rec)
    return out


def _rhom_direct_step(m: int, b: SearchBounds, k: int, strategy: str) -> list:
    out = []
    for n in range(1, m):
        if math.gcd(m, n) != 1:
            continue
        base = rhombus_base(m, n)
        for h in _heights_for(base, k, b):
            rec = _emit(base, h, strategy, (m, n), b, k)
            if rec is not None:
                out.append(rec)
    return out


# --- registry, sweeps, partitions ---------------------------------------------------

def _bind(fn, **kw):
    return lambda item, b, k, s: fn(item, b, k, s, **kw)


STRATEGIES = {
    (Shape.TRAPEZIUM, "SWEEP"): (_trap_items, _trap_step),
    (Shape.GENERAL, "SWEEP"): (_general_items, _general_step),
    (Shape.CYCLIC, "SWEEP"): (_cyclic_items, _cyclic_step),
    (Shape.PARALLELOGRAM, "CURVE"): (_par_items, _par_step),
    (Shape.PARALLELOGRAM, "SPECIAL"): (_spar_items, _spar_step),
    (Shape.KITE, "X_FIRST"): (_kite_items, _bind(_kite_curve_step, name="X_FIRST")),
    (Shape.KITE, "Y_FIRST"): (_kite_items, _bind(_kite_curve_step, name="Y_FIRST")),
    (Shape.KITE, "ZW_FIRST"): (_kite_items, _bind(_kite_curve_step, name="ZW_FIRST")),
    (Shape.KITE, "DIRECT"): (_kite_items, _kite_direct_step),
    (Shape.RHOMBUS, "Z_CURVE"): (_rhom_items, _bind(_rhom_curve_step, name="Z_CURVE")),
    (Shape.RHOMBUS, "W_CURVE"): (_rhom_items, _bind(_rhom_curve_step, name="W_CURVE")),
    (Shape.RHOMBUS, "DIRECT"): (_rhom_items, _rhom_direct_step),
}

DEFAULT_STRATEGY = {Shape.TRAPEZIUM: "SWEEP", Shape.GENERAL: "SWEEP", Shape.CYCLIC: "SWEEP",
                    Shape.PARALLELOGRAM: "CURVE", Shape.KITE: "DIRECT", Shape.RHOMBUS: "DIRECT"}


def strategy_id(shape, strategy: Optional[str] = None) -> str:
    shape = Shape(shape)
    strategy = (strategy or DEFAULT_STRATEGY[shape]).upper().replace("-", "_")
    if (shape, strategy) not in STRATEGIES:
        raise UnknownStrategy(f"no strategy {strategy!r} for {shape.value}")
    return f"{shape.value}:{strategy}"


class Sweep:
    """One strategy at fixed bounds; items are the cursor positions 0..len-1."""

    def __init__(self, shape, strategy: Optional[str] = None, bounds: SearchBounds = SearchBounds()):
        self.id = strategy_id(shape, strategy)
        name, strat = self.id.split(":")
        self.shape = Shape(name)
        self.strategy = strat
        self.bounds = bounds
        self.required = _required_count(self.shape, bounds)
        self._items_fn, self._step_fn = STRATEGIES[(self.shape, strat)]
        self._items = None

    @property
    def items(self) -> list:
        if self._items is None:
            self._items = list(self._items_fn(self.bounds))
        return self._items

    def __len__(self):
        return len(self.items)

    def step(self, index: int) -> list:
        recs = self._step_fn(self.items[index], self.bounds, self.required, self.id)
        return sorted(recs, key=SearchRecord.sort_key)

    def run(self, start: int = 0, stop: Optional[int] = None) -> Iterator[tuple]:
        """Yield ``(next_cursor, records)`` for each item in ``[start, stop)``."""
        stop = len(self) if stop is None else min(stop, len(self))
        for i in range(start, stop):
            yield i + 1, self.step(i)

    def collect(self, start: int = 0, stop: Optional[int] = None) -> list:
        return [r for _, recs in self.run(start, stop) for r in recs]


@dataclass(frozen=True)
class PartitionRange:
    shape: str
    strategy: str
    bounds: SearchBounds
    start: int
    stop: int

    def sweep(self) -> Sweep:
        return Sweep(self.shape, self.strategy, self.bounds)

    def collect(self) -> list:
        return self.sweep().collect(self.start, self.stop)


def partition(sweep: Sweep, parts: int, start: int = 0) -> list:
    """Split cursor positions ``[start, len)`` into ``parts`` contiguous ranges."""
    if parts < 1:
        raise ValueError("parts must be at least 1")
    n = len(sweep) - start
    out = []
    for i in range(parts):
        lo = start + (n * i) // parts
        hi = start + (n * (i + 1)) // parts
        out.append(PartitionRange(sweep.shape.value, sweep.strategy, sweep.bounds, lo, hi))
    return out


def _collect_range(r: PartitionRange) -> list:
    return r.collect()


def worker_count(default: int = 1) -> int:
    env = os.environ.get("PRISMFORGE_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return default


def finalize(records) -> list:
    """Sort by measure then lengths and drop relabelled duplicates."""
    out, seen = [], set()
    for r in sorted(records, key=SearchRecord.sort_key):
        key = r.key()
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def run_search(shape, strategy: Optional[str] = None, bounds: SearchBounds = SearchBounds(),
               workers: Optional[int] = None) -> list:
    sweep = Sweep(shape, strategy, bounds)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(sweep) < 2:
        return finalize(sweep.collect())
    ranges = partition(sweep, workers)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        chunks = list(ex.map(_collect_range, ranges))
    return finalize(r for chunk in chunks for r in chunk)


def search_trapezium(bounds: SearchBounds, workers: Optional[int] = None) -> list:
    return run_search(Shape.TRAPEZIUM, "SWEEP", bounds, workers)


def search_general(bounds: SearchBounds, workers: Optional[int] = None) -> list:
    return run_search(Shape.GENERAL, "SWEEP", bounds, workers)


def search_cyclic(bounds: SearchBounds, workers: Optional[int] = None) -> list:
    return run_search(Shape.CYCLIC, "SWEEP", bounds, workers)


def search_parallelogram(bounds: SearchBounds, workers: Optional[int] = None) -> list:
    return run_search(Shape.PARALLELOGRAM, "CURVE", bounds, workers)


def search_special_parallelogram(bounds: SearchBounds, workers: Optional[int] = None) -> list:
    return run_search(Shape.PARALLELOGRAM, "SPECIAL", bounds, workers)


def search_kite(bounds: SearchBounds, strategy: str = "DIRECT", workers: Optional[int] = None) -> list:
    return run_search(Shape.KITE, strategy, bounds, workers)


def search_rhombus(bounds: SearchBounds, strategy: str = "DIRECT",
                   workers: Optional[int] = None) -> list:
    return run_search(Shape.RHOMBUS, strategy, bounds, workers)
