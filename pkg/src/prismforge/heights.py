"""Heights h with x^2 + h^2 and y^2 + h^2 both rational squares.

Solutions correspond to points on V^2 = U(U + x^2)(U + y^2): a point gives
a = V / (y (U + x^2)) and the height h = x / P(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .arith import enumerate_rationals, is_square, isqrt, pyth_ratio
from .curves import (Curve, GeneratorSet, Point, _add, combinations, find_points,
                     select_generators, torsion)

DEFAULT_NUMERATOR_BOUND = 10_000
DEFAULT_DENOMINATOR_BOUND = 4
DEFAULT_L = 3


class TorsionPointError(ValueError):
    pass


@dataclass(frozen=True)
class HeightSolution:
    h: Fraction
    source_point: Point
    a: Fraction


class Heights(list):
    """Sorted heights from a bounded search.

    An empty result only means nothing was found inside ``bounds``; it is
    not a proof that the curve has rank zero.
    """

    bounded_search = True

    def __init__(self, values=(), bounds=None, generators=(), solutions=()):
        super().__init__(values)
        self.bounds = bounds
        self.generators = tuple(generators)
        self.solutions = tuple(solutions)


def height_curve(x: int, y: int) -> Curve:
    if x < 1 or y < 1:
        raise ValueError("lengths must be positive")
    return Curve(x * x + y * y, x * x * y * y)


def _equal_pair_heights(x: int, numerator_bound: int) -> Heights:
    # x = y makes the curve singular and leaves the single condition x^2 + h^2 = square,
    # solved by h = x / P(a) for every rational a > 1
    hmax = max(2, isqrt(numerator_bound)[0])
    sols = {}
    for a in enumerate_rationals(hmax, 1):
        h = x / pyth_ratio(a)
        sols.setdefault(h, HeightSolution(h, None, a))
    good = sorted(sols)
    return Heights(good, bounds=(numerator_bound,), solutions=[sols[h] for h in good])


def _solutions_from_point(x: int, y: int, C: Curve, P: Point, tgroup) -> list:
    out = []
    for T in tgroup:
        Q = _add(C, P, T)
        if Q is None:
            continue
        U, V = Q
        if U + x * x == 0:
            continue
        a = V / (y * (U + x * x))
        if a == 0:
            continue
        ratio = pyth_ratio(a)
        if ratio == 0:
            continue
        out.append(HeightSolution(abs(x / ratio), Q, a))
    return out


def heights_from_point(x: int, y: int, P: Point) -> set:
    """The positive heights produced by ``P`` and its torsion translates."""
    C = height_curve(x, y)
    tors = torsion(C)
    if P is None or P in tors.group:
        raise TorsionPointError(f"{P} is a torsion point; it gives no nontrivial height")
    return {s.h for s in _solutions_from_point(x, y, C, P, tors.group)}


def compatible_heights(x: int, y: int, numerator_bound: int = DEFAULT_NUMERATOR_BOUND,
                       denominator_bound: int = DEFAULT_DENOMINATOR_BOUND, L: int = DEFAULT_L,
                       max_generators: Optional[int] = None, extra_points: Iterable = ()) -> Heights:
    """Every height reachable from combinations of the points found within the bounds."""
    if x == y:
        return _equal_pair_heights(x, numerator_bound)
    C = height_curve(x, y)
    tors = torsion(C)
    tgroup = tors.group
    tset = set(p for p in tgroup if p is not None)
    found = [P for P in find_points(C, numerator_bound, denominator_bound) if P not in tset]
    found += [P for P in extra_points if P is not None and P not in tset]
    gens = select_generators(C, found, max_generators=max_generators, tors=tors)
    sols = {}

    def collect(P):
        for s in _solutions_from_point(x, y, C, P, tgroup):
            sols.setdefault(s.h, s)

    for P in found:
        collect(P)
    if gens and L > 0:
        for _, _, Q in combinations(C, GeneratorSet(tuple(gens), L), up_to_sign=True):
            if Q is not None and Q not in tset:
                collect(Q)
    good = sorted(h for h in sols if is_square(x * x + h * h) and is_square(y * y + h * h))
    return Heights(good, bounds=(numerator_bound, denominator_bound, L), generators=gens,
                   solutions=[sols[h] for h in good])


def filter_heights(hs: Iterable, lengths: Iterable) -> list:
    lengths = list(lengths)
    return [h for h in hs if all(is_square(t * t + h * h) for t in lengths)]
