"""Elliptic curves V^2 = U^3 + a2 U^2 + a4 U + a6 over the rationals.

Points are ``(U, V)`` tuples of Fractions; the point at infinity is ``None``.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from sympy import factorint

from .arith import QR_MODULUS, RatLike, isqrt, rat, rational_sqrt, residue_may_be_square

Point = Optional[tuple]
INFINITY: Point = None

MAZUR_ORDER_CAP = 12


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    a2: Fraction
    a4: Fraction
    a6: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.discriminant() == 0:
            raise SingularCurveError(f"singular cubic: {self}")

    def discriminant(self) -> Fraction:
        """Discriminant of the cubic U^3 + a2 U^2 + a4 U + a6."""
        a, b, c = self.a2, self.a4, self.a6
        return a * a * b * b - 4 * b ** 3 - 4 * a ** 3 * c + 18 * a * b * c - 27 * c * c

    def rhs(self, u: Fraction) -> Fraction:
        return ((u + self.a2) * u + self.a4) * u + self.a6

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in (self.a2, self.a4, self.a6))

    def integral_model(self) -> tuple["Curve", int]:
        """Return ``(C', d)`` with C' integral; (U, V) on self maps to (d^2 U, d^3 V)."""
        d = math.lcm(self.a2.denominator, self.a4.denominator, self.a6.denominator)
        if d == 1:
            return self, 1
        return Curve(self.a2 * d ** 2, self.a4 * d ** 4, self.a6 * d ** 6), d

    def __str__(self):
        terms = ["U^3"]
        for coeff, mono in ((self.a2, "U^2"), (self.a4, "U"), (self.a6, "")):
            if coeff:
                sign = "+" if coeff > 0 else "-"
                mag = abs(coeff)
                body = mono if (mag == 1 and mono) else f"{mag}{mono}"
                terms.append(f"{sign} {body}")
        return "V^2 = " + " ".join(terms)


def point(u: RatLike, v: RatLike) -> tuple:
    return (rat(u), rat(v))


def on_curve(C: Curve, P: Point) -> bool:
    if P is None:
        return True
    u, v = P
    return v * v == C.rhs(u)


def _require(C: Curve, P: Point):
    if not on_curve(C, P):
        raise NotOnCurveError(f"{P} is not on {C}")


def neg(C: Curve, P: Point) -> Point:
    if P is None:
        return None
    return (P[0], -P[1])


def _add(C: Curve, P: Point, Q: Point) -> Point:
    if P is None:
        return Q
    if Q is None:
        return P
    u1, v1 = P
    u2, v2 = Q
    if u1 == u2:
        if v1 == -v2:
            return None
        lam = (3 * u1 * u1 + 2 * C.a2 * u1 + C.a4) / (2 * v1)
    else:
        lam = (v2 - v1) / (u2 - u1)
    u3 = lam * lam - C.a2 - u1 - u2
    return (u3, lam * (u1 - u3) - v1)


def add(C: Curve, P: Point, Q: Point) -> Point:
    """Chord-tangent sum of two points on ``C``."""
    _require(C, P)
    _require(C, Q)
    return _add(C, P, Q)


def mul(C: Curve, n: int, P: Point) -> Point:
    """n * P by double-and-add; negative n multiplies -P."""
    _require(C, P)
    if n < 0:
        n, P = -n, neg(C, P)
    result = None
    addend = P
    while n:
        if n & 1:
            result = _add(C, result, addend)
        n >>= 1
        if n:
            addend = _add(C, addend, addend)
    return result


def order(C: Curve, P: Point, cap: int = MAZUR_ORDER_CAP) -> Optional[int]:
    """Order of ``P`` if it is at most ``cap``, else ``None`` (infinite order when cap >= 12)."""
    _require(C, P)
    Q = P
    for k in range(1, cap + 1):
        if Q is None:
            return k
        Q = _add(C, Q, P)
    return None


def is_torsion(C: Curve, P: Point) -> bool:
    return order(C, P) is not None


# --- torsion -----------------------------------------------------------------

@dataclass(frozen=True)
class TorsionInfo:
    points: tuple  # (point, order) pairs, infinity first
    structure: str

    @property
    def group(self) -> list:
        return [p for p, _ in self.points]

    def __len__(self):
        return len(self.points)


def _factor(n: int) -> dict:
    return dict(factorint(abs(n))) if n not in (0, 1, -1) else {}


def _square_divisors(factors: dict) -> Iterable[int]:
    """All y >= 1 with y^2 dividing the factored integer."""
    primes = [(p, e // 2) for p, e in factors.items() if e >= 2]
    for exps in itertools.product(*(range(k + 1) for _, k in primes)):
        y = 1
        for (p, _), k in zip(primes, exps):
            y *= p ** k
        yield y


def _int_roots_cubic(a: int, b: int, c: int) -> list[int]:
    """Integer roots of x^3 + a x^2 + b x + c, found by exact bisection."""
    f = lambda x: ((x + a) * x + b) * x + c
    if c == 0:
        roots = {0}
        disc = a * a - 4 * b
        if disc >= 0:
            r, exact = isqrt(disc)
            if exact:
                for num in (-a + r, -a - r):
                    if num % 2 == 0:
                        roots.add(num // 2)
        return sorted(x for x in roots if f(x) == 0)
    bound = 1 + max(abs(a), abs(b), abs(c))
    cuts = [-bound, bound]
    disc = a * a - 3 * b
    if disc >= 0:
        r = isqrt(disc)[0]
        for num in (-a - r, -a + r):
            centre = num // 3
            cuts.extend(range(centre - 2, centre + 3))
    cuts = sorted(set(x for x in cuts if -bound <= x <= bound))
    roots = set(x for x in cuts if f(x) == 0)
    for lo, hi in zip(cuts, cuts[1:]):
        flo, fhi = f(lo), f(hi)
        if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
            continue
        while hi - lo > 1:
            mid = (lo + hi) // 2
            fm = f(mid)
            if fm == 0:
                roots.add(mid)
                break
            if (fm > 0) == (flo > 0):
                lo = mid
            else:
                hi = mid
    return sorted(roots)


def _structure(points_orders) -> str:
    n = len(points_orders)
    two = sum(1 for _, o in points_orders if o <= 2)
    if n == 1:
        return "trivial"
    if two == 4:
        return f"Z2xZ{n // 2}"
    return f"Z{n}"


def _nagell_lutz_candidates(C: Curve):
    a, b, c = (int(x) for x in (C.a2, C.a4, C.a6))
    disc = int(C.discriminant())
    if c == 0:
        # disc = b^2 (a^2 - 4b); factor the two pieces separately
        factors = _factor(b)
        factors = {p: 2 * e for p, e in factors.items()}
        for p, e in _factor(a * a - 4 * b).items():
            factors[p] = factors.get(p, 0) + e
    else:
        factors = _factor(disc)
    for x in _int_roots_cubic(a, b, c):
        yield (x, 0)
    for y in _square_divisors(factors):
        for x in _int_roots_cubic(a, b, c - y * y):
            yield (x, y)
            yield (x, -y)


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


_SMALL_PRIMES = _primes_upto(2000)


def _count_mod_p(a: int, b: int, c: int, p: int) -> int:
    """#E(F_p) for an odd prime p of good reduction."""
    total = p + 1
    half = (p - 1) // 2
    for x in range(p):
        r = (((x + a) * x + b) * x + c) % p
        if r:
            total += 1 if pow(r, half, p) == 1 else -1
    return total


def torsion_order_bound(C: Curve, primes: int = 8) -> int:
    """gcd of #E(F_p) over several odd primes of good reduction.

    Reduction is injective on torsion at such primes, so the torsion order
    divides the returned value.
    """
    model, _ = C.integral_model()
    a, b, c = (int(t) for t in (model.a2, model.a4, model.a6))
    disc = int(model.discriminant())
    bound = 0
    used = 0
    for p in _SMALL_PRIMES[1:]:
        if disc % p == 0:
            continue
        bound = math.gcd(bound, _count_mod_p(a, b, c, p))
        used += 1
        if used >= primes or bound == 1:
            break
    return bound


def _halves(C: Curve, roots, P):
    """All Q with 2Q = P on a curve with three rational 2-torsion roots."""
    u0 = P[0]
    rs = []
    for e in roots:
        r = rational_sqrt(u0 - e)
        if r is None:
            return []
        rs.append(r)
    out = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        r1, r2, r3 = rs[0], s1 * rs[1], s2 * rs[2]
        u = u0 + r1 * r2 + r1 * r3 + r2 * r3
        v = rational_sqrt(C.rhs(u))
        if v is None:
            continue
        for Q in ((u, v), (u, -v)):
            if _add(C, Q, Q) == P:
                out.append(Q)
    return out


def _two_power_torsion(C: Curve, roots) -> set:
    group = {None} | {(e, Fraction(0)) for e in roots}
    frontier = [P for P in group if P is not None]
    while frontier:
        nxt = []
        for P in frontier:
            for Q in _halves(C, roots, P):
                if Q not in group:
                    group.add(Q)
                    nxt.append(Q)
        frontier = nxt
        if len(group) > 16:
            raise ArithmeticError("2-power torsion larger than Mazur allows")
    return group


def _order_of(C: Curve, P) -> int:
    o = order(C, P)
    assert o is not None
    return o


@lru_cache(maxsize=4096)
def torsion(C: Curve) -> TorsionInfo:
    """Rational torsion subgroup, certified point by point.

    The group order is bounded by point counts modulo small primes.  With
    three rational 2-torsion points the 2-power part is found by exact
    halving; anything still unaccounted for falls back to Nagell-Lutz on an
    integral model.  Every reported point is checked by repeated addition.
    """
    model, d = C.integral_model()
    a, b, c = (int(t) for t in (model.a2, model.a4, model.a6))
    bound = torsion_order_bound(C)
    roots = [Fraction(x, d * d) for x in _int_roots_cubic(a, b, c)]
    group = {None} | {(e, Fraction(0)) for e in roots}
    if len(roots) == 3:
        group = _two_power_torsion(C, roots)
    if len(group) != bound:
        bound = torsion_order_bound(C, primes=40)
    if len(group) != bound:
        for x, y in _nagell_lutz_candidates(model):
            P = (Fraction(x, d * d), Fraction(y, d ** 3))
            if order(C, P) is not None:
                group.add(P)
    found = [(None, 1)] + sorted(((P, _order_of(C, P)) for P in group if P is not None),
                                 key=lambda po: (po[1], po[0]))
    return TorsionInfo(tuple(found), _structure(found))


# --- point search ------------------------------------------------------------

_PRIME_CACHE: dict = {}


def _primes_cached(n: int) -> list[int]:
    top = _PRIME_CACHE.get("top", 0)
    if n > top:
        _PRIME_CACHE["top"], _PRIME_CACHE["primes"] = n, _primes_upto(n)
    primes = _PRIME_CACHE["primes"]
    return primes if n == top else primes[:bisect.bisect_right(primes, n)]


@lru_cache(maxsize=4)
def _primorial(n: int) -> int:
    return math.prod(_primes_cached(n))


def _squarefree_divisors(n: int, limit: int) -> list[int]:
    """Squarefree divisors of n not exceeding ``limit``.

    Only primes up to ``limit`` can occur, so trial division suffices even
    when n itself is too large to factor.
    """
    n = abs(n)
    primes = []
    if n <= limit * limit and n < 10 ** 24:
        primes = [p for p in _factor(n) if p <= limit]
    else:
        # one gcd against the primorial leaves a small number to trial-divide
        rest = math.gcd(n, _primorial(limit))
        for p in _primes_cached(limit):
            if rest == 1:
                break
            if rest % p == 0:
                primes.append(p)
                rest //= p
    divs = [1]
    for p in primes:
        divs += [d * p for d in divs if d * p <= limit]
    return sorted(divs)


def _scan_integral(C: Curve, numerator_bound: int, denominator_bound: int) -> set:
    a, b, c = (int(x) for x in (C.a2, C.a4, C.a6))
    # residues first: the coefficients can have thousands of digits
    M = QR_MODULUS
    am, bm, cm = a % M, b % M, c % M
    found = set()

    def test(m: int, e: int):
        e2 = e * e
        if not residue_may_be_square((m * (m * m + am * m * e2 + bm * e2 * e2) + cm * e2 ** 3) % M):
            return
        val = m * (m * m + a * m * e2 + b * e2 * e2) + c * e2 ** 3
        if val < 0:
            return
        r, exact = isqrt(val)
        if exact:
            u = Fraction(m, e2)
            v = Fraction(r, e2 * e)
            found.add((u, v))
            found.add((u, -v))

    if c == 0:
        divisors = _squarefree_divisors(b, numerator_bound * denominator_bound ** 2)
    for e in range(1, denominator_bound + 1):
        limit = numerator_bound * e * e
        if c == 0:
            # m (m^2 + a m e^2 + b e^4) square with gcd(m, e) = 1 forces
            # m = d s^2, d a squarefree divisor of b
            if e == 1:
                test(0, 1)
            e2 = e * e
            a1, b1 = am * e2 % M, bm * e2 * e2 % M
            for d0 in divisors:
                if d0 > limit:
                    break
                if e > 1 and math.gcd(d0, e) != 1:
                    continue
                svals = range(1, math.isqrt(limit // d0) + 1)
                if e > 1:
                    svals = [t for t in svals if math.gcd(t, e) == 1]
                for d in (d0, -d0):
                    for t in svals:
                        m = d * t * t
                        if residue_may_be_square(m * (m * m + a1 * m + b1) % M):
                            test(m, e)
        else:
            for m in range(-limit, limit + 1):
                if math.gcd(m, e) == 1:
                    test(m, e)
    return found


def find_points(C: Curve, numerator_bound: int = 10_000, denominator_bound: int = 4) -> list:
    """Affine points with U = m/e^2, |U| <= numerator_bound, 1 <= e <= denominator_bound.

    The bounds apply to the integral model when ``C`` has fractional
    coefficients.  Output is sorted and duplicate-free.
    """
    if numerator_bound < 1 or denominator_bound < 1:
        raise ValueError("bounds must be >= 1")
    model, d = C.integral_model()
    raw = _scan_integral(model, numerator_bound, denominator_bound)
    pts = {(u / (d * d), v / d ** 3) for u, v in raw}
    return sorted(pts, key=naive_key)


def naive_key(P: Point):
    if P is None:
        return (0, 0, Fraction(0), Fraction(0))
    u, v = P
    return (max(abs(u.numerator), u.denominator), u.denominator, u, v)


# --- generators and combinations --------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple
    coefficient_bound: int = 3

    def __post_init__(self):
        if self.coefficient_bound < 0:
            raise ValueError("coefficient bound must be >= 0")


def select_generators(C: Curve, points: Iterable, max_generators: Optional[int] = None,
                      tors: Optional[TorsionInfo] = None) -> list:
    """Greedy pick of apparently independent infinite-order points.

    A point is dropped when it equals a torsion translate of a small
    combination (coefficients in {-1, 0, 1}) of the points already kept, or
    of twice such a combination.  This is a heuristic filter, not a proof of
    independence.
    """
    tors = tors or torsion(C)
    tgroup = tors.group
    gens: list = []
    span: set = set(p for p in tgroup if p is not None)
    for P in sorted(set(points), key=naive_key):
        if P is None or P in span or is_torsion(C, P):
            continue
        gens.append(P)
        if max_generators is not None and len(gens) >= max_generators:
            break
        span = set()
        for coeffs in itertools.product((-1, 0, 1), repeat=len(gens)):
            base = None
            for n, G in zip(coeffs, gens):
                if n:
                    base = _add(C, base, G if n > 0 else neg(C, G))
            for Q in (base, _add(C, base, base)):
                for T in tgroup:
                    R = _add(C, Q, T)
                    if R is not None:
                        span.add(R)
    return gens


def combine(C: Curve, gens: GeneratorSet, coeffs, torsion_point: Point = None) -> Point:
    """n1 G1 + ... + ns Gs + T."""
    if len(coeffs) != len(gens.generators):
        raise ValueError("one coefficient per generator is required")
    if any(abs(n) > gens.coefficient_bound for n in coeffs):
        raise ValueError(f"coefficients must lie in [-{gens.coefficient_bound}, {gens.coefficient_bound}]")
    _require(C, torsion_point)
    result = None
    for n, G in zip(coeffs, gens.generators):
        if n:
            result = _add(C, result, mul(C, n, G))
    return _add(C, result, torsion_point)


def combinations(C: Curve, gens: GeneratorSet, torsion_points=(None,), up_to_sign: bool = False):
    """Yield ``(coeffs, T, Q)`` over the box -L..L of coefficients and the given torsion.

    Multiples are built incrementally so each step costs one addition.
    With ``up_to_sign`` only one of each pair of coefficient vectors ``±n``
    is visited.  The all-zero vector is skipped.
    """
    L = gens.coefficient_bound
    s = len(gens.generators)
    multiples = []
    for G in gens.generators:
        row = {0: None}
        pos, negp = None, None
        for k in range(1, L + 1):
            pos = _add(C, pos, G)
            negp = neg(C, pos)
            row[k], row[-k] = pos, negp
        multiples.append(row)
    for coeffs in itertools.product(range(-L, L + 1), repeat=s):
        if not any(coeffs):
            continue
        if up_to_sign:
            first = next(n for n in coeffs if n)
            if first < 0:
                continue
        base = None
        for n, row in zip(coeffs, multiples):
            if n:
                base = _add(C, base, row[n])
        for T in torsion_points:
            yield coeffs, T, _add(C, base, T)
