"""Exact rational helpers: square tests, the Pythagorean ratio map, sweeps.

``Fraction`` is the scalar everywhere; it is always reduced and its
denominator is positive, so equality is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]


def rat(value: RatLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), is_exact)`` for a nonnegative integer."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def _qr_mask(m: int) -> int:
    return sum(1 << r for r in {r * r % m for r in range(m)})


_QR_MODULI = (64, 63, 65, 11, 17, 19, 23)
_QR_MASKS = tuple((m, _qr_mask(m)) for m in _QR_MODULI)
QR_MODULUS = math.prod(_QR_MODULI)


def residue_may_be_square(r: int) -> bool:
    """False when ``r = n mod QR_MODULUS`` proves n is not a square."""
    for m, mask in _QR_MASKS:
        if not mask >> (r % m) & 1:
            return False
    return True


def maybe_square(n: int) -> bool:
    """Cheap necessary test for n being a square, by quadratic residues."""
    return n >= 0 and residue_may_be_square(n % QR_MODULUS)


def is_square_int(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_square(q: RatLike) -> bool:
    """True iff ``q`` is the square of a rational."""
    q = rat(q)
    if q < 0:
        return False
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def rational_sqrt(q: RatLike) -> Optional[Fraction]:
    """Nonnegative rational square root, or ``None`` if irrational."""
    q = rat(q)
    if q < 0:
        return None
    n, exact_n = isqrt(q.numerator)
    d, exact_d = isqrt(q.denominator)
    if exact_n and exact_d:
        return Fraction(n, d)
    return None


def pyth_ratio(r: RatLike) -> Fraction:
    """P(r) = (r^2 - 1) / (2r), the leg ratio of the right triangle built from r."""
    r = rat(r)
    if r == 0:
        raise ZeroDivisionError("pyth_ratio is undefined at r = 0")
    return (r * r - 1) / (2 * r)


def pyth_ratio_inverse(d: RatLike) -> Optional[Fraction]:
    """The root r >= 1 of P(r) = d, present only when 1 + d^2 is a square."""
    d = rat(d)
    root = rational_sqrt(1 + d * d)
    if root is None:
        return None
    return d + root


class CosSin(NamedTuple):
    cos: Fraction
    sin: Fraction


def half_angle(f: RatLike) -> CosSin:
    """Rational point on the unit circle with tangent-of-half-angle parameter 1/f."""
    f = rat(f)
    den = f * f + 1
    return CosSin((f * f - 1) / den, 2 * f / den)


def height(q: Fraction) -> int:
    """max(|numerator|, denominator) of the reduced form."""
    return max(abs(q.numerator), q.denominator)


def enumerate_rationals(height_max: int, lower: RatLike = 0,
                        upper: Optional[RatLike] = None) -> Iterator[Fraction]:
    """Every reduced rational of height <= ``height_max`` strictly inside (lower, upper).

    Order: ascending height, then ascending value within a height.  The
    sequence is fully determined by its arguments, so an index into it is a
    valid resume cursor.
    """
    if height_max < 1:
        raise ValueError("height_max must be >= 1")
    lo = rat(lower)
    hi = None if upper is None else rat(upper)
    for hgt in range(1, height_max + 1):
        layer = []
        # values of height exactly hgt: p/hgt with |p| <= hgt, and hgt/q, -hgt/q with q < hgt
        for p in range(-hgt, hgt + 1):
            if math.gcd(p, hgt) == 1:
                layer.append(Fraction(p, hgt))
        for q in range(1, hgt):
            if math.gcd(hgt, q) == 1:
                layer.append(Fraction(hgt, q))
                layer.append(Fraction(-hgt, q))
        for value in sorted(set(layer)):
            if value > lo and (hi is None or value < hi):
                yield value


def primitive_integers(values) -> list[int]:
    """Scale a list of rationals by the least positive factor making them coprime integers."""
    values = [rat(v) for v in values]
    den = math.lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = math.gcd(*ints)
    if g == 0:
        return ints
    return [i // g for i in ints]
