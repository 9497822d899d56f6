"""Tangle operations realized on fractions, plus the vector-level cuts.

Since the fraction is a complete isotopy invariant of rational tangles,
addition of twists, inversion, mirroring and rotation act directly on
fractions.  Only the cut construction needs the term vector itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import ContinuedFraction, Fraction
from .errors import InfinityInput, NotCanonical, ZeroNumerator


@dataclass(frozen=True)
class TwistReduction:
    """A fraction with its bottom twists stripped: |num| > |den| holds for
    ``reduced`` and applying ``twists`` bottom twists recovers the input."""

    reduced: Fraction
    twists: int


def add_twist(f: Fraction, k: int) -> Fraction:
    """k horizontal twists: f + k."""
    if f.is_infinite:
        raise InfinityInput("cannot add horizontal twists to 1/0")
    return Fraction(f.num + k * f.den, f.den)


def invert(f: Fraction) -> Fraction:
    """1/f, with 0/1 and 1/0 swapping; an involution."""
    return Fraction(f.den, f.num)


def mirror(f: Fraction) -> Fraction:
    """-f; the formal -1/0 is identified with 1/0."""
    return Fraction(-f.num, f.den)


def rotate(f: Fraction) -> Fraction:
    """Quarter turn: -1/f.  Applying it twice is the identity on fractions."""
    return mirror(invert(f))


def bottom_twist(f: Fraction, n: int) -> Fraction:
    """n vertical twists at the bottom: p/q becomes p/(np + q)."""
    return Fraction(f.num, n * f.num + f.den)


def reduce_twists(f: Fraction) -> TwistReduction:
    """Strip all bottom twists, leaving |p| > |q| (possibly 1/0 when p = ±1).

    The twist count is the quotient of den by |num|, signed like num, so the
    reduced denominator lands in [0, |p|) and the round trip through
    ``bottom_twist`` is exact.
    """
    if f.is_infinite:
        raise InfinityInput("1/0 is already free of bottom twists")
    if f.num == 0:
        raise ZeroNumerator("the 0/1 class has no |p| > |q| form")
    k, r = divmod(f.den, abs(f.num))
    return TwistReduction(Fraction(f.num, r), k if f.num > 0 else -k)


def special_cut(cf: ContinuedFraction) -> ContinuedFraction:
    """Reopen the closure at the alternate points of the first crossing.

    For positive terms the result is [-1, 1-a1, -a2, ..., -an]; for
    negative terms [+1, -1-a1, -a2, ..., -an].  The output keeps a zero
    second term when a1 = ±1 rather than renormalizing; callers wanting
    canonical form re-expand.  Writing P/Q for the input's fraction and
    P'/Q' for the output's, |P| = |P'| and Q ≡ Q' (mod P).
    """
    t = cf.terms
    if not cf.is_canonical or t == (0,):
        raise NotCanonical("special cut needs a canonical vector with a1 != 0")
    if t[0] > 0:
        head = (-1, 1 - t[0])
    else:
        head = (1, -1 - t[0])
    return ContinuedFraction(head + tuple(-a for a in t[1:]))
