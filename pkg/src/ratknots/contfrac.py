"""Exact arithmetic for tangle fractions and continued-fraction term vectors.

A term vector [a1, a2, ..., an] names the continued fraction

    a1 + 1/(a2 + 1/(... + 1/an))

with all partial numerators equal to 1.  Values live in the rationals
together with the formal point 1/0; every division by zero resolves to
1/0, so evaluation is total.  Two independent evaluation routes are
provided: the right-to-left recursion and the product of the generating
matrices ((a, 1), (1, 0)), whose first column carries the fraction and
whose second column carries the fraction of the reversed vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

from .errors import InfinityNotExpandable


class Parity(Enum):
    """Even/odd, with the semiring operations used for parity matrices.

    Addition is XOR (o + o = e) and multiplication is AND (e annihilates).
    """

    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls(abs(n) % 2)

    def __add__(self, other: "Parity") -> "Parity":
        return Parity(self.value ^ other.value)

    def __mul__(self, other: "Parity") -> "Parity":
        return Parity(self.value & other.value)

    def __str__(self) -> str:
        return "e" if self is Parity.EVEN else "o"


class FractionParity(NamedTuple):
    """Componentwise parity of a reduced fraction; never e/e (coprimality)."""

    num: Parity
    den: Parity

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class Fraction:
    """A reduced rational p/q with q >= 0, including the formal value 1/0.

    The sign lives on the numerator.  den == 0 encodes 1/0 (any nonzero
    input numerator collapses to 1, identifying the formal -1/0 with 1/0),
    and num == 0 forces den == 1.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a fraction")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(abs(num), den)
        num //= g
        den //= g
        if den == 0:
            num = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class ContinuedFraction:
    """An integer term vector [a1, ..., an], n >= 1.

    Vectors naming tangles in continued-fraction form keep their terms
    nonzero beyond the first position; cut constructions may produce a
    zero immediately after the head (see tangle.special_cut), which
    evaluates fine under the formal 1/0 arithmetic.  ``is_canonical``
    reports the strict alternating form.
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(self.terms)
        if not t:
            raise ValueError("term vector must be non-empty")
        if not all(isinstance(a, int) for a in t):
            raise ValueError("terms must be integers")
        object.__setattr__(self, "terms", t)

    @property
    def is_canonical(self) -> bool:
        """All terms share one sign and the length is odd; [0] is allowed."""
        t = self.terms
        if t == (0,):
            return True
        if len(t) % 2 == 0:
            return False
        return all(a > 0 for a in t) or all(a < 0 for a in t)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.terms) + "]"


@dataclass(frozen=True)
class TangleMatrix:
    """Product ((x, y), (z, u)) of generating matrices ((a, 1), (1, 0)).

    x/z is the fraction of the vector and x/y the fraction of its
    reversal; u is the residue whose parity governs cut-orientation
    compatibility.  The determinant is (-1)^n for n factors.
    """

    x: int
    y: int
    z: int
    u: int

    def determinant(self) -> int:
        return self.x * self.u - self.y * self.z

    def transpose(self) -> "TangleMatrix":
        return TangleMatrix(self.x, self.z, self.y, self.u)

    def fraction(self) -> Fraction:
        return Fraction(self.x, self.z)

    def palindrome_fraction(self) -> Fraction:
        return Fraction(self.x, self.y)


def evaluate(cf: ContinuedFraction) -> Fraction:
    """Evaluate a term vector right-to-left; total thanks to formal 1/0.

    An intermediate zero inverts to 1/0, which then absorbs the enclosing
    addition, e.g. evaluate([2,-1,1]) == 1/0.
    """
    terms = cf.terms
    num, den = terms[-1], 1
    for a in reversed(terms[:-1]):
        num, den = a * num + den, num
    return Fraction(num, den)


def matrix(cf: ContinuedFraction) -> TangleMatrix:
    """Product of the generating matrices M(a) = ((a, 1), (1, 0)) in order."""
    x, y, z, u = 1, 0, 0, 1
    for a in cf.terms:
        x, y, z, u = x * a + y, x, z * a + u, z
    return TangleMatrix(x, y, z, u)


def palindrome(cf: ContinuedFraction) -> ContinuedFraction:
    """Reverse the term order; an involution."""
    return ContinuedFraction(tuple(reversed(cf.terms)))


def expand(f: Fraction) -> ContinuedFraction:
    """Expand a finite fraction to its canonical odd-length vector.

    Euclidean division keeps every remainder on the side of the fraction's
    sign, so all terms come out positive for f > 0 and negative for f < 0.
    Even-length results are fixed up with [..., a-1, 1] (or [..., a+1, -1]),
    never touching the head term.  expand(0/1) is [0].  Inputs with
    |num| < den start with a zero head and are not canonical-marked.
    """
    if f.is_infinite:
        raise InfinityNotExpandable("1/0 has no continued-fraction expansion")
    if f.num == 0:
        return ContinuedFraction((0,))
    negative = f.num < 0
    num, den = f.num, f.den
    terms = []
    while den:
        a = -((-num) // den) if negative else num // den
        num, den = den, num - a * den
        if den < 0:
            num, den = -num, -den
        terms.append(a)
    if len(terms) % 2 == 0:
        last = terms[-1]
        if last > 0:
            terms[-1] = last - 1
            terms.append(1)
        else:
            terms[-1] = last + 1
            terms.append(-1)
    return ContinuedFraction(tuple(terms))


def parity(f: Fraction) -> FractionParity:
    """Parity of numerator and denominator; never e/e by coprimality."""
    return FractionParity(Parity.of(f.num), Parity.of(f.den))
