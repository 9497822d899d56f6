"""Classification of the knots and links closing rational tangles.

Two numerator closures with fractions p/q and p'/q' are the same
unoriented link exactly when p = p' and q ≡ q' or qq' ≡ 1 (mod p); the
oriented version uses the same congruences mod 2p with odd denominators.
Achirality is q² ≡ -1 (mod p), connectivity and component count follow
fraction parity, and strong invertibility of two-component links is
q² = 1 + up with u odd.

Class boundaries for the degenerate inputs: 1/0 and 0/1 are singleton
classes (their closures are the unknot and the two-component unlink built
from tangles outside the reduced |p| > |q| regime), while every fraction
with |p| = 1 belongs to one unknot class regardless of denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .contfrac import (
    ContinuedFraction,
    Fraction,
    FractionParity,
    Parity,
    evaluate,
    expand,
    parity,
)
from .errors import InfinityInput, NotTwoComponent
from .tangle import bottom_twist


class ConnectivityType(Enum):
    """End-arc pairing pattern of a tangle: ≍, >< or χ."""

    ZERO = "0"
    INFINITY = "inf"
    ONE = "1"

    @property
    def icon(self) -> str:
        return {"0": "≍", "inf": "><", "1": "χ"}[self.value]


_PARITY_TO_CONNECTIVITY = {
    (Parity.EVEN, Parity.ODD): ConnectivityType.ZERO,
    (Parity.ODD, Parity.EVEN): ConnectivityType.INFINITY,
    (Parity.ODD, Parity.ODD): ConnectivityType.ONE,
}


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    return prev_x, prev_y, a


def _mod_inverse(a: int, m: int) -> int:
    x, _, g = _extgcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} has no inverse mod {m}")
    return x % m


def _signed(f: Fraction) -> tuple[int, int]:
    """(p, q) with p = |num| > 0, jointly negated so the numerator is positive.

    Joint negation is plain fraction equality, so this never crosses into
    the mirror class (which would negate the numerator alone).
    """
    if f.num > 0:
        return f.num, f.den
    return -f.num, -f.den


def unoriented_equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Whether the numerator closures are the same unoriented knot or link.

    True iff the numerators agree (after joint sign normalization) and the
    denominators satisfy q ≡ q' or qq' ≡ 1 (mod p).  Bottom twists shift q
    by multiples of p, so no explicit twist reduction is needed.
    """
    if f1.is_infinite or f2.is_infinite:
        return f1.is_infinite and f2.is_infinite
    if f1.is_zero or f2.is_zero:
        return f1.is_zero and f2.is_zero
    p1, q1 = _signed(f1)
    p2, q2 = _signed(f2)
    if p1 != p2:
        return False
    if p1 == 1:
        return True
    r1, r2 = q1 % p1, q2 % p1
    return r1 == r2 or (r1 * r2) % p1 == 1


def normalize_odd_denominator(f: Fraction) -> Fraction:
    """Replace an even denominator by the odd p + q via one bottom twist."""
    if f.is_infinite:
        raise InfinityInput("1/0 has no denominator to normalize")
    if f.den % 2 == 1:
        return f
    return bottom_twist(f, 1)


def oriented_equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Whether the oriented closures agree, for orientation-compatible inputs.

    Each input is first pushed to an odd denominator, then the congruences
    q ≡ q' or qq' ≡ 1 are tested mod 2p.  Mapping a concrete oriented
    diagram to a convention-compliant fraction is the caller's business.
    """
    if f1.is_infinite or f2.is_infinite:
        return f1.is_infinite and f2.is_infinite
    if f1.is_zero or f2.is_zero:
        return f1.is_zero and f2.is_zero
    f1 = normalize_odd_denominator(f1)
    f2 = normalize_odd_denominator(f2)
    p1, q1 = _signed(f1)
    p2, q2 = _signed(f2)
    if p1 != p2:
        return False
    m = 2 * p1
    r1, r2 = q1 % m, q2 % m
    return r1 == r2 or (r1 * r2) % m == 1


def is_achiral(f: Fraction) -> bool:
    """True iff the closure equals its mirror image: q² ≡ -1 (mod p).

    1/0, 0/1 and the |p| = 1 unknot class are fixed by mirroring, hence
    achiral by convention.
    """
    if f.is_infinite or f.is_zero:
        return True
    p, q = _signed(f)
    if p == 1:
        return True
    r = q % p
    return (r * r) % p == p - 1


def _even_length_form(cf: ContinuedFraction) -> ContinuedFraction:
    """Even-length twin of an odd canonical vector with the same value."""
    t = list(cf.terms)
    last = t[-1]
    if last == 1 and len(t) >= 2:
        t = t[:-2] + [t[-2] + 1]
    elif last == -1 and len(t) >= 2:
        t = t[:-2] + [t[-2] - 1]
    elif last > 1:
        t = t[:-1] + [last - 1, 1]
    else:
        t = t[:-1] + [last + 1, -1]
    return ContinuedFraction(tuple(t))


def _is_palindromic(cf: ContinuedFraction) -> bool:
    return cf.terms == tuple(reversed(cf.terms))


def achiral_form(f: Fraction) -> Optional[ContinuedFraction]:
    """An even-length palindromic vector in the class of f, if achiral.

    The even-length expansion of one of the (at most two) class
    denominators is guaranteed to be palindromic; both are tried.  Returns
    None for chiral inputs and for the degenerate |p| <= 1 classes, which
    have no even palindromic presentation.
    """
    if not is_achiral(f):
        return None
    if f.is_infinite or f.is_zero:
        return None
    p, q = _signed(f)
    if p == 1:
        return None
    r = q % p
    for candidate in (r, _mod_inverse(r, p)):
        v = _even_length_form(expand(Fraction(p, candidate)))
        if _is_palindromic(v):
            return v
    raise AssertionError(f"no even palindromic form found for {f}")


def connectivity(f: Fraction) -> ConnectivityType:
    """End-arc pattern from fraction parity: e/o → ≍, o/e → ><, o/o → χ."""
    return _PARITY_TO_CONNECTIVITY[tuple(parity(f))]


def components(f: Fraction) -> int:
    """Component count of the numerator closure: 2 iff parity is e/o."""
    return 2 if connectivity(f) is ConnectivityType.ZERO else 1


def _two_component_residue(f: Fraction) -> tuple[int, int]:
    if parity(f) != FractionParity(Parity.EVEN, Parity.ODD):
        raise NotTwoComponent(f"{f} has parity {parity(f)}, not e/o")
    p, q = _signed(f)
    return p, q % p


def strong_u(f: Fraction) -> Optional[int]:
    """The residue u with q² = 1 + up, taken at the reduced q in (0, p).

    None when p does not divide q² - 1, and None for the unlink 0/1 where
    u is indeterminate.  Requires a two-component input (parity e/o).
    """
    if f.is_zero:
        parity(f)
        return None
    p, r = _two_component_residue(f)
    if (r * r - 1) % p:
        return None
    return (r * r - 1) // p


def is_strongly_invertible(f: Fraction) -> bool:
    """True iff q² = 1 + up with u odd, for a two-component closure.

    The u-parity is invariant under bottom twists and joint sign changes
    because p is even here.  The unlink 0/1 counts as strongly invertible
    (1 = 1 + u·0 holds with u odd).
    """
    if f.is_zero:
        parity(f)
        return True
    u = strong_u(f)
    return u is not None and u % 2 == 1


def strong_form(f: Fraction) -> Optional[ContinuedFraction]:
    """An odd-length palindromic vector in the class of f, if strongly
    invertible; q² ≡ 1 (mod p) makes the canonical expansion of p/(q mod p)
    its own reversal."""
    if not is_strongly_invertible(f):
        return None
    if f.is_zero:
        return ContinuedFraction((0,))
    p, r = _two_component_residue(f)
    v = expand(Fraction(p, r))
    if not (_is_palindromic(v) and len(v) % 2 == 1):
        raise AssertionError(f"expansion of {p}/{r} should be an odd palindrome")
    return v


def class_representative(f: Fraction) -> Fraction:
    """Canonical fraction per unoriented class: p/min(q, q⁻¹ mod p).

    Two fractions are unoriented_equivalent exactly when their
    representatives are equal.  1/0 and 0/1 represent themselves and
    |p| = 1 collapses to 1/1.
    """
    if f.is_infinite:
        return Fraction(1, 0)
    if f.is_zero:
        return Fraction(0, 1)
    p, q = _signed(f)
    if p == 1:
        return Fraction(1, 1)
    r = q % p
    return Fraction(p, min(r, _mod_inverse(r, p)))


def is_invertible(f: Fraction) -> bool:
    """Rational knots and links are always invertible (reverse every
    component); recorded in the API as a constant."""
    return True


@dataclass(frozen=True)
class KnotClassReport:
    """Classification verdicts for one rational link given by a fraction.

    strongly_invertible is None ("not applicable") unless the closure has
    two components.
    """

    input: Fraction
    representative: Fraction
    components: int
    connectivity: ConnectivityType
    achiral: bool
    strongly_invertible: Optional[bool]
    achiral_form: Optional[ContinuedFraction]
    strong_form: Optional[ContinuedFraction]

    def to_dict(self) -> dict:
        return {
            "input": str(self.input),
            "representative": str(self.representative),
            "components": self.components,
            "connectivity": self.connectivity.value,
            "achiral": self.achiral,
            "strongly_invertible": self.strongly_invertible,
            "forms": {
                "achiral": list(self.achiral_form.terms) if self.achiral_form else None,
                "strong": list(self.strong_form.terms) if self.strong_form else None,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "KnotClassReport":
        def frac(s: str) -> Fraction:
            if s == "inf":
                return Fraction(1, 0)
            num, den = s.split("/")
            return Fraction(int(num), int(den))

        forms = d["forms"]
        return cls(
            input=frac(d.get("fraction") or d["input"]),
            representative=frac(d["representative"]),
            components=d["components"],
            connectivity=ConnectivityType(d["connectivity"]),
            achiral=d["achiral"],
            strongly_invertible=d["strongly_invertible"],
            achiral_form=ContinuedFraction(tuple(forms["achiral"])) if forms["achiral"] else None,
            strong_form=ContinuedFraction(tuple(forms["strong"])) if forms["strong"] else None,
        )


def classify(f: Fraction) -> KnotClassReport:
    """Full classification of the numerator closure of a fraction."""
    comps = components(f)
    two = comps == 2
    return KnotClassReport(
        input=f,
        representative=class_representative(f),
        components=comps,
        connectivity=connectivity(f),
        achiral=is_achiral(f),
        strongly_invertible=is_strongly_invertible(f) if two else None,
        achiral_form=achiral_form(f),
        strong_form=strong_form(f) if two else None,
    )
