"""Independent combinatorial verification by strand tracing.

Nothing in the tracing routines touches fraction arithmetic: tangles are
rebuilt as alternating groups of right twists and bottom twists, and only
the end-arc matching (plus, for the cut-orientation check, the traversal
direction of marked strand points) is tracked.  Crossing signs are
irrelevant to connectivity and orientation flow, which is what keeps the
oracle genuinely independent of the fraction calculus.  The exhaustive
sweep then checks every formula-level claim against these traces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Literal, Optional

from .classify import (
    ConnectivityType,
    _signed,
    class_representative,
    components,
    connectivity,
    oriented_equivalent,
    unoriented_equivalent,
)
from .contfrac import (
    ContinuedFraction,
    Fraction,
    Parity,
    evaluate,
    expand,
    matrix,
    palindrome,
)
from .errors import NotCanonical
from .tangle import bottom_twist, special_cut

_CORNERS = ("NW", "NE", "SW", "SE")


class EndPairing(Enum):
    """One of the three perfect matchings of the four tangle end arcs."""

    ZERO = "0"        # NW-NE, SW-SE   (≍)
    INFINITY = "inf"  # NW-SW, NE-SE   (><)
    ONE = "1"         # NW-SE, NE-SW   (χ)

    @property
    def pairs(self) -> frozenset[frozenset[str]]:
        mate = _PAIRING_MATE[self]
        return frozenset(frozenset((c, mate[c])) for c in _CORNERS)

    @property
    def icon(self) -> str:
        return {"0": "≍", "inf": "><", "1": "χ"}[self.value]

    def to_connectivity(self) -> ConnectivityType:
        return ConnectivityType(self.value)


_PAIRING_MATE = {
    EndPairing.ZERO: {"NW": "NE", "NE": "NW", "SW": "SE", "SE": "SW"},
    EndPairing.INFINITY: {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"},
    EndPairing.ONE: {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"},
}


def _pairing_from_mate(mate: dict[str, str]) -> EndPairing:
    for pairing, m in _PAIRING_MATE.items():
        if m == mate:
            return pairing
    raise AssertionError(f"not a matching: {mate}")


class CutCompatibility(Enum):
    COMPATIBLE = "compatible"
    INCOMPATIBLE = "incompatible"


def trace_pairing(cf: ContinuedFraction) -> EndPairing:
    """End-arc matching of the standard-form tangle, by pure bookkeeping.

    The tangle is rebuilt from the innermost term outwards as alternating
    groups of right twists (odd positions) and bottom twists (even
    positions).  The start is the two parallel strands of [0] when the
    innermost group is horizontal (odd length) and of [inf] when it is
    vertical (even length).  A group of k twists on an adjacent endpoint
    pair transposes those endpoints in the matching iff k is odd.
    Twisting two loose ends never closes a loop, so the state stays a
    perfect matching throughout.
    """
    n = len(cf.terms)
    start = EndPairing.ZERO if n % 2 == 1 else EndPairing.INFINITY
    mate = dict(_PAIRING_MATE[start])
    for i in range(n, 0, -1):
        if cf.terms[i - 1] % 2 == 0:
            continue
        a, b = ("NE", "SE") if i % 2 == 1 else ("SW", "SE")
        ma, mb = mate[a], mate[b]
        if ma == b:
            continue  # the pair's two ends belong to one arc: crossing them keeps the pair
        mate[a], mate[b] = mb, ma
        mate[mb], mate[ma] = a, b
    return _pairing_from_mate(mate)


_CLOSURE_ARCS = {
    "numerator": (("NW", "NE"), ("SW", "SE")),
    "denominator": (("NW", "SW"), ("NE", "SE")),
}


def trace_components(cf: ContinuedFraction, closure: Literal["numerator", "denominator"]) -> int:
    """Cycle count after joining the traced matching with closure arcs."""
    links: dict[str, list[str]] = {c: [] for c in _CORNERS}
    for a, b in _PAIRING_MATE[trace_pairing(cf)].items():
        links[a].append(b)
    for a, b in _CLOSURE_ARCS[closure]:
        links[a].append(b)
        links[b].append(a)
    seen: set[str] = set()
    cycles = 0
    for start in _CORNERS:
        if start in seen:
            continue
        cycles += 1
        prev, cur = None, start
        while True:
            seen.add(cur)
            nxt = links[cur][0] if links[cur][1] == prev else links[cur][1]
            prev, cur = cur, nxt
            if cur == start:
                break
    return cycles


def _join(
    ma: dict[str, str],
    mb: dict[str, str],
    glue: tuple[tuple[str, str], ...],
    corner_of: dict[tuple[str, str], str],
) -> tuple[EndPairing, int]:
    """Connect two matchings along glue arcs; returns matching + loop count.

    Vertices are (tangle, corner) tags; every vertex carries its matching
    edge, glued vertices carry one glue edge as well.  Paths join boundary
    corners pairwise, leftover interior vertices form closed loops (four
    vertices each, alternating matching and glue edges).
    """
    mates = {("A", c): ("A", ma[c]) for c in _CORNERS}
    mates.update({("B", c): ("B", mb[c]) for c in _CORNERS})
    glue_map: dict[tuple[str, str], tuple[str, str]] = {}
    for ca, cb in glue:
        glue_map[("A", ca)] = ("B", cb)
        glue_map[("B", cb)] = ("A", ca)

    mate: dict[str, str] = {}
    seen: set[tuple[str, str]] = set()
    for v, name in corner_of.items():
        if v in seen:
            continue
        seen.add(v)
        cur = mates[v]
        while cur not in corner_of:
            seen.add(cur)
            cur = glue_map[cur]
            seen.add(cur)
            cur = mates[cur]
        seen.add(cur)
        mate[name] = corner_of[cur]
        mate[corner_of[cur]] = name
    interior = set(mates) - set(corner_of)
    loops = len(interior - seen) // 4
    return _pairing_from_mate(mate), loops


def pairing_sum(a: EndPairing, b: EndPairing) -> tuple[EndPairing, int]:
    """Matching of the tangle sum a + b, with the count of loops closed."""
    return _join(
        _PAIRING_MATE[a],
        _PAIRING_MATE[b],
        glue=(("NE", "NW"), ("SE", "SW")),
        corner_of={
            ("A", "NW"): "NW",
            ("A", "SW"): "SW",
            ("B", "NE"): "NE",
            ("B", "SE"): "SE",
        },
    )


def pairing_product(a: EndPairing, b: EndPairing) -> tuple[EndPairing, int]:
    """Matching of the tangle product a * b (b sits below a), with loop count."""
    return _join(
        _PAIRING_MATE[a],
        _PAIRING_MATE[b],
        glue=(("SW", "NW"), ("SE", "NE")),
        corner_of={
            ("A", "NW"): "NW",
            ("A", "NE"): "NE",
            ("B", "SW"): "SW",
            ("B", "SE"): "SE",
        },
    )


# --- oriented trace of the closed diagram ------------------------------------
#
# Crossings are 4-port nodes with pass-through 0<->3 and 1<->2 (for a right
# twist: 0 = west-top, 1 = west-bottom, 2 = east-top, 3 = east-bottom; for a
# bottom twist: 0 = north-left, 1 = north-right, 2 = south-left,
# 3 = south-right).  Marks are degree-2 points on a strand, port 0 on the
# west side and port 1 on the east side.


def _trace_marked_directions(terms: tuple[int, ...]) -> dict[str, bool]:
    """Build N(standard form) and walk it; True means a west-to-east pass.

    Marks sit on the two strands of the initial [0] (where the palindrome
    cut reopens the diagram) and on the two numerator closure arcs (where
    the standard cut does).
    """
    edges: dict[tuple[int, int], tuple[int, int]] = {}

    def connect(a: tuple[int, int], b: tuple[int, int]) -> None:
        edges[a] = b
        edges[b] = a

    ids = itertools.count()
    marks = {name: next(ids) for name in ("pal_top", "pal_bottom", "std_top", "std_bottom")}
    mark_ids = set(marks.values())

    corners = {
        "NW": (marks["pal_top"], 0),
        "NE": (marks["pal_top"], 1),
        "SW": (marks["pal_bottom"], 0),
        "SE": (marks["pal_bottom"], 1),
    }
    n = len(terms)
    for i in range(n, 0, -1):
        for _ in range(abs(terms[i - 1])):
            node = next(ids)
            if i % 2 == 1:  # right twist on (NE, SE)
                connect(corners["NE"], (node, 0))
                connect(corners["SE"], (node, 1))
                corners["NE"] = (node, 2)
                corners["SE"] = (node, 3)
            else:  # bottom twist on (SW, SE)
                connect(corners["SW"], (node, 0))
                connect(corners["SE"], (node, 1))
                corners["SW"] = (node, 2)
                corners["SE"] = (node, 3)
    connect(corners["NE"], (marks["std_top"], 1))
    connect((marks["std_top"], 0), corners["NW"])
    connect(corners["SE"], (marks["std_bottom"], 1))
    connect((marks["std_bottom"], 0), corners["SW"])

    directions: dict[int, bool] = {}
    visited: set[tuple[int, int]] = set()
    for mark_id in marks.values():
        if (mark_id, 0) in visited or (mark_id, 1) in visited:
            continue
        node, port = mark_id, 0
        while (node, port) not in visited:
            visited.add((node, port))
            if node in mark_ids:
                directions[node] = port == 0
                out = 1 - port
            else:
                out = 3 - port
            node, port = edges[(node, out)]
    return {name: directions[mark_id] for name, mark_id in marks.items()}


def trace_cut_compatibility(cf: ContinuedFraction) -> CutCompatibility:
    """Orientation compatibility of the standard and palindrome cuts.

    The closed curves of N(cf) are walked once each (any per-component
    orientation; the verdict does not depend on the choice).  At a cut
    site the two cut points are passed either in the same horizontal
    direction — the reopened tangle has its bottom end arcs oriented like
    its top ones (type II) — or in opposite directions (type I).  The cuts
    are compatible exactly when both sites show the same type.
    """
    if not cf.is_canonical:
        raise NotCanonical("cut compatibility is traced on canonical vectors")
    d = _trace_marked_directions(cf.terms)
    parallel_standard = d["std_top"] == d["std_bottom"]
    parallel_palindrome = d["pal_top"] == d["pal_bottom"]
    if parallel_standard == parallel_palindrome:
        return CutCompatibility.COMPATIBLE
    return CutCompatibility.INCOMPATIBLE


def cut_compatibility_rule(cf: ContinuedFraction) -> CutCompatibility:
    """The arithmetic side of the cut-compatibility check.

    For even p the cuts are compatible iff the matrix residue u is even;
    for odd p iff the denominators q, q' of the vector and its reversal
    have equal parity.
    """
    m = matrix(cf)
    if m.x % 2 == 0:
        ok = m.u % 2 == 0
    else:
        ok = m.z % 2 == m.y % 2
    return CutCompatibility.COMPATIBLE if ok else CutCompatibility.INCOMPATIBLE


@dataclass(frozen=True)
class ParityMatrix:
    """2x2 matrix over {e, o} with the parity semiring."""

    x: Parity
    y: Parity
    z: Parity
    u: Parity

    @classmethod
    def generator(cls, a: int) -> "ParityMatrix":
        return cls(Parity.of(a), Parity.ODD, Parity.ODD, Parity.EVEN)

    @classmethod
    def of_matrix(cls, m) -> "ParityMatrix":
        return cls(Parity.of(m.x), Parity.of(m.y), Parity.of(m.z), Parity.of(m.u))

    def __matmul__(self, o: "ParityMatrix") -> "ParityMatrix":
        return ParityMatrix(
            self.x * o.x + self.y * o.z,
            self.x * o.y + self.y * o.u,
            self.z * o.x + self.u * o.z,
            self.z * o.y + self.u * o.u,
        )


def parity_matrix(cf: ContinuedFraction) -> ParityMatrix:
    """Product of generator parity matrices; equals matrix(cf) entrywise mod 2."""
    m = ParityMatrix(Parity.ODD, Parity.EVEN, Parity.EVEN, Parity.ODD)
    for a in cf.terms:
        m = m @ ParityMatrix.generator(a)
    return m


# --- exhaustive sweep ---------------------------------------------------------


def enumerate_vectors(max_len: int, max_term: int) -> Iterator[ContinuedFraction]:
    """All vectors of length <= max_len with terms in [-max_term, max_term],
    nonzero beyond position 1."""
    nonzero = [a for a in range(-max_term, max_term + 1) if a]
    for first in range(-max_term, max_term + 1):
        for length in range(1, max_len + 1):
            for tail in itertools.product(nonzero, repeat=length - 1):
                yield ContinuedFraction((first,) + tail)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_counterexample: Optional[str] = None

    def record(self, ok: bool, witness: str) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = witness

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class VerificationReport:
    max_len: int
    max_term: int
    vectors_swept: int = 0
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.failures == 0 for c in self.checks)

    @property
    def total_failures(self) -> int:
        return sum(c.failures for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "max_term": self.max_term,
            "vectors_swept": self.vectors_swept,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


_SUM_TABLE = {
    ("1", "1"): ("0", 0),
    ("1", "0"): ("1", 0),
    ("0", "1"): ("1", 0),
    ("0", "0"): ("0", 0),
    ("1", "inf"): ("inf", 0),
    ("inf", "1"): ("inf", 0),
    ("0", "inf"): ("inf", 0),
    ("inf", "0"): ("inf", 0),
    ("inf", "inf"): ("inf", 1),
}

_PRODUCT_TABLE = {
    ("1", "1"): ("inf", 0),
    ("1", "0"): ("0", 0),
    ("0", "1"): ("0", 0),
    ("0", "0"): ("0", 1),
    ("1", "inf"): ("1", 0),
    ("inf", "1"): ("1", 0),
    ("0", "inf"): ("0", 0),
    ("inf", "0"): ("0", 0),
    ("inf", "inf"): ("inf", 0),
}

_CHECK_NAMES = (
    "dual-route-eval",
    "determinant-sign",
    "palindrome-transpose",
    "palindrome-congruence",
    "canonical-uniqueness",
    "connectivity-trace",
    "components-trace",
    "connectivity-algebra",
    "cut-compatibility",
    "parity-matrix",
    "special-cut-class",
    "palindrome-class",
    "bottom-twist-class",
    "equivalence-relation",
)


def sweep_verify(max_len: int, max_term: int) -> VerificationReport:
    """Enumerate term vectors and check every formula-level claim.

    Mathematical mismatches are counted and reported, never raised; only
    invalid sweep parameters raise.
    """
    if max_len < 1 or max_len % 2 == 0:
        raise ValueError("max_len must be odd and >= 1")
    if max_term < 1:
        raise ValueError("max_term must be >= 1")

    report = VerificationReport(max_len=max_len, max_term=max_term)
    checks = {name: CheckResult(name) for name in _CHECK_NAMES}
    report.checks = list(checks.values())

    for (a, b), (want, want_loops) in _SUM_TABLE.items():
        got, loops = pairing_sum(EndPairing(a), EndPairing(b))
        checks["connectivity-algebra"].record(
            got is EndPairing(want) and loops == want_loops, f"{a} + {b}"
        )
    for (a, b), (want, want_loops) in _PRODUCT_TABLE.items():
        got, loops = pairing_product(EndPairing(a), EndPairing(b))
        checks["connectivity-algebra"].record(
            got is EndPairing(want) and loops == want_loops, f"{a} * {b}"
        )

    canonical_by_value: dict[Fraction, tuple[int, ...]] = {}
    residues: set[tuple[int, int]] = set()

    for cf in enumerate_vectors(max_len, max_term):
        report.vectors_swept += 1
        witness = str(cf)
        n = len(cf)
        f = evaluate(cf)
        m = matrix(cf)

        checks["dual-route-eval"].record(f == m.fraction(), witness)
        checks["determinant-sign"].record(m.determinant() == (-1) ** n, witness)
        checks["palindrome-transpose"].record(matrix(palindrome(cf)) == m.transpose(), witness)

        qq = m.z * m.y
        sign = (-1) ** (n + 1)
        congruent = qq == sign if m.x == 0 else (qq - sign) % abs(m.x) == 0
        checks["palindrome-congruence"].record(congruent, witness)

        checks["connectivity-trace"].record(
            trace_pairing(cf).to_connectivity() is connectivity(f), witness
        )
        checks["components-trace"].record(
            trace_components(cf, "numerator") == components(f), witness
        )
        checks["parity-matrix"].record(parity_matrix(cf) == ParityMatrix.of_matrix(m), witness)

        if cf.is_canonical:
            prev = canonical_by_value.get(f)
            unique = (prev is None or prev == cf.terms) and expand(f).terms == cf.terms
            canonical_by_value[f] = cf.terms
            checks["canonical-uniqueness"].record(unique, witness)

            checks["cut-compatibility"].record(
                trace_cut_compatibility(cf) is cut_compatibility_rule(cf), witness
            )
            checks["palindrome-class"].record(
                unoriented_equivalent(f, evaluate(palindrome(cf))), witness
            )
            if cf.terms != (0,) and abs(f.num) >= 2:
                g = evaluate(special_cut(cf))
                p = abs(f.num)
                ok = (
                    abs(g.num) == p
                    and (_signed(g)[1] - _signed(f)[1]) % p == 0
                    and unoriented_equivalent(f, g)
                )
                checks["special-cut-class"].record(ok, witness)

        if not f.is_infinite and not f.is_zero:
            if abs(f.num) > f.den:  # reduced: bottom twists stay within the theorems
                ok = all(
                    unoriented_equivalent(f, bottom_twist(f, k)) for k in range(-3, 4)
                ) and all(
                    oriented_equivalent(f, bottom_twist(f, 2 * k)) for k in range(-2, 3)
                )
                checks["bottom-twist-class"].record(ok, witness)
            p, q = _signed(f)
            if 2 <= p <= 40:
                residues.add((p, q % p))

    by_p: dict[int, list[Fraction]] = {}
    for p, r in sorted(residues):
        by_p.setdefault(p, []).append(Fraction(p, r))
    for fs in by_p.values():
        for fa in fs:
            checks["equivalence-relation"].record(unoriented_equivalent(fa, fa), str(fa))
            for fb in fs:
                symmetric = unoriented_equivalent(fa, fb) == unoriented_equivalent(fb, fa)
                refines = not oriented_equivalent(fa, fb) or unoriented_equivalent(fa, fb)
                rep_consistent = (
                    class_representative(fa) == class_representative(fb)
                ) == unoriented_equivalent(fa, fb)
                checks["equivalence-relation"].record(
                    symmetric and refines and rep_consistent, f"{fa} ~ {fb}"
                )
                if unoriented_equivalent(fa, fb):
                    for fc in fs:
                        if unoriented_equivalent(fb, fc):
                            checks["equivalence-relation"].record(
                                unoriented_equivalent(fa, fc), f"{fa} ~ {fb} ~ {fc}"
                            )
    return report
