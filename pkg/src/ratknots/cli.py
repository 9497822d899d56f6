"""Command-line front end: notation parsing, classification reports,
knot-table enumeration and the verification sweep.

Exit codes: 0 on success, 1 on a mathematical precondition violation (or
a failed verification sweep), 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .classify import (
    _signed,
    achiral_form,
    class_representative,
    classify,
    components,
    connectivity,
    is_achiral,
    is_invertible,
    is_strongly_invertible,
    normalize_odd_denominator,
    oriented_equivalent,
    strong_form,
    strong_u,
    unoriented_equivalent,
)
from .contfrac import ContinuedFraction, Fraction, evaluate, expand, palindrome
from .errors import ParseError, RangeError, TangleError
from .oracle import sweep_verify
from .tangle import mirror, special_cut


def parse(s: str) -> Union[ContinuedFraction, Fraction]:
    """Parse `[a1,a2,...]`, `p/q`, an integer, or `inf`."""
    text = s.strip()
    base = s.index(text[0]) if text else 0
    if not text:
        raise ParseError("empty input", 0, "a vector, fraction or 'inf'")
    if text == "inf":
        return Fraction(1, 0)
    if text.startswith("["):
        return _parse_vector(text, base)
    return _parse_fraction(text, base)


def _parse_int(text: str, pos: int, base: int, what: str) -> tuple[int, int]:
    start = pos
    if pos < len(text) and text[pos] in "+-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or not text[start:pos].lstrip("+-"):
        raise ParseError(f"malformed {what}", base + start, "an integer")
    return int(text[start:pos]), pos


def _parse_vector(text: str, base: int) -> ContinuedFraction:
    pos = 1
    terms = []
    while True:
        while pos < len(text) and text[pos] in " ,":
            pos += 1
        if pos >= len(text):
            raise ParseError("unterminated vector", base + pos, "']'")
        if text[pos] == "]":
            pos += 1
            break
        value, pos = _parse_int(text, pos, base, "term")
        terms.append(value)
    if pos != len(text):
        raise ParseError("trailing input after vector", base + pos, "end of input")
    if not terms:
        raise ParseError("empty vector", base + 1, "at least one term")
    return ContinuedFraction(tuple(terms))


def _parse_fraction(text: str, base: int) -> Fraction:
    num, pos = _parse_int(text, 0, base, "numerator")
    if pos == len(text):
        return Fraction(num, 1)
    if text[pos] != "/":
        raise ParseError("trailing input after integer", base + pos, "'/' or end of input")
    den, pos = _parse_int(text, pos + 1, base, "denominator")
    if pos != len(text):
        raise ParseError("trailing input after fraction", base + pos, "end of input")
    if num == 0 and den == 0:
        raise ParseError("0/0 is not a fraction", base, "a nonzero numerator or denominator")
    return Fraction(num, den)


def format_fraction(f: Fraction) -> str:
    return str(f)


def format_vector(cf: ContinuedFraction) -> str:
    return str(cf)


def _as_fraction(value: Union[ContinuedFraction, Fraction]) -> Fraction:
    return evaluate(value) if isinstance(value, ContinuedFraction) else value


def _as_vector(value: Union[ContinuedFraction, Fraction], raw: str) -> ContinuedFraction:
    if isinstance(value, Fraction):
        raise ParseError("expected a term vector", 0, f"'[...]' rather than {raw!r}")
    return value


# --- table enumeration --------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    crossings: int
    representative: Fraction
    vector: ContinuedFraction
    components: int
    achiral: bool
    strongly_invertible: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "crossings": self.crossings,
            "representative": str(self.representative),
            "vector": list(self.vector.terms),
            "components": self.components,
            "achiral": self.achiral,
            "strongly_invertible": self.strongly_invertible,
        }


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _table_vectors(crossings: int):
    """Canonical positive vectors summing to the crossing count.

    Odd length only, and the last term is at least 2 when the length
    exceeds 1, which suppresses the [..., a-1, 1] duplicate of [..., a].
    """
    for length in range(1, crossings + 1, 2):
        for v in _compositions(crossings, length):
            if length > 1 and v[-1] < 2:
                continue
            yield ContinuedFraction(v)


def build_table(max_crossings: int, knots_only: bool = False, collapse_mirrors: bool = False) -> list[TableRow]:
    """One row per distinct link class among all closures with up to
    max_crossings crossings; rows are pairwise non-equivalent."""
    if not 2 <= max_crossings <= 16:
        raise RangeError("max_crossings must be between 2 and 16")
    rows: list[TableRow] = []
    seen: set[tuple[int, int]] = set()
    for crossings in range(2, max_crossings + 1):
        per_class: dict[tuple[int, int], ContinuedFraction] = {}
        for v in _table_vectors(crossings):
            f = evaluate(v)
            rep = class_representative(f)
            key = (rep.num, rep.den)
            if collapse_mirrors:
                mrep = class_representative(mirror(f))
                key = min(key, (mrep.num, mrep.den))
            if key in per_class:
                per_class[key] = min(per_class[key], v, key=lambda c: c.terms)
            else:
                per_class[key] = v
        for key in sorted(per_class):
            if key in seen:
                continue
            seen.add(key)
            v = per_class[key]
            f = evaluate(v)
            rep = class_representative(f)
            report = classify(f)
            rows.append(
                TableRow(
                    crossings=crossings,
                    representative=rep,
                    vector=v,
                    components=report.components,
                    achiral=report.achiral,
                    strongly_invertible=report.strongly_invertible,
                )
            )
    if knots_only:
        rows = [r for r in rows if r.components == 1]
    return rows


def write_table_csv(rows: Sequence[TableRow], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["crossings", "representative", "vector", "components", "achiral", "strongly_invertible"]
        )
        for r in rows:
            writer.writerow(
                [
                    r.crossings,
                    str(r.representative),
                    str(r.vector),
                    r.components,
                    r.achiral,
                    "" if r.strongly_invertible is None else r.strongly_invertible,
                ]
            )


def render_table_figure(rows: Sequence[TableRow], path: str) -> None:
    """Bar chart of class counts per crossing number, split knots/links."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    crossings = sorted({r.crossings for r in rows})
    knots = [sum(1 for r in rows if r.crossings == c and r.components == 1) for c in crossings]
    links = [sum(1 for r in rows if r.crossings == c and r.components == 2) for c in crossings]
    achiral = [sum(1 for r in rows if r.crossings == c and r.achiral) for c in crossings]

    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.3
    xs = range(len(crossings))
    ax.bar([x - width for x in xs], knots, width, label="knot classes")
    ax.bar(xs, links, width, label="link classes")
    ax.bar([x + width for x in xs], achiral, width, label="achiral")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(c) for c in crossings])
    ax.set_xlabel("crossing number")
    ax.set_ylabel("classes")
    ax.set_title("rational link classes by crossing number")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# --- subcommands ---------------------------------------------------------------


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(human)


def _cmd_eval(args) -> int:
    f = _as_fraction(parse(args.value))
    _emit(args, {"input": args.value, "fraction": str(f)}, format_fraction(f))
    return 0


def _cmd_expand(args) -> int:
    f = _as_fraction(parse(args.value))
    v = expand(f)
    _emit(args, {"input": args.value, "vector": list(v.terms), "canonical": v.is_canonical}, str(v))
    return 0


def _cmd_palindrome(args) -> int:
    v = palindrome(_as_vector(parse(args.value), args.value))
    _emit(args, {"input": args.value, "vector": list(v.terms)}, str(v))
    return 0


def _cmd_special_cut(args) -> int:
    v = special_cut(_as_vector(parse(args.value), args.value))
    f = evaluate(v)
    _emit(args, {"input": args.value, "vector": list(v.terms), "fraction": str(f)}, str(v))
    return 0


def _equiv_relation(f1: Fraction, f2: Fraction, oriented: bool) -> Optional[str]:
    """Human label for the congruence that makes f1 ~ f2, if any."""
    if f1.is_infinite and f2.is_infinite:
        return "both 1/0"
    if f1.is_zero and f2.is_zero:
        return "both 0/1"
    if f1.is_infinite or f2.is_infinite or f1.is_zero or f2.is_zero:
        return None
    if oriented:
        f1 = normalize_odd_denominator(f1)
        f2 = normalize_odd_denominator(f2)
    p1, q1 = _signed(f1)
    p2, q2 = _signed(f2)
    if p1 != p2:
        return None
    if p1 == 1 and not oriented:
        return "unknot class (p = 1)"
    m = 2 * p1 if oriented else p1
    label = "2p" if oriented else "p"
    if q1 % m == q2 % m:
        return f"q ≡ q' mod {label}"
    if (q1 * q2) % m == 1 % m:
        return f"qq' ≡ 1 mod {label}"
    return None


def _cmd_equiv(args, oriented: bool) -> int:
    f1 = _as_fraction(parse(args.a))
    f2 = _as_fraction(parse(args.b))
    same = (oriented_equivalent if oriented else unoriented_equivalent)(f1, f2)
    relation = _equiv_relation(f1, f2, oriented)
    human = f"equivalent ({relation})" if same else "not equivalent"
    payload = {"a": str(f1), "b": str(f2), "equivalent": same, "relation": relation}
    _emit(args, payload, human)
    return 0


def _cmd_chiral(args) -> int:
    f = _as_fraction(parse(args.value))
    achiral = is_achiral(f)
    form = achiral_form(f)
    if achiral:
        human = f"achiral, form {form}" if form else "achiral"
    else:
        human = "chiral"
    payload = {
        "input": args.value,
        "achiral": achiral,
        "form": list(form.terms) if form else None,
    }
    _emit(args, payload, human)
    return 0


def _cmd_components(args) -> int:
    f = _as_fraction(parse(args.value))
    n = components(f)
    _emit(args, {"input": args.value, "components": n}, str(n))
    return 0


def _cmd_connectivity(args) -> int:
    f = _as_fraction(parse(args.value))
    c = connectivity(f)
    _emit(args, {"input": args.value, "connectivity": c.value}, f"{c.value} ({c.icon})")
    return 0


def _cmd_strong_inv(args) -> int:
    f = _as_fraction(parse(args.value))
    strong = is_strongly_invertible(f)
    u = strong_u(f)
    form = strong_form(f)
    if strong:
        parts = ["strongly invertible"]
        if u is not None:
            parts.append(f"u={u}")
        if form is not None:
            parts.append(f"form {form}")
        human = ", ".join(parts)
    else:
        human = f"not strongly invertible (u={u} even)" if u is not None else "not strongly invertible"
    payload = {
        "input": args.value,
        "strongly_invertible": strong,
        "u": u,
        "form": list(form.terms) if form else None,
    }
    _emit(args, payload, human)
    return 0


def _cmd_classify(args) -> int:
    f = _as_fraction(parse(args.value))
    report = classify(f)
    if args.json:
        payload = report.to_dict()
        payload["input"] = args.value
        payload["fraction"] = str(f)
        payload["verdicts"] = {
            "achiral": report.achiral,
            "strongly_invertible": report.strongly_invertible,
            "invertible": is_invertible(f),
        }
        print(json.dumps(payload, ensure_ascii=False))
        return 0
    strong = report.strongly_invertible
    if strong is None:
        strong_line = "n/a (one component)"
    elif strong:
        u = strong_u(f)
        detail = f"u={u}, form {report.strong_form}" if u is not None else f"form {report.strong_form}"
        strong_line = f"yes ({detail})"
    else:
        strong_line = "no"
    achiral_line = "yes" + (f" (form {report.achiral_form})" if report.achiral_form else "") if report.achiral else "no"
    print(f"fraction:            {f}")
    print(f"representative:      {report.representative}")
    print(f"components:          {report.components}")
    print(f"connectivity:        {report.connectivity.value} ({report.connectivity.icon})")
    print(f"achiral:             {achiral_line}")
    print(f"strongly invertible: {strong_line}")
    print("invertible:          yes")
    return 0


def _cmd_table(args) -> int:
    rows = build_table(args.max_crossings, args.knots_only, args.collapse_mirrors)
    if args.csv:
        write_table_csv(rows, args.csv)
    if args.figure:
        render_table_figure(rows, args.figure)
    if args.json:
        print(json.dumps({"max_crossings": args.max_crossings, "rows": [r.to_dict() for r in rows]}))
        return 0
    header = f"{'cross':>5}  {'class':>8}  {'vector':<16} {'comp':>4}  {'achiral':>7}  {'strong-inv':>10}"
    print(header)
    for r in rows:
        strong = "-" if r.strongly_invertible is None else ("yes" if r.strongly_invertible else "no")
        print(
            f"{r.crossings:>5}  {str(r.representative):>8}  {str(r.vector):<16} "
            f"{r.components:>4}  {'yes' if r.achiral else 'no':>7}  {strong:>10}"
        )
    print(f"{len(rows)} classes")
    return 0


def _cmd_verify(args) -> int:
    report = sweep_verify(args.max_len, args.max_term)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        for c in report.checks:
            status = "ok" if c.failures == 0 else f"FAIL ({c.failures}, first: {c.first_counterexample})"
            print(f"{c.name:<24} {c.cases:>7} cases  {status}")
        verdict = "all checks passed" if report.passed else f"{report.total_failures} failures"
        print(f"{report.vectors_swept} vectors swept; {verdict}")
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratknots",
        description="Fraction calculus for rational tangles and classification of their closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(handler=handler)
        return p

    p = add("eval", _cmd_eval, help="evaluate a term vector to its fraction")
    p.add_argument("value")
    p = add("expand", _cmd_expand, help="canonical continued-fraction expansion")
    p.add_argument("value")
    p = add("palindrome", _cmd_palindrome, help="reverse a term vector")
    p.add_argument("value")
    p = add("special-cut", _cmd_special_cut, help="special cut of a canonical vector")
    p.add_argument("value")
    p = add("equiv", lambda a: _cmd_equiv(a, oriented=False), help="unoriented equivalence of two closures")
    p.add_argument("a")
    p.add_argument("b")
    p = add("oriented-equiv", lambda a: _cmd_equiv(a, oriented=True), help="oriented equivalence of two closures")
    p.add_argument("a")
    p.add_argument("b")
    p = add("chiral", _cmd_chiral, help="achirality test")
    p.add_argument("value")
    p = add("components", _cmd_components, help="component count of the closure")
    p.add_argument("value")
    p = add("connectivity", _cmd_connectivity, help="end-arc connectivity type")
    p.add_argument("value")
    p = add("strong-inv", _cmd_strong_inv, help="strong invertibility of a two-component closure")
    p.add_argument("value")
    p = add("classify", _cmd_classify, help="full classification report")
    p.add_argument("value")
    p = add("table", _cmd_table, help="enumerate link classes by crossing number")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--knots-only", action="store_true")
    p.add_argument("--collapse-mirrors", action="store_true", help="one row per mirror pair")
    p.add_argument("--csv", metavar="PATH", help="also write rows as CSV")
    p.add_argument("--figure", metavar="PATH", help="also render a class-count chart")
    p = add("verify", _cmd_verify, help="run the exhaustive verification sweep")
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--max-term", type=int, default=3)
    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (TangleError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
