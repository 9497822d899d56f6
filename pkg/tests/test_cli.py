import json

import pytest

from ratknots.classify import KnotClassReport, classify, unoriented_equivalent
from ratknots.cli import (
    build_table,
    format_fraction,
    format_vector,
    parse,
    run,
    write_table_csv,
)
from ratknots.contfrac import ContinuedFraction, Fraction, evaluate
from ratknots.errors import ParseError, RangeError


class TestParse:
    def test_vector(self):
        assert parse("[2,-2,3]") == ContinuedFraction((2, -2, 3))
        assert parse("[2 -2 3]") == ContinuedFraction((2, -2, 3))
        assert parse("[ 2, -2 ,3 ]") == ContinuedFraction((2, -2, 3))

    def test_fraction(self):
        assert parse("30/13") == Fraction(30, 13)
        assert parse("3/-1") == Fraction(-3, 1)
        assert parse("7") == Fraction(7, 1)
        assert parse("-4") == Fraction(-4, 1)
        assert parse("inf") == Fraction(1, 0)
        assert parse("5/0") == Fraction(1, 0)

    def test_round_trip(self):
        for s in ("[2,-2,3]", "[0]", "30/13", "-30/13", "0/1", "inf"):
            v = parse(s)
            out = format_vector(v) if isinstance(v, ContinuedFraction) else format_fraction(v)
            assert out == s
            assert parse(out) == v

    def test_errors_carry_offsets(self):
        with pytest.raises(ParseError) as e:
            parse("[2,3")
        assert e.value.offset == 4
        with pytest.raises(ParseError) as e:
            parse("[]")
        assert e.value.offset == 1
        with pytest.raises(ParseError) as e:
            parse("3/x")
        assert e.value.offset == 2
        with pytest.raises(ParseError) as e:
            parse("3/2 junk")
        assert e.value.offset == 3
        with pytest.raises(ParseError):
            parse("0/0")
        with pytest.raises(ParseError):
            parse("")


def run_ok(capsys, *argv):
    code = run(argv)
    out = capsys.readouterr().out.strip()
    assert code == 0, out
    return out


class TestCommands:
    def test_eval(self, capsys):
        assert run_ok(capsys, "eval", "[2,3,4]") == "30/13"

    def test_eval_json(self, capsys):
        out = json.loads(run_ok(capsys, "eval", "[2,3,4]", "--json"))
        assert out == {"input": "[2,3,4]", "fraction": "30/13"}

    def test_expand(self, capsys):
        assert run_ok(capsys, "expand", "30/13") == "[2,3,4]"

    def test_palindrome(self, capsys):
        assert run_ok(capsys, "palindrome", "[2,3,4]") == "[4,3,2]"

    def test_special_cut(self, capsys):
        assert run_ok(capsys, "special-cut", "[-3]") == "[1,2]"

    def test_equiv(self, capsys):
        assert run_ok(capsys, "equiv", "30/13", "30/7") == "equivalent (qq' ≡ 1 mod p)"
        assert run_ok(capsys, "equiv", "3/-1", "3/2") == "equivalent (q ≡ q' mod p)"
        assert run_ok(capsys, "equiv", "3/1", "5/2") == "not equivalent"

    def test_oriented_equiv(self, capsys):
        assert run_ok(capsys, "oriented-equiv", "8/3", "8/-5") == "equivalent (qq' ≡ 1 mod 2p)"
        assert run_ok(capsys, "oriented-equiv", "8/3", "8/5") == "not equivalent"

    def test_chiral(self, capsys):
        assert run_ok(capsys, "chiral", "5/2") == "achiral, form [2,2]"
        assert run_ok(capsys, "chiral", "3/1") == "chiral"

    def test_components_connectivity(self, capsys):
        assert run_ok(capsys, "components", "8/3") == "2"
        assert run_ok(capsys, "connectivity", "inf") == "inf (><)"
        assert run_ok(capsys, "connectivity", "0/1") == "0 (≍)"

    def test_strong_inv(self, capsys):
        assert run_ok(capsys, "strong-inv", "8/3") == "strongly invertible, u=1, form [2,1,2]"
        assert run_ok(capsys, "strong-inv", "4/1") == "not strongly invertible (u=0 even)"

    def test_classify_json_round_trip(self, capsys):
        payload = json.loads(run_ok(capsys, "classify", "8/3", "--json"))
        assert payload["fraction"] == "8/3"
        assert payload["verdicts"]["invertible"] is True
        report = KnotClassReport.from_dict(payload)
        assert report == classify(Fraction(8, 3))

    def test_classify_json_round_trip_from_vector(self, capsys):
        payload = json.loads(run_ok(capsys, "classify", "[2,1,2]", "--json"))
        assert payload["input"] == "[2,1,2]"
        assert KnotClassReport.from_dict(payload) == classify(Fraction(8, 3))

    def test_vector_accepted_where_fraction_expected(self, capsys):
        assert run_ok(capsys, "classify", "[2,1,2]").splitlines()[0].endswith("8/3")

    def test_exit_codes(self, capsys):
        assert run(["eval", "[2,3"]) == 2          # parse error
        capsys.readouterr()
        assert run(["expand", "inf"]) == 1         # precondition violation
        capsys.readouterr()
        assert run(["strong-inv", "3/1"]) == 1     # one component
        capsys.readouterr()
        assert run(["palindrome", "3/2"]) == 2     # wrong input kind
        capsys.readouterr()
        assert run(["nonsense"]) == 2              # usage error
        capsys.readouterr()

    def test_verify_command(self, capsys):
        out = run_ok(capsys, "verify", "--max-len", "3", "--max-term", "2")
        assert "all checks passed" in out

    def test_verify_json(self, capsys):
        payload = json.loads(run_ok(capsys, "verify", "--max-len", "1", "--max-term", "2", "--json"))
        assert payload["passed"] is True


class TestTable:
    def test_three_crossings_single_knot(self):
        rows = build_table(3, knots_only=True)
        assert len(rows) == 1
        assert rows[0].representative == Fraction(3, 1)
        assert rows[0].vector == ContinuedFraction((3,))

    def test_four_crossings(self):
        rows = build_table(4)
        reps = {str(r.representative) for r in rows}
        assert reps == {"2/1", "3/1", "4/1", "5/2"}
        knots = [r for r in rows if r.components == 1]
        assert {str(r.representative) for r in knots} == {"3/1", "5/2"}

    def test_seven_crossing_knot_counts(self):
        # mirror classes are distinct rows by default; collapsing mirror
        # pairs reproduces the classical count of knot types through 7
        # crossings (3_1, 4_1, 5_1, 5_2, 6_1..6_3, 7_1..7_7)
        assert len(build_table(7, knots_only=True)) == 19
        assert len(build_table(7, knots_only=True, collapse_mirrors=True)) == 14

    def test_rows_pairwise_inequivalent(self):
        rows = build_table(8)
        for i, a in enumerate(rows):
            for b in rows[i + 1 :]:
                assert not unoriented_equivalent(a.representative, b.representative)

    def test_every_vector_maps_to_exactly_one_row(self):
        from ratknots.classify import class_representative
        from ratknots.cli import _table_vectors

        reps = [r.representative for r in build_table(7)]
        for crossings in range(2, 8):
            for v in _table_vectors(crossings):
                rep = class_representative(evaluate(v))
                assert reps.count(rep) == 1, v

    def test_rows_describe_their_vectors(self):
        for r in build_table(8):
            assert sum(r.vector.terms) == r.crossings
            assert r.vector.is_canonical
            assert unoriented_equivalent(evaluate(r.vector), r.representative)

    def test_range_checked(self):
        with pytest.raises(RangeError):
            build_table(1)
        with pytest.raises(RangeError):
            build_table(17)

    def test_csv_and_figure(self, tmp_path, capsys):
        csv_path = tmp_path / "table.csv"
        fig_path = tmp_path / "table.png"
        code = run(
            [
                "table",
                "--max-crossings",
                "5",
                "--csv",
                str(csv_path),
                "--figure",
                str(fig_path),
            ]
        )
        capsys.readouterr()
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0].startswith("crossings,representative,vector")
        assert len(lines) == 1 + len(build_table(5))
        assert fig_path.stat().st_size > 0

    def test_json_rows(self, capsys):
        payload = json.loads(run_ok(capsys, "table", "--max-crossings", "3", "--json"))
        assert payload["rows"][0]["representative"] == "2/1"
        assert payload["rows"][0]["strongly_invertible"] is False

    def test_write_csv_helper(self, tmp_path):
        rows = build_table(4)
        path = tmp_path / "t.csv"
        write_table_csv(rows, str(path))
        assert len(path.read_text().strip().splitlines()) == len(rows) + 1
