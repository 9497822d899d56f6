import math

import pytest

from ratknots.classify import (
    ConnectivityType,
    KnotClassReport,
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
from ratknots.contfrac import ContinuedFraction, Fraction, evaluate
from ratknots.errors import InfinityInput, NotTwoComponent
from ratknots.oracle import enumerate_vectors
from ratknots.tangle import bottom_twist, mirror


def reduced_fractions(max_p):
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


class TestUnorientedEquivalence:
    def test_special_cut_pair(self):
        assert unoriented_equivalent(Fraction(3, -1), Fraction(3, 2))

    def test_palindrome_pair(self):
        assert unoriented_equivalent(Fraction(30, 13), Fraction(30, 7))

    def test_different_numerators(self):
        assert not unoriented_equivalent(Fraction(3, 1), Fraction(5, 2))

    def test_mirror_not_identified(self):
        assert not unoriented_equivalent(Fraction(3, 1), Fraction(-3, 1))

    def test_specials_are_singletons(self):
        inf, zero, one = Fraction(1, 0), Fraction(0, 1), Fraction(1, 1)
        assert unoriented_equivalent(inf, inf)
        assert unoriented_equivalent(zero, zero)
        assert not unoriented_equivalent(inf, zero)
        assert not unoriented_equivalent(inf, one)
        assert not unoriented_equivalent(zero, one)

    def test_unknot_class_ignores_denominator(self):
        assert unoriented_equivalent(Fraction(1, 5), Fraction(1, 1))
        assert unoriented_equivalent(Fraction(-1, 4), Fraction(1, 2))

    def test_bottom_twist_invariance(self):
        for p, q in reduced_fractions(15):
            f = Fraction(p, q)
            for n in range(-3, 4):
                assert unoriented_equivalent(f, bottom_twist(f, n))

    def test_equivalence_relation_axioms(self):
        fs = [Fraction(p, q) for p, q in reduced_fractions(40)]
        by_p = {}
        for f in fs:
            by_p.setdefault(f.num, []).append(f)
        for group in by_p.values():
            for a in group:
                assert unoriented_equivalent(a, a)
                for b in group:
                    assert unoriented_equivalent(a, b) == unoriented_equivalent(b, a)
                    if unoriented_equivalent(a, b):
                        for c in group:
                            if unoriented_equivalent(b, c):
                                assert unoriented_equivalent(a, c)


class TestOrientedEquivalence:
    def test_golden_pair(self):
        assert oriented_equivalent(Fraction(8, 3), Fraction(8, -5))

    def test_reflexive(self):
        assert oriented_equivalent(Fraction(8, 3), Fraction(8, 3))

    def test_negative_pair(self):
        assert not oriented_equivalent(Fraction(8, 3), Fraction(8, 5))

    def test_even_bottom_twists_preserve(self):
        for p, q in reduced_fractions(15):
            f = Fraction(p, q)
            for n in range(-2, 3):
                assert oriented_equivalent(f, bottom_twist(f, 2 * n)), f

    def test_refines_unoriented(self):
        fs = [Fraction(p, q) for p, q in reduced_fractions(30)]
        for a in fs:
            for b in fs:
                if oriented_equivalent(a, b):
                    assert unoriented_equivalent(a, b)


class TestNormalizeOddDenominator:
    def test_examples(self):
        assert normalize_odd_denominator(Fraction(3, 2)) == Fraction(3, 5)
        assert normalize_odd_denominator(Fraction(8, 3)) == Fraction(8, 3)
        assert normalize_odd_denominator(Fraction(5, 4)) == Fraction(5, 9)

    def test_output_odd(self):
        for p, q in reduced_fractions(25):
            assert normalize_odd_denominator(Fraction(p, q)).den % 2 == 1

    def test_infinity_rejected(self):
        with pytest.raises(InfinityInput):
            normalize_odd_denominator(Fraction(1, 0))


class TestAchirality:
    def test_examples(self):
        assert is_achiral(Fraction(5, 2))          # figure-eight class
        assert not is_achiral(Fraction(3, 1))      # trefoil class
        assert not is_achiral(Fraction(30, 13))

    def test_matches_mirror_equivalence(self):
        for p, q in reduced_fractions(40):
            f = Fraction(p, q)
            assert is_achiral(f) == unoriented_equivalent(f, Fraction(p, p - q)), f
            assert is_achiral(f) == unoriented_equivalent(f, mirror(f)), f

    def test_forms(self):
        assert achiral_form(Fraction(5, 2)).terms == (2, 2)
        assert achiral_form(Fraction(3, 1)) is None
        assert achiral_form(Fraction(2, 1)).terms == (1, 1)

    def test_form_properties(self):
        for p, q in reduced_fractions(40):
            f = Fraction(p, q)
            v = achiral_form(f)
            if not is_achiral(f):
                assert v is None
                continue
            assert v is not None
            assert len(v) % 2 == 0
            assert v.terms == tuple(reversed(v.terms))
            assert unoriented_equivalent(evaluate(v), f)


class TestConnectivity:
    def test_examples(self):
        assert connectivity(Fraction(0, 1)) is ConnectivityType.ZERO
        assert connectivity(Fraction(1, 0)) is ConnectivityType.INFINITY
        assert connectivity(Fraction(8, 3)) is ConnectivityType.ZERO
        assert connectivity(Fraction(3, 1)) is ConnectivityType.ONE

    def test_components(self):
        assert components(Fraction(8, 3)) == 2
        assert components(Fraction(3, 1)) == 1
        assert components(Fraction(1, 0)) == 1

    def test_components_iff_zero_type(self):
        for cf in enumerate_vectors(4, 3):
            f = evaluate(cf)
            assert (components(f) == 2) == (connectivity(f) is ConnectivityType.ZERO)


class TestStrongInvertibility:
    def test_whitehead(self):
        f = Fraction(8, 3)
        assert is_strongly_invertible(f)
        assert strong_u(f) == 1
        assert strong_form(f).terms == (2, 1, 2)

    def test_larger_example(self):
        f = Fraction(40, 11)
        assert is_strongly_invertible(f)
        assert strong_u(f) == 3
        assert strong_form(f).terms == (3, 1, 1, 1, 3)

    def test_even_twist_links_fail(self):
        assert not is_strongly_invertible(Fraction(4, 1))
        assert strong_u(Fraction(4, 1)) == 0
        assert strong_form(Fraction(4, 1)) is None

    def test_unlink_is_strongly_invertible(self):
        assert is_strongly_invertible(Fraction(0, 1))
        assert strong_form(Fraction(0, 1)).terms == (0,)

    def test_one_component_rejected(self):
        with pytest.raises(NotTwoComponent):
            is_strongly_invertible(Fraction(3, 1))
        with pytest.raises(NotTwoComponent):
            is_strongly_invertible(Fraction(1, 0))

    def test_form_properties(self):
        for p, q in reduced_fractions(40):
            if p % 2 == 1:
                continue
            f = Fraction(p, q)
            v = strong_form(f)
            if not is_strongly_invertible(f):
                assert v is None
                continue
            assert v is not None
            assert len(v) % 2 == 1
            assert v.terms == tuple(reversed(v.terms))
            assert unoriented_equivalent(evaluate(v), f)


class TestRepresentative:
    def test_examples(self):
        assert class_representative(Fraction(30, 7)) == Fraction(30, 7)
        assert class_representative(Fraction(30, 13)) == Fraction(30, 7)
        assert class_representative(Fraction(3, -1)) == Fraction(3, 2)
        assert class_representative(Fraction(5, 3)) == Fraction(5, 2)

    def test_specials(self):
        assert class_representative(Fraction(1, 0)) == Fraction(1, 0)
        assert class_representative(Fraction(0, 1)) == Fraction(0, 1)
        assert class_representative(Fraction(1, 7)) == Fraction(1, 1)
        assert class_representative(Fraction(-1, 7)) == Fraction(1, 1)

    def test_characterizes_equivalence(self):
        fs = [Fraction(p, q) for p, q in reduced_fractions(30)]
        fs += [Fraction(-p, q) for p, q in reduced_fractions(20)]
        for a in fs:
            for b in fs:
                assert (class_representative(a) == class_representative(b)) == unoriented_equivalent(a, b)


class TestReport:
    def test_is_invertible_constant(self):
        assert is_invertible(Fraction(4, 1))
        assert is_invertible(Fraction(8, 3))
        assert is_invertible(Fraction(1, 0))

    def test_whitehead_report(self):
        r = classify(Fraction(8, 3))
        assert r.components == 2
        assert r.connectivity is ConnectivityType.ZERO
        assert not r.achiral
        assert r.strongly_invertible is True
        assert r.strong_form.terms == (2, 1, 2)
        assert r.representative == Fraction(8, 3)

    def test_knot_has_na_strong_invertibility(self):
        r = classify(Fraction(3, 1))
        assert r.components == 1
        assert r.strongly_invertible is None
        assert r.strong_form is None

    def test_invariant_components_iff_zero(self):
        for cf in enumerate_vectors(3, 3):
            r = classify(evaluate(cf))
            assert (r.components == 2) == (r.connectivity is ConnectivityType.ZERO)
            if r.components != 2:
                assert r.strongly_invertible is None

    def test_dict_round_trip(self):
        for f in (Fraction(8, 3), Fraction(3, 1), Fraction(1, 0), Fraction(0, 1), Fraction(5, 2)):
            r = classify(f)
            assert KnotClassReport.from_dict(r.to_dict()) == r
