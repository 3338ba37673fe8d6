from hypothesis import given, settings, strategies as st

from qrat.braidcore import BraidWord, continued_normal_form, mobius_apply, parse_word, word_matrix_q
from qrat.contfrac import Rational
from qrat.hnauto import (A_STATE, B_STATE, D_STATE, P1, P2, P21, STATES, apply_braid,
                         basic_object, bilinear_check, bilinear_rhs, c2_automaton, columns_match,
                         hom, object_of, occ, occ_general, occ_matrix_route, occ_table, rz_left,
                         rz_right, rz_right_ratfunc, shift_automaton)
from qrat.qpoly import ONE, ZERO, equal_up_to_unit, q_power
from qrat.qrationals import deform

q, qi = q_power(1), q_power(-1)
words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6).map(lambda ls: BraidWord(tuple(ls)))
FIVE_HALVES = parse_word("s1^-2 s2^2")


def test_automaton_shape():
    aut = c2_automaton()
    assert len(aut.vertices) == 4
    for v in STATES:
        assert len({e.label for e in aut.outgoing(v)}) == 3
    assert {e.label for e in aut.outgoing(A_STATE)} == {1, 2, -2}
    sigma2 = aut.edges[(A_STATE, 2)]
    assert sigma2.target == B_STATE
    assert sigma2.matrix == ((ONE, ZERO), (ZERO, ONE))
    loop = aut.edges[(A_STATE, 1)]
    assert loop.target == A_STATE and loop.matrix == ((qi, qi), (ZERO, ONE))


def test_every_edge_matrix_invertible():
    for e in c2_automaton().edges.values():
        (a, b), (c, d) = e.matrix
        assert (a * d - b * c).unit_part() is not None


def test_literal_figure_reading_breaks_rouquier_zimmermann():
    literal = c2_automaton(figure_literal=True)
    broken = 0
    for letters in ((2, 2), (-1, 2, 2), (1, -2), (-2, -2), (2, -1, 2)):
        w = BraidWord(letters)
        try:
            x = apply_braid(basic_object(P1), w, literal)
        except AssertionError:
            broken += 1
            continue
        broken += rz_right(x)[0] != deform(x.label, "sharp")
    assert broken > 0
    y = object_of(FIVE_HALVES)
    assert rz_right(y)[0] == deform(Rational(5, 2), "sharp")


def test_apply_braid_examples():
    x = apply_braid(basic_object(P1), BraidWord((2,)))
    assert x.vector == (ZERO, ZERO, ZERO, ONE)
    assert x.states == frozenset({B_STATE, D_STATE})
    assert x.label == Rational(1, 1)
    assert apply_braid(basic_object(P1), BraidWord((1,))).vector == (qi, ZERO, ZERO, ZERO)
    assert object_of(BraidWord(())).vector == basic_object(P1).vector


def test_shift_automaton_multiplies_by_q():
    aut = shift_automaton(3, 2)
    vec = (ONE, q)
    assert aut.step({"0"}, vec, 1) == (q, q * q)
    assert aut.step({"1"}, (q, q * q), -1) == vec


def test_occ_examples():
    p21 = basic_object(P21)
    p1 = basic_object(P1)
    assert occ(P1, p21) == ONE
    assert occ(P2, p1) == ONE and occ(P1, p1) == ZERO
    x = object_of(FIVE_HALVES)
    assert equal_up_to_unit((occ(P2, x), occ(P1, x)), deform(Rational(5, 2), "sharp"))
    assert occ_general(p21, p1) == ONE


def test_hom_examples():
    assert hom(P1, basic_object(P1)) == q_power(-2) - qi
    assert hom(P1, basic_object(P2)) == qi
    assert hom(P1, basic_object(P21)) == ONE


def test_rz_examples():
    assert rz_right(basic_object(P1))[0] == (ONE, ZERO)
    assert rz_right(basic_object(P21))[0] == (ONE, ONE)
    assert rz_left(basic_object(P1))[0] == (ONE, ONE - q)
    assert rz_left(basic_object(P2))[0] == (ONE - qi, ONE)
    x = object_of(FIVE_HALVES)
    assert rz_right(x) == (deform(Rational(5, 2), "sharp"), Rational(5, 2))
    assert rz_left(x) == (deform(Rational(5, 2), "flat"), Rational(5, 2))


def test_occ_matrix_route_examples():
    m = occ_matrix_route(FIVE_HALVES)
    assert columns_match(occ_table(FIVE_HALVES), m)
    assert equal_up_to_unit((m.a, m.c), deform(Rational(5, 2), "sharp"))
    assert equal_up_to_unit((m.b, m.d), deform(Rational(2, 1), "sharp"))
    assert columns_match(occ_table(BraidWord(())), occ_matrix_route(BraidWord(())))
    assert columns_match(occ_table(BraidWord((1, 1, 1))), occ_matrix_route(BraidWord((1, 1, 1))))


def test_stated_non_strict_rule_counterexample():
    w = BraidWord((-2, -1))  # form 2, digits (0, -1), M = -1
    assert not continued_normal_form(w).strict
    assert not columns_match(occ_table(w), occ_matrix_route(w, "stated"))
    assert columns_match(occ_table(w), occ_matrix_route(w, "uniform"))


def test_bilinear_counterexample_and_signed_fix():
    p21 = basic_object(P21)
    assert occ_general(p21, p21) == ZERO
    assert not bilinear_rhs(p21, p21, "stated").is_zero()
    assert bilinear_rhs(p21, p21, "signed") == ZERO
    assert bilinear_check(p21, p21, "signed")


@given(words)
def test_occ_general_from_p1(w):
    y = object_of(w)
    assert occ_general(basic_object(P1), y) == occ(P1, y)


@given(words)
def test_vectors_nonnegative_and_states_consistent(w):
    for start in (P1, P2):
        x = apply_braid(basic_object(start), w)
        assert x.states
        for coeff in x.vector:
            assert all(c >= 0 for c in coeff.terms.values())
        assert x.nonnegative or x.nonpositive


@given(words, words)
def test_equivariance(w, v):
    x = object_of(v)
    moved = apply_braid(x, w)
    assert rz_right_ratfunc(moved) == mobius_apply(word_matrix_q(w), rz_right_ratfunc(x))


@settings(max_examples=40)
@given(words, words)
def test_signed_bilinear_identity(w, v):
    assert bilinear_check(object_of(w), object_of(v), "signed")
