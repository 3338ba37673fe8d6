from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrat.braidcore import (IDENTITY, OMEGA, BraidWord, Mat2, NormalForm, cf_braid,
                            continued_normal_form, equal_mat_up_to_unit, format_word, mobius_apply,
                            parse_word, strictify, word_matrix_q, word_matrix_z)
from qrat.contfrac import INFINITY, Rational, cf_value
from qrat.hnauto import P1, apply_braid, basic_object, object_of
from qrat.qpoly import ONE, RatFunc, q_power, parse_laurent

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=8).map(lambda ls: BraidWord(tuple(ls)))
q = q_power(1)


def test_braid_relation():
    assert equal_mat_up_to_unit(word_matrix_q(BraidWord((1, 2, 1))), word_matrix_q(BraidWord((2, 1, 2))))


def test_explicit_product():
    m = word_matrix_q(parse_word("s1^-2 s2^2"))
    expected = [parse_laurent(t) for t in ("q^2+q+2+q^-1", "q^-1+q^-2", "1+q^-1", "q^-2")]
    assert list(m.entries()) == expected
    assert word_matrix_q(BraidWord(())) == IDENTITY


def test_free_reduction_and_text():
    assert BraidWord((1, -1, 2)) == BraidWord((2,))
    w = parse_word("s1^-2 s2^2 s1")
    assert w.letters == (-1, -1, 2, 2, 1)
    assert format_word(w) == "s1^-2 s2^2 s1"
    with pytest.raises(ValueError):
        parse_word("s3")


def test_mobius_examples():
    assert mobius_apply(IDENTITY, Rational(7, 3)) == RatFunc(7 * ONE, 3 * ONE)
    m = word_matrix_q(BraidWord((-1, 2)))
    assert mobius_apply(m, INFINITY) == RatFunc(ONE + q)
    flat_inf = RatFunc(ONE, ONE - q)
    assert mobius_apply(m, flat_inf) == RatFunc(ONE + q * q)
    assert mobius_apply(m, float("inf"), 0.5) == pytest.approx(1.5)


def test_normal_form_examples():
    assert continued_normal_form(parse_word("s1^-2 s2^2")) == NormalForm(1, (2, 2), 0, 0)
    assert continued_normal_form(OMEGA) == NormalForm(3, (), 0, 1)
    assert continued_normal_form(BraidWord((1,) * 5)) == NormalForm(3, (), 5, 0)


def test_strictify_examples():
    nf, shift = strictify(NormalForm(1, (2, 2), 3, 0))
    assert (nf, shift) == (NormalForm(1, (2, 2), 0, 0), -3)
    # both braids send P1 to shifts of the same object
    a = apply_braid(basic_object(P1), NormalForm(1, (2, 2), 3, 0).to_word())
    b = apply_braid(basic_object(P1), nf.to_word())
    assert a.label == b.label
    assert strictify(NormalForm(3, (), -2, 1)) == (NormalForm(3, (), -2, 1), 0)
    nf, shift = strictify(NormalForm(4, (), 1, 0))
    assert nf == NormalForm(4, (), 0, 0) and shift == -1
    assert object_of(NormalForm(4, (), 1, 0).to_word()).label == object_of(nf.to_word()).label


def _int_product(w):
    m = [[1, 0], [0, 1]]
    gens = {1: [[1, -1], [0, 1]], -1: [[1, 1], [0, 1]], 2: [[1, 0], [1, 1]], -2: [[1, 0], [-1, 1]]}
    for g in w.letters:
        b = gens[g]
        m = [[m[i][0] * b[0][j] + m[i][1] * b[1][j] for j in range(2)] for i in range(2)]
    return m


@given(words)
def test_q_equals_one_specialization(w):
    m = word_matrix_q(w)
    at_one = [[int(e(1)) for e in m.entries()[:2]], [int(e(1)) for e in m.entries()[2:]]]
    assert at_one == _int_product(w)
    assert [list(r) for r in word_matrix_z(w)] == at_one


@given(words)
def test_determinant_is_unit(w):
    assert word_matrix_q(w).det().unit_part() is not None


@given(words)
def test_normal_form_reassembles(w):
    nf = continued_normal_form(w)
    again = nf.to_word()
    assert equal_mat_up_to_unit(word_matrix_q(again), word_matrix_q(w))
    assert again.exponent_sum() == w.exponent_sum()
    if nf.form == 1:
        assert all(a >= 0 for a in nf.digits)
    if nf.form == 2:
        assert all(a <= 0 for a in nf.digits)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3).map(lambda d: [d[0] - 1] + d[1:]),
       st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_cf_braid_moves_infinity_to_value(head, tail):
    digits = (head + tail)[: 2 * (len(head + tail) // 2)]
    if not digits:
        return
    value = cf_value(digits)
    got = mobius_apply(word_matrix_q(cf_braid(digits)), INFINITY)
    assert Fraction(int(got.num(1)), int(got.den(1))) == value.as_fraction()
