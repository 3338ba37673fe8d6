import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrat.contfrac import Rational
from qrat.qknots import (FAMILIES, MAX_BRUTE_VERTICES, Quiver, build_quiver,
                         count_closures_bruteforce, count_closures_dp, counts_to_poly, jones_abs)
from qrat.qrationals import deform, q_integer


def knots(limit):
    return [Rational(r, s) for r in range(2, limit + 1) for s in range(1, r) if math.gcd(r, s) == 1]


def test_build_examples():
    g = build_quiver(Fraction(5, 2), "gsharp")
    assert g.n == 3 and set(g.edges) == {(1, 0), (1, 2)}
    h = build_quiver(Fraction(3, 1), "H")
    assert (0, 1) in h.edges and (1, 0) in h.edges
    assert h.n == 3
    flat_two = build_quiver(Fraction(2, 1), "gflat")
    assert flat_two.n == 2 and set(flat_two.edges) == {(0, 1), (1, 0)}
    with pytest.raises(ValueError):
        build_quiver(Fraction(1, 1), "H")
    with pytest.raises(ValueError):
        build_quiver(Fraction(3, 1), "nope")


def test_closure_examples():
    assert count_closures_bruteforce(Quiver(0, ())) == (1,)
    assert count_closures_bruteforce(Quiver(1, ())) == (1, 1)
    g = build_quiver(Fraction(5, 2), "gsharp")
    assert count_closures_bruteforce(g) == (1, 2, 1, 1)
    assert count_closures_dp(g) == (1, 2, 1, 1)
    h = build_quiver(Fraction(3, 1), "H")
    assert count_closures_dp(h) == count_closures_bruteforce(h) == (1, 1, 0, 1)
    with pytest.raises(ValueError):
        count_closures_bruteforce(Quiver(MAX_BRUTE_VERTICES + 1, ()))


def test_jones_examples():
    assert jones_abs(Fraction(3, 1)).coefficients() == [1, 1, 0, 1]
    assert jones_abs(Fraction(3, 1)) == deform(Rational(3, 1), "flat")[0] == q_integer(3, "flat")
    assert jones_abs(Fraction(5, 2)).coefficients() == [1, 1, 1, 1, 1]
    with pytest.raises(ValueError):
        jones_abs(Fraction(1, 1))


def test_construction_validated_on_small_cases():
    for x in (Rational(5, 2), Rational(7, 3)):
        r, s = deform(x, "sharp")
        assert counts_to_poly(count_closures_dp(build_quiver(x, "gsharp"))) == r
        assert counts_to_poly(count_closures_dp(build_quiver(x, "gsharp_hat"))) == s


@pytest.mark.parametrize("side,full,hat", [("sharp", "gsharp", "gsharp_hat"), ("flat", "gflat", "gflat_hat")])
def test_counting_theorems(side, full, hat):
    for x in knots(40):
        r, s = deform(x, side)
        full_counts = count_closures_dp(build_quiver(x, full))
        hat_counts = count_closures_dp(build_quiver(x, hat))
        assert counts_to_poly(full_counts) == r, x
        assert counts_to_poly(hat_counts) == s, x
        if side == "sharp":
            assert sum(full_counts) == x.r and sum(hat_counts) == x.s


def test_jones_knot_invariance():
    for x in knots(30):
        coeffs = jones_abs(x).coefficients()
        assert sum(coeffs) == x.r  # alternating knots: sum of |coefficients| is the determinant
        assert jones_abs(Rational(x.r, pow(x.s, -1, x.r))).coefficients() == coeffs
        assert jones_abs(Rational(x.r, x.r - x.s)).coefficients() == coeffs[::-1]  # mirror image


@st.composite
def path_quivers(draw):
    n = draw(st.integers(1, 12))
    edges = []
    for i in range(n - 1):
        kind = draw(st.sampled_from(["right", "left", "both"]))
        if kind in ("right", "both"):
            edges.append((i, i + 1))
        if kind in ("left", "both"):
            edges.append((i + 1, i))
    return Quiver(n, tuple(edges))


@given(path_quivers())
def test_dp_matches_bruteforce(g):
    assert count_closures_dp(g) == count_closures_bruteforce(g)


@given(path_quivers())
def test_reversal_symmetry(g):
    counts = count_closures_bruteforce(g)
    assert count_closures_bruteforce(g.reversed()) == counts[::-1]
    assert counts[0] == 1 and counts[-1] == 1


def test_dp_matches_bruteforce_on_constructed_quivers():
    rng = random.Random(3)
    for x in rng.sample(knots(60), 80):
        for family in FAMILIES:
            g = build_quiver(x, family)
            if g.n <= 16:
                assert count_closures_dp(g) == count_closures_bruteforce(g), (x, family)


def test_non_path_quiver_falls_back():
    star = Quiver(4, ((0, 1), (0, 2), (0, 3)))
    assert count_closures_dp(star) == count_closures_bruteforce(star)
