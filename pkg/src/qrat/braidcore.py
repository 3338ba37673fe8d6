"""Words in the three-strand braid group and their 2x2 matrix images.

Letters are the integers 1, -1, 2, -2 for s1, s1^-1, s2, s2^-1.  A word's
matrix is the left-to-right product of letter matrices, so the leftmost
letter acts last on a point of the projective line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .contfrac import INFINITY, Rational, to_even_cf
from .qpoly import ONE, ZERO, INF, LaurentPoly, RatFunc, eval_real, unit_ratio


class Mat2:
    """2x2 matrix over Z[q^+-], row major."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = LaurentPoly.coerce(a)
        self.b = LaurentPoly.coerce(b)
        self.c = LaurentPoly.coerce(c)
        self.d = LaurentPoly.coerce(d)

    def entries(self) -> Tuple[LaurentPoly, ...]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def apply(self, v: Tuple[LaurentPoly, LaurentPoly]) -> Tuple[LaurentPoly, LaurentPoly]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def scale(self, p: LaurentPoly) -> "Mat2":
        return Mat2(*(p * e for e in self.entries()))

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def column(self, j: int) -> Tuple[LaurentPoly, LaurentPoly]:
        return (self.a, self.c) if j == 0 else (self.b, self.d)

    def at(self, q):
        return tuple(eval_real(e, q) for e in self.entries())

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    __hash__ = None

    def __repr__(self):
        a, b, c, d = (str(e) for e in self.entries())
        return f"Mat2([[{a}, {b}], [{c}, {d}]])"


IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)

_Q = LaurentPoly.monomial(1)
_QI = LaurentPoly.monomial(-1)

GENERATORS = {
    1: Mat2(_QI, -_QI, ZERO, ONE),
    -1: Mat2(_Q, ONE, ZERO, ONE),
    2: Mat2(ONE, ZERO, ONE, _QI),
    -2: Mat2(ONE, ZERO, -_Q, _Q),
}

GENERATORS_Z = {
    1: ((1, -1), (0, 1)),
    -1: ((1, 1), (0, 1)),
    2: ((1, 0), (1, 1)),
    -2: ((1, 0), (-1, 1)),
}


@dataclass(frozen=True)
class BraidWord:
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        reduced: List[int] = []
        for g in self.letters:
            if g not in (1, -1, 2, -2):
                raise ValueError(f"bad braid letter {g!r}")
            if reduced and reduced[-1] == -g:
                reduced.pop()
            else:
                reduced.append(g)
        object.__setattr__(self, "letters", tuple(reduced))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-g for g in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def __str__(self):
        return format_word(self)


def power(gen: int, e: int) -> BraidWord:
    return BraidWord((gen if e > 0 else -gen,) * abs(e))


def parse_word(text: str) -> BraidWord:
    """Parse ``"s1^-2 s2^2"``; an empty string is the trivial braid."""
    letters: List[int] = []
    for tok in text.split():
        m = re.fullmatch(r"s([12])(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(f"bad braid token {tok!r}")
        gen = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend((gen if e > 0 else -gen,) * abs(e))
    return BraidWord(tuple(letters))


def format_word(w: BraidWord) -> str:
    out = []
    for g in w.letters:
        e = 1 if g > 0 else -1
        gen = abs(g)
        if out and out[-1][0] == gen:
            out[-1][1] += e
        else:
            out.append([gen, e])
    return " ".join(f"s{g}" if e == 1 else f"s{g}^{e}" for g, e in out)


def word_matrix_q(w: BraidWord) -> Mat2:
    m = IDENTITY
    for g in w.letters:
        m = m @ GENERATORS[g]
    return m


def _mul_z(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def word_matrix_z(w: BraidWord):
    m = ((1, 0), (0, 1))
    for g in w.letters:
        m = _mul_z(m, GENERATORS_Z[g])
    return m


def cf_braid(digits: Sequence[int]) -> BraidWord:
    """The braid s1^-a1 s2^a2 s1^-a3 ... s2^a2n attached to a digit list."""
    letters: List[int] = []
    for i, a in enumerate(digits):
        if i % 2 == 0:
            letters.extend(power(1, -a).letters)
        else:
            letters.extend(power(2, a).letters)
    return BraidWord(tuple(letters))


def mobius_apply(m: Mat2, x, q=None):
    """Apply ``m`` as a fractional linear map.

    With ``q`` omitted, ``x`` is a RatFunc (or Rational/int) and the result
    is exact.  With ``q`` given, ``x`` is a real (``inf`` allowed) and the
    matrix is evaluated first.
    """
    if q is None:
        if isinstance(x, Rational):
            x = INF if x.is_inf else RatFunc(LaurentPoly.const(x.r), LaurentPoly.const(x.s))
        elif not isinstance(x, RatFunc):
            x = RatFunc(LaurentPoly.coerce(x))
        num = m.a * x.num + m.b * x.den
        den = m.c * x.num + m.d * x.den
        if num.is_zero() and den.is_zero():
            raise ZeroDivisionError("indeterminate 0/0")
        return RatFunc(num, den)
    a, b, c, d = m.at(q)
    if x == float("inf") or (isinstance(x, Rational) and x.is_inf):
        num, den = a, c
    else:
        if isinstance(x, Rational):
            x = x.as_fraction()
        num, den = a * x + b, c * x + d
    if den == 0:
        if num == 0:
            raise ZeroDivisionError("indeterminate 0/0")
        return float("inf")
    return num / den


def equal_mat_up_to_unit(m1: Mat2, m2: Mat2) -> bool:
    unit = None
    for x, y in zip(m1.entries(), m2.entries()):
        if x.is_zero() != y.is_zero():
            return False
        if x.is_zero():
            continue
        u = unit_ratio(x, y)
        if u is None or (unit is not None and u != unit):
            return False
        unit = u
    return True


OMEGA = BraidWord((2, 1, 2, 1, 2, 1))


@dataclass(frozen=True)
class NormalForm:
    """beta = (prefix) s1^M omega^N where the prefix depends on ``form``.

    form 1 and 2: the continued-fraction braid of ``digits`` (positive resp.
    negative digits); form 3: empty prefix; form 4: prefix s1 s2.
    """

    form: int
    digits: Tuple[int, ...]
    M: int
    N: int

    @property
    def strict(self) -> bool:
        if self.form in (1, 4):
            return self.M <= 0
        if self.form == 2:
            return self.M >= 0
        return True

    def prefix(self) -> BraidWord:
        if self.form in (1, 2):
            return cf_braid(self.digits)
        if self.form == 4:
            return BraidWord((1, 2))
        return BraidWord(())

    def to_word(self) -> BraidWord:
        tail = power(1, self.M).letters + (OMEGA.letters * self.N if self.N >= 0 else OMEGA.inverse().letters * -self.N)
        return BraidWord(self.prefix().letters + tail)

    def p1_shift(self) -> int:
        """beta P1 = prefix P1 [shift], using s1^M omega^N P1 = P1[-2N - M]."""
        return -2 * self.N - self.M


def _inv_z(m):
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def continued_normal_form(w: BraidWord) -> NormalForm:
    B = word_matrix_z(w)
    r, s = B[0][0], B[1][0]
    if s == 0:
        form, digits, prefix = 3, (), BraidWord(())
    elif r == 0:
        form, digits, prefix = 4, (), BraidWord((1, 2))
    else:
        x = Rational(r, s)
        digits = to_even_cf(x)
        form = 1 if x.r > 0 else 2
        prefix = cf_braid(digits)
    C = _mul_z(_inv_z(word_matrix_z(prefix)), B)
    # C = +-[[1, -M], [0, 1]]
    (c00, c01), (c10, c11) = C
    if c10 != 0 or abs(c00) != 1 or c11 != c00:
        raise AssertionError(f"normal form failed for {w}: residual {C}")
    M = -c01 * c00
    rest = w.exponent_sum() - prefix.exponent_sum() - M
    if rest % 6:
        raise AssertionError(f"exponent sum of {w} is not compatible with its normal form")
    nf = NormalForm(form, tuple(digits), M, rest // 6)
    return nf


def strictify(nf: NormalForm) -> Tuple[NormalForm, int]:
    """Drop a non-strict s1 power; return the strict form and the shift n
    with (old braid) P1 = (new braid) P1 [n]."""
    if nf.strict:
        return nf, 0
    return NormalForm(nf.form, nf.digits, 0, nf.N), -nf.M
