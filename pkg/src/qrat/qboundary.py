"""Limits of q-rationals, q-irrationals, the total order on boundary values
and the greedy classification of a real number as a boundary point."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .contfrac import INFINITY, Rational, evaluate_digits, to_even_cf
from .qrationals import deform_value, digits_value, symmetry_map

DigitSource = Union[Sequence[int], Iterable[int], Callable[[int], int]]

FLOAT_TOL = 1e-12
MAX_DIGIT = 10 ** 6


def _check_q(q):
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    return q if isinstance(q, float) else Fraction(q)


def take_digits(digits: DigitSource, depth: int) -> List[int]:
    if callable(digits):
        return [digits(i) for i in range(depth)]
    out = list(itertools.islice(iter(digits), depth))
    if len(out) < depth:
        raise ValueError(f"digit stream ended after {len(out)} digits, need {depth}")
    return out


def error_bound(digits: Sequence[int], q) -> float:
    """q^(a1 + a3 + ... - 1) over the odd positions of ``digits``."""
    return q ** (sum(digits[0::2]) - 1)


def q_irrational(q, digits: DigitSource, depth: int) -> Tuple[float, float]:
    """[a1..a_depth]_q with the convergent error bound."""
    q = _check_q(q)
    if depth < 2:
        raise ValueError("depth must be at least 2")
    prefix = take_digits(digits, depth)
    if any(a <= 0 for a in prefix[1:]) or prefix[0] < 0:
        raise ValueError("digits must form a positive continued fraction")
    return digits_value(prefix, q, "sharp"), error_bound(prefix, q)


@dataclass
class TailStep:
    m: int
    value: float
    error: float
    bound: float


@dataclass
class TailReport:
    target: float
    steps: List[TailStep]

    @property
    def final_error(self) -> float:
        return self.steps[-1].error

    @property
    def bound_dominates(self) -> bool:
        return all(s.error <= s.bound for s in self.steps)

    def converged(self, tol: float) -> bool:
        return self.final_error < tol


def tail_digits(base_cf: Sequence[int], side: str, m: int) -> List[int]:
    """Digits approaching the base from the left (flat) or the right (sharp)."""
    base = list(base_cf)
    if side in ("left", "flat"):
        return base + [m]
    if side not in ("right", "sharp"):
        raise ValueError(f"unknown side {side!r}")
    if not base:
        raise ValueError("oo has no finite right tail")
    if base[-1] > 1:
        return base[:-1] + [base[-1] - 1, 1, m]
    return base[:-2] + [base[-2] + 1, m]


def tail_limit_check(base_cf: Sequence[int], side: str, q, m_max: int) -> TailReport:
    q = _check_q(float(q))
    target_side = "flat" if side in ("left", "flat") else "sharp"
    target = float(digits_value(list(base_cf), q, target_side))
    steps = []
    for m in range(1, m_max + 1):
        digits = tail_digits(base_cf, side, m)
        value = float(digits_value(digits, q, "sharp"))
        steps.append(TailStep(m, value, abs(value - target), error_bound(digits, q)))
    return TailReport(target, steps)


def order_check(t, t2, q) -> bool:
    """[t]flat <= [t]sharp < [t2]flat <= [t2]sharp, strict for rationals."""
    t, t2 = Rational.of(t), Rational.of(t2)
    if not t < t2:
        raise ValueError(f"order_check needs t < t2, got {t} and {t2}")
    vals = [deform_value(t, q, "flat"), deform_value(t, q, "sharp"),
            deform_value(t2, q, "flat"), deform_value(t2, q, "sharp")]
    return all(a < b for a, b in zip(vals, vals[1:]))


@dataclass
class BoundaryClass:
    kind: str
    rational: Optional[Rational] = None
    t: Optional[float] = None
    cf_prefix: Optional[Tuple[int, ...]] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.rational is not None:
            out["rational"] = str(self.rational)
        if self.t is not None:
            out["t"] = float(self.t)
        if self.cf_prefix is not None:
            out["cf_prefix"] = list(self.cf_prefix)
        return out


class _Comparator:
    """Exact comparisons for Fraction input, absolute tolerance for floats."""

    def __init__(self, exact: bool):
        self.tol = 0 if exact else FLOAT_TOL

    def inside(self, p, lo, hi) -> bool:
        return lo - self.tol <= p <= hi + self.tol

    def position(self, p, lo, hi):
        if abs(p - lo) <= self.tol:
            return 0
        if abs(p - hi) <= self.tol:
            return 1
        return (p - lo) / (hi - lo)


def _interval(digits: Sequence[int], q):
    return digits_value(digits, q, "flat"), digits_value(digits, q, "sharp")


def _search_level(p, q, prefix: List[int], start: int, increasing: bool, cmp: _Comparator):
    """Scan candidates prefix+[n]; return ("hit", n) or ("gap", n)."""
    n = start
    while n < MAX_DIGIT:
        lo, hi = _interval(prefix + [n], q)
        if cmp.inside(p, lo, hi):
            return "hit", n
        nlo, nhi = _interval(prefix + [n + 1], q)
        if increasing and p < nlo - cmp.tol:
            return "gap", n
        if not increasing and p > nhi + cmp.tol:
            return "gap", n
        n += 1
    raise ArithmeticError(f"digit search exceeded {MAX_DIGIT}; p is too close to a limit point")


def _classify_positive(p, q, max_depth: int, cmp: _Comparator) -> BoundaryClass:
    inf_lo = 1 / (1 - q)
    if p >= inf_lo - cmp.tol:
        t = 0 if abs(p - inf_lo) <= cmp.tol else 1 - inf_lo / p
        return BoundaryClass("interval-point", INFINITY, t)
    prefix: List[int] = []
    for level in range(max_depth):
        start = 0 if level == 0 else 1
        found, n = _search_level(p, q, prefix, start, level % 2 == 0, cmp)
        prefix.append(n)
        if found == "hit":
            lo, hi = _interval(prefix, q)
            return BoundaryClass("interval-point", evaluate_digits(prefix), cmp.position(p, lo, hi))
    return BoundaryClass("irrational", cf_prefix=tuple(prefix))


def negated_reciprocal_cf(digits: Sequence[int]) -> Tuple[int, ...]:
    """Regular CF digits of -1/u from those of u > 0 (prefix-wise)."""
    a = list(digits)
    if a[0] == 0:
        # u < 1: -1/u = -[a2; a3, ...]
        rest = a[1:]
        if len(rest) > 1 and rest[1] == 1:
            return tuple([-rest[0] - 1, rest[2] + 1] + rest[3:]) if len(rest) > 2 else (-rest[0] - 1, 2)
        return tuple([-rest[0] - 1, 1, rest[1] - 1] + rest[2:]) if len(rest) > 1 else (-rest[0] - 1, 1)
    if a[0] == 1:
        if len(a) < 2:
            return (-1, 1)
        return tuple([-1, 1 + a[1]] + a[2:])
    return tuple([-1, 1, a[0] - 1] + a[1:])


def classify_boundary_point(p, q, max_depth: int = 64) -> BoundaryClass:
    q = _check_q(q)
    exact = isinstance(p, (int, Fraction)) and isinstance(q, Fraction)
    if exact:
        p = Fraction(p)
    cmp = _Comparator(exact)
    if p == float("inf"):
        return BoundaryClass("interval-point", INFINITY, 1)
    if abs(p) <= cmp.tol:
        return BoundaryClass("interval-point", Rational(0, 1), 1)
    if p > 0:
        return _classify_positive(p, q, max_depth, cmp)
    image = symmetry_map(p, q)
    found = _classify_positive(image, q, max_depth, cmp)
    if found.kind == "irrational":
        return BoundaryClass("irrational", cf_prefix=negated_reciprocal_cf(found.cf_prefix))
    rational = found.rational.negative_reciprocal()
    lo, hi = deform_value(rational, q, "flat"), deform_value(rational, q, "sharp")
    return BoundaryClass("interval-point", rational, cmp.position(p, lo, hi))
