"""Extended rationals and their even continued fractions.

Every element of Q u {oo} has a unique expansion [a1, ..., a2n] of even
length where either a1 >= 0 and the rest are >= 1, or a1 <= 0 and the rest
are <= -1.  The empty expansion is oo and 0 is written [-1, 1].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


@dataclass(frozen=True, order=False)
class Rational:
    r: int
    s: int

    def __post_init__(self):
        r, s = int(self.r), int(self.s)
        if r == 0 and s == 0:
            raise ValueError("0/0 is not a rational")
        if s < 0:
            r, s = -r, -s
        if s == 0:
            r = 1
        g = gcd(r, s)
        object.__setattr__(self, "r", r // g)
        object.__setattr__(self, "s", s // g)

    @classmethod
    def of(cls, x) -> "Rational":
        if isinstance(x, Rational):
            return x
        if isinstance(x, str):
            return parse_rational(x)
        f = Fraction(x)
        return cls(f.numerator, f.denominator)

    @property
    def is_inf(self) -> bool:
        return self.s == 0

    def as_fraction(self) -> Fraction:
        if self.is_inf:
            raise ZeroDivisionError("oo has no Fraction value")
        return Fraction(self.r, self.s)

    def sign(self) -> int:
        """+1 for positive values and oo, 0 for zero, -1 for negatives."""
        if self.is_inf:
            return 1
        return (self.r > 0) - (self.r < 0)

    def __neg__(self):
        return self if self.is_inf else Rational(-self.r, self.s)

    def negative_reciprocal(self) -> "Rational":
        return Rational(-self.s, self.r)

    def __lt__(self, other: "Rational") -> bool:
        # oo is treated as the top of the line
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self.r * other.s < other.r * self.s

    def __le__(self, other):
        return self == other or self < other

    def __str__(self):
        return f"{self.r}/{self.s}"


INFINITY = Rational(1, 0)
ZERO_RAT = Rational(0, 1)


def parse_rational(text: str) -> Rational:
    t = text.strip()
    if t in ("oo", "inf", "infinity"):
        return INFINITY
    if "/" in t:
        r, s = t.split("/", 1)
        return Rational(int(r), int(s))
    return Rational(int(t), 1)


def format_rational(x: Rational) -> str:
    return f"{x.r}/{x.s}"


def _euclid(r: int, s: int) -> List[int]:
    digits = []
    while s:
        a, rem = divmod(r, s)
        digits.append(a)
        r, s = s, rem
    return digits


def to_even_cf(x: Rational) -> Tuple[int, ...]:
    x = Rational.of(x)
    if x.is_inf:
        return ()
    if x.r == 0:
        return (-1, 1)
    negative = x.r < 0
    digits = _euclid(abs(x.r), x.s)
    if len(digits) % 2:
        # [..., a] = [..., a - 1, 1]; the last Euclid digit is >= 2 unless it is the only one
        digits[-1] -= 1
        digits.append(1)
    if negative:
        digits = [-a for a in digits]
    return tuple(digits)


def is_even_cf(digits: Sequence[int]) -> bool:
    d = tuple(digits)
    if d == () or d == (-1, 1):
        return True
    if len(d) % 2:
        return False
    if d[0] >= 0 and all(a >= 1 for a in d[1:]):
        return True
    return d[0] <= 0 and all(a <= -1 for a in d[1:])


def evaluate_digits(digits: Sequence[int]) -> Rational:
    """Exact value of a[0] + 1/(a[1] + 1/(...)) for any finite digit list."""
    if not digits:
        return INFINITY
    num, den = 1, 0  # value of the empty tail: oo
    for a in reversed(digits):
        num, den = a * num + den, num
    return Rational(num, den)


def cf_value(digits: Sequence[int]) -> Rational:
    if not is_even_cf(digits):
        raise ValueError(f"{list(digits)} is not an even continued fraction")
    return evaluate_digits(digits)


def parse_cf(text: str) -> Tuple[int, ...]:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"continued fraction must be bracketed: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return ()
    return tuple(int(tok) for tok in body.split(","))


def format_cf(digits: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in digits) + "]"
