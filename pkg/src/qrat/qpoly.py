"""Integer Laurent polynomials in one variable ``q`` and their ratios.

``LaurentPoly`` is an immutable sparse map exponent -> coefficient with no
zero entries.  ``RatFunc`` is a pair of them, with ``INF`` stored as 1/0.
No polynomial gcd is ever taken; only integer content and units ``+-q^k``
are divided out.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalNumber
from typing import Dict, Iterable, Mapping, Tuple, Union


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c} if c else {})

    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # basic accessors
    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def coefficients(self) -> list[int]:
        """Dense coefficient list from the lowest to the highest degree."""
        if not self._terms:
            return []
        lo, hi = self.min_degree(), self.max_degree()
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    # ring operations
    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, int] = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted in Z[q^+-]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly._raw({e * n: c ** abs(n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def exact_div_int(self, d: int) -> "LaurentPoly":
        out = {}
        for e, c in self._terms.items():
            qv, r = divmod(c, d)
            if r:
                raise ValueError(f"{self} is not divisible by {d}")
            out[e] = qv
        return LaurentPoly._raw(out)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def unit_part(self) -> Tuple[int, int] | None:
        """Return (sign, k) if self = sign*q^k, else None."""
        if len(self._terms) != 1:
            return None
        (e, c), = self._terms.items()
        if c in (1, -1):
            return c, e
        return None

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation
    def __call__(self, q):
        return eval_real(self, q)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
QINV = LaurentPoly._raw({-1: 1})


def q_power(k: int, sign: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, sign)


def _check_q(q) -> None:
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")


def eval_real(p: LaurentPoly, q):
    """Evaluate at a positive real ``q``.

    A ``Fraction`` or ``int`` argument gives an exact ``Fraction``; a float
    gives a float.
    """
    _check_q(q)
    if isinstance(q, (int, Fraction)) or (isinstance(q, _RationalNumber) and not isinstance(q, float)):
        q = Fraction(q)
        total = Fraction(0)
        for e, c in p._terms.items():
            total += c * q ** e
        return total
    q = float(q)
    return float(sum(c * q ** e for e, c in sorted(p._terms.items())))


def equal_up_to_unit(a, b) -> bool:
    """True iff a = s*q^k*b for some sign s and integer k.

    Accepts single polynomials or equal-length sequences of them (the same
    unit must work for every component).
    """
    if isinstance(a, LaurentPoly):
        a, b = (a,), (b,)
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    unit = None
    for x, y in zip(a, b):
        if x.is_zero() or y.is_zero():
            if not (x.is_zero() and y.is_zero()):
                return False
            continue
        if len(x._terms) != len(y._terms):
            return False
        k = x.min_degree() - y.min_degree()
        cx, cy = x.coeff(x.min_degree()), y.coeff(y.min_degree())
        if cx not in (cy, -cy):
            return False
        s = 1 if cx == cy else -1
        if unit is None:
            unit = (s, k)
        elif unit != (s, k):
            return False
        if x != y.shift(k) * s:
            return False
    return True


def unit_ratio(a: LaurentPoly, b: LaurentPoly) -> Tuple[int, int] | None:
    """Return (s, k) with a = s*q^k*b, or None."""
    if a.is_zero() or b.is_zero():
        return None
    k = a.min_degree() - b.min_degree()
    ca, cb = a.coeff(a.min_degree()), b.coeff(b.min_degree())
    if ca not in (cb, -cb):
        return None
    s = 1 if ca == cb else -1
    return (s, k) if a == b.shift(k) * s else None


class RatFunc:
    """A ratio num/den of Laurent polynomials kept in canonical form.

    Canonical form divides out the integer content and a unit so that the
    denominator's lowest term sits in degree 0 with positive coefficient.
    ``INF`` is 1/0.  Equality is tested by cross multiplication, so two
    unreduced representatives of the same function compare equal.
    """

    __slots__ = ("num", "den")
    __hash__ = None  # equality is semantic, no canonical hash exists

    def __init__(self, num, den=ONE, *, canonical: bool = True):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            if num.is_zero():
                raise ZeroDivisionError("0/0 is indeterminate")
            num = ONE
        elif canonical:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den

    @property
    def is_inf(self) -> bool:
        return self.den.is_zero()

    def __add__(self, other):
        other = _as_ratfunc(other)
        if self.is_inf or other.is_inf:
            raise ZeroDivisionError("arithmetic with INF")
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_inf:
            return self
        return RatFunc(-self.num, self.den, canonical=False)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if self.is_inf or other.is_inf:
            raise ZeroDivisionError("arithmetic with INF")
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.is_inf:
            if self.is_inf:
                raise ZeroDivisionError("INF/INF")
            return RatFunc(ZERO)
        if self.is_inf:
            return INF
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __eq__(self, other):
        try:
            other = _as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def evaluate(self, q):
        d = eval_real(self.den, q)
        n = eval_real(self.num, q)
        if d == 0:
            return float("inf")
        return n / d

    def to_json(self) -> dict:
        return {"num": laurent_to_json(self.num), "den": laurent_to_json(self.den)}

    def __repr__(self):
        if self.is_inf:
            return "RatFunc(INF)"
        return f"RatFunc(({self.num})/({self.den}))"


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    g = gcd(num.content(), den.content())
    lo = den.min_degree()
    sign = 1 if den.coeff(lo) > 0 else -1
    num = num.shift(-lo)
    den = den.shift(-lo)
    if g != 1:
        num, den = num.exact_div_int(g), den.exact_div_int(g)
    if sign < 0:
        num, den = -num, -den
    return num, den


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return RatFunc(x)
    raise TypeError(f"cannot coerce {x!r} to RatFunc")


INF = RatFunc(ONE, ZERO)


# text and JSON encodings

def format_laurent(p: LaurentPoly, var: str = "q") -> str:
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.items():
        if e == 0:
            mono = str(abs(c))
        else:
            power = var if e == 1 else f"{var}^{e}"
            mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not out:
            out.append(("-" if c < 0 else "") + mono)
        else:
            out.append(("-" if c < 0 else "+") + mono)
    return "".join(out)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*q(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse strings such as ``"1+2*q+q^2-3*q^-1"``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    terms: Dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign, digits, qpart, exp = m.groups()
        if not digits and not qpart:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if not qpart else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(terms)


def laurent_to_json(p: LaurentPoly) -> dict:
    return {str(e): str(c) for e, c in p.items()}


def laurent_from_json(obj: Mapping[str, str]) -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in obj.items()})


def ratfunc_from_json(obj: Mapping) -> RatFunc:
    num = laurent_from_json(obj["num"])
    den = laurent_from_json(obj["den"])
    if den.is_zero():
        return INF
    return RatFunc(num, den)


Number = Union[int, float, Fraction]
