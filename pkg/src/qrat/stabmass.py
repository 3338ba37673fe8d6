"""q-masses of spherical objects under standard stability conditions.

Masses are computed from two ingredients: the central charges of P1 and P2
and the occ functionals of hnauto. Everything here is numeric.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .braidcore import BraidWord, cf_braid
from .contfrac import Rational, to_even_cf
from .hnauto import (P1, P2, P12, P21, SphericalObject, apply_braid, basic_object,
                     hom, object_of, occ, occ_general)
from .qpoly import q_power

TOL = 1e-9

# Which extension is semistable when P1 has the smaller phase.  With
# "p1_below", phase(P1) <= phase(P2) makes P21 semistable (type A); "p1_above"
# is the opposite convention.  The test suite pins which one is consistent.
TYPE_A_ORIENTATION = "p1_below"


def phase(z: complex) -> float:
    """Phase in (0, 1] of a nonzero z in the closed upper half plane."""
    if z == 0:
        raise ValueError("zero central charge")
    ph = cmath.phase(z) / math.pi
    if ph <= 0:
        ph += 1 if abs(z.imag) < 1e-15 and z.real < 0 else 2
    if ph > 1 + 1e-15:
        raise ValueError(f"{z} is not in the closed upper half plane")
    return min(ph, 1.0)


@dataclass(frozen=True)
class StdStabCond:
    """A standard stability condition given by the central charges of P1, P2."""
    z1: complex
    z2: complex
    orientation: str = TYPE_A_ORIENTATION

    @property
    def phi1(self) -> float:
        return phase(self.z1)

    @property
    def phi2(self) -> float:
        return phase(self.z2)

    @property
    def degenerate(self) -> bool:
        return abs(self.phi1 - self.phi2) <= 1e-12

    @property
    def type_a(self) -> bool:
        if self.degenerate:
            return True
        below = self.phi1 < self.phi2
        return below if self.orientation == "p1_below" else not below

    @property
    def type_b(self) -> bool:
        return self.degenerate or not self.type_a

    def normalized(self) -> "StdStabCond":
        """Representative of the C-action orbit with |z1| = 1 (rotation kept)."""
        s = abs(self.z1)
        return StdStabCond(self.z1 / s, self.z2 / s, self.orientation)


def _qmass(z: complex, q: float) -> float:
    return q ** phase(z) * abs(z)


@dataclass(frozen=True)
class BasicMasses:
    m1: float
    m2: float
    m12: float
    m21: float


def basic_masses(tau: StdStabCond, q: float) -> BasicMasses:
    if q <= 0:
        raise ValueError("q must be positive")
    m1, m2 = _qmass(tau.z1, q), _qmass(tau.z2, q)
    split = m1 + m2
    both = _qmass(tau.z1 + tau.z2, q)
    return BasicMasses(m1, m2,
                       both if tau.type_b else split,
                       both if tau.type_a else split)


@dataclass(frozen=True)
class GromovCoords:
    a: float
    b: float
    c: float


def gromov(m1: float, m2: float, m21: float, q: float) -> GromovCoords:
    """Solve m1 = b + c, m2 = a + q c, m21 = a + b."""
    c = (m1 + m2 - m21) / (1 + q)
    a = m21 - m1 + c
    b = m1 - c
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < -1e-12 * max(1.0, m1, m2, m21):
            raise ValueError(f"triangle inequality violated: Gromov coordinate {name} = {v}")
    return GromovCoords(max(a, 0.0), max(b, 0.0), max(c, 0.0))


def triangle_margins(masses: BasicMasses, q: float, kind: str = "A") -> Tuple[float, float, float]:
    """Slack in the three q-triangle inequalities (type B swaps indices 1 and 2)."""
    if kind == "A":
        m1, m2, mx = masses.m1, masses.m2, masses.m21
    else:
        m1, m2, mx = masses.m2, masses.m1, masses.m12
    return (m1 + m2 - mx, q ** -1 * m2 + mx - m1, mx + q * m1 - m2)


def gromov_of(tau: StdStabCond, q: float, kind: Optional[str] = None) -> Tuple[str, GromovCoords]:
    """Decomposition type and coordinates; ``kind`` forces A or B (degenerate tau allows both)."""
    bm = basic_masses(tau, q)
    if kind is None:
        kind = "A" if tau.type_a else "B"
    if (kind == "A" and not tau.type_a) or (kind == "B" and not tau.type_b):
        raise ValueError(f"tau is not of type {kind}")
    if kind == "A":
        return "A", gromov(bm.m1, bm.m2, bm.m21, q)
    return "B", gromov(bm.m2, bm.m1, bm.m12, q)


def _object_for(label) -> SphericalObject:
    """A spherical object with the given q=1 label (P1 for oo)."""
    if isinstance(label, SphericalObject):
        return label
    if isinstance(label, str) and label in (P1, P2, P12, P21):
        return basic_object(label)
    x = Rational.of(label)
    if x.is_inf:
        return basic_object(P1)
    if x.r == 0:
        return basic_object(P2)
    return object_of(cf_braid(to_even_cf(x)))


def _occ_functionals(kind: str):
    """The three occ functionals paired with Gromov coordinates (a, b, c)."""
    if kind == "A":
        p21 = basic_object(P21)
        return (lambda x: occ(P1, x), lambda x: occ(P2, x), lambda x: occ_general(p21, x))
    p12 = basic_object(P12)
    return (lambda x: occ(P2, x), lambda x: occ(P1, x),
            lambda x: q_power(1) * occ_general(p12, x))


def mass_linear(tau: StdStabCond, q: float, x: SphericalObject,
                twist: BraidWord = BraidWord(()), kind: Optional[str] = None) -> float:
    """m(twist . tau)(X) = m(tau)(twist^-1 X) via the q-linearity decomposition."""
    kind, g = gromov_of(tau, q, kind)
    if len(twist):
        x = apply_braid(x, twist.inverse())
    fa, fb, fc = _occ_functionals(kind)
    return g.a * fa(x)(q) + g.b * fb(x)(q) + g.c * fc(x)(q)


def mass_hn(tau: StdStabCond, q: float, x: SphericalObject) -> float:
    """Direct HN-factor summation; needs tau degenerate so the automaton applies."""
    if not tau.degenerate:
        raise ValueError("HN vectors from the automaton describe a degenerate tau only")
    bm = basic_masses(tau, q)
    weights = {P1: bm.m1, P2: bm.m2, P12: bm.m12, P21: bm.m21}
    return sum(weights[name] * coeff(q) for name, coeff in zip((P1, P2, P12, P21), x.vector))


def mass_vector(tau: StdStabCond, q: float, probes: Sequence, twist: BraidWord = BraidWord(())) -> Dict[str, float]:
    out = {}
    for p in probes:
        out[str(p)] = mass_linear(tau, q, _object_for(p), twist)
    return out


DEFAULT_PROBES = ("0", "1", "-1", "2", "-2", "1/2", "-1/2", "1/3", "2/3", "3/2", "5/2", "oo", P21)


@dataclass
class DegeneracyReport:
    kind: str
    margins: Tuple[float, float, float]
    strict: bool
    has_equality: bool


def degeneracy_check(tau: StdStabCond, q: float) -> DegeneracyReport:
    bm = basic_masses(tau, q)
    kind = "A" if tau.type_a else "B"
    margins = triangle_margins(bm, q, kind)
    strict = all(m > TOL for m in margins)
    equal = any(abs(m) <= TOL for m in margins)
    if tau.degenerate:
        kind = "AB"
    return DegeneracyReport(kind, margins, strict, equal)


def random_std(rng: np.random.Generator, degenerate: bool = False,
               orientation: str = TYPE_A_ORIENTATION) -> StdStabCond:
    """Random standard stability condition, |z1| = 1 after normalization."""
    phi1 = rng.uniform(0.02, 1.0)
    phi2 = phi1 if degenerate else rng.uniform(0.02, 1.0)
    r2 = math.exp(rng.uniform(-2, 2))
    z1 = cmath.exp(1j * math.pi * phi1)
    z2 = r2 * cmath.exp(1j * math.pi * phi2)
    return StdStabCond(z1, z2, orientation)


def sss_T(q: float, c: float, t: float) -> float:
    """q^phase(1 + w_t) |1 + w_t| with w_t of phase t and length c q^-t."""
    r = c * q ** (-t)
    length = math.sqrt(max(1 + r * r + 2 * r * math.cos(math.pi * t), 0.0))
    if length < 1e-15:
        return 0.0
    cosang = (1 + r * math.cos(math.pi * t)) / length
    ang = math.acos(max(-1.0, min(1.0, cosang))) / math.pi
    return q ** ang * length


def projective_distance(u: Sequence[float], v: Sequence[float]) -> float:
    """max over index pairs of |log cross-ratio|; inf when zero patterns differ."""
    u, v = np.asarray(u, float), np.asarray(v, float)
    zu, zv = np.abs(u) < 1e-300, np.abs(v) < 1e-300
    if np.any(zu != zv):
        return math.inf
    u, v = u[~zu], v[~zv]
    ratios = u / v
    if np.any(ratios <= 0) and not np.all(ratios < 0):
        return math.inf
    logs = np.log(np.abs(ratios))
    return float(logs.max() - logs.min()) if logs.size else 0.0


@dataclass
class LimitReport:
    probes: List[str]
    target: List[float]
    distances: List[float]
    last_vector: List[float]


def boundary_limit(w: BraidWord, q: float, probes: Sequence, m_max: int) -> LimitReport:
    """Projectivized beta sigma1^-m occ(P2) against the hom functional of beta P1."""
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    objs = [_object_for(p) for p in probes]
    pulled = [apply_braid(y, w.inverse()) if len(w) else y for y in objs]
    target = [float(hom(P1, y)(q)) for y in pulled]
    distances = []
    vec: List[float] = []
    sigma1 = BraidWord((1,))
    current = pulled
    for m in range(1, m_max + 1):
        current = [apply_braid(y, sigma1) for y in current]
        qm = (q ** -m - 1) / (q ** -1 - 1)
        vec = [float(occ(P2, y)(q)) * q ** -1 / qm for y in current]
        distances.append(projective_distance(vec, target))
    return LimitReport([str(p) for p in probes], target, distances, vec)
