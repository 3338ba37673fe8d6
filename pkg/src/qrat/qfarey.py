"""The q-deformed Farey tessellation: exact generation, SVG rendering and the
two triangle sequences accumulating at a rational."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import __version__
from .braidcore import BraidWord, cf_braid, word_matrix_q
from .contfrac import Rational, to_even_cf
from .qpoly import ONE, ZERO, LaurentPoly, RatFunc, q_power
from .qrationals import deform_value

Vertex = Tuple[LaurentPoly, LaurentPoly]


@dataclass(frozen=True)
class QFareyTriangle:
    left: Vertex
    middle: Vertex
    right: Vertex
    top_label_exp: int
    depth: int
    # classical positions (q = 1) of the three vertices
    positions: Tuple[Rational, Rational, Rational] = field(compare=False, default=None)

    left_label_exp = 0

    @property
    def right_label_exp(self) -> int:
        return self.top_label_exp + 1

    def vertices(self) -> Tuple[RatFunc, RatFunc, RatFunc]:
        return tuple(RatFunc(n, d) for n, d in (self.left, self.middle, self.right))


@dataclass
class Tessellation:
    triangles: List[QFareyTriangle]
    half: str
    depth: int

    def vertex_pairs(self) -> List[Tuple[Rational, RatFunc]]:
        """(classical position, q-vertex) for every vertex, deduplicated."""
        seen: Dict[Rational, RatFunc] = {}
        for t in self.triangles:
            for pos, v in zip(t.positions, t.vertices()):
                seen.setdefault(pos, v)
        return sorted(seen.items(), key=lambda kv: (kv[0].is_inf, kv[0].as_fraction() if not kv[0].is_inf else 0))


ROOTS = {
    "positive": ((ZERO, ONE), (ONE, ZERO), (0, 1), (1, 0)),
    "negative": ((-ONE, ZERO), (ZERO, q_power(1)), (-1, 0), (0, 1)),
}


def _mediant(left: Vertex, right: Vertex, k: int) -> Vertex:
    w = q_power(k)
    return left[0] + w * right[0], left[1] + w * right[1]


def generate(half: str = "positive", depth: int = 1) -> Tessellation:
    """Breadth-first subdivision from the root edge with label q^-1."""
    if half not in ROOTS:
        raise ValueError(f"half must be positive or negative, got {half!r}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    left, right, lpos, rpos = ROOTS[half]
    triangles: List[QFareyTriangle] = []
    queue = deque([(left, right, lpos, rpos, -1, 1)])
    while queue:
        lv, rv, lp, rp, label, d = queue.popleft()
        k = label + 1
        mid = _mediant(lv, rv, k)
        # classical mediant on unnormalized pairs, so -1/0 stays on the negative side
        mp = (lp[0] + rp[0], lp[1] + rp[1])
        positions = tuple(Rational(*v) for v in (lp, mp, rp))
        triangles.append(QFareyTriangle(lv, mid, rv, label, d, positions))
        if d < depth:
            queue.append((lv, mid, lp, mp, 0, d + 1))
            queue.append((mid, rv, mp, rp, k, d + 1))
    return Tessellation(triangles, half, depth)


def _value(v: Vertex, q: float) -> float:
    num, den = v[0](q), v[1](q)
    if den == 0:
        return math.inf
    return num / den


def svg_arcs(t: Tessellation, q: float, scale: float = 5.0) -> List[Tuple[float, float, float]]:
    """Unique edges as (x1, x2, line width), x scaled; inf marks a vertical ray."""
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    arcs: Dict[Tuple[float, float], float] = {}

    def add(a, b, d):
        x1, x2 = sorted((scale * _value(a, q), scale * _value(b, q)))
        width = max(0.4 - 0.1 * (d - 1), 0.05)
        key = (x1, x2)
        arcs[key] = max(arcs.get(key, 0.0), width)

    for tri in t.triangles:
        add(tri.left, tri.right, tri.depth)
        add(tri.left, tri.middle, tri.depth + 1)
        add(tri.middle, tri.right, tri.depth + 1)
    return [(x1, x2, w) for (x1, x2), w in sorted(arcs.items())]


def render_svg(t: Tessellation, q: float, path: str, scale: float = 5.0) -> None:
    arcs = svg_arcs(t, q, scale)
    finite = [x for a in arcs for x in a[:2] if math.isfinite(x)]
    lo, hi = min(finite), max(finite)
    span = max(hi - lo, 1.0)
    top = span / 2 + 1
    xs = lambda x: x - lo + 0.5
    lines = []
    for x1, x2, w in arcs:
        if math.isinf(x1) or math.isinf(x2):
            x = x1 if math.isfinite(x1) else x2
            lines.append(f'<path d="M {xs(x):.10g} {top:.10g} V 0" stroke-width="{w:.3g}"/>')
            continue
        r = (x2 - x1) / 2
        lines.append(f'<path d="M {xs(x1):.10g} {top:.10g} A {r:.10g} {r:.10g} 0 0 1 '
                     f'{xs(x2):.10g} {top:.10g}" stroke-width="{w:.3g}"/>')
    width = span + 1
    body = "\n".join(lines)
    svg = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.10g} {top + 0.5:.10g}">\n'
           f'<!-- qrat {__version__} -->\n'
           f'<g fill="none" stroke="black">\n{body}\n'
           f'<path d="M 0 {top:.10g} H {width:.10g}" stroke-width="0.4"/>\n</g>\n</svg>\n')
    with open(path, "w") as fh:
        fh.write(svg)


@dataclass
class TriangleSequences:
    flat_target: float
    sharp_target: float
    t_vertices: List[Tuple[float, float, float]]
    t_prime_vertices: List[Tuple[float, float, float]]

    def t_prime_diameters(self) -> List[float]:
        return [max(v) - min(v) for v in self.t_prime_vertices]

    def t_endpoint_errors(self) -> List[float]:
        return [max(abs(min(v) - self.flat_target), abs(max(v) - self.sharp_target))
                for v in self.t_vertices]


def _triangle(m: np.ndarray) -> Tuple[float, float, float]:
    out = []
    for col in ((0.0, 1.0), (1.0, 1.0), (1.0, 0.0)):
        num, den = m @ np.array(col)
        out.append(math.inf if den == 0 else num / den)
    return tuple(sorted(out))


def _numeric(w: BraidWord, q: float) -> np.ndarray:
    return np.array(word_matrix_q(w).at(q), dtype=float).reshape(2, 2)


def triangle_sequences(x, q: float, n_max: int) -> TriangleSequences:
    """T_n = b sigma1^-n T_A and T'_n = b' sigma2^n T_A with b' = b sigma2^-1 sigma1^-1."""
    x = Rational.of(x)
    if x.is_inf or x.r <= 0:
        raise ValueError(f"triangle sequences need 0 < x < oo, got {x}")
    beta = cf_braid(to_even_cf(x))
    seqs = []
    for start, step in ((beta, BraidWord((-1,))), (beta * BraidWord((-2, -1)), BraidWord((2,)))):
        m = _numeric(start, q)
        s = _numeric(step, q)
        tris = []
        for _ in range(n_max + 1):
            tris.append(_triangle(m))
            m = m @ s
            m /= np.abs(m).max()
        seqs.append(tris)
    return TriangleSequences(float(deform_value(x, q, "flat")), float(deform_value(x, q, "sharp")),
                             seqs[0], seqs[1])
