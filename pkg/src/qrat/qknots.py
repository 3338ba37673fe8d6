"""Path quivers attached to rationals in (1, oo), closure counting, and the
absolute Jones polynomial of two-bridge knots.

A closure is a vertex set with no edge leaving it. Arrows are oriented so that
closure counts reproduce the numerators and denominators of the deformations
(the drawn figures use the opposite arrow convention).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .contfrac import Rational, to_even_cf
from .qpoly import LaurentPoly
from .qrationals import deform

FAMILIES = ("gsharp", "gsharp_hat", "gflat", "gflat_hat", "H")
MAX_BRUTE_VERTICES = 22


@dataclass(frozen=True)
class Quiver:
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside {self.n} vertices")

    def reversed(self) -> "Quiver":
        return Quiver(self.n, tuple((v, u) for u, v in self.edges))


def _as_rational(x) -> Rational:
    if isinstance(x, Rational):
        return x
    f = Fraction(x)
    return Rational(f.numerator, f.denominator)


def _check_domain(x: Rational) -> Tuple[int, ...]:
    if x.is_inf or x.as_fraction() <= 1:
        raise ValueError(f"quivers are defined for rationals in (1, oo), got {x}")
    return to_even_cf(x)


def _block_directions(digits: Sequence[int], first_right: bool) -> List[bool]:
    """Per-edge direction along the path, True for i -> i+1.

    Block sizes are a1-1, a2, ..., a_{2n-1}, a_{2n}-1 with alternating direction.
    """
    sizes = list(digits)
    sizes[0] -= 1
    sizes[-1] -= 1
    dirs: List[bool] = []
    right = first_right
    for size in sizes:
        dirs.extend([right] * size)
        right = not right
    return dirs


def _path_edges(dirs: Sequence[bool], offset: int = 0) -> List[Tuple[int, int]]:
    edges = []
    for i, right in enumerate(dirs):
        a, b = offset + i, offset + i + 1
        edges.append((a, b) if right else (b, a))
    return edges


def build_quiver(x, family: str) -> Quiver:
    x = _as_rational(x)
    digits = _check_domain(x)
    if family not in FAMILIES:
        raise ValueError(f"unknown quiver family {family!r}")
    a1 = digits[0]
    if family == "H":
        # 2-cycle vertex at index 0, path starts at 1, arrows reversed
        dirs = _block_directions(digits, first_right=True)
        path = len(dirs) + 1
        edges = [(0, 1), (1, 0)] + _path_edges(dirs, offset=1)
        return Quiver(path + 1, tuple(edges))
    dirs = _block_directions(digits, first_right=False)
    path = len(dirs) + 1
    edges = _path_edges(dirs)
    n = path
    if family in ("gflat", "gflat_hat"):
        edges += [(path - 1, path), (path, path - 1)]
        n += 1
    if family.endswith("_hat"):
        # when no path vertex survives, the 2-cycle partner goes too
        keep = range(a1, n) if a1 < path else range(0)
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in edges if u in index and v in index]
        n = len(index)
    return Quiver(n, tuple(edges))


def count_closures_bruteforce(g: Quiver) -> Tuple[int, ...]:
    if g.n > MAX_BRUTE_VERTICES:
        raise ValueError(f"brute force limited to {MAX_BRUTE_VERTICES} vertices, got {g.n}")
    total = np.zeros(g.n + 1, dtype=np.int64)
    chunk = 1 << 18
    for start in range(0, 1 << g.n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << g.n), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for u, v in g.edges:
            ok &= ~(((masks >> u) & 1).astype(bool) & ~((masks >> v) & 1).astype(bool))
        kept = masks[ok]
        sizes = np.zeros(kept.shape, dtype=np.int64)
        for i in range(g.n):
            sizes += (kept >> i) & 1
        total += np.bincount(sizes, minlength=g.n + 1)
    return tuple(int(c) for c in total)


def _path_shape(g: Quiver):
    """Fuse doubled edges and return (weights, directions) along a path, or None."""
    edge_set = set(g.edges)
    parent = list(range(g.n))
    for u, v in g.edges:
        if (v, u) in edge_set:
            parent[max(u, v)] = parent[min(u, v)] = min(parent[u], parent[v])
    unit = {}
    for v in range(g.n):
        unit.setdefault(parent[v], []).append(v)
    if any(len(vs) > 2 for vs in unit.values()):
        return None
    links = {}
    for u, v in g.edges:
        a, b = parent[u], parent[v]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in links:
            return None
        links[key] = (a, b)
    nbrs = {k: [] for k in unit}
    for a, b in links:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if len(unit) > 1 and (any(len(v) > 2 for v in nbrs.values())
                          or len(links) != len(unit) - 1):
        return None
    ends = [k for k, v in nbrs.items() if len(v) <= 1]
    order = [ends[0]] if ends else []
    while len(order) < len(unit):
        nxt = [w for w in nbrs[order[-1]] if w not in order]
        if not nxt:
            return None
        order.append(nxt[0])
    weights = [len(unit[k]) for k in order]
    dirs = [links[(min(a, b), max(a, b))] == (a, b) for a, b in zip(order, order[1:])]
    return weights, dirs


def count_closures_dp(g: Quiver) -> Tuple[int, ...]:
    """Closure counts of a path quiver, doubled edges fused into one unit."""
    shape = _path_shape(g)
    if shape is None:
        return count_closures_bruteforce(g)
    weights, dirs = shape
    if not weights:
        return (1,)
    # out_poly[k] / in_poly[k]: closures of the prefix of size k with last unit out / in
    out_poly = [1]
    in_poly = [0] * weights[0] + [1]
    for w, right in zip(weights[1:], dirs):
        prev_out, prev_in = out_poly, in_poly
        # edge prev -> cur (right): prev in forces cur in; edge cur -> prev: cur in forces prev in
        if right:
            new_out = list(prev_out)
            into = _add(prev_out, prev_in)
        else:
            new_out = _add(prev_out, prev_in)
            into = list(prev_in)
        out_poly = new_out
        in_poly = [0] * w + into
    total = _add(out_poly, in_poly)
    total += [0] * (g.n + 1 - len(total))
    return tuple(total)


def _add(a: List[int], b: List[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def counts_to_poly(counts: Sequence[int]) -> LaurentPoly:
    return LaurentPoly({i: c for i, c in enumerate(counts) if c})


def jones_abs(x, route: str = "both") -> LaurentPoly:
    """|V_{r/s}(q)|: closures of H, and the numerator of the left deformation."""
    x = _as_rational(x)
    _check_domain(x)
    if route not in ("closures", "flat", "both"):
        raise ValueError(f"unknown route {route!r}")
    by_closures = by_flat = None
    if route in ("closures", "both"):
        by_closures = counts_to_poly(count_closures_dp(build_quiver(x, "H")))
    if route in ("flat", "both"):
        by_flat = deform(x, "flat")[0]
    if by_closures is not None and by_flat is not None and by_closures != by_flat:
        raise AssertionError(f"Jones routes disagree for {x}: {by_closures} vs {by_flat}")
    return by_closures if by_closures is not None else by_flat
