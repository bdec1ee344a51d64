"""Eulerian orientations and Eulerian partial orientations of small maps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from ..ring import PolyGamma
from ..series import GAMMA, QQ, TruncSeries
from .maps import RootedMap, enumerate_maps, enumerate_quartic

FORWARD, BACKWARD, UNDIRECTED = 1, -1, 0


@dataclass(frozen=True)
class EulerOrientation:
    """Every edge directed; ``tails`` holds the dart at the tail of each edge."""

    base: RootedMap
    tails: frozenset

    def is_valid(self) -> bool:
        m = self.base
        if self.base.root not in self.tails:
            return False
        for d, e in m.edges():
            if (d in self.tails) == (e in self.tails):
                return False
        return all(_balance(v, self.tails) == 0 for v in m.vertices())

    def alternating_vertices(self) -> int:
        return sum(1 for v in self.base.vertices() if is_alternating(v, self.tails))


@dataclass(frozen=True)
class PartialOrientation:
    """``state[k]`` orients the k-th edge of ``base.edges()``: +1 from its first
    dart, -1 towards it, 0 undirected."""

    base: RootedMap
    state: tuple[int, ...]

    def tails(self) -> frozenset:
        out = set()
        for (d, e), s in zip(self.base.edges(), self.state):
            if s == FORWARD:
                out.add(d)
            elif s == BACKWARD:
                out.add(e)
        return frozenset(out)

    def heads(self) -> frozenset:
        out = set()
        for (d, e), s in zip(self.base.edges(), self.state):
            if s == FORWARD:
                out.add(e)
            elif s == BACKWARD:
                out.add(d)
        return frozenset(out)

    def is_valid(self) -> bool:
        tails, heads = self.tails(), self.heads()
        for v in self.base.vertices():
            if sum(d in tails for d in v) != sum(d in heads for d in v):
                return False
        return True

    def undirected(self) -> int:
        return self.state.count(UNDIRECTED)


def _balance(vertex: Iterable[int], tails: frozenset) -> int:
    vertex = tuple(vertex)
    out = sum(1 for d in vertex if d in tails)
    return 2 * out - len(vertex)


def is_alternating(vertex: tuple[int, ...], tails: frozenset) -> bool:
    """A degree-4 vertex whose in- and out-edges alternate in cyclic order."""
    if len(vertex) != 4:
        return False
    flags = [d in tails for d in vertex]
    return all(flags[k] != flags[(k + 1) % 4] for k in range(4))


def euler_orientations(m: RootedMap, root_canonical: bool = True) -> Iterator[EulerOrientation]:
    """All Eulerian orientations; with ``root_canonical`` the root dart is a tail."""
    edges = m.edges()
    vertex_of = m.vertex_of()
    n_vertices = len(m.vertices())
    for choice in product((0, 1), repeat=len(edges)):
        tails = frozenset(e[c] for e, c in zip(edges, choice))
        if root_canonical and m.root not in tails:
            continue
        bal = [0] * n_vertices
        for d in range(m.n_darts):
            bal[vertex_of[d]] += 1 if d in tails else -1
        if any(bal):
            continue
        yield EulerOrientation(m, tails)


def partial_orientations(m: RootedMap) -> Iterator[PartialOrientation]:
    """All Eulerian partial orientations (root edge unconstrained)."""
    edges = m.edges()
    vertex_of = m.vertex_of()
    n_vertices = len(m.vertices())
    for state in product((FORWARD, BACKWARD, UNDIRECTED), repeat=len(edges)):
        bal = [0] * n_vertices
        for (d, e), s in zip(edges, state):
            if s:
                tail, head = (d, e) if s == FORWARD else (e, d)
                bal[vertex_of[tail]] += 1
                bal[vertex_of[head]] -= 1
        if not any(bal):
            yield PartialOrientation(m, state)


def count_euler_orientations(maps: Iterable[RootedMap], weight_alternating: bool = True) -> PolyGamma:
    """sum over maps and canonically rooted Eulerian orientations of gamma^(#alternating)."""
    g = PolyGamma.gen()
    total = PolyGamma()
    for m in maps:
        for eo in euler_orientations(m):
            total = total + (g ** eo.alternating_vertices() if weight_alternating else 1)
    return total


def count_partial_orientations(maps: Iterable[RootedMap]) -> PolyGamma:
    """sum over maps and Eulerian partial orientations of gamma^(#undirected edges)."""
    g = PolyGamma.gen()
    total = PolyGamma()
    for m in maps:
        for po in partial_orientations(m):
            total = total + g ** po.undirected()
    return total


def quartic_eo_counts(max_vertices: int) -> list[PolyGamma]:
    """Weighted Eulerian-orientation counts of quartic maps, by vertices 1..max_vertices."""
    return [count_euler_orientations(enumerate_quartic(n)) for n in range(1, max_vertices + 1)]


def partial_counts(max_edges: int) -> list[PolyGamma]:
    """Weighted partial-orientation counts of general maps, by edges 1..max_edges."""
    return [count_partial_orientations(enumerate_maps(n)) for n in range(1, max_edges + 1)]


def general_eo_counts(max_edges: int) -> list[int]:
    """Canonically rooted Eulerian orientations of general maps, by edges (the series G)."""
    return [sum(1 for m in enumerate_maps(n) for _ in euler_orientations(m)) for n in range(1, max_edges + 1)]


def series_from_counts(counts: list, start: int = 1, order: int | None = None) -> TruncSeries:
    """sum_k counts[k] t^(k + start); polynomial counts give a series over the gamma ring."""
    if order is None:
        order = len(counts) + start
    if not counts:
        return TruncSeries.zero(order)
    ring = GAMMA if any(isinstance(c, PolyGamma) for c in counts) else QQ
    coeffs = [0] * start + list(counts)
    if ring is GAMMA:
        coeffs = [PolyGamma.coerce(c) for c in coeffs]
    return TruncSeries(coeffs, order, ring)
