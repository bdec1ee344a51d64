"""Rooted maps as permutation pairs, with an orderly exhaustive enumerator.

A map on darts 0..2n-1 is a pair (sigma, alpha): sigma rotates darts
counterclockwise around their vertex, alpha swaps the two darts of an edge.
Faces are the cycles of phi = sigma o alpha.

Canonical form: label the root 0, then scan darts in label order, giving the
next free label first to alpha(d) and then to sigma(d) when they are still
unlabelled. Rooted maps have no nontrivial root-preserving automorphism, so
two rooted maps are isomorphic exactly when their canonical forms agree. The
enumerator builds canonical forms directly, so it never produces duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import SizeLimitExceeded

MAX_EDGES = 5
MAX_QUARTIC_VERTICES = 3


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


def cycle_notation(perm: Sequence[int]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(perm))


def canonical_labels(sigma: Sequence[int], alpha: Sequence[int], root: int) -> list[int]:
    """Position of each dart in the canonical scan (-1 if unreachable)."""
    lab = [-1] * len(sigma)
    lab[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        for nxt in (alpha[d], sigma[d]):
            if lab[nxt] < 0:
                lab[nxt] = len(order)
                order.append(nxt)
        i += 1
    return lab


@dataclass(frozen=True)
class RootedMap:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    root: int = 0

    @property
    def n_edges(self) -> int:
        return len(self.alpha) // 2

    @property
    def n_darts(self) -> int:
        return len(self.alpha)

    @property
    def phi(self) -> tuple[int, ...]:
        return tuple(self.sigma[self.alpha[d]] for d in range(self.n_darts))

    def vertices(self) -> list[tuple[int, ...]]:
        return cycles(self.sigma)

    def faces(self) -> list[tuple[int, ...]]:
        return cycles(self.phi)

    def edges(self) -> list[tuple[int, int]]:
        return [(d, self.alpha[d]) for d in range(self.n_darts) if d < self.alpha[d]]

    def vertex_of(self) -> list[int]:
        """Index (into :meth:`vertices`) of the vertex carrying each dart."""
        out = [0] * self.n_darts
        for k, cyc in enumerate(self.vertices()):
            for d in cyc:
                out[d] = k
        return out

    def face_of(self) -> list[int]:
        out = [0] * self.n_darts
        for k, cyc in enumerate(self.faces()):
            for d in cyc:
                out[d] = k
        return out

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - self.n_edges + len(self.faces())

    def is_connected(self) -> bool:
        return min(canonical_labels(self.sigma, self.alpha, self.root)) >= 0

    def is_planar(self) -> bool:
        return self.euler_characteristic() == 2

    def relabelled(self, lab: Sequence[int]) -> RootedMap:
        """The same map with dart d renamed lab[d]."""
        n = self.n_darts
        sigma = [0] * n
        alpha = [0] * n
        for d in range(n):
            sigma[lab[d]] = lab[self.sigma[d]]
            alpha[lab[d]] = lab[self.alpha[d]]
        return RootedMap(tuple(sigma), tuple(alpha), lab[self.root])

    def canonical(self) -> RootedMap:
        lab = canonical_labels(self.sigma, self.alpha, self.root)
        if min(lab) < 0:
            raise ValueError("map is not connected")
        return self.relabelled(lab)

    def key(self) -> tuple:
        c = self.canonical()
        return c.sigma + c.alpha

    def dual(self) -> RootedMap:
        """Faces become vertices: (sigma, alpha) -> (sigma o alpha, alpha), same root dart."""
        return RootedMap(self.phi, self.alpha, self.root)

    def dump(self) -> str:
        return f"sigma={cycle_notation(self.sigma)} alpha={cycle_notation(self.alpha)} root={self.root}"


def _chain_ok(sigma: list[int], sigma_inv: list[int], start: int, degree: int) -> bool:
    """After setting sigma[start], check the sigma-chain through ``start``."""
    length = 1
    d = start
    while sigma[d] >= 0:
        d = sigma[d]
        if d == start:
            return length == degree
        length += 1
        if length > degree:
            return False
    d = start
    while sigma_inv[d] >= 0:
        d = sigma_inv[d]
        length += 1
        if length > degree:
            return False
    return True


def _generate(n_edges: int, degree: int | None) -> Iterator[RootedMap]:
    size = 2 * n_edges
    sigma = [-1] * size
    sigma_inv = [-1] * size
    alpha = [-1] * size

    def rec(i: int, used: int, phase: int):
        if i == used:
            if used == size:
                yield RootedMap(tuple(sigma), tuple(alpha), 0)
            return
        if phase == 0:
            if alpha[i] >= 0:
                yield from rec(i, used, 1)
                return
            options = [j for j in range(i + 1, used) if alpha[j] < 0]
            if used < size:
                options.append(used)
            for j in options:
                alpha[i], alpha[j] = j, i
                yield from rec(i, used + (j == used), 1)
                alpha[i], alpha[j] = -1, -1
            return
        options = [j for j in range(used) if sigma_inv[j] < 0]
        if used < size:
            options.append(used)
        for j in options:
            sigma[i], sigma_inv[j] = j, i
            if degree is None or _chain_ok(sigma, sigma_inv, i, degree):
                yield from rec(i + 1, used + (j == used), 0)
            sigma[i], sigma_inv[j] = -1, -1

    if size == 0:
        return
    yield from rec(0, 1, 0)


def enumerate_maps(n_edges: int, quartic: bool = False, planar: bool = True,
                   limit: int | None = None) -> list[RootedMap]:
    """All rooted maps with ``n_edges`` edges, one per isomorphism class.

    With ``quartic`` every vertex has degree 4 (so the map has n_edges / 2
    vertices). Results are sorted by canonical form.
    """
    if n_edges < 1:
        raise ValueError("n_edges must be positive")
    cap = (2 * MAX_QUARTIC_VERTICES if quartic else MAX_EDGES) if limit is None else limit
    if n_edges > cap:
        raise SizeLimitExceeded(f"{n_edges} edges exceeds the exhaustive-search limit {cap}")
    if quartic and n_edges % 2:
        return []
    out = [m for m in _generate(n_edges, 4 if quartic else None) if not planar or m.is_planar()]
    out.sort(key=lambda m: m.sigma + m.alpha)
    return out


def enumerate_quartic(n_vertices: int, limit: int | None = None) -> list[RootedMap]:
    """Rooted planar 4-valent maps with ``n_vertices`` vertices."""
    if limit is None and n_vertices > MAX_QUARTIC_VERTICES:
        raise SizeLimitExceeded(f"{n_vertices} vertices exceeds the exhaustive-search limit")
    return enumerate_maps(2 * n_vertices, quartic=True, limit=2 * n_vertices if limit is None else limit)
