"""Height functions on the dual, labelled maps and the quadrangulation-to-map rule.

Conventions (the local pictures are fixed here and validated by exhaustive counts):

* Dual labelling. For a dart d the two faces along its edge are face(d) and
  face(alpha(d)), with faces the cycles of phi = sigma o alpha. When d is the
  tail of its edge, label(face(alpha(d))) = label(face(d)) + 1. The root dart
  is a tail, and its face gets label 0, so the dual root edge goes 0 -> 1.

* Quadrangulation to map. A corner of a face is indexed by the dart e leaving
  it; the corners of a face (e0, e1, e2, e3) with e_{k+1} = phi(e_k) sit at the
  vertices of e0..e3. In a colourful face (labels l, l+1, l+2, l+1 cyclically)
  one new edge joins the corner of the maximum l+2 to the corner that follows
  it. Corners carrying a new edge keep their rotation order around each
  vertex. The new map is rooted at the new edge in the face containing the
  root corner, at its l+1 end, and labels are shifted so that end is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import ConventionViolation, NotColourful
from .maps import RootedMap, canonical_labels, enumerate_maps, enumerate_quartic
from .orientations import EulerOrientation, euler_orientations, is_alternating


@dataclass(frozen=True)
class LabelledMap:
    """A rooted map with an integer label per vertex (indexed like ``base.vertices()``)."""

    base: RootedMap
    labels: tuple[int, ...]

    def dart_labels(self) -> list[int]:
        vertex_of = self.base.vertex_of()
        return [self.labels[vertex_of[d]] for d in range(self.base.n_darts)]

    def is_valid(self) -> bool:
        """Adjacent labels differ by exactly 1 and the root edge goes 0 -> 1."""
        lab = self.dart_labels()
        m = self.base
        if any(abs(lab[d] - lab[e]) != 1 for d, e in m.edges()):
            return False
        return lab[m.root] == 0 and lab[m.alpha[m.root]] == 1

    def canonical(self) -> LabelledMap:
        lab = canonical_labels(self.base.sigma, self.base.alpha, self.base.root)
        base = self.base.relabelled(lab)
        dl = self.dart_labels()
        per_dart = [0] * len(dl)
        for d, v in enumerate(dl):
            per_dart[lab[d]] = v
        return LabelledMap(base, tuple(per_dart[c[0]] for c in base.vertices()))

    def key(self) -> tuple:
        c = self.canonical()
        return c.base.sigma + c.base.alpha + tuple(c.dart_labels())

    def is_quadrangulation(self) -> bool:
        return all(len(f) == 4 for f in self.base.faces())

    def face_labels(self) -> list[list[int]]:
        lab = self.dart_labels()
        return [[lab[e] for e in f] for f in self.base.faces()]

    def is_colourful(self) -> bool:
        return all(len(set(f)) == 3 for f in self.face_labels())


def dual_labelling(eo: EulerOrientation) -> LabelledMap:
    """The height function of an Eulerian orientation, on the dual map."""
    m = eo.base
    face_of = m.face_of()
    n_faces = max(face_of) + 1
    label: list[int | None] = [None] * n_faces
    label[face_of[m.root]] = 0
    stack = [face_of[m.root]]
    by_face: dict[int, list[int]] = {}
    for d in range(m.n_darts):
        by_face.setdefault(face_of[d], []).append(d)
    while stack:
        f = stack.pop()
        for d in by_face[f]:
            other = face_of[m.alpha[d]]
            step = 1 if d in eo.tails else -1
            want = label[f] + step
            if label[other] is None:
                label[other] = want
                stack.append(other)
            elif label[other] != want:
                raise ConventionViolation(f"inconsistent height across the edge of dart {d}")
    dual = m.dual()
    # vertices of the dual are the faces of m, listed in the same cycle order
    out = LabelledMap(dual, tuple(label[face_of[c[0]]] for c in dual.vertices()))
    if not out.is_valid():
        raise ConventionViolation("dual labelling does not satisfy the labelled-map rules")
    return out


def labellings(m: RootedMap) -> Iterator[LabelledMap]:
    """All labellings of ``m`` with adjacent labels differing by 1 and root 0 -> 1."""
    vertex_of = m.vertex_of()
    n = len(m.vertices())
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for d, e in m.edges():
        nbrs[vertex_of[d]].append(vertex_of[e])
        nbrs[vertex_of[e]].append(vertex_of[d])
    r0, r1 = vertex_of[m.root], vertex_of[m.alpha[m.root]]
    if r0 == r1:
        return
    order = [r0]
    seen = {r0}
    for v in order:
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    lab: list[int | None] = [None] * n

    def ok(v: int) -> bool:
        return all(lab[w] is None or abs(lab[w] - lab[v]) == 1 for w in nbrs[v])

    def rec(k: int):
        if k == len(order):
            yield LabelledMap(m, tuple(lab))
            return
        v = order[k]
        if v == r0:
            cands = [0]
        elif v == r1:
            cands = [1]
        else:
            anchor = next(lab[w] for w in nbrs[v] if lab[w] is not None)
            cands = [anchor - 1, anchor + 1]
        for c in cands:
            lab[v] = c
            if ok(v):
                yield from rec(k + 1)
            lab[v] = None

    yield from rec(0)


def labelled_maps(n_edges: int) -> list[LabelledMap]:
    return [lm for m in enumerate_maps(n_edges) for lm in labellings(m)]


def labelled_quadrangulations(n_faces: int, colourful_only: bool = False) -> list[LabelledMap]:
    """Images under :func:`dual_labelling` of quartic Eulerian orientations with n vertices."""
    out = []
    for m in enumerate_quartic(n_faces):
        for eo in euler_orientations(m):
            if colourful_only and any(is_alternating(v, eo.tails) for v in m.vertices()):
                continue
            out.append(dual_labelling(eo))
    return out


def ambjorn_budd(q: LabelledMap) -> LabelledMap:
    """Collapse a colourful labelled quadrangulation with n faces to a labelled map with n edges."""
    m = q.base
    if not q.is_quadrangulation():
        raise ValueError("input is not a quadrangulation")
    lab = q.dart_labels()
    phi = m.phi
    corner_of: dict[int, int] = {}  # corner dart -> new dart
    ends: list[tuple[int, int]] = []
    root_face_edge = None
    for face in m.faces():
        labels = [lab[e] for e in face]
        if len(set(labels)) != 3:
            raise NotColourful(f"face with labels {labels} has only two distinct labels")
        top = labels.index(max(labels))
        hi, lo = face[top], phi[face[top]]
        if lab[hi] - lab[lo] != 1:
            raise ConventionViolation("successor of the maximum does not carry the next label")
        a, b = 2 * len(ends), 2 * len(ends) + 1
        corner_of[hi], corner_of[lo] = a, b
        ends.append((hi, lo))
        if m.root in face:
            root_face_edge = b
    n_new = 2 * len(ends)
    sigma = [0] * n_new
    for v in m.vertices():
        marked = [d for d in v if d in corner_of]
        for k, d in enumerate(marked):
            sigma[corner_of[d]] = corner_of[marked[(k + 1) % len(marked)]]
    alpha = [d ^ 1 for d in range(n_new)]
    corner_label = {corner_of[d]: lab[d] for d in corner_of}
    base = RootedMap(tuple(sigma), tuple(alpha), root_face_edge)
    shift = corner_label[root_face_edge]
    labels = tuple(corner_label[c[0]] - shift for c in base.vertices())
    out = LabelledMap(base, labels)
    if not base.is_planar() or not base.is_connected():
        raise ConventionViolation("collapsed map is not a connected planar map")
    if not out.is_valid():
        raise ConventionViolation("collapsed labelling breaks the labelled-map rules")
    return out.canonical()
