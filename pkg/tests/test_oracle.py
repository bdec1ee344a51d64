from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from sixvertex.errors import NotColourful, SizeLimitExceeded
from sixvertex.oracle import (
    RootedMap,
    ambjorn_budd,
    count_euler_orientations,
    count_partial_orientations,
    dual_labelling,
    enumerate_maps,
    enumerate_quartic,
    euler_orientations,
    general_eo_counts,
    labelled_maps,
    labelled_quadrangulations,
    partial_orientations,
    series_from_counts,
)
from sixvertex.oracle.orientations import is_alternating
from sixvertex.ring import PolyGamma
from sixvertex.series import TruncSeries

Q_LOW = [PolyGamma([2, 2]), PolyGamma([10, 16, 9]), PolyGamma([66, 150, 132, 54])]


def brute_force_maps(n, degree=None):
    """Every sigma against a fixed alpha, deduplicated by canonical form."""
    alpha = tuple(d ^ 1 for d in range(2 * n))
    keys = set()
    for sigma in permutations(range(2 * n)):
        m = RootedMap(sigma, alpha, 0)
        if not (m.is_connected() and m.is_planar()):
            continue
        if degree is not None and any(len(v) != degree for v in m.vertices()):
            continue
        keys.add(m.key())
    return keys


@pytest.mark.parametrize("n, count", [(1, 2), (2, 9), (3, 54)])
def test_map_counts_against_brute_force(n, count):
    maps = enumerate_maps(n)
    assert len(maps) == count
    assert {m.key() for m in maps} == brute_force_maps(n)


def test_map_counts_larger():
    assert [len(enumerate_maps(n)) for n in (4, 5)] == [378, 2916]


def test_quartic_against_brute_force():
    assert len(enumerate_quartic(1)) == 2
    assert {m.key() for m in enumerate_quartic(2)} == brute_force_maps(4, degree=4)
    assert len(enumerate_quartic(3)) == 54


def test_one_edge_maps_are_loop_and_link():
    kinds = sorted(len(m.vertices()) for m in enumerate_maps(1))
    assert kinds == [1, 2]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerated_maps_are_valid(n):
    for m in enumerate_maps(n):
        assert m.is_connected() and m.euler_characteristic() == 2
        c = m.canonical()
        assert c == m and c.canonical() == c


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(2 * n)))))
def test_canonical_form_ignores_labels(data):
    n, perm = data
    for m in enumerate_maps(n)[:5]:
        assert m.relabelled(perm).canonical() == m


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        enumerate_maps(6)
    with pytest.raises(SizeLimitExceeded):
        enumerate_quartic(4)


def test_quartic_orientation_counts():
    got = [count_euler_orientations(enumerate_quartic(n)) for n in (1, 2, 3)]
    assert got == Q_LOW
    assert all(c(0) % 2 == 0 for c in got)


def test_orientations_are_eulerian():
    for m in enumerate_quartic(2):
        orients = list(euler_orientations(m))
        assert all(o.is_valid() for o in orients)
        assert len({o.tails for o in orients}) == len(orients)


def test_partial_orientation_counts():
    got = [count_partial_orientations(enumerate_maps(n)) for n in (1, 2, 3)]
    assert got == Q_LOW
    assert [c(1) for c in got] == [4, 35, 402]
    for m in enumerate_maps(2):
        assert all(p.is_valid() for p in partial_orientations(m))


def test_general_orientations():
    assert general_eo_counts(4) == [1, 5, 33, 252]


def test_series_from_counts():
    s = series_from_counts(Q_LOW)
    assert s[2] == PolyGamma([10, 16, 9]) and s[0].is_zero()
    assert list(series_from_counts([4, 35, 402])) == [0, 4, 35, 402]
    assert series_from_counts([]) == TruncSeries.zero(1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_labelling_bijection(n):
    labelled = {lm.key() for lm in labelled_maps(n)}
    images = [dual_labelling(o) for m in enumerate_maps(n) for o in euler_orientations(m)]
    assert all(im.is_valid() for im in images)
    keys = [im.key() for im in images]
    assert len(keys) == len(set(keys)) and set(keys) == labelled
    assert len(labelled) == [1, 5, 33][n - 1]


def test_dual_of_loop():
    loop = next(m for m in enumerate_maps(1) if len(m.vertices()) == 1)
    (eo,) = euler_orientations(loop)
    lm = dual_labelling(eo)
    assert lm.key() == labelled_maps(1)[0].key()


def test_quartic_duals_are_quadrangulations():
    assert all(q.is_quadrangulation() for q in labelled_quadrangulations(2))


@pytest.mark.parametrize("n, quads", [(1, 2), (2, 10), (3, 66)])
def test_ambjorn_budd_two_to_one(n, quads):
    colourful = labelled_quadrangulations(n, colourful_only=True)
    assert len(colourful) == quads
    assert all(q.is_colourful() for q in colourful)
    fibres = {}
    for q in colourful:
        k = ambjorn_budd(q).key()
        fibres[k] = fibres.get(k, 0) + 1
    assert set(fibres) == {lm.key() for lm in labelled_maps(n)}
    assert set(fibres.values()) == {2}


def test_alternating_vertex_gives_non_colourful_face():
    for m in enumerate_quartic(2):
        for eo in euler_orientations(m):
            q = dual_labelling(eo)
            alternating = any(is_alternating(v, eo.tails) for v in m.vertices())
            assert q.is_colourful() == (not alternating)
            if alternating:
                with pytest.raises(NotColourful):
                    ambjorn_budd(q)
