import pytest
from hypothesis import given, strategies as st

from sixvertex.errors import DegreeBoundExceeded, DegreeOverflow, NoStabilization
from sixvertex.mpoly import MPoly
from sixvertex.ring import LaurentOmega, PolyGamma
from sixvertex.series import TruncSeries
from sixvertex.systems import (
    Q_from_WH,
    Q_from_WH_at,
    apply_T,
    closed_form_PCD,
    initial_PCD,
    pcd_step,
    solve_PCD,
    solve_WH,
    thm1_G,
    thm1_R,
    thm2_Q1,
    thm2_R,
)
from sixvertex.systems import kernel
from sixvertex.theta import q_big_of_t

g = PolyGamma.gen()


@pytest.fixture(scope="module")
def pcd():
    return solve_PCD(10)


@pytest.fixture(scope="module")
def wh():
    return solve_WH(11)


def test_thm1():
    assert list(thm1_G(4)) == [0, 1, 5, 33]
    assert list(thm1_R(6)) == [0, 1, -2, -4, -20, -132]


def test_thm1_coefficients_nonnegative():
    assert all(isinstance(c, int) and c >= 0 for c in thm1_G(25))


def test_thm2():
    assert list(thm2_Q1(4)) == [0, 4, 35, 402]
    assert list(thm2_R(6)) == [0, 1, -3, -12, -105, -1206]


def test_thm2_consistency():
    N = 15
    R, Q = thm2_R(N), thm2_Q1(N)
    t = TruncSeries.gen(N)
    assert (Q * 3 + 3).shift(2).truncate(N) + R == t


def test_pcd_Q_at_zero(pcd):
    assert list(pcd.Q_at_zero().truncate(4)) == [0, 2, 10, 66]
    assert pcd.Q_at_zero() == thm1_G(pcd.order - 2) * 2


def test_pcd_initial_condition_each_pass():
    state = initial_PCD(6)
    for _ in range(8):
        state = pcd_step(state)
        assert state.P_coeff(0, 0) == 1
        assert all(state.P_coeff(m, 0) == 0 for m in range(1, state.P.order))


def test_pcd_D_constant_term(pcd):
    assert pcd.D_coeff(0, 0, 0) == 1


def test_closed_form_equals_iteration(pcd):
    closed = closed_form_PCD(pcd.order)
    assert closed == pcd
    assert pcd_step(closed) == closed


def test_closed_form_diagonal():
    # the j = 0 diagonal of t P(t, ty) reproduces t itself
    closed = closed_form_PCD(8)
    assert [closed.P_coeff(m, 0) for m in range(closed.P.order)] == [1] + [0] * (closed.P.order - 1)


def test_pcd_too_few_passes():
    with pytest.raises(NoStabilization):
        solve_PCD(6, max_iter=3)


def test_pcd_degree_bound_checked():
    with pytest.raises(DegreeOverflow):
        solve_PCD(8, deg_x=3)


def test_wh_low_orders(wh):
    assert wh.W_coeff(0, 0) == LaurentOmega.const(1)
    assert wh.H_coeff(0, 0, 0) == LaurentOmega.const(1)
    assert wh.W_coeff(1, 2) == LaurentOmega.const(1)
    assert wh.W_coeff(1, 1) == LaurentOmega({1: 1, -1: 1})
    assert wh.W_coeff(1, 0).is_zero()


def test_Q_from_WH(wh):
    Q = Q_from_WH(wh)
    assert Q[1] == 2 * g + 2
    assert Q[2] == PolyGamma([10, 16, 9])
    assert Q[3] == PolyGamma([66, 150, 132, 54])
    assert list(Q_from_WH_at(1, 4, wh)) == [0, 4, 35, 402]


def test_Q_from_WH_matches_theta(wh):
    assert Q_from_WH(wh) == q_big_of_t(None, wh.order - 1).Q_of_t


def test_wh_symmetry(wh):
    assert wh.is_symmetric() is None


def test_wh_degree_bounds(wh):
    for k, (W, H) in enumerate(zip(wh.W, wh.H)):
        assert W.degree(0) <= 2 * k
        assert H.degree(0) <= 2 * k and H.degree(1) <= 2 * k


def test_wh_bound_violation(monkeypatch):
    real = kernel._w_next

    def bloated(state, k):
        return real(state, k) * MPoly.monomial([5, 0])

    monkeypatch.setattr(kernel, "_w_next", bloated)
    with pytest.raises(DegreeBoundExceeded):
        solve_WH(3)


polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(-3, 3)),
    st.integers(-9, 9), max_size=8,
).map(lambda d: MPoly.from_dict(d, 3))


@given(polys)
def test_T_nilpotent(p):
    p = p.trim()
    d = 0 if p.is_zero() else max(i + j for (i, j, _), c in p.terms().items() if c)
    q = p
    for _ in range(d + 1):
        q = apply_T(q)
    assert q.is_zero()


@given(polys)
def test_t_sum_solves_kernel_equation(p):
    h = kernel.t_sum(p)
    assert (h - p - apply_T(h)).is_zero()
