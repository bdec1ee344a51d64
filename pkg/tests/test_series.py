from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sixvertex.errors import BadConstantTerm, DegreeOverflow, NonUnitLeading, NotReversible
from sixvertex.mpoly import MPoly
from sixvertex.ring import PolyGamma
from sixvertex.series import (
    GAMMA,
    QQ,
    MPolyRing,
    ShiftedSeries,
    TruncSeries,
    exp,
    extract,
    log,
    reversion,
    series_in,
    substitute,
)

from conftest import rats

N = 8


def S(*coeffs, order=None):
    return TruncSeries(list(coeffs), order if order is not None else len(coeffs))


def series(order=N, min_val=0, unit_at=None):
    def build(cs):
        cs = [0] * min_val + cs
        if unit_at is not None:
            cs[unit_at] = cs[unit_at] or 1
        return TruncSeries(cs, order)
    return st.lists(rats, min_size=order - min_val, max_size=order - min_val).map(build)


def test_geometric_product():
    geo = TruncSeries([1] * N, N)
    assert (S(1, -1, order=N) * geo) == TruncSeries.one(N)


def test_division_example():
    assert (TruncSeries.one(4) / S(1, -3, 0, 5)) == S(1, 3, 9, 22)


def test_truncation_semantics():
    t = TruncSeries.gen(2)
    assert t * t == TruncSeries.zero(2)
    assert (TruncSeries.gen(5) + TruncSeries.gen(3)).order == 3


def test_division_needs_unit():
    with pytest.raises(NonUnitLeading):
        TruncSeries.one(3) / S(0, 1, 1)


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(series(unit_at=0), series())
def test_division_inverts_multiplication(b, a):
    assert (a * b) / b == a


def test_exp_log_examples():
    assert exp(TruncSeries.zero(5)) == TruncSeries.one(5)
    harmonic = TruncSeries([0] + [Fraction(1, n) for n in range(1, N)], N)
    assert log(TruncSeries.one(N) / S(1, -1, order=N)) == harmonic
    f = S(1, 1, 5, order=N)
    assert exp(log(f)) == f


@given(series(min_val=1))
def test_exp_log_round_trip(a):
    assert log(exp(a)) == a


@given(series(min_val=1))
def test_log_exp_round_trip(a):
    f = 1 + a
    assert exp(log(f)) == f


def test_exp_log_errors():
    with pytest.raises(BadConstantTerm):
        exp(S(1, 1))
    with pytest.raises(BadConstantTerm):
        log(S(2, 1))


@pytest.mark.parametrize("method", ["lagrange", "solve"])
@pytest.mark.parametrize("f, g", [
    ((0, 1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)),
    ((0, 1, 2, 12, 100, 980), (0, 1, -2, -4, -20, -132)),
    ((0, 1, 3, 30, 420, 6930), (0, 1, -3, -12, -105, -1206)),
])
def test_reversion_examples(method, f, g):
    assert reversion(S(*f), method) == S(*g)


@pytest.mark.parametrize("method", ["lagrange", "solve"])
@given(f=series(min_val=1, unit_at=1))
def test_reversion_round_trip(method, f):
    g = reversion(f, method)
    t = TruncSeries.gen(N)
    assert f.compose(g) == t
    assert g.compose(f) == t


def test_reversion_methods_agree_over_gamma():
    g = PolyGamma.gen()
    f = TruncSeries([0, 1, g, g * g + 1, PolyGamma([0, 0, 0, 3])], 5, GAMMA)
    assert reversion(f, "lagrange") == reversion(f, "solve")


@pytest.mark.parametrize("f", [S(1, 1, 0), S(0, 0, 1), S(0)])
def test_not_reversible(f):
    with pytest.raises(NotReversible):
        reversion(f)


def test_extract_coefficient():
    ring = MPolyRing(("x", "w"))
    # x^2 + (w + 1/w) x at order t^1
    p = series_in(ring, {(1, 2, 0): 1, (1, 1, 1): 1, (1, 1, -1): 1}, 3)
    got = extract(p, "x", 1)
    assert got[1] == MPoly.from_dict({(1,): 1, (-1,): 1}, 1)
    assert got[0].is_zero() and got[2].is_zero()


def test_extract_nonnegative_part():
    ring = MPolyRing(("x",))
    p = series_in(ring, {(0, -2): 1, (0, 0): 3, (0, 1): 2}, 1)
    assert extract(p, "x", nonnegative=True)[0] == MPoly.from_dict({(0,): 3, (1,): 2}, 1)


def test_extract_y1_drops_to_rationals():
    ring = MPolyRing(("y",))
    # 1 + y (1 + 2t)
    p = series_in(ring, {(0, 0): 1, (0, 1): 1, (1, 1): 2}, 3)
    assert extract(p, "y", 1) == S(1, 2, 0)


def test_substitute_geometric():
    ring = MPolyRing(("x",), {"x": 5})
    p = series_in(ring, {(0, 1): 1}, 1)
    out = substitute(p, "x->1/(1-x)")
    assert out[0] == MPoly.from_dict({(i,): 1 for i in range(6)}, 1)


def test_substitute_reflect():
    ring = MPolyRing(("x",))
    p = series_in(ring, {(0, 2): 3}, 1)
    assert substitute(p, "x->1/x")[0] == MPoly.from_dict({(-2,): 3}, 1)


def test_substitute_regrade():
    ring = MPolyRing(("x", "y"), {"x": 4})
    p = series_in(ring, {(0, 0, 2): 1}, 4)
    out = substitute(p, "y->t*x")
    assert out[2] == MPoly.from_dict({(2, 0): 1}, 2)
    assert out[0].is_zero()


def test_substitute_overflow():
    ring = MPolyRing(("x", "y"), {"x": 1})
    p = series_in(ring, {(0, 0, 2): 1}, 4)
    with pytest.raises(DegreeOverflow):
        substitute(p, "y->t*x")


@given(series(), series())
def test_shifted_series_halves_combine(a, b):
    prod = ShiftedSeries(Fraction(1, 2), a) * ShiftedSeries(Fraction(1, 2), b)
    assert prod.shift == 1 and prod.body == a * b
    assert prod.to_integral() == (a * b).shift(1).truncate(N + 1)


def test_shifted_series_addition_needs_matching_shift():
    a = ShiftedSeries(Fraction(1, 3), S(1, 2))
    with pytest.raises(ValueError):
        a + ShiftedSeries(Fraction(1, 2), S(1, 2))
    assert (a + ShiftedSeries(Fraction(4, 3), S(1))).shift == Fraction(1, 3)
    assert a.coefficient(Fraction(4, 3)) == 2


def test_rings_are_exact():
    s = TruncSeries([Fraction(2, 2), Fraction(1, 3)], 2)
    assert s.ring is QQ
    assert s[0] == 1 and isinstance(s[0], int)
