from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sixvertex.errors import InexactDivision, NotSymmetric
from sixvertex.ring import LaurentOmega, PolyGamma, chebyshev_reduce, gamma_to_omega, rat, rat_str

from conftest import rats, small_ints


def w(terms):
    return LaurentOmega(terms)


@pytest.mark.parametrize("p, expected", [
    ({2: 1, -2: 1}, [0, 1]),
    ({2: 2, -2: 2, 0: 4}, [4, 2]),
    ({4: 1, -4: 1}, [-2, 0, 1]),
])
def test_chebyshev_reduce_examples(p, expected):
    assert chebyshev_reduce(w(p)) == PolyGamma(expected)


def test_ring_op_examples():
    assert rat(Fraction(1, 3) + Fraction(1, 6)) == Fraction(1, 2)
    assert w({1: 1}) * w({-1: 1}) == w({0: 1})
    assert PolyGamma([1, 1]) ** 2 == PolyGamma([1, 2, 1])


def test_rat_normalises():
    assert rat(Fraction(4, 2)) == 2 and isinstance(rat(Fraction(4, 2)), int)
    assert rat("-6/4") == Fraction(-3, 2)
    assert rat_str(Fraction(-3, 2)) == "-3/2"
    with pytest.raises(TypeError):
        rat(True)
    with pytest.raises(TypeError):
        rat(0.5)


@given(rats, rats, rats)
def test_rat_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a and a * 1 == a
    if a:
        assert a * (1 / a) == 1
    f = a + b
    assert f.denominator > 0


@given(st.lists(rats, max_size=11))
def test_chebyshev_round_trip(coeffs):
    g = PolyGamma(coeffs)
    assert chebyshev_reduce(gamma_to_omega(g)) == g


laurent = st.dictionaries(st.integers(-6, 6), rats, max_size=6).map(LaurentOmega)


@given(laurent)
def test_chebyshev_succeeds_iff_invariant(p):
    invariant = p.invert_omega() == p and p.negate_omega() == p
    try:
        g = chebyshev_reduce(p)
    except NotSymmetric:
        assert not invariant
    else:
        assert invariant
        assert gamma_to_omega(g) == p


@given(st.lists(rats, max_size=6))
def test_symmetrised_inputs_reduce(coeffs):
    p = gamma_to_omega(PolyGamma(coeffs))
    sym = p + p.invert_omega()
    assert gamma_to_omega(chebyshev_reduce(sym)) == sym


@pytest.mark.parametrize("terms", [{1: 1, -1: 1}, {2: 1}, {2: 1, -2: 2}, {3: 1, -3: 1}])
def test_chebyshev_crafted_negatives(terms):
    with pytest.raises(NotSymmetric):
        chebyshev_reduce(w(terms))


@given(st.lists(small_ints, max_size=5), st.lists(small_ints, min_size=1, max_size=4))
def test_polygamma_exact_division(a, b):
    a, b = PolyGamma(a), PolyGamma(b)
    if not b:
        return
    assert (a * b) / b == a


def test_polygamma_inexact_division():
    with pytest.raises(InexactDivision):
        PolyGamma([1, 0, 1]) / PolyGamma([1, 1])


@given(st.lists(rats, max_size=6), rats)
def test_polygamma_evaluation_is_exact(coeffs, x):
    g = PolyGamma(coeffs)
    assert g(x) == sum(c * x**k for k, c in enumerate(coeffs))


def test_laurent_substitutions():
    p = w({3: 2, -1: 5})
    assert p(Fraction(2)) == 2 * 8 + Fraction(5, 2)
