from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from sixvertex.mpoly import MPoly, _naive_mul, as_object_array, kron_mul

from conftest import rats


def arrays(rank, max_side=6, values=st.integers(-10**6, 10**6)):
    shape = st.tuples(*[st.integers(1, max_side)] * rank)
    return shape.flatmap(lambda s: st.lists(values, min_size=int(np.prod(s)), max_size=int(np.prod(s)))
                         .map(lambda v: as_object_array(v).reshape(s)))


@given(st.integers(1, 3).flatmap(lambda r: st.tuples(arrays(r), arrays(r))))
def test_kronecker_matches_naive(pair):
    a, b = pair
    assert np.array_equal(kron_mul(a, b), _naive_mul(a, b))


@given(arrays(2, 5, rats), arrays(2, 5, rats))
def test_kronecker_with_fractions(a, b):
    assert np.array_equal(kron_mul(a, b), _naive_mul(a, b))


def test_huge_coefficients():
    big = 3**1000  # large enough for the gmpy2 path
    a = as_object_array([big, -big, 1] * 20)
    b = as_object_array([1, big] * 40)
    assert np.array_equal(kron_mul(a, b), _naive_mul(a, b))


def test_laurent_offsets_and_slices():
    # x^-1 y + 2 x^2
    p = MPoly.from_dict({(-1, 1): 1, (2, 0): 2}, 2)
    q = p * p
    assert q.coeff((-2, 2)) == 1 and q.coeff((1, 1)) == 4 and q.coeff((4, 0)) == 4
    assert p.degree(0) == 2 and p.low_degree(0) == -1
    assert p.slice(0, 2) == MPoly.from_dict({(0,): 2}, 1)
    assert p.reflect(0).coeff((1, 1)) == 1


def test_scale_div_is_exact():
    p = MPoly.from_dict({(1,): 3}, 1)
    assert p.scale_div(2).coeff((1,)) == Fraction(3, 2)
