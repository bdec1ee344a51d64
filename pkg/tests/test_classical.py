from fractions import Fraction

import pytest

from sixvertex import classical
from sixvertex.classical import (
    check_Ath,
    check_R_w_case3,
    check_eta_chain,
    check_heat,
    check_hyper_ode_and_deriv,
    check_t_chain,
    check_tauid,
    check_theta_product,
    check_toprove,
    eta_log_derivative,
    hyper_2f1,
    lambert_odd,
    lattice_sums,
    run_suite,
)
from sixvertex.errors import BadParameter
from sixvertex.series import TruncSeries
from sixvertex.theta import r_of_q

N = 20


def assert_all_pass(results):
    assert results
    bad = [(r.name, r.first_failure, r.detail) for r in results if not r.passed]
    assert not bad


def test_hyper_examples():
    assert list(hyper_2f1(Fraction(1, 2), Fraction(1, 2), 1, 3).body) == [1, Fraction(1, 4), Fraction(9, 64)]
    assert hyper_2f1(3, 5, 7, 1).body[0] == 1
    assert hyper_2f1(1, 1, 1, 10).body == TruncSeries([1] * 10, 10)


@pytest.mark.parametrize("c", [0, -1, -5])
def test_hyper_bad_parameter(c):
    with pytest.raises(BadParameter):
        hyper_2f1(1, 1, c, 5)


def test_lattice_examples():
    half = lattice_sums(Fraction(1, 2), 6)
    assert list(half.A) == [1, 4, 4, 0, 4, 8]
    assert half.C.shift == Fraction(1, 2)
    assert half.C.coefficient(Fraction(1, 2)) == 4 and half.C.coefficient(Fraction(5, 2)) == 8
    third = lattice_sums(Fraction(1, 3), 4)
    assert list(third.A) == [1, 6, 0, 6]


def test_lattice_w_leading_orders():
    assert lattice_sums(Fraction(1, 2), 3).w[1] == 16
    assert lattice_sums(Fraction(1, 3), 3).w[1] == 27
    assert r_of_q(1, 3)[1] == 1


def test_lattice_unsupported_case():
    with pytest.raises(BadParameter):
        lattice_sums(Fraction(1, 4), 5)


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(1, 3)])
def test_hyper_identities(a):
    assert_all_pass(check_hyper_ode_and_deriv(a, 30))


@pytest.mark.parametrize("gamma", [0, 1])
def test_toprove(gamma):
    assert_all_pass(check_toprove(gamma, N))


def test_toprove_low_order_coefficients():
    # n = 1: (1/2) C(2,1)^2 = 16 (1/2)(1/2)/2 and 3 = 27 (1/3)(2/3)/2
    assert Fraction(1, 2) * 2**2 == 16 * Fraction(1, 4) / 2 == 2
    assert 3 == 27 * Fraction(1, 3) * Fraction(2, 3) / 2


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(1, 3)])
def test_lattice_identities(a):
    assert_all_pass(check_Ath(a, N) + check_tauid(a, N) + check_t_chain(a, N))


def test_t_chain_prefactors():
    for a, expected in ((Fraction(1, 2), Fraction(1, 16)), (Fraction(1, 3), Fraction(1, 27))):
        case = classical.get_case(a)
        assert a * (1 - a) / (8 * case.sin2) == expected


def test_eta_chain_links():
    results = check_eta_chain(N)
    assert len(results) == 7
    assert_all_pass(results)


def test_e2_expansion():
    assert list((1 + 24 * eta_log_derivative(5))) == [1, -24, -72, -96, -168]


def test_lambert_as_printed_fails_at_order_zero():
    # the uncorrected link 48 R A^2 = 3 sum (2n+1) q^(2n)/(1 - q^(4n+2)) breaks immediately
    lat = lattice_sums(Fraction(1, 2), N)
    lhs = 48 * r_of_q(0, N) * lat.A * lat.A
    printed = 3 * lambert_odd(N)
    assert lhs.first_difference(printed) == 0
    # q^2: 1 from n = 0 plus 3 from n = 1
    assert list(printed.truncate(5)) == [3, 0, 12, 0, 18]


def test_R_w_case3():
    assert_all_pass(check_R_w_case3(N))


@pytest.mark.parametrize("k", [1, 7, 19])
def test_R_w_case3_detects_perturbation(k):
    w = lattice_sums(Fraction(1, 3), N).w
    bad = TruncSeries([c + (k == i) for i, c in enumerate(w)], N)
    (result,) = check_R_w_case3(N, bad)
    assert not result.passed and result.first_failure == k


@pytest.mark.parametrize("gamma", [0, 1, "symbolic"])
def test_theta_forms(gamma):
    assert_all_pass(check_theta_product(gamma, N) + check_heat(gamma, N))


def test_suite_vacuous_at_zero():
    assert run_suite(0) == []


def test_results_serialise():
    (r,) = check_R_w_case3(5)
    assert r.to_json() == {"name": "R = w/27", "anchor": "R = w/27", "status": "pass",
                           "data": {"max_order": 5, "first_failure": None, "detail": ""}}
