"""Hypergeometric series, lattice sums, the eta function and the q-series
identities that connect the theta parametrisation to the implicit series.

Every ``check_*`` function returns a list of :class:`CheckResult`, one per
identity, so that a failure points at a single equality and the first order
where it breaks. Two lattice cases are supported, a = 1/2 (gamma = 0,
alpha = pi/4) and a = 1/3 (gamma = 1, alpha = pi/3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .checks import CheckResult, compare
from .errors import BadParameter
from .ring import rat
from .series import ShiftedSeries, TruncSeries
from .systems.implicit import thm1_R, thm2_R
from .theta import (
    TrigSeries,
    gamma_setup,
    heat_residual,
    r_of_q,
    t_of_q,
    theta_at_alpha,
    theta_at_zero,
)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Case:
    a: Fraction
    gamma: int
    sin2: Fraction  # sin(alpha)^2
    power: int  # w = (C/A)^power
    shift: Fraction  # C = q^shift * (...)


CASES = {
    HALF: Case(HALF, 0, Fraction(1, 2), 2, HALF),
    THIRD: Case(THIRD, 1, Fraction(3, 4), 3, THIRD),
}


def get_case(a) -> Case:
    a = Fraction(rat(a))
    if a not in CASES:
        raise BadParameter(f"only a = 1/2 and a = 1/3 are supported, not {a}")
    return CASES[a]


# ---------------------------------------------------------------------------
# hypergeometric series
# ---------------------------------------------------------------------------


@dataclass
class HyperSeries:
    a: Fraction
    b: Fraction
    c: Fraction
    body: TruncSeries = field(repr=False)


def rising(x, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def hyper_2f1(a, b, c, N: int) -> HyperSeries:
    """2F1(a, b; c | w) to order N."""
    a, b, c = Fraction(rat(a)), Fraction(rat(b)), Fraction(rat(c))
    if c.denominator == 1 and c <= 0:
        raise BadParameter(f"c = {c} is a nonpositive integer")
    coeffs = []
    term = Fraction(1)
    for n in range(N):
        coeffs.append(term)
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1))
    return HyperSeries(a, b, c, TruncSeries(coeffs, N))


def check_hyper_ode_and_deriv(a, N: int) -> list[CheckResult]:
    a = Fraction(rat(a))
    k = a * (1 - a)
    A = hyper_2f1(a, 1 - a, 1, N + 2).body
    A1 = A.derivative()
    A2 = A1.derivative()
    w = TruncSeries.gen(N + 2)
    residual = w * (1 - w) * A2 + (1 - 2 * w) * A1 - A * k
    deriv_lhs = (1 - w) * A1
    deriv_rhs = hyper_2f1(a, 1 - a, 2, N).body * k
    return [
        compare(f"hypergeometric ODE (a={a})", "w(1-w)A'' + (1-2w)A' - a(1-a)A = 0",
                residual.truncate(N), TruncSeries.zero(N), N),
        compare(f"derivative formula (a={a})", "(1-w)A' = a(1-a) 2F1(a,1-a;2|w)", deriv_lhs, deriv_rhs, N),
    ]


# ---------------------------------------------------------------------------
# lattice sums
# ---------------------------------------------------------------------------


@dataclass
class LatticeCase:
    a: Fraction
    A: TruncSeries
    C: ShiftedSeries
    w: TruncSeries


def _lattice_sum(form, N: int) -> list[int]:
    """Coefficients of sum_{i,j in Z} q^form(i,j) below q^N.

    The box |i|, |j| <= r grows until the form exceeds N - 1 on its whole
    boundary; the forms are positive definite, so the sum is then complete.
    """
    r = isqrt(max(N, 1)) + 2
    while True:
        boundary = [form(i, j) for i in range(-r, r + 1) for j in (-r, r)]
        boundary += [form(i, j) for j in range(-r, r + 1) for i in (-r, r)]
        if min(boundary) >= N:
            break
        r += 1
    out = [0] * N
    for i in range(-r, r + 1):
        for j in range(-r, r + 1):
            e = form(i, j)
            if e < N:
                out[e] += 1
    return out


def lattice_sums(a, N: int) -> LatticeCase:
    """A, C and w = (C/A)^power as q-series to order N."""
    case = get_case(a)
    if case.a == HALF:
        A = _lattice_sum(lambda i, j: i * i + j * j, N)
        # m = i + 1/2, n = j + 1/2: m^2 + n^2 = 1/2 + i^2 + i + j^2 + j
        C = _lattice_sum(lambda i, j: i * i + i + j * j + j, N)
    else:
        A = _lattice_sum(lambda i, j: i * i + i * j + j * j, N)
        # m = i + 1/3, n = j + 1/3: m^2 + mn + n^2 = 1/3 + i^2 + ij + j^2 + i + j
        C = _lattice_sum(lambda i, j: i * i + i * j + j * j + i + j, N)
    A_s = TruncSeries(A, N)
    C_s = ShiftedSeries(case.shift, TruncSeries(C, N))
    ratio = (C_s / A_s) ** case.power
    w = ratio.to_integral().truncate(N)
    return LatticeCase(case.a, A_s, C_s, w)


def tan_theta_ratio(gamma, N: int) -> TruncSeries:
    """tan(alpha) th'(alpha)/th(alpha), a plain q-series."""
    th0 = theta_at_alpha(0, N, gamma)
    th1 = theta_at_alpha(1, N, gamma)
    tan = TrigSeries(1, -1, TruncSeries.one(N, th0.body.ring))
    return (tan * th1 / th0).prefactor_free()


def check_Ath(a, N: int) -> list[CheckResult]:
    case = get_case(a)
    lat = lattice_sums(case.a, N)
    return [compare(f"lattice A = tan(alpha) th'/th (a={case.a})", "A = tan(alpha) th'(alpha)/th(alpha)",
                    lat.A, tan_theta_ratio(case.gamma, N), N)]


# ---------------------------------------------------------------------------
# eta function and the gamma = 0 chain
# ---------------------------------------------------------------------------


def eta(N: int) -> TruncSeries:
    """prod_{n>=1} (1 - q^n) to order N (no q^(1/24) factor)."""
    out = TruncSeries.one(N)
    for n in range(1, N):
        out = out * TruncSeries.one(N) - out.shift(n).truncate(N)
    return out


def sign_flip(s: TruncSeries) -> TruncSeries:
    """s(-q)."""
    return TruncSeries([c if k % 2 == 0 else -c for k, c in enumerate(s.coeffs)], s.order, s.ring)


def eta_log_derivative(N: int) -> TruncSeries:
    """q eta'(q) / eta(q)."""
    e = eta(N)
    return e.theta_op() / e


def lambert_odd(N: int) -> TruncSeries:
    """sum_{n>=0} (2n+1) q^(2n) / (1 - q^(4n+2))."""
    out = [0] * N
    n = 0
    while 2 * n < N:
        e = 2 * n
        while e < N:
            out[e] += 2 * n + 1
            e += 4 * n + 2
        n += 1
    return TruncSeries(out, N)


def check_eta_chain(N: int) -> list[CheckResult]:
    """The chain from theta ratios to R = w/16, one link at a time."""
    z0 = theta_at_zero(3, N) / theta_at_zero(1, N)
    za = (theta_at_alpha(3, N, 0) / theta_at_alpha(1, N, 0)).prefactor_free()
    E = eta_log_derivative(N)
    # q eta'(-q) / eta(-q): the derivative taken in the argument, then evaluated at -q
    Em = -sign_flip(E)
    lat = lattice_sums(HALF, N)
    R = r_of_q(0, N)
    lam = lambert_odd(N)
    C2 = (lat.C ** 2).to_integral().truncate(N)
    q = TruncSeries.gen(N)
    middle = -24 * E - 24 * Em
    return [
        compare("eta link: -th'''(0)/th'(0)", "-th'''(0)/th'(0) = 1 + 24 q eta'(q)/eta(q)", -z0, 1 + 24 * E, N),
        compare("eta link: -th'''(pi/4)/th'(pi/4)", "-th'''(pi/4)/th'(pi/4) = 1 - 24 q eta'(-q)/eta(-q)",
                -za, 1 - 24 * Em, N),
        compare("eta link: 48 R A^2", "48 R A^2 = th'''(0)/th'(0) - th'''(pi/4)/th'(pi/4)",
                48 * R * lat.A * lat.A, z0 - za, N),
        compare("eta link: theta ratios to eta", "th'''(0)/th'(0) - th'''(pi/4)/th'(pi/4) = "
                "-24 q eta'(q)/eta(q) - 24 q eta'(-q)/eta(-q)", z0 - za, middle, N),
        compare("eta link: Lambert series", "-24 q eta'(q)/eta(q) - 24 q eta'(-q)/eta(-q) = "
                "48 q sum (2n+1) q^(2n)/(1-q^(4n+2))", middle, 48 * q * lam, N),
        compare("eta link: Lambert series to C^2", "48 q sum (2n+1) q^(2n)/(1-q^(4n+2)) = 3 C^2",
                48 * q * lam, 3 * C2, N),
        compare("R = w/16", "R = w/16", R, lat.w / 16, N),
    ]


def check_R_w_case3(N: int, w: TruncSeries | None = None) -> list[CheckResult]:
    """R = w/27 for a = 1/3; ``w`` may be supplied to test the checker itself."""
    if w is None:
        w = lattice_sums(THIRD, N).w
    return [compare("R = w/27", "R = w/27", r_of_q(1, N), w / 27, N)]


# ---------------------------------------------------------------------------
# the w-parametrisation
# ---------------------------------------------------------------------------


def check_tauid(a, N: int) -> list[CheckResult]:
    case = get_case(a)
    lat = lattice_sums(case.a, N)
    Aw = hyper_2f1(case.a, 1 - case.a, 1, N).body.compose(lat.w)
    w = lat.w
    return [
        compare(f"A(w(q)) = lattice A (a={case.a})", "2F1(a,1-a;1|w(q)) = A(q)", Aw, lat.A, N),
        compare(f"tau identity (a={case.a})", "w(1-w) A(w)^2 = q dw/dq", w * (1 - w) * Aw * Aw, w.theta_op(), N),
    ]


def check_t_chain(a, N: int) -> list[CheckResult]:
    """t(q) from the theta side against the three forms built from A and w."""
    case = get_case(a)
    lat = lattice_sums(case.a, N)
    w = lat.w
    t = t_of_q(case.gamma, N)
    pre = Fraction(1) / (8 * case.sin2)
    k = case.a * (1 - case.a)
    first = lat.A.theta_op() / (lat.A * lat.A) * pre
    Aser = hyper_2f1(case.a, 1 - case.a, 1, N + 1).body
    W = TruncSeries.gen(N)
    second = (W * (1 - W) * Aser.derivative()).compose(w) * pre
    third = w * hyper_2f1(case.a, 1 - case.a, 2, N).body.compose(w) * (pre * k)
    return [
        compare(f"t = q A'/(8 sin^2 A^2) (a={case.a})", "t = (1/(8 sin^2 alpha)) A^-2 q dA/dq", t, first, N),
        compare(f"t via dA/dw (a={case.a})", "t = (1/(8 sin^2 alpha)) w(1-w) dA/dw", t, second, N),
        compare(f"t via 2F1(a,1-a;2) (a={case.a})", "t = (a(1-a)/(8 sin^2 alpha)) w 2F1(a,1-a;2|w)", t, third, N),
    ]


def check_toprove(gamma: int, N: int) -> list[CheckResult]:
    """t = R 2F1(1/2,1/2;2|16R) (gamma = 0) or t = R 2F1(1/3,2/3;2|27R) (gamma = 1),
    with R from the implicit equations, plus the coefficient identities behind them."""
    if gamma == 0:
        a, scale, R = HALF, 16, thm1_R(N)

        def kernel(n: int) -> Fraction:
            return Fraction(comb(2 * n, n) ** 2, n + 1)
    elif gamma == 1:
        a, scale, R = THIRD, 27, thm2_R(N)

        def kernel(n: int) -> Fraction:
            return Fraction(comb(2 * n, n) * comb(3 * n, n), n + 1)
    else:
        raise BadParameter("gamma must be 0 or 1")
    F = hyper_2f1(a, 1 - a, 2, N).body.compose(R * scale)
    t = TruncSeries.gen(N)
    lhs = TruncSeries([kernel(n) for n in range(N)], N)
    rhs = TruncSeries([Fraction(scale) ** n * rising(a, n) * rising(1 - a, n) / (rising(2, n) * rising(1, n))
                       for n in range(N)], N)
    label = f"{scale}R"
    return [
        compare(f"t = R 2F1 (gamma={gamma})", f"t = R 2F1({a},{1 - a};2|{label})", t, R * F, N),
        compare(f"implicit kernel as 2F1 coefficients (gamma={gamma})",
                f"kernel(n) = {scale}^n ({a})_n ({1 - a})_n / ((2)_n n!)", lhs, rhs, N),
    ]


# ---------------------------------------------------------------------------
# theta function forms
# ---------------------------------------------------------------------------


def theta_product(gamma, N: int) -> TruncSeries:
    """th(alpha)/sin(alpha) = 2 prod_{n>=1} (1 - q^n)(1 - 2u q^n + q^(2n)), u = -gamma/2."""
    ring, g = gamma_setup(gamma)
    u = g * Fraction(-1, 2)
    out = TruncSeries.monomial(0, N, ring, 2)
    for n in range(1, N):
        f1 = TruncSeries.one(N, ring) - TruncSeries.monomial(n, N, ring)
        f2 = (TruncSeries.one(N, ring) + TruncSeries.monomial(2 * n, N, ring)
              - TruncSeries.monomial(n, N, ring) * (u * 2))
        out = out * f1 * f2
    return out


def check_theta_product(gamma, N: int) -> list[CheckResult]:
    return [compare(f"theta product = sum (gamma={gamma})", "th(z)/sin z = 2 prod (1-q^n)(1-2cos(2z)q^n+q^2n)",
                    theta_product(gamma, N), theta_at_alpha(0, N, gamma).body, N)]


def check_heat(gamma, N: int) -> list[CheckResult]:
    res = heat_residual(gamma, N)
    return [compare(f"heat equation (gamma={gamma})", "th'' + th + 8 q d/dq th = 0", res,
                    TruncSeries.zero(N, res.ring), N)]


def run_suite(N: int) -> list[CheckResult]:
    """The full identity suite at q-order N (vacuous for N = 0)."""
    if N <= 0:
        return []
    out: list[CheckResult] = []
    for gamma in (0, 1):
        out += check_toprove(gamma, N)
    for a in (HALF, THIRD):
        out += check_Ath(a, N)
        out += check_hyper_ode_and_deriv(a, N)
        out += check_tauid(a, N)
        out += check_t_chain(a, N)
    out += check_eta_chain(N)
    out += check_R_w_case3(N)
    for gamma in (0, 1, "symbolic"):
        out += check_theta_product(gamma, N)
        out += check_heat(gamma, N)
    return out


__all__ = [
    "CASES",
    "CheckResult",
    "HyperSeries",
    "LatticeCase",
    "check_Ath",
    "check_R_w_case3",
    "check_eta_chain",
    "check_heat",
    "check_hyper_ode_and_deriv",
    "check_t_chain",
    "check_tauid",
    "check_theta_product",
    "check_toprove",
    "compare",
    "eta",
    "eta_log_derivative",
    "hyper_2f1",
    "lambert_odd",
    "lattice_sums",
    "run_suite",
    "sign_flip",
    "tan_theta_ratio",
    "theta_product",
]
