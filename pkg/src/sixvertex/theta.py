"""Reduced Jacobi theta expansions and the theta parametrisation of Q(t, gamma).

Everything is expressed through the reduced theta function

    th(z, q) = 2 * sum_{n>=0} (-1)^n q^{n(n+1)/2} sin((2n+1) z),

which is theta_1(z) with its q^{1/8} factor removed; every ratio used below is
homogeneous, so the factor cancels.

At z = alpha with gamma = -2 cos(2 alpha) we write u = cos(2 alpha) = -gamma/2
and use sin((2n+1) alpha) = sin(alpha) S_n(u), cos((2n+1) alpha) = cos(alpha) C_n(u).
A derivative of th at alpha is therefore sin(alpha) or cos(alpha) times a
q-series whose coefficients are polynomials in gamma. :class:`TrigSeries`
carries that trigonometric prefactor as a pair of exponents (sin^a cos^b) so
that only even powers are ever converted back to gamma, through
sin^2 = (gamma + 2)/4 and cos^2 = (2 - gamma)/4. No square roots appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    CancellationFailure,
    EvenDerivativeAtZero,
    GammaEqualsMinusTwo,
    InexactDivision,
    ParityMismatch,
)
from .ring import PolyGamma, rat
from .series import GAMMA, QQ, Ring, TruncSeries, reversion


def gamma_setup(gamma) -> tuple[Ring, object]:
    """Return (coefficient ring, gamma as a ring element).

    ``gamma`` is a rational (int, Fraction, "p/q"), a :class:`PolyGamma`, or
    ``None`` / ``"symbolic"`` for the polynomial ring in gamma.
    """
    if gamma is None or (isinstance(gamma, str) and gamma.strip().lower() in {"symbolic", "g", "gamma"}):
        return GAMMA, PolyGamma.gen()
    if isinstance(gamma, PolyGamma):
        return GAMMA, gamma
    return QQ, rat(gamma)


def chebyshev_families(u, count: int, ring: Ring) -> tuple[list, list]:
    """S_n(u), C_n(u) for n < count.

    S_0 = C_0 = 1, S_1 = 1 + 2u, C_1 = 2u - 1 and f_{n+1} = 2u f_n - f_{n-1}.
    """
    one = ring.one()
    s = [one, one + u * 2]
    c = [one, u * 2 - one]
    while len(s) < count:
        s.append(u * 2 * s[-1] - s[-2])
        c.append(u * 2 * c[-1] - c[-2])
    return s[:count], c[:count]


@dataclass(frozen=True)
class TrigSeries:
    """sin(alpha)^sin_exp * cos(alpha)^cos_exp * body(q)."""

    sin_exp: int
    cos_exp: int
    body: TruncSeries

    @property
    def parity(self) -> str:
        """'odd' for a sin(alpha) prefactor, 'even' for cos(alpha), else the exponents."""
        if (self.sin_exp, self.cos_exp) == (1, 0):
            return "odd"
        if (self.sin_exp, self.cos_exp) == (0, 1):
            return "even"
        return f"sin^{self.sin_exp} cos^{self.cos_exp}"

    @property
    def order(self) -> int:
        return self.body.order

    def _same_prefactor(self, other: TrigSeries) -> None:
        if (self.sin_exp, self.cos_exp) != (other.sin_exp, other.cos_exp):
            raise ParityMismatch(f"cannot add {self.parity} and {other.parity} series")

    def __add__(self, other: TrigSeries) -> TrigSeries:
        self._same_prefactor(other)
        return TrigSeries(self.sin_exp, self.cos_exp, self.body + other.body)

    def __sub__(self, other: TrigSeries) -> TrigSeries:
        self._same_prefactor(other)
        return TrigSeries(self.sin_exp, self.cos_exp, self.body - other.body)

    def __neg__(self) -> TrigSeries:
        return TrigSeries(self.sin_exp, self.cos_exp, -self.body)

    def __mul__(self, other) -> TrigSeries:
        if isinstance(other, TrigSeries):
            return TrigSeries(self.sin_exp + other.sin_exp, self.cos_exp + other.cos_exp, self.body * other.body)
        return TrigSeries(self.sin_exp, self.cos_exp, self.body * other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TrigSeries:
        if isinstance(other, TrigSeries):
            return TrigSeries(self.sin_exp - other.sin_exp, self.cos_exp - other.cos_exp, self.body / other.body)
        return TrigSeries(self.sin_exp, self.cos_exp, self.body / other)

    def prefactor_free(self) -> TruncSeries:
        """The body, provided the prefactor has cancelled completely."""
        if self.sin_exp or self.cos_exp:
            raise ParityMismatch(f"series still carries the prefactor {self.parity}")
        return self.body

    def resolve(self, gamma) -> TruncSeries:
        """Convert an even prefactor into a function of gamma and absorb it."""
        if self.sin_exp % 2 or self.cos_exp % 2:
            raise ParityMismatch(f"odd prefactor {self.parity} cannot be written in gamma")
        ring, g = gamma_setup(gamma)
        sin2 = (g + 2) * Fraction(1, 4)
        cos2 = (2 - g) * Fraction(1, 4) if ring is QQ else (-g + 2) * Fraction(1, 4)
        body = self.body
        a, b = self.sin_exp // 2, self.cos_exp // 2
        num = ring.one()
        den = ring.one()
        for base, k in ((sin2, a), (cos2, b)):
            if k > 0:
                num = num * base**k
            elif k < 0:
                den = den * base ** (-k)
        if ring is QQ:
            if den == 0:
                if a < 0:
                    raise GammaEqualsMinusTwo("sin(alpha) = 0 at gamma = -2")
                raise ZeroDivisionError("cos(alpha) = 0 for this gamma")
            return body * rat(Fraction(num) / den)
        body = body * num
        if den != ring.one():
            try:
                body = body / den
            except InexactDivision as exc:  # pragma: no cover - would be a pipeline bug
                raise CancellationFailure(str(exc)) from exc
        return body


def _triangular(n: int) -> int:
    return n * (n + 1) // 2


def theta_at_alpha(d: int, N: int, gamma=None) -> TrigSeries:
    """d-th z-derivative of the reduced theta function at z = alpha, to order q^N."""
    if not 0 <= d <= 3:
        raise ValueError("only derivatives of order 0..3 are supported")
    if N < 1:
        raise ValueError("N must be positive")
    ring, g = gamma_setup(gamma)
    u = g * Fraction(-1, 2)
    terms = 0
    while _triangular(terms) < N:
        terms += 1
    s_fam, c_fam = chebyshev_families(u, terms, ring)
    coeffs = [ring.zero()] * N
    for n in range(terms):
        e = _triangular(n)
        sign = -1 if n % 2 else 1
        weight = (2 * n + 1) ** d
        if d in (2, 3):
            sign = -sign
        fam = s_fam if d % 2 == 0 else c_fam
        coeffs[e] = fam[n] * (2 * sign * weight)
    body = TruncSeries(coeffs, N, ring)
    return TrigSeries(1, 0, body) if d % 2 == 0 else TrigSeries(0, 1, body)


def theta_at_zero(d: int, N: int) -> TruncSeries:
    """d-th z-derivative of the reduced theta function at z = 0 (d = 1 or 3)."""
    if d % 2 == 0:
        raise EvenDerivativeAtZero("even derivatives of theta vanish at 0")
    if d not in (1, 3):
        raise ValueError("only d = 1 and d = 3 are supported")
    coeffs = [0] * N
    n = 0
    while _triangular(n) < N:
        sign = -1 if n % 2 else 1
        coeffs[_triangular(n)] = (2 if d == 1 else -2) * sign * (2 * n + 1) ** d
        n += 1
    return TruncSeries(coeffs, N)


def _ring_of(gamma) -> Ring:
    return gamma_setup(gamma)[0]


def _lift_scalar_series(s: TruncSeries, ring: Ring) -> TruncSeries:
    if ring is QQ:
        return s
    return s.map_coeffs(PolyGamma.const, ring)


def _check_gamma(gamma) -> None:
    ring, g = gamma_setup(gamma)
    if ring is QQ and g == -2:
        raise GammaEqualsMinusTwo("gamma = -2 (alpha = 0) is outside the model range")


def t_bracket(gamma, N: int) -> TrigSeries:
    """-th(a) th'''(a) / th'(a)^2 + th''(a) / th'(a), prefactor tan(alpha)."""
    th = [theta_at_alpha(d, N, gamma) for d in range(4)]
    return -(th[0] * th[3]) / (th[1] * th[1]) + th[2] / th[1]


def t_of_q(gamma, N: int) -> TruncSeries:
    """t as a series in q: cos(a)/(64 sin(a)^3) * bracket = body / (16 (gamma + 2))."""
    _check_gamma(gamma)
    bracket = t_bracket(gamma, N)
    scaled = TrigSeries(bracket.sin_exp - 3, bracket.cos_exp + 1, bracket.body / 64)
    return scaled.resolve(gamma)


def r_of_q(gamma, N: int) -> TruncSeries:
    """R as a series in q (the second theta display of the parametrisation)."""
    _check_gamma(gamma)
    ring = _ring_of(gamma)
    th0 = theta_at_alpha(0, N, gamma)
    th1 = theta_at_alpha(1, N, gamma)
    th3 = theta_at_alpha(3, N, gamma)
    zero_ratio = theta_at_zero(3, N) / theta_at_zero(1, N)
    zero_ratio = TrigSeries(0, 0, _lift_scalar_series(zero_ratio, ring))
    core = (th0 * th0) / (th1 * th1) * (zero_ratio - th3 / th1)
    scaled = TrigSeries(core.sin_exp - 4, core.cos_exp + 2, core.body / 96)
    return scaled.resolve(gamma)


class ThetaPipeline(NamedTuple):
    q_of_t: TruncSeries
    R_of_t: TruncSeries
    Q_of_t: TruncSeries


def q_big_of_t(gamma, N: int) -> ThetaPipeline:
    """q(t), R(t) (both to order N + 2) and Q(t, gamma) (to order N).

    Q = (t - (gamma + 2) t^2 - R) / ((gamma + 2) t^2); the numerator must start
    at t^3, otherwise :class:`CancellationFailure` is raised.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    ring, g = gamma_setup(gamma)
    M = N + 2
    q_of_t = reversion(t_of_q(gamma, M))
    R_of_t = r_of_q(gamma, M).compose(q_of_t)
    t = TruncSeries.gen(M, ring)
    numerator = t - t * t * (g + 2) - R_of_t
    for k in range(3):
        if not ring.is_zero(numerator[k]):
            raise CancellationFailure(f"coefficient of t^{k} in the numerator is {numerator[k]}, not 0")
    body = numerator.shift(-2)
    if ring is QQ:
        Q = body * rat(Fraction(1) / (g + 2))
    else:
        Q = body / (g + 2)
    return ThetaPipeline(q_of_t, R_of_t, Q)


def heat_residual(gamma, N: int) -> TruncSeries:
    """th''(a) + th(a) + 8 q d/dq th(a), as the body of a sin-prefactor series."""
    th0 = theta_at_alpha(0, N, gamma)
    th2 = theta_at_alpha(2, N, gamma)
    return (th2 + th0 + TrigSeries(1, 0, th0.body.theta_op() * 8)).body
