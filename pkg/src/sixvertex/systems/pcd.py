"""The P/C/D system for Eulerian orientations counted by edges.

The unknowns satisfy

    P(t,y)   = (1/y) [x^1] C(t,x,y)
    D(t,x,y) = 1 / (1 - C(t, 1/(1-x), y))
    C(t,x,y) = x y [x^>=0] ( P(t,tx) D(t,1/x,y) )

with P(t,0) = 1. As stated, P and D are power series in y whose t-coefficients
involve unboundedly many powers of y, so nothing is finite at a fixed t-order.
After the substitution y -> t y every unknown becomes a series in t whose
coefficients are polynomials (D is a power series in x, truncated at
``deg_x``). We store these graded series

    P^(t,y) = P(t,ty),  C^(t,x,y) = C(t,x,ty),  D^(t,x,y) = D(t,x,ty),

which satisfy

    P^ = [x^1] C^ / (t y),
    D^ = 1 / (1 - C^(t, 1/(1-x), y)),
    C^ = t x y [x^>=0] ( P^(t,x) D^(t,1/x,y) ).

The coefficient of t^m y^j in P is the coefficient of t^(m+j) y^j in P^.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ..errors import DegreeOverflow, NoStabilization
from ..mpoly import MPoly, zeros
from ..ring import rat
from ..series import MPolyRing, TruncSeries, exp, extract, substitute
from .implicit import thm1_R


@dataclass
class PCDState:
    """Graded P/C/D series (see the module docstring).

    ``C`` and ``D`` are tracked to t-order ``order``; ``P`` to ``order - 1``.
    """

    P: TruncSeries
    C: TruncSeries
    D: TruncSeries
    order: int
    y_bound: int
    deg_x: int
    iterations: int = 0

    def __eq__(self, other):
        if not isinstance(other, PCDState):
            return NotImplemented
        return self.P == other.P and self.C == other.C and self.D == other.D

    def P_coeff(self, m: int, j: int):
        """[t^m y^j] P(t,y)."""
        return self.P[m + j].coeff((j,))

    def C_coeff(self, m: int, i: int, j: int):
        """[t^m x^i y^j] C(t,x,y)."""
        return self.C[m + j].coeff((i, j))

    def D_coeff(self, m: int, i: int, j: int):
        """[t^m x^i y^j] D(t,x,y)."""
        return self.D[m + j].coeff((i, j))

    def Q_at_zero(self) -> TruncSeries:
        """Q(t,0) = [y^1] P(t,y) - 1, to t-order ``order - 2``."""
        n = self.order - 2
        return TruncSeries([self.P_coeff(m, 1) for m in range(n)], n) - 1

    def to_json(self) -> dict:
        def table(s: TruncSeries) -> list:
            return [{"|".join(map(str, k)): str(rat(v)) for k, v in sorted(c.terms().items())} for c in s.coeffs]

        return {
            "grading": "y -> t*y",
            "order": self.order,
            "y_bound": self.y_bound,
            "deg_x": self.deg_x,
            "iterations": self.iterations,
            "P": table(self.P),
            "C": table(self.C),
            "D": table(self.D),
        }


def _rings(y_bound: int, deg_x: int) -> tuple[MPolyRing, MPolyRing]:
    return MPolyRing(("y",), {"y": y_bound}), MPolyRing(("x", "y"), {"x": deg_x, "y": y_bound + 1})


def _defaults(N_t: int, N_y: int | None, deg_x: int | None) -> tuple[int, int]:
    N_y = N_t if N_y is None else N_y
    deg_x = N_t if deg_x is None else deg_x
    if deg_x < N_t - 1:
        raise DegreeOverflow(f"deg_x = {deg_x} is too small for t-order {N_t}")
    if N_y < 1:
        raise ValueError("N_y must be at least 1")
    return N_y, deg_x


def _step_P(C: TruncSeries, ring_p: MPolyRing) -> TruncSeries:
    c1 = extract(C, "x", 1)
    coeffs = [ring_p.reduce(c.shift([-1])) for c in c1.coeffs]
    P = TruncSeries._raw(coeffs, C.order, ring_p).shift(-1)
    # initial condition P(t,0) = 1
    fixed = [p.truncate(0, lo=1) for p in P.coeffs]
    fixed[0] = fixed[0] + 1
    return TruncSeries._raw([f.trim() for f in fixed], P.order, ring_p)


def _step_D(C: TruncSeries) -> TruncSeries:
    return (1 - substitute(C, "x->1/(1-x)")).inverse()


def _step_C(P: TruncSeries, D: TruncSeries, ring_c: MPolyRing) -> TruncSeries:
    flipped = substitute(D, "x->1/x")
    big = flipped.ring
    P_x = TruncSeries._raw([p.insert_axis(1) for p in P.coeffs], P.order, big)
    prod = extract(P_x * flipped, "x", nonnegative=True)
    coeffs = [ring_c.reduce(c.shift([1, 1])) for c in prod.coeffs]
    return TruncSeries._raw(coeffs, prod.order, ring_c).shift(1)


def pcd_step(state: PCDState) -> PCDState:
    """One pass of the system map, in the order P, D, C."""
    ring_p, ring_c = _rings(state.y_bound, state.deg_x)
    P = _step_P(state.C, ring_p)
    D = _step_D(state.C)
    C = _step_C(P, D, ring_c)
    return PCDState(P, C, D, state.order, state.y_bound, state.deg_x, state.iterations + 1)


def initial_PCD(N_t: int, N_y: int | None = None, deg_x: int | None = None) -> PCDState:
    N_y, deg_x = _defaults(N_t, N_y, deg_x)
    ring_p, ring_c = _rings(N_y, deg_x)
    return PCDState(
        TruncSeries.one(N_t - 1, ring_p),
        TruncSeries.zero(N_t, ring_c),
        TruncSeries.one(N_t, ring_c),
        N_t,
        N_y,
        deg_x,
    )


def solve_PCD(N_t: int, N_y: int | None = None, deg_x: int | None = None, max_iter: int | None = None) -> PCDState:
    """Fixed-point iteration from P = 1, C = 0, D = 1.

    ``N_t`` is the t-order of the graded C and D; Q(t,0) is then known to
    order ``N_t - 2``. Stops when two consecutive states coincide. In the
    graded variables the P-loop gains no power of t, so a pass fixes one new
    t-order only every second time; the default cap is ``2 N_t + 4`` passes.
    """
    if N_t < 3:
        raise ValueError("N_t must be at least 3")
    state = initial_PCD(N_t, N_y, deg_x)
    cap = 2 * N_t + 4 if max_iter is None else max_iter
    for _ in range(cap):
        nxt = pcd_step(state)
        if nxt == state:
            return nxt
        state = nxt
    raise NoStabilization(f"no fixpoint after {cap} passes at t-order {N_t}")


def _binomial_sum(R: TruncSeries, N: int, block, ring: MPolyRing) -> TruncSeries:
    """sum_{n} block(n) R^(n+1), where block(n) is an MPoly with rational coefficients."""
    powers = [R.truncate(N)]
    while len(powers) < N:
        powers.append(powers[-1] * powers[0])
    blocks = [block(n) for n in range(N)]
    out = []
    for k in range(N):
        acc = ring.zero()
        for n in range(k):
            w = powers[n][k]
            if w:
                acc = acc + blocks[n] * w
        out.append(ring.reduce(acc.trim()))
    return TruncSeries._raw(out, N, ring)


def _column(values) -> np.ndarray:
    arr = zeros((len(values),))
    arr[:] = values
    return arr


def closed_form_PCD(N: int, R: TruncSeries | None = None, N_y: int | None = None,
                    deg_x: int | None = None) -> PCDState:
    """The explicit solution in terms of R, graded like :func:`solve_PCD`."""
    N_y, deg_x = _defaults(N, N_y, deg_x)
    if R is None:
        R = thm1_R(N)
    if R.order < N:
        raise ValueError("R must be known to order N")
    ring_p, ring_c = _rings(N_y, deg_x)

    def p_block(n: int) -> MPoly:
        col = _column([Fraction(comb(2 * n, n) * comb(2 * n - j, n), n + 1) for j in range(n + 1)])
        return MPoly(col).trim()

    def x_block(n: int) -> MPoly:
        col = _column([comb(2 * n - j, n) for j in range(n + 1)])
        arr = np.multiply.outer(col, col) * Fraction(1, n + 1)
        return MPoly(arr, (1, 1)).trim()

    def y_block(n: int) -> MPoly:
        col_x = _column([comb(2 * n + i + 1, n) for i in range(deg_x + 1)])
        col_y = _column([comb(2 * n - j, n) for j in range(n + 1)])
        arr = np.multiply.outer(col_x, col_y) * Fraction(1, n + 1)
        return MPoly(arr, (0, 1)).trim()

    tP = _binomial_sum(R, N, p_block, ring_p)
    P = tP.shift(-1)
    X = _binomial_sum(R, N, x_block, ring_c)
    Y = _binomial_sum(R, N, y_block, ring_c)
    C = 1 - exp(-X)
    D = exp(Y)
    return PCDState(P, C, D, N, N_y, deg_x)
