"""The W/H kernel system for the six-vertex model, solved order by order in t.

    W(x)   = 1 + x^2 t W(x)^2 + w x t H(0,x) + w^-1 x t H(x,0)
    H(x,y) = W(x) W(y) + (w/y)(H(x,y) - H(x,0)) + (w^-1/x)(H(x,y) - H(0,y))

Writing T for the operator x^i y^j -> w x^i y^(j-1) [j>=1] + w^-1 x^(i-1) y^j [i>=1],
the second equation reads H = W(x)W(y) + T(H), so at each t-order
H_k = sum_m T^m((W(x)W(y))_k). T lowers the total degree, so the sum is finite.

Polynomials in (x, w) and (x, y, w) are :class:`MPoly` objects whose last
axis is the Laurent variable w (omega).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DegreeBoundExceeded, ExpressionsDisagree
from ..mpoly import MPoly, zeros
from ..ring import LaurentOmega, PolyGamma, chebyshev_reduce, rat
from ..series import GAMMA, TruncSeries

X, Y, OM = 0, 1, 2


def _one(nvars: int) -> MPoly:
    return MPoly.const(1, nvars)


def apply_T(p: MPoly) -> MPoly:
    """The kernel operator on a polynomial in (x, y, w)."""
    up = p.truncate(Y, lo=1).shift([0, -1, 1])
    left = p.truncate(X, lo=1).shift([-1, 0, -1])
    return (up + left).trim()


def t_sum(p: MPoly) -> MPoly:
    """sum_{m>=0} T^m(p) for a polynomial with nonnegative x, y exponents."""
    p = p.trim()
    if p.is_zero():
        return p
    if p.offset[X] < 0 or p.offset[Y] < 0:
        raise ValueError("T-sum needs a polynomial in x and y")
    nx = p.offset[X] + p.c.shape[X]
    ny = p.offset[Y] + p.c.shape[Y]
    steps = nx + ny
    w_lo = p.offset[OM] - steps
    w_len = p.c.shape[OM] + 2 * steps
    cur = zeros((nx, ny, w_len))
    cur[p.offset[X]:, p.offset[Y]:, steps:steps + p.c.shape[OM]] = p.c
    acc = cur.copy()
    for _ in range(steps):
        nxt = zeros(cur.shape)
        # w * x^i y^(j-1)
        nxt[:, :-1, 1:] += cur[:, 1:, :-1]
        # w^-1 * x^(i-1) y^j
        nxt[:-1, :, :-1] += cur[1:, :, 1:]
        if not np.any(nxt != 0):
            break
        acc += nxt
        cur = nxt
    return MPoly(acc, (0, 0, w_lo)).trim()


@dataclass
class WHState:
    """Per-order coefficients W_k(x, w) and H_k(x, y, w) for k < order."""

    W: list = field(default_factory=list)
    H: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.W)

    def W_coeff(self, k: int, i: int) -> LaurentOmega:
        """[t^k x^i] W as a Laurent polynomial in w."""
        return _to_laurent(self.W[k].slice(X, i))

    def H_coeff(self, k: int, i: int, j: int) -> LaurentOmega:
        """[t^k x^i y^j] H."""
        return _to_laurent(self.H[k].slice(X, i).slice(0, j))

    def is_symmetric(self) -> int | None:
        """First t-order where H(t,w,x,y) != H(t,1/w,y,x), or None."""
        for k, h in enumerate(self.H):
            if h.transpose((1, 0, 2)).reflect(2) != h:
                return k
        return None

    def to_json(self) -> dict:
        def table(p: MPoly) -> dict:
            return {"|".join(map(str, k)): str(rat(v)) for k, v in sorted(p.terms().items())}

        return {
            "order": self.order,
            "axes": {"W": ["x", "omega"], "H": ["x", "y", "omega"]},
            "W": [table(p) for p in self.W],
            "H": [table(p) for p in self.H],
        }


def _to_laurent(p: MPoly) -> LaurentOmega:
    return LaurentOmega({k[0]: rat(v) for k, v in p.terms().items()})


def _check_degrees(p: MPoly, axes: tuple[int, ...], bound: int, what: str, k: int) -> None:
    for ax in axes:
        if p.c.size and p.degree(ax) > bound:
            raise DegreeBoundExceeded(f"{what} at t^{k} has degree {p.degree(ax)} > {bound} along axis {ax}")


def _w_next(state: WHState, k: int) -> MPoly:
    """W_k from the data below order k."""
    prev = k - 1
    sq = MPoly.zero(2)
    for a in range(prev + 1):
        sq = sq + state.W[a] * state.W[prev - a]
    h = state.H[prev]
    h_0x = h.slice(X, 0)  # H(0, x): remaining axes (y, w), renamed (x, w)
    h_x0 = h.slice(Y, 0)  # H(x, 0): axes (x, w)
    out = sq.shift([2, 0]) + h_0x.shift([1, 1]) + h_x0.shift([1, -1])
    return out.trim()


def _h_next(state: WHState, k: int) -> MPoly:
    prod = MPoly.zero(3)
    for a in range(k + 1):
        wx = state.W[a].insert_axis(Y)
        wy = state.W[k - a].insert_axis(X)
        prod = prod + wx * wy
    return t_sum(prod)


def solve_WH(N: int) -> WHState:
    """W and H to t-order N (coefficients of t^0 .. t^(N-1)), with symbolic w."""
    if N < 1:
        raise ValueError("N must be positive")
    state = WHState([_one(2)], [_one(3)])
    for k in range(1, N):
        w = _w_next(state, k)
        _check_degrees(w, (X,), 2 * k, "W", k)
        state.W.append(w)
        h = _h_next(state, k)
        _check_degrees(h, (X, Y), 2 * k, "H", k)
        state.H.append(h)
    return state


def Q_from_WH(state: WHState, N: int | None = None) -> TruncSeries:
    """Q(t, gamma) with gamma = w^2 + w^-2, from both boundary expressions.

    Needs the state to order N + 1 (the W expression reads W at t^(k+1)).
    """
    if N is None:
        N = state.order - 1
    if N > state.order - 1:
        raise ValueError(f"state of order {state.order} gives Q only to order {state.order - 1}")
    sym = LaurentOmega({1: 1, -1: 1})
    out = []
    for k in range(N):
        via_h = state.H_coeff(k, 0, 0)
        via_w = state.W_coeff(k + 1, 1).exact_div(sym)
        if k == 0:
            via_h = via_h - 1
            via_w = via_w - 1
        if via_h != via_w:
            raise ExpressionsDisagree(f"H(0,0) and [x^1]W disagree at t^{k}: {via_h} vs {via_w}")
        out.append(chebyshev_reduce(via_h))
    return TruncSeries(out, N, GAMMA)


def Q_from_WH_at(gamma, N: int, state: WHState | None = None) -> TruncSeries:
    """Q(t, gamma) for a rational gamma, via the symbolic solution."""
    if state is None:
        state = solve_WH(N + 1)
    Q = Q_from_WH(state, N)
    g = rat(gamma)
    return TruncSeries([c(g) if isinstance(c, PolyGamma) else c for c in Q.coeffs], N)
