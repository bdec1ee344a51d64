"""Computing G, Q, R and q by every applicable route."""

from __future__ import annotations

from fractions import Fraction

from .errors import IncompatibleRoute
from .ring import PolyGamma, rat
from .series import GAMMA, QQ, TruncSeries
from .systems import Q_from_WH, closed_form_PCD, solve_PCD, solve_WH, thm1_G, thm1_R, thm2_Q1, thm2_R
from .theta import q_big_of_t

ROUTES = ("thm1", "thm2", "theta", "pcd", "pcd-closed", "wh")
WHATS = ("G", "Q", "R", "q")


def parse_gamma(value) -> object:
    """A rational, or ``"symbolic"`` (returned unchanged)."""
    if value is None:
        return None
    if isinstance(value, str) and value.strip().lower() in {"symbolic", "g", "gamma"}:
        return "symbolic"
    try:
        return rat(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise IncompatibleRoute(f"cannot read gamma = {value!r}") from exc


def applicable_routes(what: str, gamma) -> list[str]:
    if what not in WHATS:
        raise IncompatibleRoute(f"unknown series {what!r}")
    if what == "q":
        return ["theta"]
    if what == "G":
        if gamma not in (None, 0):
            raise IncompatibleRoute("G is the gamma = 0 series")
        return ["thm1", "pcd", "pcd-closed", "theta", "wh"]
    if gamma is None:
        raise IncompatibleRoute(f"{what} needs --gamma")
    out = []
    if gamma == 0:
        out += ["thm1", "pcd", "pcd-closed"]
    if gamma == 1:
        out += ["thm2"]
    return out + ["theta", "wh"]


def _lift(s: TruncSeries, ring) -> TruncSeries:
    if ring is QQ or s.ring is ring:
        return s
    return s.map_coeffs(PolyGamma.const, ring)


def _specialise(s: TruncSeries, gamma) -> TruncSeries:
    """Evaluate a gamma-polynomial series at a rational gamma."""
    if s.ring is not GAMMA or gamma == "symbolic":
        return s
    return TruncSeries([c(Fraction(gamma)) for c in s.coeffs], s.order)


def _Q_full(route: str, gamma, M: int) -> TruncSeries:
    """Q(t, gamma) to order M by one route."""
    if route == "thm1":
        return thm1_G(M) * 2
    if route == "thm2":
        return thm2_Q1(M)
    if route == "pcd":
        return solve_PCD(M + 2).Q_at_zero()
    if route == "pcd-closed":
        return closed_form_PCD(M + 2).Q_at_zero()
    if route == "theta":
        g = None if gamma == "symbolic" else gamma
        return q_big_of_t(g, max(M, 3)).Q_of_t.truncate(M)
    if route == "wh":
        return _specialise(Q_from_WH(solve_WH(M + 1), M), gamma)
    raise IncompatibleRoute(f"unknown route {route!r}")


def compute(what: str, gamma, N: int, route: str) -> TruncSeries:
    """The series ``what`` to t-order N + 1 (coefficients t^0 .. t^N)."""
    gamma = parse_gamma(gamma)
    if what == "G" and gamma is None:
        gamma = 0
    if route not in applicable_routes(what, gamma):
        raise IncompatibleRoute(f"route {route!r} does not compute {what} at gamma = {gamma}")
    M = N + 1
    if what == "q":
        g = None if gamma == "symbolic" else gamma
        return q_big_of_t(g, max(M, 3)).q_of_t.truncate(M)
    if what == "R":
        if route == "thm1":
            return thm1_R(M)
        if route == "thm2":
            return thm2_R(M)
        if route == "theta":
            g = None if gamma == "symbolic" else gamma
            return q_big_of_t(g, max(M, 3)).R_of_t.truncate(M)
        # R = t - (gamma + 2) t^2 (1 + Q)
        Q = _Q_full(route, gamma, M)
        ring = Q.ring
        g2 = PolyGamma([2, 1]) if gamma == "symbolic" else rat(gamma + 2)
        t = TruncSeries.gen(M, ring)
        return (t - (1 + Q).shift(2).truncate(M) * g2).truncate(M)
    Q = _Q_full(route, gamma, M)
    if what == "G":
        return Q / 2
    return Q


def compute_all(what: str, gamma, N: int) -> dict[str, TruncSeries]:
    gamma = parse_gamma(gamma)
    if what == "G" and gamma is None:
        gamma = 0
    return {r: compute(what, gamma, N, r) for r in applicable_routes(what, gamma)}
