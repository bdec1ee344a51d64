"""Verification suites shared by the command line and the test-suite."""

from __future__ import annotations

from fractions import Fraction

from . import classical
from .checks import CheckResult, compare, verdict
from .errors import SixVertexError
from .oracle import (
    ambjorn_budd,
    dual_labelling,
    enumerate_maps,
    euler_orientations,
    general_eo_counts,
    labelled_maps,
    labelled_quadrangulations,
    partial_counts,
    quartic_eo_counts,
)
from .ring import PolyGamma
from .series import GAMMA, TruncSeries
from .systems import (
    Q_from_WH,
    closed_form_PCD,
    pcd_step,
    solve_PCD,
    solve_WH,
    thm1_G,
    thm2_Q1,
)
from .theta import q_big_of_t, theta_at_zero

SUITES = ("theta", "classical", "systems", "oracle")

# low-order values of Q(t, gamma), G(t) and Q(t, 1)
Q_LOW = [PolyGamma([2, 2]), PolyGamma([10, 16, 9]), PolyGamma([66, 150, 132, 54])]
G_LOW = [1, 5, 33]
Q1_LOW = [4, 35, 402]


def _guard(name: str, anchor: str, N: int, fn) -> list[CheckResult]:
    try:
        return fn()
    except SixVertexError as exc:
        return [CheckResult(name, anchor, "fail", N, None, f"{type(exc).__name__}: {exc}")]


def _sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def theta_suite(N: int) -> list[CheckResult]:
    if N <= 0:
        return []
    M = max(N, 4)
    pipe = q_big_of_t(None, M)
    Q, q, R = pipe.Q_of_t, pipe.q_of_t, pipe.R_of_t
    low = min(3, N)
    t = TruncSeries.gen(M, GAMMA)
    g2 = PolyGamma([2, 1])
    rebuilt = R + (1 + Q).shift(2).truncate(M) * g2
    e2 = TruncSeries([1] + [-24 * _sigma(n) for n in range(1, N)], N)
    return [
        verdict("theta: Q(t,gamma) low orders", "Q = (2g+2)t + (9g^2+16g+10)t^2 + (54g^3+132g^2+150g+66)t^3",
                [Q[k + 1] for k in range(low)] == Q_LOW[:low], low),
        verdict("theta: q(t,gamma) second coefficient", "q = t + (6g+6)t^2 + ...",
                q[1] == PolyGamma([1]) and q[2] == PolyGamma([6, 6]), 3),
        compare("theta: R + (g+2) t^2 (1+Q) = t", "R + (g+2) t^2 (1 + Q) = t", rebuilt, t, N),
        compare("theta: -th'''(0)/th'(0) = E2", "-th'''(0)/th'(0) = 1 - 24 sum sigma(n) q^n",
                -(theta_at_zero(3, N) / theta_at_zero(1, N)), e2, N),
    ]


def classical_suite(N: int) -> list[CheckResult]:
    return classical.run_suite(N)


def _cross(name: str, anchor: str, series: dict[str, TruncSeries], N: int) -> list[CheckResult]:
    names = list(series)
    ref = series[names[0]]
    return [compare(f"{name}: {names[0]} vs {other}", anchor, ref, series[other], N) for other in names[1:]]


def systems_suite(N: int) -> list[CheckResult]:
    """Cross-route agreement to t-order N plus the structural invariants."""
    if N <= 0:
        return []
    M = max(N, 3)
    out: list[CheckResult] = []

    def gamma0():
        pcd = solve_PCD(M + 2)
        closed = closed_form_PCD(M + 2)
        res = _cross("Q(t,0)", "2G = [y^1]P - 1 = Q(t,0) by every route", {
            "thm1": thm1_G(M) * 2,
            "pcd": pcd.Q_at_zero(),
            "pcd-closed": closed.Q_at_zero(),
            "theta": q_big_of_t(0, M).Q_of_t,
            "wh": _at(Q_from_WH(wh, M), 0),
        }, N)
        res.append(verdict("P/C/D: closed form equals iterated fixpoint", "solve = closed form", pcd == closed, M))
        res.append(verdict("P/C/D: closed form is a fixpoint", "closed form satisfies the system",
                           pcd_step(closed) == closed, M))
        return res

    def gamma1():
        return _cross("Q(t,1)", "Q(t,1) by every route", {
            "thm2": thm2_Q1(M),
            "theta": q_big_of_t(1, M).Q_of_t,
            "wh": _at(Q_from_WH(wh, M), 1),
        }, N)

    def symbolic():
        sym = Q_from_WH(wh, M)
        res = [compare("Q(t,gamma): wh vs theta (symbolic)", "Q(t,gamma) kernel system = theta parametrisation",
                       sym, q_big_of_t(None, M).Q_of_t, N)]
        for g in (0, 1, 2, 5, -1):
            res.append(compare(f"Q(t,{g}): wh vs theta", "Q(t,gamma) pointwise", _at(sym, g),
                               q_big_of_t(g, M).Q_of_t, N))
        first = wh.is_symmetric()
        res.append(verdict("H(t,w,x,y) = H(t,1/w,y,x)", "kernel symmetry", first is None, wh.order,
                           "" if first is None else f"first asymmetric order {first}"))
        return res

    try:
        wh = solve_WH(M + 1)
    except SixVertexError as exc:
        return [CheckResult("W/H system", "kernel system solvable", "fail", N, None, str(exc))]
    out += _guard("Q(t,0) cross-route", "Q(t,0)", N, gamma0)
    out += _guard("Q(t,1) cross-route", "Q(t,1)", N, gamma1)
    out += _guard("Q(t,gamma) cross-route", "Q(t,gamma)", N, symbolic)
    return out


def _at(s: TruncSeries, g) -> TruncSeries:
    return TruncSeries([c(Fraction(g)) for c in s.coeffs], s.order)


def oracle_suite(N: int) -> list[CheckResult]:
    """Exhaustive counts for sizes up to min(N, 3)."""
    size = min(N, 3)
    if size <= 0:
        return []
    eo = quartic_eo_counts(size)
    po = partial_counts(size)
    ge = general_eo_counts(size)
    out = [
        verdict("oracle: quartic Eulerian orientations", "weighted counts = Q(t,gamma) coefficients",
                eo == Q_LOW[:size], size, "; ".join(c.to_str() for c in eo)),
        verdict("oracle: partial orientations", "partial-orientation counts by edges = quartic counts by vertices",
                po == eo, size, "; ".join(c.to_str() for c in po)),
        verdict("oracle: partial orientations at gamma=1", "Q(t,1) = 4t + 35t^2 + 402t^3",
                [c(1) for c in po] == Q1_LOW[:size], size),
        verdict("oracle: Eulerian orientations of general maps", "G = t + 5t^2 + 33t^3", ge == G_LOW[:size], size,
                ", ".join(map(str, ge))),
        verdict("oracle: gamma=0 quartic counts are even", "Q(t,0) = 2G",
                all(c(0) % 2 == 0 and c(0) == 2 * g for c, g in zip(eo, ge)), size),
    ]
    for n in range(1, size + 1):
        labelled = {lm.key() for lm in labelled_maps(n)}
        images = [dual_labelling(o).key() for m in enumerate_maps(n) for o in euler_orientations(m)]
        out.append(verdict(f"oracle: dual labelling, {n} edges", "height function is a bijection onto labelled maps",
                           len(images) == len(set(images)) and set(images) == labelled, n,
                           f"{len(labelled)} labelled maps, {len(set(images))} images"))
        quads = labelled_quadrangulations(n, colourful_only=True)
        fibres: dict = {}
        for q in quads:
            key = ambjorn_budd(q).key()
            fibres[key] = fibres.get(key, 0) + 1
        out.append(verdict(f"oracle: colourful quadrangulations, {n} faces", "2-to-1 onto labelled maps",
                           set(fibres) == labelled and set(fibres.values()) == {2}, n,
                           f"{len(quads)} quadrangulations, fibre sizes {sorted(set(fibres.values()))}"))
    return out


def run(suite: str, N: int) -> list[CheckResult]:
    table = {
        "theta": theta_suite,
        "classical": classical_suite,
        "systems": systems_suite,
        "oracle": oracle_suite,
    }
    if suite == "all":
        return [r for name in SUITES for r in table[name](N)]
    return table[suite](N)
