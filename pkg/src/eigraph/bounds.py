"""Eigenvalue-degree inequality and identity checks with per-index slack.

Every check reports a signed slack: positive means strict satisfaction,
zero equality, negative violation.  A check holds when its worst slack is
>= -tol.  Index ranges that are empty (n = 1 for the complement-pairing
checks) report a vacuous pass with +inf slack so exhaustive sweeps stay
uniform.

Two tolerances are in play: the eigensolver runs at its own tolerance
(spectra.SOLVER_TOL), while `tol` here is the comparison tolerance that
separates genuine violations from rounding noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .codec import graph6_encode
from .graphs import DegreeStats, Graph, degree_stats, irregularity
from .spectra import SOLVER_TOL, GraphSpectra, graph_spectra

COMPARISON_TOL = 1e-7

CHECK_NAMES = (
    "in1",
    "in2",
    "classic_upper",
    "laplacian_complement",
    "grone_merris",
    "degree_spread",
    "i1",
    "i2",
    "i3",
)


class DetailRow(NamedTuple):
    """One evaluated index: slack >= 0 iff the row satisfies its inequality.

    For two-sided checks `rhs` is the binding bound at that index; for the
    equality check slack is -|lhs - rhs|, so its best possible value is 0.
    """

    k: int
    lhs: float
    rhs: float
    slack: float


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    holds: bool
    worst_slack: float
    witness_k: int | None
    details: tuple[DetailRow, ...]


@dataclass(frozen=True)
class BoundSet:
    """Outcome of every registered check on one graph."""

    graph_id: str
    n: int
    m: int
    tol: float
    outcomes: tuple[CheckOutcome, ...]

    @property
    def all_hold(self) -> bool:
        return all(o.holds for o in self.outcomes)

    def outcome(self, name: str) -> CheckOutcome:
        for o in self.outcomes:
            if o.name == name:
                return o
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "n": self.n,
            "m": self.m,
            "tol": self.tol,
            "checks": [
                {
                    "name": o.name,
                    "holds": o.holds,
                    "worst_slack": o.worst_slack,
                    "witness_k": o.witness_k,
                }
                for o in self.outcomes
            ],
        }


def _outcome(name: str, tol: float, rows: list[DetailRow]) -> CheckOutcome:
    worst = min(rows, key=lambda r: r.slack)
    return CheckOutcome(
        name=name,
        holds=worst.slack >= -tol,
        worst_slack=worst.slack,
        witness_k=worst.k,
        details=tuple(rows),
    )


def _vacuous(name: str) -> CheckOutcome:
    return CheckOutcome(name=name, holds=True, worst_slack=math.inf, witness_k=None, details=())


def _in1(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    rows = []
    for k in range(1, sp.graph.n + 1):
        lhs = sp.mu.at(k) + sp.lam.at(k)
        lo = lhs - st.min_degree
        hi = st.max_degree - lhs
        if lo <= hi:
            rows.append(DetailRow(k, lhs, float(st.min_degree), lo))
        else:
            rows.append(DetailRow(k, lhs, float(st.max_degree), hi))
    return _outcome("in1", tol, rows)


def _pair_sums(sp: GraphSpectra) -> list[tuple[int, float]]:
    """(k, mu_k(G) + mu_{n-k+2}(complement)) for k = 2..n."""
    n = sp.graph.n
    return [(k, sp.mu.at(k) + sp.mu_co.at(n - k + 2)) for k in range(2, n + 1)]


def _in2(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    if sp.graph.n < 2:
        return _vacuous("in2")
    rhs = float(st.min_degree - st.max_degree - 1)
    rows = [DetailRow(k, lhs, rhs, lhs - rhs) for k, lhs in _pair_sums(sp)]
    return _outcome("in2", tol, rows)


def _classic_upper(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    if sp.graph.n < 2:
        return _vacuous("classic_upper")
    rows = [DetailRow(k, lhs, -1.0, -1.0 - lhs) for k, lhs in _pair_sums(sp)]
    return _outcome("classic_upper", tol, rows)


def _laplacian_complement(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    n = sp.graph.n
    if n < 2:
        return _vacuous("laplacian_complement")
    rows = []
    for k in range(2, n + 1):
        lhs = sp.lam.at(k) + sp.lam_co.at(n - k + 2)
        rows.append(DetailRow(k, lhs, float(n), -abs(lhs - n)))
    return _outcome("laplacian_complement", tol, rows)


def _grone_merris(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    n = sp.graph.n
    lhs = sp.lam.at(n)
    rows = [DetailRow(n, lhs, float(st.max_degree), lhs - st.max_degree)]
    return _outcome("grone_merris", tol, rows)


def _degree_spread(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    n = sp.graph.n
    lhs = float(n - 1 + st.max_degree - st.min_degree)
    rhs = sp.lam.at(n) + sp.lam_co.at(n)
    rows = [DetailRow(n, lhs, rhs, rhs - lhs)]
    return _outcome("degree_spread", tol, rows)


def _i1(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    g = sp.graph
    mid = sp.mu.at(1) - 2.0 * g.m / g.n
    lower = 0.0 if g.m == 0 else s * s / (2.0 * g.n * g.n * math.sqrt(2.0 * g.m))
    upper = math.sqrt(s)
    lo = mid - lower
    hi = upper - mid
    if lo <= hi:
        rows = [DetailRow(1, mid, lower, lo)]
    else:
        rows = [DetailRow(1, mid, upper, hi)]
    return _outcome("i1", tol, rows)


def _i2(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    if sp.graph.n < 2:
        return _vacuous("i2")
    rhs = -1.0 - 2.0 * math.sqrt(2.0 * s)
    rows = [DetailRow(k, lhs, rhs, lhs - rhs) for k, lhs in _pair_sums(sp)]
    return _outcome("i2", tol, rows)


def _i3(sp: GraphSpectra, st: DegreeStats, s: float, tol: float) -> CheckOutcome:
    n = sp.graph.n
    if n < 2:
        return _vacuous("i3")
    lhs = sp.mu.at(n) + sp.mu_co.at(n)
    rhs = -1.0 - s * s / (2.0 * n ** 3)
    rows = [DetailRow(n, lhs, rhs, rhs - lhs)]
    return _outcome("i3", tol, rows)


_CHECKS = {
    "in1": _in1,
    "in2": _in2,
    "classic_upper": _classic_upper,
    "laplacian_complement": _laplacian_complement,
    "grone_merris": _grone_merris,
    "degree_spread": _degree_spread,
    "i1": _i1,
    "i2": _i2,
    "i3": _i3,
}


def _run(name: str, g: Graph, tol: float) -> CheckOutcome:
    sp = graph_spectra(g, tol=SOLVER_TOL)
    return _CHECKS[name](sp, degree_stats(g), irregularity(g), tol)


def check_in1(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """min_degree <= mu_k + lambda_k <= max_degree for all 1 <= k <= n."""
    return _run("in1", g, tol)


def check_in2(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """mu_k(G) + mu_{n-k+2}(comp) >= min_degree - max_degree - 1 for 2 <= k <= n."""
    return _run("in2", g, tol)


def check_classic_upper(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """mu_k(G) + mu_{n-k+2}(comp) <= -1 for 2 <= k <= n."""
    return _run("classic_upper", g, tol)


def check_laplacian_complement(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """lambda_k(G) + lambda_{n-k+2}(comp) = n for 2 <= k <= n, within tol."""
    return _run("laplacian_complement", g, tol)


def check_grone_merris(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """lambda_n(G) >= max_degree."""
    return _run("grone_merris", g, tol)


def check_degree_spread(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """n - 1 + max_degree - min_degree <= lambda_n(G) + lambda_n(comp)."""
    return _run("degree_spread", g, tol)


def check_i1(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """s^2/(2 n^2 sqrt(2m)) <= mu_1 - 2m/n <= sqrt(s), with s the irregularity.

    When m = 0 the lower term is defined as 0 (s is 0 there as well), which
    keeps the check total.
    """
    return _run("i1", g, tol)


def check_i2(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """mu_k(G) + mu_{n-k+2}(comp) >= -1 - 2 sqrt(2 s) for 2 <= k <= n."""
    return _run("i2", g, tol)


def check_i3(g: Graph, tol: float = COMPARISON_TOL) -> CheckOutcome:
    """mu_n(G) + mu_n(comp) <= -1 - s^2/(2 n^3); vacuous at n = 1."""
    return _run("i3", g, tol)


def check_all(g: Graph, tol: float = COMPARISON_TOL) -> BoundSet:
    """Run all nine checks on shared spectra, in registration order."""
    sp = graph_spectra(g, tol=SOLVER_TOL)
    st = degree_stats(g)
    s = irregularity(g)
    outcomes = tuple(_CHECKS[name](sp, st, s, tol) for name in CHECK_NAMES)
    return BoundSet(graph_id=graph6_encode(g), n=g.n, m=g.m, tol=tol, outcomes=outcomes)
