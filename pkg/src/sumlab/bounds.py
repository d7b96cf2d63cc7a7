"""Closed-form lower bounds for the sum and difference indices.

Three bound families are evaluated: an odd-cycle-count bound on the sum
index, and two degree-sequence bounds (one per index).  ``bound_report``
aggregates them into the best integer lower bounds for a graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, degree_sequence, emit_graph6, count_cycles_of_length


def odd_cycle_bound(g: Graph, k: int) -> float:
    """Sum-index lower bound from cycles of length 2k+1.

    If the graph contains s >= 1 cycles of length 2k+1, then the sum index
    is at least ((4k+2)*s)^(1/(2k+1)) + 1.  Returns 1.0 when s = 0 (vacuous).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    s = count_cycles_of_length(g, 2 * k + 1)
    if s == 0:
        return 1.0
    return ((4 * k + 2) * s) ** (1.0 / (2 * k + 1)) + 1.0


def _odd_cycle_int_bound(g: Graph, k: int) -> int:
    """Integer strengthening of odd_cycle_bound, 0 when vacuous.

    Uses exact integer root extraction so that an exactly integral bound is
    not bumped up by float noise: with m = (4k+2)s and r = floor(m^(1/(2k+1))),
    the bound is r+1 when r^(2k+1) = m and r+2 otherwise.
    """
    s = count_cycles_of_length(g, 2 * k + 1)
    if s == 0:
        return 0
    m = (4 * k + 2) * s
    e = 2 * k + 1
    r = round(m ** (1.0 / e))
    while r**e > m:
        r -= 1
    while (r + 1) ** e <= m:
        r += 1
    return r + 1 if r**e == m else r + 2


def diff_degree_bound(g: Graph) -> int:
    """max over k >= 1 of (2k-th smallest degree) - k + 1, floored at 0."""
    ds = degree_sequence(g)
    best = 0
    for k in range(1, g.n // 2 + 1):
        best = max(best, ds.delta(2 * k) - k + 1)
    return best


def sum_degree_bound(g: Graph) -> int:
    """max over k >= 1 of delta_k + delta_{k+1} - k, floored at 0."""
    ds = degree_sequence(g)
    best = 0
    for k in range(1, g.n):
        best = max(best, ds.delta(k) + ds.delta(k + 1) - k)
    return best


def default_max_k_cycles(g: Graph) -> int:
    # odd cycles of length 2k+1 need at least 2k+1 vertices
    return max(1, (g.n - 1) // 2)


def best_sm_lower(g: Graph, max_k_cycles: int | None = None) -> int:
    if g.m == 0:
        return 0
    if max_k_cycles is None:
        max_k_cycles = default_max_k_cycles(g)
    best = max(1, sum_degree_bound(g))
    for k in range(1, max_k_cycles + 1):
        best = max(best, _odd_cycle_int_bound(g, k))
    return best


def best_df_lower(g: Graph) -> int:
    if g.m == 0:
        return 0
    return max(1, diff_degree_bound(g))


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    odd_cycle_bounds: dict[int, float]
    diff_degree_bound: int
    sum_degree_bound: int
    min_degree_bound: int
    best_sm_lower: int
    best_df_lower: int

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "odd_cycle_bounds": {str(k): v for k, v in self.odd_cycle_bounds.items()},
            "diff_degree_bound": self.diff_degree_bound,
            "sum_degree_bound": self.sum_degree_bound,
            "min_degree_bound": self.min_degree_bound,
            "best_sm_lower": self.best_sm_lower,
            "best_df_lower": self.best_df_lower,
        }


def bound_report(g: Graph, max_k_cycles: int | None = None) -> BoundReport:
    """Evaluate every bound for one graph.

    ``min_degree_bound`` reports the simpler bound df >= min degree, which
    the k=1 term of diff_degree_bound always dominates.
    """
    if max_k_cycles is None:
        max_k_cycles = default_max_k_cycles(g)
    odd = {k: odd_cycle_bound(g, k) for k in range(1, max_k_cycles + 1)}
    ds = degree_sequence(g)
    if g.m == 0:
        return BoundReport(emit_graph6(g), odd, 0, 0, 0, 0, 0)
    return BoundReport(
        graph_id=emit_graph6(g),
        odd_cycle_bounds=odd,
        diff_degree_bound=diff_degree_bound(g),
        sum_degree_bound=sum_degree_bound(g),
        min_degree_bound=ds.min_degree,
        best_sm_lower=best_sm_lower(g, max_k_cycles),
        best_df_lower=best_df_lower(g),
    )
