"""The witness family ``O_n``: small base cliques glued recursively through a hub vertex."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .digraph import OrientedGraph, is_absolute_clique, is_cut_vertex
from .sequence import split, x

BASE_ARCS = {
    1: [],
    2: [(0, 1)],
    3: [(0, 1), (1, 2)],
    4: [(0, 1), (1, 2), (1, 3), (2, 3)],
    5: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
}


@dataclass(frozen=True)
class SplitChoice:
    n1: int
    n2: int


def base_clique(n: int) -> OrientedGraph:
    """The hand-drawn cliques on 1 to 5 vertices."""
    if n not in BASE_ARCS:
        raise ValueError(f"base cliques exist for 1 <= n <= 5, got {n}")
    return OrientedGraph.from_arcs(n, BASE_ARCS[n])


def optimal_split(n: int) -> SplitChoice:
    """Part sizes ``n1 >= n2`` with ``n1 + n2 = n - 1`` minimizing ``x_n1 + x_n2``."""
    if n < 6:
        raise ValueError(f"optimal_split needs n >= 6, got {n}")
    return SplitChoice(*split(n))


def build_O(n: int) -> OrientedGraph:
    """The recursive clique on ``n`` vertices with ``x(n)`` arcs.

    For ``n >= 6``: a copy of ``O_n1`` on labels ``0..n1-1`` with every vertex
    pointing into the hub, a copy of ``O_n2`` on ``n1..n-2`` that the hub points
    into, and the hub itself as vertex ``n - 1``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _build(n)


@lru_cache(maxsize=256)
def _build(n: int) -> OrientedGraph:
    if n <= 5:
        return base_clique(n)
    s = optimal_split(n)
    first, second = _build(s.n1), _build(s.n2)
    hub = n - 1
    arcs = list(first.arcs())
    arcs += [(u + s.n1, v + s.n1) for u, v in second.arcs()]
    arcs += [(u, hub) for u in range(s.n1)]
    arcs += [(hub, v) for v in range(s.n1, s.n1 + s.n2)]
    return OrientedGraph.from_arcs(n, arcs)


@dataclass
class FamilyReport:
    """Per-``n`` outcome of :func:`verify_family`; lists hold failing ``n`` values."""

    n_max: int
    clique_cap: int
    arc_count_failures: list[int] = field(default_factory=list)
    clique_failures: list[int] = field(default_factory=list)
    hub_degree_failures: list[int] = field(default_factory=list)
    hub_cut_failures: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.arc_count_failures or self.clique_failures or self.hub_degree_failures or self.hub_cut_failures)


def verify_family(n_max: int, clique_cap: int = 512) -> FamilyReport:
    """Check arc counts for all ``n <= n_max``; clique and hub checks up to ``clique_cap``."""
    report = FamilyReport(n_max, clique_cap)
    for n in range(1, n_max + 1):
        g = build_O(n)
        if g.num_arcs != x(n):
            report.arc_count_failures.append(n)
        if n > clique_cap:
            continue
        if not is_absolute_clique(g):
            report.clique_failures.append(n)
        if n >= 6:
            hub = n - 1
            if g.degree(hub) != n - 1:
                report.hub_degree_failures.append(n)
            if not is_cut_vertex(g, hub):
                report.hub_cut_failures.append(n)
    return report
