"""Exact minimum arc count of an n-vertex oriented graph of weak diameter <= 2.

Brute force with pruning, for small ``n``. For each arc budget ``m``, counting
upward, a depth-first search assigns every vertex pair (lexicographic order) one
of: no arc, ``u -> v``, ``v -> u``. The first budget that admits an absolute
clique with exactly ``m`` arcs is the answer.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .digraph import OrientedGraph, is_absolute_clique, popcount, to_edgelist
from .sequence import x

log = logging.getLogger(__name__)

NONE, FORWARD, BACKWARD = 0, 1, 2


@dataclass(frozen=True)
class SearchConfig:
    n: int
    m_start: int | None = None
    m_end: int | None = None
    node_budget: int | None = None
    parallel: bool = False
    threads: int = 1
    symmetry: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m_start is not None and self.m_end is not None and self.m_start > self.m_end:
            raise ValueError(f"m_start={self.m_start} exceeds m_end={self.m_end}")


@dataclass
class SearchOutcome:
    """Result of :func:`f2_exact`.

    ``f2`` and ``witness`` are ``None`` when no clique was found inside the budget
    window; ``exhaustive`` is false iff the node budget cut the search short.
    """

    n: int
    f2: int | None
    witness: OrientedGraph | None
    nodes_explored: int
    exhaustive: bool
    rounds: list[tuple[int, int]] = field(default_factory=list)  # (m, nodes) per budget

    @property
    def found(self) -> bool:
        return self.witness is not None

    def log_lines(self) -> list[str]:
        """Line-oriented ``key=value`` record of the run."""
        lines = [f"round m={m} nodes={k}" for m, k in self.rounds]
        lines.append(
            f"result n={self.n} f2={'none' if self.f2 is None else self.f2} "
            f"nodes={self.nodes_explored} exhaustive={str(self.exhaustive).lower()}"
        )
        return lines


def lower_bound_seed(n: int) -> int:
    """``max(ceil((n/2) log2(n/2)), n - 1)`` for ``n >= 2``, else 0.

    The ceiling is exact: ``c >= (n/2) log2(n/2)`` iff ``2**(2c + n) >= n**n``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0
    target = n**n
    c = max(0, math.floor(n / 2 * math.log2(n / 2)) - 1)
    while 2 ** (2 * c + n) < target:
        c += 1
    return max(c, n - 1)


class _Search:
    """Mutable DFS state for one arc budget. Pairs are indexed in lex order."""

    def __init__(self, n: int, m: int, symmetry: bool, node_budget: int | None, nodes_before: int = 0):
        self.n = n
        self.m = m
        self.symmetry = symmetry
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.full = (1 << n) - 1
        # completes[k] = vertex whose last pair is pairs[k], else -1
        self.completes = [u if v == n - 1 else -1 for u, v in self.pairs]
        self.out = [0] * n
        self.inn = [0] * n
        self.decided = [1 << v for v in range(n)]  # decided[v] bit w: pair {v, w} fixed
        self.used = 0
        self.nodes = nodes_before
        self.node_budget = node_budget
        self.budget_hit = False
        self.found: OrientedGraph | None = None
        self.max_gain = max(1, 2 * n - 3)  # pairs one arc can newly make seeing

    # -- pruning ---------------------------------------------------------------

    def seen(self, u: int) -> int:
        out, inn = self.out, self.inn
        s = out[u] | inn[u]
        o = out[u]
        while o:
            low = o & -o
            s |= out[low.bit_length() - 1]
            o ^= low
        i = inn[u]
        while i:
            low = i & -i
            s |= inn[low.bit_length() - 1]
            i ^= low
        return s | (1 << u)

    def could_see(self, a: int, v: int) -> bool:
        """Can completed vertex ``a`` still come to see ``v`` by later decisions?"""
        out, inn = self.out, self.inn
        if (out[a] | inn[a]) >> v & 1:
            return True
        open_v = ~self.decided[v]
        # a -> w -> v: w->v present or pair {w, v} still open
        if out[a] & (inn[v] | open_v):
            return True
        # v -> w -> a
        return bool(inn[a] & (out[v] | open_v))

    def prune(self, k: int) -> bool:
        """True if the subtree below a node with ``k`` pairs decided cannot hold a clique."""
        remaining = len(self.pairs) - k
        if self.used > self.m or self.used + remaining < self.m:
            return True
        n = self.n
        if k > 0:
            u = self.completes[k - 1]
            if u >= 0:
                # vertices 0..u are complete: their mutual seeing is final
                if self.seen(u) & ((1 << (u + 1)) - 1) != (1 << (u + 1)) - 1:
                    return True
                for a in range(u + 1):
                    for v in range(u + 1, n):
                        if not self.could_see(a, v):
                            return True
                if self.symmetry and u == 0:
                    if popcount(self.out[0]) < popcount(self.inn[0]):
                        return True
        if self.symmetry and k >= n - 1:
            d0 = popcount(self.out[0] | self.inn[0])
            for v in range(1, n):
                if popcount(self.out[v] | self.inn[v]) > d0:
                    return True
        # counting bound on currently unseen pairs
        unseen = 0
        full = self.full
        for v in range(n):
            unseen += popcount(full & ~self.seen(v))
        unseen //= 2
        if unseen > (self.m - self.used) * self.max_gain:
            return True
        return False

    # -- search ------------------------------------------------------------------

    def run(self, k: int = 0) -> bool:
        """Depth-first search from pair index ``k``; True once a witness is stored."""
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.budget_hit = True
            return False
        if self.prune(k):
            return False
        if k == len(self.pairs):
            g = OrientedGraph(self.n, tuple(self.out), tuple(self.inn))
            if self.used == self.m and is_absolute_clique(g):
                self.found = g
                return True
            return False
        u, v = self.pairs[k]
        for choice in self.choices(k, u, v):
            self.apply(u, v, choice)
            hit = self.run(k + 1)
            self.undo(u, v, choice)
            if hit or self.budget_hit:
                return hit
        return False

    def choices(self, k: int, u: int, v: int) -> tuple[int, ...]:
        if self.symmetry and u == 0 and v > 1:
            # row of vertex 0 is sorted: out-neighbours, then in-neighbours, then non-neighbours
            prev = 1 << (v - 1)
            if self.out[0] & prev:
                return (FORWARD, BACKWARD, NONE)
            if self.inn[0] & prev:
                return (BACKWARD, NONE)
            return (NONE,)
        return (FORWARD, BACKWARD, NONE)

    def apply(self, u: int, v: int, choice: int) -> None:
        if choice == FORWARD:
            self.out[u] |= 1 << v
            self.inn[v] |= 1 << u
            self.used += 1
        elif choice == BACKWARD:
            self.out[v] |= 1 << u
            self.inn[u] |= 1 << v
            self.used += 1
        self.decided[u] |= 1 << v
        self.decided[v] |= 1 << u

    def undo(self, u: int, v: int, choice: int) -> None:
        if choice == FORWARD:
            self.out[u] &= ~(1 << v)
            self.inn[v] &= ~(1 << u)
            self.used -= 1
        elif choice == BACKWARD:
            self.out[v] &= ~(1 << u)
            self.inn[u] &= ~(1 << v)
            self.used -= 1
        self.decided[u] &= ~(1 << v)
        self.decided[v] &= ~(1 << u)


def _prefixes(n: int, depth: int, symmetry: bool) -> list[tuple[int, ...]]:
    """Assignments of the first ``depth`` pairs that survive the root-level cuts."""
    probe = _Search(n, 0, symmetry, None)
    result = []

    def walk(k: int, prefix: tuple[int, ...]) -> None:
        if k == depth:
            result.append(prefix)
            return
        u, v = probe.pairs[k]
        for c in probe.choices(k, u, v):
            probe.apply(u, v, c)
            walk(k + 1, prefix + (c,))
            probe.undo(u, v, c)

    walk(0, ())
    return result


def _run_subtree(args: tuple[int, int, bool, tuple[int, ...]]) -> tuple[list[tuple[int, int]] | None, int]:
    n, m, symmetry, prefix = args
    s = _Search(n, m, symmetry, None)
    for k, c in enumerate(prefix):
        u, v = s.pairs[k]
        s.apply(u, v, c)
        s.nodes += 1
        if s.prune(k + 1):
            return None, s.nodes
    s.nodes -= 1  # run() counts the start node again
    if s.run(len(prefix)):
        return s.found.arcs(), s.nodes
    return None, s.nodes


def _search_budget(cfg: SearchConfig, m: int, nodes_before: int) -> tuple[OrientedGraph | None, int, bool]:
    """Search one budget; return (witness, nodes used in this round, budget_hit)."""
    n = cfg.n
    npairs = n * (n - 1) // 2
    if cfg.parallel and cfg.threads > 1 and npairs >= 6:
        depth = min(npairs - 1, 5)
        jobs = [(n, m, cfg.symmetry, p) for p in _prefixes(n, depth, cfg.symmetry)]
        nodes = 0
        best: list[tuple[int, int]] | None = None
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for arcs, k in pool.map(_run_subtree, jobs, chunksize=4):
                nodes += k
                if arcs is not None and best is None:
                    best = arcs
        witness = OrientedGraph.from_arcs(n, best) if best is not None else None
        return witness, nodes, False
    s = _Search(n, m, cfg.symmetry, cfg.node_budget, nodes_before)
    s.run()
    return s.found, s.nodes - nodes_before, s.budget_hit


def f2_exact(cfg: SearchConfig | int) -> SearchOutcome:
    """Smallest arc count of an absolute oriented clique on ``cfg.n`` vertices.

    Budgets run from ``max(m_start, lower_bound_seed(n))`` to ``m_end`` (default:
    ``x(n)``, which the recursive construction always attains). The parallel path
    ignores ``node_budget``.
    """
    if isinstance(cfg, int):
        cfg = SearchConfig(cfg)
    n = cfg.n
    m = lower_bound_seed(n) if cfg.m_start is None else max(cfg.m_start, lower_bound_seed(n))
    m_end = x(n) if cfg.m_end is None else cfg.m_end
    outcome = SearchOutcome(n, None, None, 0, True)
    while m <= m_end:
        witness, nodes, hit = _search_budget(cfg, m, outcome.nodes_explored)
        outcome.nodes_explored += nodes
        outcome.rounds.append((m, nodes))
        log.info("n=%d m=%d nodes=%d found=%s", n, m, nodes, witness is not None)
        if witness is not None:
            outcome.f2, outcome.witness = m, witness
            return outcome
        if hit:
            outcome.exhaustive = False
            return outcome
        m += 1
    return outcome


def enumerate_all(n: int) -> int | None:
    """Unpruned minimum over all ``3**(n choose 2)`` pair assignments. Tiny ``n`` only."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = None
    for assignment in itertools.product((NONE, FORWARD, BACKWARD), repeat=len(pairs)):
        arcs = [(u, v) if c == FORWARD else (v, u) for (u, v), c in zip(pairs, assignment) if c != NONE]
        if best is not None and len(arcs) >= best:
            continue
        if is_absolute_clique(OrientedGraph.from_arcs(n, arcs)):
            best = len(arcs)
    return best


def prune_state(n: int, m: int, arcs_by_pair: dict[tuple[int, int], int], symmetry: bool = False) -> bool:
    """Evaluate the search's cut rule on a partial assignment.

    ``arcs_by_pair`` maps decided pairs ``(u, v)``, ``u < v``, to ``NONE``,
    ``FORWARD`` or ``BACKWARD``; decided pairs must form a lexicographic prefix.
    """
    s = _Search(n, m, symmetry, None)
    k = len(arcs_by_pair)
    prefix = s.pairs[:k]
    if set(prefix) != set(arcs_by_pair):
        raise ValueError("decided pairs must be a lexicographic prefix")
    for u, v in prefix:
        s.apply(u, v, arcs_by_pair[(u, v)])
    return s.prune(k)


@dataclass
class ConjectureRow:
    n: int
    f2: int | None
    xn: int
    exhaustive: bool
    witness: OrientedGraph | None

    @property
    def match(self) -> bool:
        return self.f2 == self.xn and self.exhaustive


def conjecture_report(n_max: int = 7, cap: int = 7, **cfg_kwargs) -> list[ConjectureRow]:
    """Compare the exact minimum with ``x(n)`` for ``n = 1..n_max``."""
    if n_max > cap:
        raise ValueError(f"n_max={n_max} exceeds the feasibility cap {cap}")
    rows = []
    for n in range(1, n_max + 1):
        out = f2_exact(SearchConfig(n, **cfg_kwargs))
        rows.append(ConjectureRow(n, out.f2, x(n), out.exhaustive, out.witness))
    return rows


def format_report(rows: list[ConjectureRow]) -> str:
    lines = ["n,f2,xn,match"]
    for r in rows:
        f2 = "none" if r.f2 is None else str(r.f2)
        tag = "yes" if r.match else ("MISMATCH" if r.exhaustive else "incomplete")
        lines.append(f"{r.n},{f2},{r.xn},{tag}")
    for r in rows:
        if r.witness is not None:
            lines.append(f"# witness n={r.n}")
            lines.extend(to_edgelist(r.witness).splitlines())
    return "\n".join(lines) + "\n"
