"""Oriented graphs on vertices ``0..n-1`` with int-bitset adjacency.

Graphs are immutable values; every operation returns a new graph. ``out[v]`` has
bit ``w`` set iff ``v -> w`` is an arc, and ``inn`` is its exact transpose.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field


class OrientationError(ValueError):
    """An arc would create a self-loop, a 2-cycle or a duplicate."""


class NotACliqueError(ValueError):
    """An operation that needs an absolute oriented clique was given something else."""


class ShrinkContradiction(RuntimeError):
    """No valid merge pair was found where one must exist. Indicates a bug."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...] = field(repr=False)

    @classmethod
    def empty(cls, n: int) -> OrientedGraph:
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        return cls(n, (0,) * n, (0,) * n)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> OrientedGraph:
        """Build a graph, rejecting self-arcs, duplicates and 2-cycles."""
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            _check_new_arc(n, out, u, v)
            out[u] |= 1 << v
            inn[v] |= 1 << u
        return cls(n, tuple(out), tuple(inn))

    @property
    def num_arcs(self) -> int:
        return sum(popcount(o) for o in self.out)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs ``(u, v)``, sorted by tail then head."""
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out[u] | self.inn[u]) >> v & 1)

    def neighbors(self, v: int) -> int:
        """Bitset of all vertices adjacent to ``v``."""
        return self.out[v] | self.inn[v]

    def degree(self, v: int) -> int:
        return popcount(self.out[v] | self.inn[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.inn[v])

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` if the representation is inconsistent."""
        assert len(self.out) == len(self.inn) == self.n
        full = (1 << self.n) - 1
        for v in range(self.n):
            assert not self.out[v] >> v & 1, f"self-arc at {v}"
            assert self.out[v] & ~full == 0 and self.inn[v] & ~full == 0, f"stray bit at {v}"
            assert self.out[v] & self.inn[v] == 0, f"2-cycle through {v}"
            for w in range(self.n):
                assert bool(self.out[v] >> w & 1) == bool(self.inn[w] >> v & 1), f"transpose broken at {v},{w}"


def _check_new_arc(n: int, out: list[int] | tuple[int, ...], u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"arc {u}->{v} out of range for n={n}")
    if u == v:
        raise OrientationError(f"self-arc {u}->{u}")
    if out[u] >> v & 1:
        raise OrientationError(f"duplicate arc {u}->{v}")
    if out[v] >> u & 1:
        raise OrientationError(f"arc {u}->{v} would form a 2-cycle with {v}->{u}")


def _check_vertex(g: OrientedGraph, x: int) -> None:
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range for n={g.n}")


def add_arc(g: OrientedGraph, u: int, v: int) -> OrientedGraph:
    _check_new_arc(g.n, g.out, u, v)
    out = list(g.out)
    inn = list(g.inn)
    out[u] |= 1 << v
    inn[v] |= 1 << u
    return OrientedGraph(g.n, tuple(out), tuple(inn))


def sees(g: OrientedGraph, u: int, v: int) -> bool:
    """True iff ``u`` and ``v`` are adjacent or joined by a directed 2-path either way."""
    if u == v:
        raise ValueError("sees() needs two distinct vertices")
    _check_vertex(g, u)
    _check_vertex(g, v)
    if g.adjacent(u, v):
        return True
    return bool(g.out[u] & g.inn[v] or g.out[v] & g.inn[u])


def seen_set(g: OrientedGraph, u: int) -> int:
    """Bitset of vertices that ``u`` sees (excluding ``u``)."""
    seen = g.out[u] | g.inn[u]
    for w in bits(g.out[u]):
        seen |= g.out[w]
    for w in bits(g.inn[u]):
        seen |= g.inn[w]
    return seen & ~(1 << u)


def is_absolute_clique(g: OrientedGraph) -> bool:
    """True iff every pair of distinct vertices sees each other (weak diameter <= 2).

    Runs one bitset union per arc endpoint rather than one test per pair.
    """
    full = (1 << g.n) - 1
    return all(seen_set(g, u) | (1 << u) == full for u in range(g.n))


def unseen_pairs(g: OrientedGraph) -> list[tuple[int, int]]:
    """Pairs ``u < v`` that do not see each other."""
    full = (1 << g.n) - 1
    out = []
    for u in range(g.n):
        missing = full & ~seen_set(g, u) & ~((1 << (u + 1)) - 1)
        out.extend((u, v) for v in bits(missing))
    return out


def distances_from(g: OrientedGraph, s: int) -> list[float]:
    """Directed BFS distances from ``s`` (``math.inf`` when unreachable)."""
    dist: list[float] = [math.inf] * g.n
    dist[s] = 0
    visited = 1 << s
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        reach = 0
        for v in frontier:
            reach |= g.out[v]
        reach &= ~visited
        visited |= reach
        frontier = list(bits(reach))
        for v in frontier:
            dist[v] = d
    return dist


def weak_diameter(g: OrientedGraph) -> float:
    """Max over pairs of the shorter directed distance between them.

    Returns ``math.inf`` if some pair has no directed path in either direction,
    and 0 for graphs with fewer than two vertices.
    """
    if g.n <= 1:
        return 0
    dist = [distances_from(g, s) for s in range(g.n)]
    return max(min(dist[u][v], dist[v][u]) for u in range(g.n) for v in range(u + 1, g.n))


def push(g: OrientedGraph, x: int) -> OrientedGraph:
    """Reverse every arc incident to ``x``."""
    _check_vertex(g, x)
    out = list(g.out)
    inn = list(g.inn)
    bx = 1 << x
    for w in bits(g.inn[x]):  # w -> x becomes x -> w
        out[w] &= ~bx
        inn[w] |= bx
    for w in bits(g.out[x]):  # x -> w becomes w -> x
        inn[w] &= ~bx
        out[w] |= bx
    out[x], inn[x] = g.inn[x], g.out[x]
    return OrientedGraph(g.n, tuple(out), tuple(inn))


def push_all(g: OrientedGraph, xs: Iterable[int]) -> OrientedGraph:
    for x in xs:
        g = push(g, x)
    return g


def agree_on_common_neighbors(g: OrientedGraph, x: int, y: int) -> bool:
    """True iff each common neighbour of non-adjacent ``x, y`` has the same orientation to both."""
    if x == y:
        raise ValueError("need two distinct vertices")
    _check_vertex(g, x)
    _check_vertex(g, y)
    if g.adjacent(x, y):
        raise ValueError(f"vertices {x} and {y} are adjacent")
    return not (g.inn[x] & g.out[y] or g.out[x] & g.inn[y])


def common_neighbors(g: OrientedGraph, x: int, y: int) -> int:
    return g.neighbors(x) & g.neighbors(y)


def _compact(g: OrientedGraph, removed: int, extra_out: int | None = None, extra_in: int | None = None) -> OrientedGraph:
    """Drop the vertices in bitset ``removed``, keep the rest in order.

    If ``extra_out``/``extra_in`` are given (bitsets over the old labels), a new
    vertex with those neighbourhoods is appended last.
    """
    keep = [v for v in range(g.n) if not removed >> v & 1]
    relabel = {v: i for i, v in enumerate(keep)}

    def remap(mask: int) -> int:
        r = 0
        for w in bits(mask & ~removed):
            r |= 1 << relabel[w]
        return r

    out = [remap(g.out[v]) for v in keep]
    inn = [remap(g.inn[v]) for v in keep]
    if extra_out is not None:
        new = len(keep)
        o, i = remap(extra_out), remap(extra_in or 0)
        for w in bits(o):
            inn[w] |= 1 << new
        for w in bits(i):
            out[w] |= 1 << new
        out.append(o)
        inn.append(i)
    return OrientedGraph(len(out), tuple(out), tuple(inn))


def merge(g: OrientedGraph, x: int, y: int) -> OrientedGraph:
    """Identify non-adjacent agreeing vertices ``x`` and ``y``.

    The merged vertex gets the union of their in- and out-neighbourhoods and the
    last label; the other vertices keep their relative order.
    """
    if not agree_on_common_neighbors(g, x, y):
        raise OrientationError(f"vertices {x} and {y} disagree on a common neighbour")
    removed = (1 << x) | (1 << y)
    return _compact(g, removed, g.out[x] | g.out[y], g.inn[x] | g.inn[y])


def is_source(g: OrientedGraph, x: int) -> bool:
    _check_vertex(g, x)
    return g.inn[x] == 0


def delete_vertex(g: OrientedGraph, x: int) -> OrientedGraph:
    _check_vertex(g, x)
    return _compact(g, 1 << x)


def is_cut_vertex(g: OrientedGraph, v: int) -> bool:
    """True iff deleting ``v`` disconnects the underlying undirected graph (n >= 3)."""
    _check_vertex(g, v)
    if g.n < 3:
        return False
    full = ((1 << g.n) - 1) & ~(1 << v)
    start = 0 if v != 0 else 1
    seen = frontier = 1 << start
    while frontier:
        reach = 0
        for w in bits(frontier):
            reach |= g.out[w] | g.inn[w]
        frontier = reach & full & ~seen
        seen |= frontier
    return seen != full


@dataclass(frozen=True)
class ShrinkStep:
    """One application of the shrinking procedure.

    ``branch`` is ``"merge"`` or ``"delete-source"``; ``pushed`` lists the
    in-neighbours of ``w`` pushed before the branch fired; ``pair`` is the merged
    pair (labels of the input graph) in the merge branch.
    """

    graph: OrientedGraph
    branch: str
    w: int
    pushed: tuple[int, ...]
    pair: tuple[int, int] | None = None


def default_shrink_vertex(g: OrientedGraph) -> int:
    """Vertex of maximum in-degree, lowest label on ties."""
    return max(range(g.n), key=lambda v: (g.in_degree(v), -v))


def shrink_step(g: OrientedGraph, w: int | None = None) -> ShrinkStep:
    """Turn a clique on ``n`` vertices into a clique on ``n - 1`` vertices with fewer arcs.

    Push the in-neighbours of ``w`` one at a time in ascending order. If a push
    breaks the clique property, the pushed vertex ``x`` has a non-adjacent partner
    agreeing with it on all common neighbours; their merge is again a clique and
    loses the arcs to the (non-empty) common neighbourhood. If no push breaks it,
    ``w`` ends up a source and is deleted.
    """
    if g.n < 2 or g.num_arcs == 0:
        raise ValueError("shrinking needs at least two vertices and one arc")
    if not is_absolute_clique(g):
        raise NotACliqueError("input graph is not an absolute oriented clique")
    if w is None:
        w = default_shrink_vertex(g)
    _check_vertex(g, w)

    current = g
    pushed: list[int] = []
    for x in bits(g.inn[w]):
        current = push(current, x)
        pushed.append(x)
        if is_absolute_clique(current):
            continue
        for y in range(current.n):
            if y == x or current.adjacent(x, y):
                continue
            if not common_neighbors(current, x, y):
                continue  # merging would not lose an arc
            if not agree_on_common_neighbors(current, x, y):
                continue
            merged = merge(current, x, y)
            if is_absolute_clique(merged):
                return ShrinkStep(merged, "merge", w, tuple(pushed), (x, y))
        raise ShrinkContradiction(f"no mergeable partner for pushed vertex {x} (w={w})")
    assert is_source(current, w)
    return ShrinkStep(delete_vertex(current, w), "delete-source", w, tuple(pushed))


def shrink_clique(g: OrientedGraph, w: int | None = None) -> OrientedGraph:
    return shrink_step(g, w).graph


def shrink_chain(g: OrientedGraph) -> list[ShrinkStep]:
    """Shrink repeatedly (default vertex choice) until a single vertex is left."""
    steps = []
    while g.n > 1:
        step = shrink_step(g)
        steps.append(step)
        g = step.graph
    return steps


# --- serialization -----------------------------------------------------------


class EdgeListError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def to_edgelist(g: OrientedGraph) -> str:
    arcs = g.arcs()
    lines = [f"{g.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> OrientedGraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` meaning arc ``u -> v``."""
    rows = [(i, line.split()) for i, line in enumerate(text.splitlines(), start=1)]
    rows = [(i, parts) for i, parts in rows if parts]
    if not rows:
        raise EdgeListError(1, "empty input, expected header 'n m'")
    lineno, header = rows[0]
    n, m = _int_pair(lineno, header)
    if n < 0 or m < 0:
        raise EdgeListError(lineno, "n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise EdgeListError(at, f"header declares {m} arcs but {len(body)} arc lines follow")
    out = [0] * n
    inn = [0] * n
    for lineno, parts in body:
        u, v = _int_pair(lineno, parts)
        try:
            _check_new_arc(n, out, u, v)
        except (OrientationError, IndexError) as e:
            raise EdgeListError(lineno, str(e)) from None
        out[u] |= 1 << v
        inn[v] |= 1 << u
    return OrientedGraph(n, tuple(out), tuple(inn))


def _int_pair(lineno: int, parts: list[str]) -> tuple[int, int]:
    if len(parts) != 2:
        raise EdgeListError(lineno, f"expected two integers, got {' '.join(parts)!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListError(lineno, f"expected two integers, got {' '.join(parts)!r}") from None


def to_dot(g: OrientedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -> {v};" for u, v in g.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
