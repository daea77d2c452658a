"""Simple loop-free digraphs and their neighborhood/degree predicates.

A Digraph is immutable once built: every operation here is a pure function
of its arguments, so instances can be shared freely across threads.
"""

from __future__ import annotations

import graphlib
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import HasDigon, LoopArc, NotEulerian, VertexOutOfRange

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices 0..n-1 with no parallel arcs.

    out_adj / in_adj are sorted neighbor tuples derived from the arc set;
    they exist so degree and neighborhood queries never rescan the arcs.
    """

    n: int
    arcs: frozenset[Arc]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def min_out_degree(self) -> int:
        return min((len(a) for a in self.out_adj), default=0)

    def max_out_degree(self) -> int:
        return max((len(a) for a in self.out_adj), default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class NeighborhoodReport:
    """First/second out-neighborhood of one vertex plus its Seymour status."""

    vertex: int
    first: frozenset[int]
    second: frozenset[int]
    closed_first: frozenset[int]
    is_seymour: bool


class ConjectureSums(NamedTuple):
    sum_second: int
    sum_first: int
    holds: bool


def _make_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Unchecked constructor: callers guarantee arcs are loop-free pairs in
    range.  build_digraph is the validating entry point."""
    arc_set = frozenset(arcs)
    out_lists: list[list[int]] = [[] for _ in range(n)]
    in_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in arc_set:
        out_lists[u].append(v)
        in_lists[v].append(u)
    out_adj = tuple(tuple(sorted(vs)) for vs in out_lists)
    in_adj = tuple(tuple(sorted(us)) for us in in_lists)
    return Digraph(n=n, arcs=arc_set, out_adj=out_adj, in_adj=in_adj)


def build_digraph(n: int, arc_list: Iterable[Arc]) -> Digraph:
    """Build a Digraph from an arc list, deduplicating repeated arcs.

    Raises LoopArc for (v, v) entries and VertexOutOfRange for endpoints
    outside 0..n-1.
    """
    arcs = set()
    for u, v in arc_list:
        if u == v:
            raise LoopArc(u)
        if not (0 <= u < n):
            raise VertexOutOfRange(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRange(v, n)
        arcs.add((u, v))
    return _make_digraph(n, arcs)


def is_digon_free(digraph: Digraph) -> bool:
    """True iff no pair of opposite arcs u->v, v->u is present."""
    return all((v, u) not in digraph.arcs for u, v in digraph.arcs)


def is_balanced(digraph: Digraph) -> bool:
    """True iff every vertex has equal in- and out-degree."""
    return all(
        len(digraph.out_adj[v]) == len(digraph.in_adj[v])
        for v in range(digraph.n)
    )


def weakly_connected_on_support(digraph: Digraph) -> bool:
    """True iff the vertices of nonzero degree form one weakly connected
    piece.  A digraph with no arcs has empty support and counts as False
    only through is_eulerian's nonempty requirement; here it returns True.
    """
    support = [
        v
        for v in range(digraph.n)
        if digraph.out_adj[v] or digraph.in_adj[v]
    ]
    if not support:
        return True
    seen = {support[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in digraph.out_adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
        for w in digraph.in_adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(support)


def is_eulerian(digraph: Digraph) -> bool:
    """True iff the digraph admits a directed Eulerian tour.

    Balance plus weak connectivity of the nonzero-degree vertices is the
    working test; isolated vertices are ignored, and a digraph with no arcs
    has no tour at all.
    """
    if not digraph.arcs:
        return False
    return is_balanced(digraph) and weakly_connected_on_support(digraph)


def second_out_neighborhood(digraph: Digraph, v: int) -> frozenset[int]:
    """Vertices at directed distance exactly 2 from v.

    Computed as the out-neighbors of out-neighbors minus N+(v) and v
    itself, which coincides with the breadth-first distance-2 layer.
    """
    if not (0 <= v < digraph.n):
        raise VertexOutOfRange(v, digraph.n)
    first = set(digraph.out_adj[v])
    second: set[int] = set()
    for x in first:
        second.update(digraph.out_adj[x])
    second -= first
    second.discard(v)
    return frozenset(second)


def neighborhood_report(digraph: Digraph, v: int) -> NeighborhoodReport:
    if not (0 <= v < digraph.n):
        raise VertexOutOfRange(v, digraph.n)
    first = frozenset(digraph.out_adj[v])
    second = second_out_neighborhood(digraph, v)
    return NeighborhoodReport(
        vertex=v,
        first=first,
        second=second,
        closed_first=first | {v},
        is_seymour=len(second) >= len(first),
    )


def seymour_vertices(digraph: Digraph) -> frozenset[int]:
    """Vertices whose second out-neighborhood is at least as large as the
    first.  Sinks qualify trivially.  No digon-freeness is required; the
    caller decides whether the result is meaningful for its instance."""
    return frozenset(
        v
        for v in range(digraph.n)
        if len(second_out_neighborhood(digraph, v)) >= len(digraph.out_adj[v])
    )


def conjecture_sums(digraph: Digraph) -> ConjectureSums:
    """Totals of |N+2(v)| and |N+(v)| over all vertices, plus whether the
    second-neighborhood total dominates.

    Only defined for Eulerian digon-free digraphs; anything else raises.
    """
    if not is_eulerian(digraph):
        raise NotEulerian("conjecture sums require an Eulerian digraph")
    if not is_digon_free(digraph):
        raise HasDigon("conjecture sums require a digon-free digraph")
    sum_second = sum(
        len(second_out_neighborhood(digraph, v)) for v in range(digraph.n)
    )
    sum_first = sum(len(digraph.out_adj[v]) for v in range(digraph.n))
    return ConjectureSums(sum_second, sum_first, sum_second >= sum_first)


def is_dag(digraph: Digraph) -> bool:
    """True iff the digraph has no directed cycle."""
    predecessors = {v: digraph.in_adj[v] for v in range(digraph.n)}
    sorter = graphlib.TopologicalSorter(predecessors)
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True
