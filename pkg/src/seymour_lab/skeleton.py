"""Maximal Eulerian subdigraphs (skeletons) and the Seymour witnesses they
yield.

A skeleton is grown cycle by cycle, so it is balanced and stays weakly
connected on its support by construction.  Hosts may contain digons; a
digon is a two-arc dicycle and is legitimate skeleton material even though
decomposition-level DiCycle objects insist on length three or more.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .ci_graph import find_simple_decomposition, DEFAULT_SEARCH_BUDGET
from .cycle_decomposition import CycleDecomposition
from .digraph_core import (
    Arc,
    Digraph,
    _make_digraph,
    is_dag,
    is_digon_free,
    seymour_vertices,
)
from .errors import (
    BudgetExhausted,
    InvalidSkeleton,
    NotApplicable,
    TheoremViolation,
    TooLarge,
)

DEFAULT_EXACT_ARC_CAP = 20


@dataclass(frozen=True)
class Skeleton:
    """Arc subset of a host digraph inducing an Eulerian subdigraph (or the
    empty set).  `maximal` is only trusted when provenance is "exact"."""

    arcs: frozenset[Arc]
    support: frozenset[int]
    maximal: bool
    provenance: str

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a[0] == v)


@dataclass(frozen=True)
class SkeletonWitnessReport:
    witnesses: frozenset[int]
    decomposition: CycleDecomposition
    min_out_degree_matches: bool
    max_out_degree_matches: bool

    @property
    def corollary_holds(self) -> bool:
        return self.min_out_degree_matches or self.max_out_degree_matches


def _shortest_cycle_through(
    start: int,
    out_unused: list[set[int]],
    in_unused: list[set[int]],
) -> Optional[list[int]]:
    """Shortest closed walk start -> ... -> start over unused arcs, returned
    as its vertex list without the repeated endpoint; None if start lies on
    no cycle.  BFS parents make the walk vertex-simple, and expanding
    neighbors in ascending order keeps the choice deterministic."""
    closers = in_unused[start]
    if not closers:
        return None
    parent: dict[int, int] = {}
    frontier = deque()
    for w in sorted(out_unused[start]):
        parent[w] = start
        frontier.append(w)
        if w in closers:
            return [start, w]
    while frontier:
        v = frontier.popleft()
        for w in sorted(out_unused[v]):
            if w == start or w in parent:
                continue
            parent[w] = v
            if w in closers:
                path = [w]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            frontier.append(w)
    return None


def greedy_skeleton(digraph: Digraph) -> Skeleton:
    """Grow an Eulerian subdigraph: seed with a cycle through the smallest
    vertex lying on any cycle, then keep absorbing arc-disjoint cycles that
    touch the current support until none is left.

    Arcs only ever leave the unused pool, so a vertex that once had no
    cycle through it never regains one; each vertex is therefore probed
    until its first failure and then retired, which keeps the whole loop
    near-linear in practice.  The result carries maximal=False: growth-rule
    maximality is weaker than the exact-search guarantee.
    """
    out_unused = [set(a) for a in digraph.out_adj]
    in_unused = [set(a) for a in digraph.in_adj]
    dead = [False] * digraph.n
    skeleton_arcs: set[Arc] = set()
    support: set[int] = set()

    def absorb(cycle: list[int]) -> None:
        for i, u in enumerate(cycle):
            w = cycle[(i + 1) % len(cycle)]
            skeleton_arcs.add((u, w))
            out_unused[u].discard(w)
            in_unused[w].discard(u)
        support.update(cycle)

    for v in range(digraph.n):
        cycle = _shortest_cycle_through(v, out_unused, in_unused)
        if cycle is None:
            dead[v] = True
        else:
            absorb(cycle)
            break
    if not support:
        return Skeleton(frozenset(), frozenset(), maximal=False, provenance="greedy")

    while True:
        anchor = next((v for v in sorted(support) if not dead[v]), None)
        if anchor is None:
            break
        cycle = _shortest_cycle_through(anchor, out_unused, in_unused)
        if cycle is None:
            dead[anchor] = True
        else:
            absorb(cycle)

    result = Skeleton(
        frozenset(skeleton_arcs),
        frozenset(support),
        maximal=False,
        provenance="greedy",
    )
    assert not validate_skeleton(digraph, result), "greedy skeleton broke its invariants"
    return result


def _all_cycles(digraph: Digraph) -> list[tuple[tuple[int, ...], frozenset[Arc]]]:
    """Every vertex-simple dicycle (length >= 2) as (canonical vertex tuple,
    arc set); each tuple starts at the cycle's smallest vertex."""
    cycles: list[tuple[tuple[int, ...], frozenset[Arc]]] = []
    for v in range(digraph.n):
        path = [v]
        on_path = {v}

        def dfs(u: int) -> None:
            for w in digraph.out_adj[u]:
                if w == v and len(path) >= 2:
                    seq = tuple(path)
                    arcs = frozenset(
                        (seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
                    )
                    cycles.append((seq, arcs))
                elif w > v and w not in on_path:
                    on_path.add(w)
                    path.append(w)
                    dfs(w)
                    path.pop()
                    on_path.remove(w)

        dfs(v)
    cycles.sort()
    return cycles


def _support_of(arcs: frozenset[Arc]) -> frozenset[int]:
    return frozenset(v for arc in arcs for v in arc)


def _weakly_connected_arcs(arcs: frozenset[Arc]) -> bool:
    support = _support_of(arcs)
    if not support:
        return True
    adjacency: dict[int, set[int]] = {v: set() for v in support}
    for u, w in arcs:
        adjacency[u].add(w)
        adjacency[w].add(u)
    seen = {next(iter(support))}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(support)


def maximum_skeleton_exact(digraph: Digraph, cap: int = DEFAULT_EXACT_ARC_CAP) -> Skeleton:
    """Largest Eulerian arc subset, by exhaustive search over weakly
    connected unions of arc-disjoint dicycles; ties go to the
    lexicographically smallest arc set.  Exponential, hence the arc cap.
    """
    if digraph.arc_count > cap:
        raise TooLarge(
            f"exact skeleton search capped at {cap} arcs, digraph has {digraph.arc_count}"
        )
    cycles = _all_cycles(digraph)
    best_arcs: tuple[Arc, ...] = ()

    def search(start: int, union: frozenset[Arc]) -> None:
        nonlocal best_arcs
        if union and _weakly_connected_arcs(union):
            candidate = tuple(sorted(union))
            if len(candidate) > len(best_arcs) or (
                len(candidate) == len(best_arcs) and candidate < best_arcs
            ):
                best_arcs = candidate
        for idx in range(start, len(cycles)):
            _, arcs = cycles[idx]
            if arcs & union:
                continue
            search(idx + 1, union | arcs)

    search(0, frozenset())
    arcs = frozenset(best_arcs)
    return Skeleton(arcs, _support_of(arcs), maximal=True, provenance="exact")


def is_invertebrate(digraph: Digraph) -> bool:
    """True iff the skeleton is empty, which happens exactly for DAGs.  The
    equivalence is recomputed both ways on every call instead of assumed."""
    acyclic = is_dag(digraph)
    skeleton_empty = not greedy_skeleton(digraph).arcs
    if acyclic != skeleton_empty:
        raise TheoremViolation(
            f"DAG test ({acyclic}) disagrees with skeleton emptiness ({skeleton_empty})",
            digraph=digraph,
        )
    return acyclic


def validate_skeleton(digraph: Digraph, skeleton: Skeleton) -> tuple[str, ...]:
    """Problems that disqualify the arc subset as a skeleton of the digraph;
    empty tuple when it is valid."""
    problems: list[str] = []
    foreign = skeleton.arcs - digraph.arcs
    if foreign:
        problems.append(f"arcs not in the host digraph: {sorted(foreign)}")
    if skeleton.support != _support_of(skeleton.arcs):
        problems.append("support does not match the arc set")
    out_deg: dict[int, int] = {}
    in_deg: dict[int, int] = {}
    for u, w in skeleton.arcs:
        out_deg[u] = out_deg.get(u, 0) + 1
        in_deg[w] = in_deg.get(w, 0) + 1
    for v in skeleton.support:
        if out_deg.get(v, 0) != in_deg.get(v, 0):
            problems.append(f"vertex {v} is unbalanced in the skeleton")
    if not _weakly_connected_arcs(skeleton.arcs):
        problems.append("skeleton is not weakly connected on its support")
    return tuple(problems)


def skeleton_seymour_witnesses(
    digraph: Digraph,
    skeleton: Skeleton,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> tuple[frozenset[int], SkeletonWitnessReport]:
    """Support vertices whose out-degree survives unchanged from the host to
    the skeleton; when the skeleton admits a simple intersection graph each
    of them keeps the second-neighborhood property in the host.

    Raises NotApplicable when no simple intersection graph is confirmed
    within budget (or can exist), and TheoremViolation should a witness fail
    the Seymour check in the host.
    """
    problems = validate_skeleton(digraph, skeleton)
    if problems:
        raise InvalidSkeleton(problems)
    if not skeleton.arcs:
        raise NotApplicable("empty skeleton has no dicycle decomposition")
    sub = _make_digraph(digraph.n, skeleton.arcs)
    if not is_digon_free(sub):
        raise NotApplicable("skeleton contains a digon, so no simple intersection graph exists")
    try:
        decomposition = find_simple_decomposition(sub, budget=budget)
    except BudgetExhausted as exc:
        raise NotApplicable(f"simple-CI search on the skeleton ran out of budget: {exc}")
    if decomposition is None:
        raise NotApplicable("skeleton admits no simple intersection graph")

    skeleton_out = {v: 0 for v in skeleton.support}
    for u, _ in skeleton.arcs:
        skeleton_out[u] += 1
    witnesses = frozenset(
        v for v in skeleton.support if digraph.out_degree(v) == skeleton_out[v]
    )
    stragglers = witnesses - seymour_vertices(digraph)
    if stragglers:
        raise TheoremViolation(
            f"skeleton witnesses {sorted(stragglers)} are not Seymour vertices in the host",
            digraph=digraph,
        )
    host_out = [digraph.out_degree(v) for v in range(digraph.n)]
    report = SkeletonWitnessReport(
        witnesses=witnesses,
        decomposition=decomposition,
        min_out_degree_matches=min(host_out) == min(skeleton_out.values()),
        max_out_degree_matches=max(host_out) == max(skeleton_out.values()),
    )
    return witnesses, report
