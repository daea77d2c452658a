"""Dicycle intersection multigraphs and the witness machinery built on them.

The intersection multigraph of a cycle decomposition has one vertex per
dicycle and one witness-labeled edge per vertex two dicycles share.  It is
"simple" when no two dicycles share more than one vertex; for an Eulerian
digon-free digraph that property forces every vertex of the original
digraph to have the second-neighborhood property, and local variants
(induced cliques and block graphs) witness individual Seymour vertices.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from .cycle_decomposition import (
    CycleDecomposition,
    DiCycle,
    cycles_through_arc,
    validate_decomposition,
)
from .digraph_core import (
    Arc,
    Digraph,
    is_digon_free,
    is_eulerian,
    seymour_vertices,
)
from .errors import (
    BudgetExhausted,
    HasDigon,
    IndexOutOfRange,
    InvalidDecomposition,
    NotEulerian,
    TheoremViolation,
)

DEFAULT_SEARCH_BUDGET = 10**6

CIEdge = tuple[int, int, int]  # (cycle i, cycle j, witness vertex), i < j


@dataclass(frozen=True)
class CIMultigraph:
    """Intersection multigraph of a cycle decomposition.

    Cycle indices refer to positions in the decomposition's sorted cycle
    tuple.  Edges keep their witness vertex because the clique and
    block-graph arguments need to know *where* two cycles meet, not just
    that they do.
    """

    cycle_count: int
    edges: tuple[CIEdge, ...]

    def pair_multiplicities(self) -> Counter:
        return Counter((i, j) for i, j, _ in self.edges)

    def neighbors(self, index: int) -> frozenset[int]:
        out = set()
        for i, j, _ in self.edges:
            if i == index:
                out.add(j)
            elif j == index:
                out.add(i)
        return frozenset(out)


@dataclass(frozen=True)
class InducedCISubgraph:
    kept: frozenset[int]
    edges: tuple[CIEdge, ...]


@dataclass(frozen=True)
class Theorem1Report:
    """Outcome of checking one decomposition against the global claim:
    simple intersection graph => every vertex is Seymour."""

    applicable: bool
    passed: Optional[bool]
    violations: tuple[int, ...]


def build_ci(digraph: Digraph, decomposition: CycleDecomposition) -> CIMultigraph:
    """Intersection multigraph with one edge (i, j, v) per vertex v shared
    by cycles i and j.  The decomposition must be valid for the digraph."""
    check = validate_decomposition(digraph, decomposition)
    if not check:
        raise InvalidDecomposition(check.problems)
    vertex_sets = [c.vertex_set() for c in decomposition]
    edges: list[CIEdge] = []
    for i, j in itertools.combinations(range(len(vertex_sets)), 2):
        for v in sorted(vertex_sets[i] & vertex_sets[j]):
            edges.append((i, j, v))
    return CIMultigraph(len(vertex_sets), tuple(edges))


def is_simple(ci: CIMultigraph) -> bool:
    """True iff no cycle pair carries two or more edges, i.e. every two
    cycles of the decomposition share at most one vertex."""
    counts = ci.pair_multiplicities()
    return all(c <= 1 for c in counts.values())


class _SearchEffort:
    """Step counter shared across the whole pruned search, including the
    path walks inside cycle discovery — those can blow up even when few
    cycles close, so every arc extension is charged."""

    __slots__ = ("spent", "budget", "deadline", "time_limit")

    def __init__(self, budget: int, time_limit: Optional[float]):
        self.spent = 0
        self.budget = budget
        self.time_limit = time_limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def step(self) -> None:
        self.spent += 1
        if self.spent > self.budget:
            raise BudgetExhausted(
                f"simple-CI search exceeded {self.budget} search steps"
            )
        if (
            self.deadline is not None
            and self.spent % 1024 == 0
            and time.monotonic() > self.deadline
        ):
            raise BudgetExhausted(
                f"simple-CI search exceeded the {self.time_limit}s time limit"
            )


def find_simple_decomposition(
    digraph: Digraph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    time_limit: Optional[float] = None,
) -> Optional[CycleDecomposition]:
    """First decomposition (in enumeration order) whose intersection graph
    is simple, or None once the full search space is exhausted.

    A branch dies as soon as two already-placed cycles share two vertices:
    adding further cycles can only grow pairwise intersections, so the prune
    never discards a simple completion.  `budget` caps total search steps
    (arc extensions during cycle discovery plus cycle placements); hitting
    it raises BudgetExhausted, which is distinct from the definitive None.
    """
    if not is_eulerian(digraph):
        raise NotEulerian("simple-CI search requires an Eulerian digraph")
    if not is_digon_free(digraph):
        raise HasDigon("simple-CI search requires a digon-free digraph")

    needed = digraph.arc_count + 2 * digraph.n + 64
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    effort = _SearchEffort(budget, time_limit)

    def recurse(
        available: frozenset[Arc],
        chosen: list[tuple[DiCycle, frozenset[int]]],
    ) -> Optional[CycleDecomposition]:
        if not available:
            return CycleDecomposition(tuple(c for c, _ in chosen))
        anchor = min(available)
        for cycle in cycles_through_arc(digraph, anchor, available, step=effort.step):
            effort.step()
            verts = cycle.vertex_set()
            if any(len(verts & placed) >= 2 for _, placed in chosen):
                continue
            chosen.append((cycle, verts))
            result = recurse(available - frozenset(cycle.arcs()), chosen)
            if result is not None:
                return result
            chosen.pop()
        return None

    return recurse(digraph.arcs, [])


def theorem1_check(
    digraph: Digraph, decomposition: CycleDecomposition
) -> Theorem1Report:
    """If the decomposition's intersection graph is simple, verify that
    every vertex of the digraph is a Seymour vertex; otherwise report
    not-applicable."""
    check = validate_decomposition(digraph, decomposition)
    if not check:
        raise InvalidDecomposition(check.problems)
    if not is_eulerian(digraph):
        raise NotEulerian("the simple-CI criterion applies to Eulerian digraphs")
    if not is_digon_free(digraph):
        raise HasDigon("the simple-CI criterion applies to digon-free digraphs")
    ci = build_ci(digraph, decomposition)
    if not is_simple(ci):
        return Theorem1Report(applicable=False, passed=None, violations=())
    missing = tuple(sorted(set(range(digraph.n)) - seymour_vertices(digraph)))
    return Theorem1Report(applicable=True, passed=not missing, violations=missing)


def induced_closed_neighborhood(ci: CIMultigraph, vhat: int) -> InducedCISubgraph:
    """Sub-multigraph induced by a cycle vertex together with all cycle
    vertices adjacent to it."""
    if not (0 <= vhat < ci.cycle_count):
        raise IndexOutOfRange(
            f"cycle index {vhat} outside 0..{ci.cycle_count - 1}"
        )
    kept = ci.neighbors(vhat) | {vhat}
    edges = tuple(e for e in ci.edges if e[0] in kept and e[1] in kept)
    return InducedCISubgraph(kept=frozenset(kept), edges=edges)


def clique_single_vertex_witness(sub: InducedCISubgraph) -> Optional[int]:
    """The digraph vertex at which all cycles of the induced subgraph meet,
    provided the subgraph is a simple complete graph whose every edge
    carries that same witness; None otherwise.

    A subgraph without edges identifies no witness vertex and returns None
    even though it is vacuously a simple clique.
    """
    if not sub.edges:
        return None
    counts = Counter((i, j) for i, j, _ in sub.edges)
    if any(c > 1 for c in counts.values()):
        return None
    expected_pairs = {
        (i, j) for i, j in itertools.combinations(sorted(sub.kept), 2)
    }
    if set(counts) != expected_pairs:
        return None
    witnesses = {w for _, _, w in sub.edges}
    if len(witnesses) != 1:
        return None
    return next(iter(witnesses))


def _biconnected_components(
    vertices: frozenset[int], adjacency: dict[int, set[int]]
) -> list[set[int]]:
    """Vertex sets of the biconnected components of a simple undirected
    graph (Hopcroft-Tarjan lowpoint search).  Isolated vertices contribute
    no component."""
    index = {}
    low = {}
    components: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = itertools.count()

    def dfs(v: int, parent: Optional[int]) -> None:
        index[v] = low[v] = next(counter)
        for w in sorted(adjacency[v]):
            if w == parent:
                continue
            if w not in index:
                edge_stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    component: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        component.update((a, b))
                        if (a, b) == (v, w):
                            break
                    components.append(component)
            elif index[w] < index[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], index[w])

    for v in sorted(vertices):
        if v not in index:
            dfs(v, None)
    return components


def is_block_graph(sub: InducedCISubgraph) -> bool:
    """True iff the subgraph is simple and every biconnected component of it
    is a complete graph."""
    counts = Counter((i, j) for i, j, _ in sub.edges)
    if any(c > 1 for c in counts.values()):
        return False
    adjacency: dict[int, set[int]] = defaultdict(set)
    for i, j in counts:
        adjacency[i].add(j)
        adjacency[j].add(i)
    for component in _biconnected_components(sub.kept, adjacency):
        for a, b in itertools.combinations(sorted(component), 2):
            if b not in adjacency[a]:
                return False
    return True


def theorem5_witnesses(
    digraph: Digraph, decomposition: CycleDecomposition, vhat: int
) -> Optional[frozenset[int]]:
    """Vertex set of the cycle indexed by vhat, when the closed neighborhood
    of vhat in the intersection graph is a simple block graph; None when the
    hypothesis fails.

    Every returned vertex is checked to be a Seymour vertex of the digraph;
    a failure there would contradict the block-graph argument and raises
    TheoremViolation with the instance attached.
    """
    ci = build_ci(digraph, decomposition)
    sub = induced_closed_neighborhood(ci, vhat)
    if not is_block_graph(sub):
        return None
    witnesses = decomposition.cycles[vhat].vertex_set()
    stragglers = witnesses - seymour_vertices(digraph)
    if stragglers:
        raise TheoremViolation(
            f"block-graph witnesses {sorted(stragglers)} are not Seymour vertices",
            digraph=digraph,
        )
    return witnesses


def ci_to_dot(ci: CIMultigraph, decomposition: CycleDecomposition) -> str:
    """DOT rendering of the intersection multigraph: node C<i> labeled with
    cycle i's canonical vertex sequence, one undirected edge per multigraph
    edge labeled with its witness vertex."""
    lines = ["graph ci {"]
    for i, cycle in enumerate(decomposition.cycles):
        label = " ".join(str(v) for v in cycle.vertices)
        lines.append(f'  C{i} [label="{label}"];')
    for i, j, witness in sorted(ci.edges):
        lines.append(f'  C{i} -- C{j} [label="{witness}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
