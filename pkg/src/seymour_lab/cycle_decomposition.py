"""Arc-disjoint dicycle decompositions: greedy extraction, exhaustive
enumeration, and validation.

Every balanced digraph splits into arc-disjoint dicycles; with digons
excluded each dicycle has at least three arcs.  Enumeration branches on the
smallest unused arc, which yields every decomposition exactly once without
any seen-set bookkeeping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .digraph_core import Arc, Digraph, is_balanced, is_digon_free
from .errors import BadParameters, HasDigon, NotBalanced


@dataclass(frozen=True, order=True)
class DiCycle:
    """Vertex-simple directed cycle in canonical rotation: the stored tuple
    starts at the smallest vertex id on the cycle."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(seq) < 3:
            raise BadParameters(f"a dicycle needs at least 3 vertices, got {seq}")
        if len(set(seq)) != len(seq):
            raise BadParameters(f"dicycle vertices must be distinct, got {seq}")
        pivot = seq.index(min(seq))
        object.__setattr__(self, "vertices", seq[pivot:] + seq[:pivot])

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def arcs(self) -> tuple[Arc, ...]:
        seq = self.vertices
        return tuple(
            (seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
        )

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class CycleDecomposition:
    """Partition of a digraph's arc set into dicycles, stored sorted by
    canonical form so equal decompositions compare and hash equal."""

    cycles: tuple[DiCycle, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(sorted(self.cycles)))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[DiCycle]:
        return iter(self.cycles)

    def arc_sets(self) -> tuple[frozenset[Arc], ...]:
        return tuple(frozenset(c.arcs()) for c in self.cycles)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_decomposition(
    digraph: Digraph, decomposition: CycleDecomposition
) -> ValidationResult:
    """True iff every cycle is a dicycle of the digraph and the cycle arc
    sets partition the digraph's arcs.  Failures come back with reasons
    instead of exceptions."""
    problems: list[str] = []
    covered: set[Arc] = set()
    for cycle in decomposition:
        for v in cycle.vertices:
            if not (0 <= v < digraph.n):
                problems.append(f"cycle {cycle.vertices} leaves the vertex range")
                break
        for arc in cycle.arcs():
            if arc not in digraph.arcs:
                problems.append(f"arc {arc} of cycle {cycle.vertices} is not in the digraph")
            elif arc in covered:
                problems.append(f"arc {arc} is covered twice")
            else:
                covered.add(arc)
    uncovered = digraph.arcs - covered
    if uncovered:
        problems.append(f"uncovered arcs: {sorted(uncovered)}")
    return ValidationResult(not problems, tuple(problems))


def _check_decomposable(digraph: Digraph) -> None:
    if not is_balanced(digraph):
        raise NotBalanced("cycle decomposition requires a balanced digraph")
    if not is_digon_free(digraph):
        raise HasDigon("cycle decomposition requires a digon-free digraph")


def greedy_decomposition(digraph: Digraph) -> CycleDecomposition:
    """Peel dicycles off a balanced digon-free digraph until no arcs remain.

    Each round walks from the smallest vertex that still has an unused
    out-arc, always taking the smallest-id unused out-neighbor; balance
    guarantees the walk closes on itself, and the segment between the two
    visits of the repeated vertex is carved out as a cycle.  After every
    carve the residual digraph is checked to still be balanced.
    """
    _check_decomposable(digraph)
    removed: set[Arc] = set()
    out_deg = [digraph.out_degree(v) for v in range(digraph.n)]
    in_deg = [digraph.in_degree(v) for v in range(digraph.n)]
    cycles: list[DiCycle] = []
    remaining = digraph.arc_count
    start_scan = 0
    while remaining:
        while not out_deg[start_scan]:
            start_scan += 1
        walk = [start_scan]
        position = {start_scan: 0}
        while True:
            here = walk[-1]
            step = next(
                w for w in digraph.out_adj[here] if (here, w) not in removed
            )
            if step in position:
                cycle_vertices = walk[position[step]:]
                seq = cycle_vertices
                for i, u in enumerate(seq):
                    w = seq[(i + 1) % len(seq)]
                    removed.add((u, w))
                    out_deg[u] -= 1
                    in_deg[w] -= 1
                remaining -= len(seq)
                # residual balance is the induction invariant the whole
                # procedure rests on
                assert all(
                    out_deg[v] == in_deg[v] for v in range(digraph.n)
                ), "cycle removal broke balance"
                cycles.append(DiCycle(tuple(seq)))
                break
            position[step] = len(walk)
            walk.append(step)
    return CycleDecomposition(tuple(cycles))


def cycles_through_arc(
    digraph: Digraph,
    arc: Arc,
    available: frozenset[Arc],
    step: Optional[Callable[[], None]] = None,
) -> Iterator[DiCycle]:
    """Vertex-simple dicycles that use the given arc and otherwise stay
    inside the available arc set, yielded lazily in lexicographic order of
    their vertex walk from the arc's tail.

    The path space can be enormous even when few cycles close, so callers
    that need a hard bound pass `step`, which is invoked once per arc
    extension tried and may raise to abort the walk."""
    tail, head = arc
    path = [head]
    on_path = {tail, head}

    def extend(here: int) -> Iterator[DiCycle]:
        for w in digraph.out_adj[here]:
            if (here, w) not in available:
                continue
            if step is not None:
                step()
            if w == tail:
                yield DiCycle((tail, *path))
            elif w not in on_path:
                on_path.add(w)
                path.append(w)
                yield from extend(w)
                path.pop()
                on_path.remove(w)

    yield from extend(head)


def enumerate_decompositions(
    digraph: Digraph, limit: Optional[int] = None
) -> Iterator[CycleDecomposition]:
    """Yield every cycle decomposition exactly once, in deterministic order.

    At each step the search branches over all dicycles through the smallest
    unused arc; any decomposition contains exactly one such cycle, so the
    branches partition the remaining decompositions and no deduplication is
    needed.  `limit` truncates the stream.
    """
    _check_decomposable(digraph)

    def recurse(available: frozenset[Arc]) -> Iterator[tuple[DiCycle, ...]]:
        if not available:
            yield ()
            return
        anchor = min(available)
        for cycle in cycles_through_arc(digraph, anchor, available):
            rest = available - frozenset(cycle.arcs())
            for tail_cycles in recurse(rest):
                yield (cycle, *tail_cycles)

    stream = (CycleDecomposition(cs) for cs in recurse(digraph.arcs))
    if limit is not None:
        stream = itertools.islice(stream, limit)
    yield from stream


def decomposition_cycle_bound(digraph: Digraph) -> int:
    """Upper bound on the cycle count of any decomposition: girth >= 3 once
    digons are excluded, so at most |A|/3 cycles fit."""
    return digraph.arc_count // 3
