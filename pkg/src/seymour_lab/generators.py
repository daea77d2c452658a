"""Seeded digraph constructors and small built-in fixtures.

All generators are deterministic: equal arguments (including the seed)
produce bit-identical arc sets.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator, Optional

from .digraph_core import Arc, Digraph, _make_digraph, is_eulerian, weakly_connected_on_support
from .errors import (
    BadParameters,
    EvenOrder,
    GenerationBudgetExceeded,
    OddOrder,
    OrderTooLarge,
)

ENUMERATION_MAX_ORDER = 5

# Retry caps for random_eulerian_digraph: per-cycle resampling and whole-graph
# rebuilds for connectivity.
_CYCLE_RETRY_CAP = 200
_CONNECTIVITY_RETRY_CAP = 50


def rotational_tournament(n: int) -> Digraph:
    """Tournament on an odd number of vertices where i beats the next
    (n-1)/2 vertices cyclically; every vertex ends up (n-1)/2-regular."""
    if n % 2 == 0:
        raise EvenOrder(f"rotational tournament needs odd order, got {n}")
    if n < 3:
        raise BadParameters(f"rotational tournament needs n >= 3, got {n}")
    half = (n - 1) // 2
    arcs = [(i, (i + d) % n) for i in range(n) for d in range(1, half + 1)]
    return _make_digraph(n, arcs)


def nearly_regular_tournament(n: int) -> Digraph:
    """Tournament on an even number of vertices with all in- and out-degrees
    in {n/2 - 1, n/2}.

    Construction: rotational tournament on n-1 vertices plus a new vertex
    w = n-1 that beats 0..n/2-2 and loses to the rest.  The degree condition
    is audited by the tests rather than trusted.
    """
    if n % 2 == 1:
        raise OddOrder(f"nearly regular tournament needs even order, got {n}")
    if n < 4:
        raise BadParameters(f"nearly regular tournament needs n >= 4, got {n}")
    core = rotational_tournament(n - 1)
    w = n - 1
    arcs = set(core.arcs)
    for v in range(n - 1):
        if v <= n // 2 - 2:
            arcs.add((w, v))
        else:
            arcs.add((v, w))
    return _make_digraph(n, arcs)


def flower(k: int, petal_length: int) -> Digraph:
    """k dicycles of the given length sharing exactly the center vertex 0.

    The unique cycle decomposition meets pairwise in the center only, so the
    intersection graph of the petals is the simple complete graph K_k.
    """
    if k < 2 or petal_length < 3:
        raise BadParameters(
            f"flower needs k >= 2 petals of length >= 3, got k={k}, length={petal_length}"
        )
    arcs: list[Arc] = []
    next_vertex = 1
    for _ in range(k):
        ring = [0] + list(range(next_vertex, next_vertex + petal_length - 1))
        next_vertex += petal_length - 1
        arcs.extend((ring[i], ring[(i + 1) % petal_length]) for i in range(petal_length))
    return _make_digraph(next_vertex, arcs)


def _sample_cycle(rng: random.Random, n: int, length: int) -> Optional[list[int]]:
    if length > n:
        return None
    return rng.sample(range(n), length)


def random_eulerian_digraph(
    n: int,
    k: int,
    len_range: tuple[int, int],
    seed: int,
) -> Digraph:
    """Union of k randomly sampled vertex-simple dicycles over n vertices.

    Any cycle that would repeat an arc or create a digon is resampled; the
    whole graph is rebuilt until the result is weakly connected.  The result
    is balanced by construction and the generator certifies it is Eulerian
    before returning.  The cycle-union distribution is biased toward short
    cycles; it is a test-instance source, not a uniform sampler.
    """
    lo, hi = len_range
    if lo < 3:
        raise BadParameters(f"minimum cycle length must be >= 3, got {lo}")
    if hi < lo:
        raise BadParameters(f"empty length range {len_range}")
    if k < 1 or n < 3:
        raise BadParameters(f"need k >= 1 cycles over n >= 3 vertices, got k={k}, n={n}")
    rng = random.Random(seed)
    for _ in range(_CONNECTIVITY_RETRY_CAP):
        arcs: set[Arc] = set()
        failed = False
        for _ in range(k):
            for _ in range(_CYCLE_RETRY_CAP):
                cycle = _sample_cycle(rng, n, rng.randint(lo, hi))
                if cycle is None:
                    continue
                cycle_arcs = [
                    (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
                ]
                if any(a in arcs or (a[1], a[0]) in arcs for a in cycle_arcs):
                    continue
                arcs.update(cycle_arcs)
                break
            else:
                failed = True
                break
        if failed:
            continue
        digraph = _make_digraph(n, arcs)
        if weakly_connected_on_support(digraph):
            assert is_eulerian(digraph)
            return digraph
    raise GenerationBudgetExceeded(
        f"could not assemble {k} compatible cycles of length {lo}..{hi} on {n} vertices"
    )


def random_dag(n: int, arc_probability: float, seed: int) -> Digraph:
    """Random DAG: each arc from a lower to a higher index is present
    independently with the given probability."""
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < arc_probability
    ]
    return _make_digraph(n, arcs)


def random_digraph(n: int, arc_probability: float, seed: int) -> Digraph:
    """Random loop-free digraph: every ordered pair (u, v), u != v, is an arc
    independently with the given probability.  Digons are allowed; this is
    the mixed-density instance source for DAG/skeleton sweeps."""
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < arc_probability
    ]
    return _make_digraph(n, arcs)


def enumerate_all_digraphs(
    n: int,
    filter: Optional[Callable[[Digraph], bool]] = None,
) -> Iterator[Digraph]:
    """Every loop-free digraph on n labeled vertices, in ascending order of
    the arc-subset bitmask over the lexicographically sorted arc universe.

    The arc-set space is 2^(n(n-1)), so n is capped at 5.
    """
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(
            f"exhaustive enumeration is capped at n <= {ENUMERATION_MAX_ORDER}, got {n}"
        )
    universe = [(u, v) for u in range(n) for v in range(n) if u != v]
    m = len(universe)
    for mask in range(1 << m):
        arcs = [universe[i] for i in range(m) if mask >> i & 1]
        digraph = _make_digraph(n, arcs)
        if filter is None or filter(digraph):
            yield digraph


def enumerate_digon_free_digraphs(
    n: int,
    filter: Optional[Callable[[Digraph], bool]] = None,
) -> Iterator[Digraph]:
    """Every loop-free digon-free digraph on n labeled vertices.

    Each unordered vertex pair independently carries no arc, the forward
    arc, or the backward arc, giving 3^(n(n-1)/2) digraphs instead of the
    2^(n(n-1)) the unrestricted enumerator walks; the two agree on the
    digon-free family (cross-checked in the tests).  Capped at n <= 6.
    """
    if n > ENUMERATION_MAX_ORDER + 1:
        raise OrderTooLarge(
            f"digon-free enumeration is capped at n <= {ENUMERATION_MAX_ORDER + 1}, got {n}"
        )
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), state in zip(pairs, states):
            if state == 1:
                arcs.append((u, v))
            elif state == 2:
                arcs.append((v, u))
        digraph = _make_digraph(n, arcs)
        if filter is None or filter(digraph):
            yield digraph


# --- fixtures -------------------------------------------------------------

def double_triangle() -> Digraph:
    """Two directed triangles sharing the hub vertex 0 (a two-petal flower).

    The unique decomposition is the two triangles, whose intersection graph
    is a single edge witnessed by the hub.
    """
    return flower(2, 3)


def diamond() -> Digraph:
    """Vertex 0 with two out-neighbors that lead to one common successor:
    the pattern that makes second neighborhoods collapse (|N+2(0)| = 1 while
    |N+(0)| = 2)."""
    return _make_digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def triangle_chain(count: int) -> Digraph:
    """Chain of directed triangles where consecutive triangles share one
    vertex; the intersection graph of the unique decomposition is a path."""
    if count < 1:
        raise BadParameters(f"need at least one triangle, got {count}")
    arcs = []
    for i in range(count):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        arcs += [(a, b), (b, c), (c, a)]
    return _make_digraph(2 * count + 1, arcs)


def triangle_ring() -> Digraph:
    """Three triangles arranged in a ring, each consecutive pair sharing one
    vertex, all three shared vertices distinct.  Its triangle decomposition
    has a simple K_3 intersection graph whose edges carry three different
    witnesses."""
    arcs = [
        (0, 1), (1, 2), (2, 0),
        (2, 3), (3, 4), (4, 2),
        (4, 5), (5, 0), (0, 4),
    ]
    return _make_digraph(6, arcs)


def overlapping_squares() -> Digraph:
    """Two 4-dicycles through two shared vertices (0 and 2).  Every cycle
    decomposition pairs two 4-cycles meeting in both shared vertices, so no
    decomposition has a simple intersection graph."""
    arcs = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (0, 4), (4, 2), (2, 5), (5, 0),
    ]
    return _make_digraph(6, arcs)


def two_disjoint_triangles() -> Digraph:
    """Balanced but disconnected: the standard witness that balance alone
    does not make a digraph Eulerian."""
    return _make_digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
