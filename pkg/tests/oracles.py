"""Independent reference implementations used to check the library.

Everything here deliberately avoids the code paths under test: neighborhoods
come from breadth-first distances, decompositions from raw set-partition
enumeration, and maximum Eulerian subsets from arc-subset exhaustion.
"""

from collections import deque
from itertools import combinations

from seymour_lab import CycleDecomposition, DiCycle


def bfs_distances(digraph, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in digraph.out_adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def second_neighborhood_by_bfs(digraph, v):
    dist = bfs_distances(digraph, v)
    return frozenset(u for u, d in dist.items() if d == 2)


def first_neighborhood_by_bfs(digraph, v):
    dist = bfs_distances(digraph, v)
    return frozenset(u for u, d in dist.items() if d == 1)


def brute_seymour_vertices(digraph):
    return frozenset(
        v
        for v in range(digraph.n)
        if len(second_neighborhood_by_bfs(digraph, v))
        >= len(first_neighborhood_by_bfs(digraph, v))
    )


def partitions_min_block(items, min_size):
    """All set partitions of `items` whose blocks each have at least
    min_size elements.  Prunes on the running size deficit, which is pure
    counting and knows nothing about graphs."""
    items = list(items)

    def recurse(idx, blocks):
        if idx == len(items):
            if all(len(b) >= min_size for b in blocks):
                yield tuple(tuple(b) for b in blocks)
            return
        remaining = len(items) - idx
        deficit = sum(max(0, min_size - len(b)) for b in blocks)
        extra_needed = deficit - remaining
        if extra_needed > 0:
            return
        item = items[idx]
        for b in blocks:
            b.append(item)
            yield from recurse(idx + 1, blocks)
            b.pop()
        if deficit + min_size <= remaining:
            blocks.append([item])
            yield from recurse(idx + 1, blocks)
            blocks.pop()

    yield from recurse(0, [])


def arcs_as_dicycle(arc_block):
    """Vertex tuple of the unique dicycle formed by the arc block, or None
    if the arcs are not a single vertex-simple directed cycle."""
    successor = {}
    heads = set()
    for u, v in arc_block:
        if u in successor or v in heads:
            return None
        successor[u] = v
        heads.add(v)
    if set(successor) != heads:
        return None
    start = min(successor)
    walk = [start]
    here = successor[start]
    while here != start:
        walk.append(here)
        here = successor[here]
    if len(walk) != len(arc_block):
        return None
    return tuple(walk)


def brute_force_decompositions(digraph):
    """Every partition of the arc set into dicycles, found by enumerating
    set partitions with blocks of size >= 3 (digon-free digraphs have no
    shorter dicycles) and keeping those whose blocks all close into
    cycles."""
    arcs = sorted(digraph.arcs)
    found = set()
    for partition in partitions_min_block(arcs, 3):
        cycles = []
        for block in partition:
            walk = arcs_as_dicycle(block)
            if walk is None:
                break
            cycles.append(DiCycle(walk))
        else:
            found.add(CycleDecomposition(tuple(cycles)))
    return found


def _subset_is_balanced(arcs):
    out_deg = {}
    in_deg = {}
    for u, v in arcs:
        out_deg[u] = out_deg.get(u, 0) + 1
        in_deg[v] = in_deg.get(v, 0) + 1
    return all(out_deg.get(v, 0) == in_deg.get(v, 0) for v in set(out_deg) | set(in_deg))


def _subset_is_weakly_connected(arcs):
    support = {v for arc in arcs for v in arc}
    if not support:
        return True
    adjacency = {v: set() for v in support}
    for u, v in arcs:
        adjacency[u].add(v)
        adjacency[v].add(u)
    seen = {next(iter(support))}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(support)


def brute_max_eulerian_arcs(digraph):
    """Largest balanced, weakly connected arc subset, ties broken by the
    lexicographically smallest arc tuple; () for acyclic digraphs.  Plain
    exhaustion over all arc subsets."""
    arcs = sorted(digraph.arcs)
    best = ()
    for r in range(len(arcs), 0, -1):
        if r < len(best):
            break
        for subset in combinations(arcs, r):
            if not _subset_is_balanced(subset):
                continue
            if not _subset_is_weakly_connected(subset):
                continue
            if len(subset) > len(best) or (len(subset) == len(best) and subset < best):
                best = subset
        if best:
            break
    return best
