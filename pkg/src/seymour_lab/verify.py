"""Property sweeps behind the `verify` command.

Each sweep checks one statement the library is built around, either
exhaustively over small orders or over seeded random instances, and
returns any violating instances as re-ingestible digraphs.  Sweeps over
independent instances honor SEYMOUR_LAB_THREADS for sharding; results are
gathered in instance order either way, so reports stay deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .ci_graph import (
    build_ci,
    clique_single_vertex_witness,
    find_simple_decomposition,
    induced_closed_neighborhood,
    is_simple,
    theorem5_witnesses,
)
from .cycle_decomposition import enumerate_decompositions, greedy_decomposition
from .digraph_core import (
    Digraph,
    build_digraph,
    conjecture_sums,
    is_dag,
    is_digon_free,
    is_eulerian,
    seymour_vertices,
)
from .errors import (
    BudgetExhausted,
    GenerationBudgetExceeded,
    NotApplicable,
    TheoremViolation,
    UnknownProperty,
)
from .generators import (
    double_triangle,
    enumerate_digon_free_digraphs,
    flower,
    nearly_regular_tournament,
    random_digraph,
    random_eulerian_digraph,
    rotational_tournament,
    triangle_chain,
    triangle_ring,
)
from .skeleton import greedy_skeleton, skeleton_seymour_witnesses

DEFAULT_DECOMPOSITION_BUDGET = 10**6
EXHAUSTIVE_MAX_ORDER = 5


@dataclass(frozen=True)
class Violation:
    instance_id: str
    digraph: Digraph
    detail: str


@dataclass(frozen=True)
class VerifyOutcome:
    property_name: str
    checked: int
    violations: tuple[Violation, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class SweepOptions:
    n: Optional[int] = None
    trials: Optional[int] = None
    seed: int = 0
    budget: int = DEFAULT_DECOMPOSITION_BUDGET
    notes: list[str] = field(default_factory=list)


def _thread_count() -> int:
    raw = os.environ.get("SEYMOUR_LAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_instances(
    check: Callable[[tuple[str, Digraph]], Optional[Violation]],
    instances: Iterable[tuple[str, Digraph]],
) -> Iterator[Optional[Violation]]:
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(check, instances)
    else:
        yield from map(check, instances)


def eulerian_digon_free_instances(n: int) -> Iterator[Digraph]:
    """Every Eulerian digon-free digraph on n labeled vertices.

    Walks the per-pair orientation space (3^(n(n-1)/2) digraphs) rather
    than all arc subsets; the two enumerations agree on the digon-free
    family, which the test suite cross-checks at small orders.
    """
    keep = lambda d: is_eulerian(d) and is_digon_free(d)
    yield from enumerate_digon_free_digraphs(n, keep)


def _sweep(
    name: str,
    instances: Iterable[tuple[str, Digraph]],
    check: Callable[[tuple[str, Digraph]], Optional[Violation]],
    notes: Iterable[str] = (),
) -> VerifyOutcome:
    checked = 0
    violations = []
    for result in _map_instances(check, instances):
        checked += 1
        if result is not None:
            violations.append(result)
    return VerifyOutcome(name, checked, tuple(violations), tuple(notes))


def _random_eulerian_instances(
    count: int, n: int, seed: int
) -> Iterator[tuple[str, Digraph]]:
    produced = 0
    attempt = 0
    while produced < count:
        params_seed = seed + attempt
        attempt += 1
        k = max(1, n // 2)
        try:
            digraph = random_eulerian_digraph(n, k, (3, min(6, n)), params_seed)
        except GenerationBudgetExceeded:
            continue
        if not is_digon_free(digraph):
            continue
        produced += 1
        yield (f"random-{params_seed}", digraph)


def verify_theorem1(options: SweepOptions) -> VerifyOutcome:
    """Simple intersection graph forces the second-neighborhood property at
    every vertex: exhaustive at small orders, sampled beyond."""
    n = options.n if options.n is not None else 4
    budget = options.budget

    def check(item: tuple[str, Digraph]) -> Optional[Violation]:
        instance_id, digraph = item
        # The Seymour set does not depend on the decomposition, so one
        # simple CI suffices to trigger the check.
        witness_decomposition = None
        for decomposition in enumerate_decompositions(digraph, limit=budget):
            if is_simple(build_ci(digraph, decomposition)):
                witness_decomposition = decomposition
                break
        if witness_decomposition is None:
            return None
        missing = set(range(digraph.n)) - seymour_vertices(digraph)
        if missing:
            return Violation(
                instance_id,
                digraph,
                f"simple CI decomposition {[c.vertices for c in witness_decomposition]} "
                f"but non-Seymour vertices {sorted(missing)}",
            )
        return None

    if n <= EXHAUSTIVE_MAX_ORDER:
        instances = (
            (f"exhaustive-n{n}-{idx}", d)
            for idx, d in enumerate(eulerian_digon_free_instances(n))
        )
        return _sweep("theorem1", instances, check)
    trials = options.trials if options.trials is not None else 100

    def check_random(item: tuple[str, Digraph]) -> Optional[Violation]:
        instance_id, digraph = item
        try:
            decomposition = find_simple_decomposition(digraph, budget=budget)
        except BudgetExhausted:
            return None
        if decomposition is None:
            return None
        missing = set(range(digraph.n)) - seymour_vertices(digraph)
        if missing:
            return Violation(
                instance_id, digraph, f"non-Seymour vertices {sorted(missing)}"
            )
        return None

    return _sweep(
        "theorem1",
        _random_eulerian_instances(trials, n, options.seed),
        check_random,
        notes=(f"random mode: {trials} instances at n={n}",),
    )


def verify_theorem2(options: SweepOptions) -> VerifyOutcome:
    """Regular tournaments have the property at every vertex."""
    n = options.n if options.n is not None else 9
    digraph = rotational_tournament(n)
    missing = set(range(n)) - seymour_vertices(digraph)
    violations = ()
    if missing:
        violations = (
            Violation(f"rotational-{n}", digraph, f"non-Seymour vertices {sorted(missing)}"),
        )
    return VerifyOutcome("theorem2", 1, violations)


def verify_theorem3(options: SweepOptions) -> VerifyOutcome:
    """Nearly regular tournaments: the Seymour vertices are exactly the
    minimum out-degree vertices."""
    n = options.n if options.n is not None else 10
    digraph = nearly_regular_tournament(n)
    minimum = digraph.min_out_degree()
    expected = frozenset(
        v for v in range(n) if digraph.out_degree(v) == minimum
    )
    actual = seymour_vertices(digraph)
    violations = ()
    if actual != expected:
        violations = (
            Violation(
                f"nearly-regular-{n}",
                digraph,
                f"Seymour set {sorted(actual)} != minimum out-degree set {sorted(expected)}",
            ),
        )
    return VerifyOutcome("theorem3", 1, violations)


def verify_theorem4(options: SweepOptions) -> VerifyOutcome:
    """Flowers: the induced clique around any petal names the hub, and the
    hub has the second-neighborhood property."""
    max_petals = options.n if options.n is not None else 5
    checked = 0
    violations = []
    for k in range(2, max_petals + 1):
        for length in (3, 4):
            digraph = flower(k, length)
            decomposition = greedy_decomposition(digraph)
            ci = build_ci(digraph, decomposition)
            sv = seymour_vertices(digraph)
            for vhat in range(ci.cycle_count):
                checked += 1
                witness = clique_single_vertex_witness(
                    induced_closed_neighborhood(ci, vhat)
                )
                if witness != 0:
                    violations.append(
                        Violation(
                            f"flower-{k}-{length}-vhat{vhat}",
                            digraph,
                            f"expected hub witness 0, got {witness}",
                        )
                    )
                elif witness not in sv:
                    violations.append(
                        Violation(
                            f"flower-{k}-{length}-vhat{vhat}",
                            digraph,
                            f"witness {witness} is not a Seymour vertex",
                        )
                    )
    return VerifyOutcome("theorem4", checked, tuple(violations))


def verify_theorem5(options: SweepOptions) -> VerifyOutcome:
    """Block-graph neighborhoods put the whole anchor cycle inside the
    Seymour set; chains and the triangle ring exercise paths and cliques."""
    max_chain = options.n if options.n is not None else 5
    checked = 0
    violations = []
    fixtures: list[tuple[str, Digraph]] = [
        (f"chain-{c}", triangle_chain(c)) for c in range(2, max_chain + 1)
    ]
    fixtures.append(("triangle-ring", triangle_ring()))
    for name, digraph in fixtures:
        decomposition = find_simple_decomposition(digraph)
        if decomposition is None:
            continue
        for vhat in range(len(decomposition)):
            checked += 1
            try:
                witnesses = theorem5_witnesses(digraph, decomposition, vhat)
            except TheoremViolation as exc:
                violations.append(Violation(f"{name}-vhat{vhat}", digraph, str(exc)))
                continue
            if witnesses is None:
                continue
            expected = decomposition.cycles[vhat].vertex_set()
            if witnesses != expected:
                violations.append(
                    Violation(
                        f"{name}-vhat{vhat}",
                        digraph,
                        f"witnesses {sorted(witnesses)} != cycle vertices {sorted(expected)}",
                    )
                )
    return VerifyOutcome("theorem5", checked, tuple(violations))


def verify_prop2(options: SweepOptions) -> VerifyOutcome:
    """Empty skeleton if and only if acyclic, over mixed-density random
    digraphs."""
    trials = options.trials if options.trials is not None else 200
    max_n = options.n if options.n is not None else 8
    densities = (0.1, 0.2, 0.3, 0.5)

    def instances() -> Iterator[tuple[str, Digraph]]:
        for i in range(trials):
            n = 2 + (options.seed + i) % (max_n - 1)
            p = densities[i % len(densities)]
            yield (
                f"random-{options.seed + i}",
                random_digraph(n, p, options.seed + i),
            )

    def check(item: tuple[str, Digraph]) -> Optional[Violation]:
        instance_id, digraph = item
        try:
            no_skeleton = not greedy_skeleton(digraph).arcs
            if no_skeleton != is_dag(digraph):
                raise TheoremViolation("skeleton emptiness disagrees with acyclicity")
        except TheoremViolation as exc:
            return Violation(instance_id, digraph, str(exc))
        return None

    return _sweep("prop2", instances(), check)


def _pendant_fixture(arc: tuple[int, int]) -> Digraph:
    base = double_triangle()
    return build_digraph(6, sorted(base.arcs) + [arc])


def verify_t22(options: SweepOptions) -> VerifyOutcome:
    """Out-degree-preserving skeleton vertices stay Seymour in the host:
    pendant fixtures with known witness sets plus random vertebrates."""
    trials = options.trials if options.trials is not None else 50
    max_n = options.n if options.n is not None else 8
    checked = 0
    violations = []
    expected_sets = {
        (5, 1): frozenset({0, 1, 2, 3, 4}),
        (1, 5): frozenset({0, 2, 3, 4}),
    }
    for arc, expected in expected_sets.items():
        checked += 1
        digraph = _pendant_fixture(arc)
        witnesses, _ = skeleton_seymour_witnesses(digraph, greedy_skeleton(digraph))
        if witnesses != expected:
            violations.append(
                Violation(
                    f"pendant-{arc[0]}-{arc[1]}",
                    digraph,
                    f"witnesses {sorted(witnesses)} != expected {sorted(expected)}",
                )
            )
    for i in range(trials):
        seed = options.seed + i
        digraph = random_digraph(2 + seed % (max_n - 1), 0.3, seed)
        skeleton = greedy_skeleton(digraph)
        if not skeleton.arcs:
            continue
        checked += 1
        try:
            skeleton_seymour_witnesses(digraph, skeleton, budget=options.budget)
        except NotApplicable:
            continue
        except TheoremViolation as exc:
            violations.append(Violation(f"random-{seed}", digraph, str(exc)))
    return VerifyOutcome("t22", checked, tuple(violations))


def verify_conjecture1(options: SweepOptions) -> VerifyOutcome:
    """Total second out-neighborhood size dominates total first size on
    Eulerian digon-free digraphs: exhaustive at small orders, sampled
    beyond.  A violation here would be a genuine counterexample and is the
    most valuable output this tool can produce."""
    n = options.n if options.n is not None else 4

    def check(item: tuple[str, Digraph]) -> Optional[Violation]:
        instance_id, digraph = item
        sums = conjecture_sums(digraph)
        if not sums.holds:
            return Violation(
                instance_id,
                digraph,
                f"sum |N+2| = {sums.sum_second} < sum |N+| = {sums.sum_first}",
            )
        return None

    if n <= EXHAUSTIVE_MAX_ORDER:
        instances = (
            (f"exhaustive-n{n}-{idx}", d)
            for idx, d in enumerate(eulerian_digon_free_instances(n))
        )
        return _sweep("conjecture1", instances, check)
    trials = options.trials if options.trials is not None else 200
    return _sweep(
        "conjecture1",
        _random_eulerian_instances(trials, n, options.seed),
        check,
        notes=(f"random mode: {trials} instances at n={n}",),
    )


PROPERTIES: dict[str, Callable[[SweepOptions], VerifyOutcome]] = {
    "theorem1": verify_theorem1,
    "theorem2": verify_theorem2,
    "theorem3": verify_theorem3,
    "theorem4": verify_theorem4,
    "theorem5": verify_theorem5,
    "prop2": verify_prop2,
    "t22": verify_t22,
    "conjecture1": verify_conjecture1,
}


def run_property(name: str, options: SweepOptions) -> VerifyOutcome:
    if name not in PROPERTIES:
        raise UnknownProperty(
            f"unknown property {name!r}; expected one of {', '.join(sorted(PROPERTIES))}"
        )
    return PROPERTIES[name](options)
