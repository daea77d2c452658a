import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

from seymour_lab import (
    CycleDecomposition,
    DiCycle,
    build_ci,
    build_digraph,
    ci_to_dot,
    clique_single_vertex_witness,
    double_triangle,
    enumerate_decompositions,
    find_simple_decomposition,
    flower,
    greedy_decomposition,
    induced_closed_neighborhood,
    is_block_graph,
    is_simple,
    overlapping_squares,
    random_eulerian_digraph,
    seymour_vertices,
    theorem1_check,
    theorem5_witnesses,
    triangle_chain,
    triangle_ring,
)
from seymour_lab.ci_graph import InducedCISubgraph
from seymour_lab.errors import (
    BudgetExhausted,
    GenerationBudgetExceeded,
    IndexOutOfRange,
    InvalidDecomposition,
    NotEulerian,
)


def c3():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@st.composite
def eulerian_digon_free_digraphs(draw):
    n = draw(st.integers(4, 8))
    k = draw(st.integers(1, 3))
    seed = draw(st.integers(0, 10**6))
    try:
        return random_eulerian_digraph(n, k, (3, 4), seed)
    except GenerationBudgetExceeded:
        assume(False)


class TestBuildCI:
    def test_double_triangle_is_k2(self):
        d = double_triangle()
        ci = build_ci(d, greedy_decomposition(d))
        assert ci.cycle_count == 2
        assert ci.edges == ((0, 1, 0),)
        assert is_simple(ci)

    def test_single_cycle_no_edges(self):
        ci = build_ci(c3(), greedy_decomposition(c3()))
        assert ci.cycle_count == 1
        assert ci.edges == ()
        assert is_simple(ci)

    def test_three_petal_flower_is_k3(self):
        d = flower(3, 3)
        ci = build_ci(d, greedy_decomposition(d))
        assert ci.cycle_count == 3
        assert ci.edges == ((0, 1, 0), (0, 2, 0), (1, 2, 0))

    def test_invalid_decomposition_rejected(self):
        with pytest.raises(InvalidDecomposition):
            build_ci(double_triangle(), CycleDecomposition((DiCycle((0, 1, 2)),)))

    def test_overlapping_squares_double_edge(self):
        d = overlapping_squares()
        ci = build_ci(d, greedy_decomposition(d))
        assert not is_simple(ci)
        assert ci.pair_multiplicities()[(0, 1)] == 2

    @given(eulerian_digon_free_digraphs())
    @settings(max_examples=30, deadline=None)
    def test_edge_count_identity(self, d):
        F = greedy_decomposition(d)
        ci = build_ci(d, F)
        containment = {
            v: sum(1 for c in F if v in c) for v in range(d.n)
        }
        expected = sum(t * (t - 1) // 2 for t in containment.values())
        assert len(ci.edges) == expected

    @given(eulerian_digon_free_digraphs())
    @settings(max_examples=30, deadline=None)
    def test_simplicity_equals_pairwise_intersections(self, d):
        F = greedy_decomposition(d)
        ci = build_ci(d, F)
        sets = [c.vertex_set() for c in F]
        largest = max(
            (len(a & b) for a, b in itertools.combinations(sets, 2)),
            default=0,
        )
        assert is_simple(ci) == (largest <= 1)


class TestFindSimple:
    def test_double_triangle(self):
        d = double_triangle()
        F = find_simple_decomposition(d)
        assert [c.vertices for c in F] == [(0, 1, 2), (0, 3, 4)]

    def test_four_petal_flower(self):
        d = flower(4, 3)
        F = find_simple_decomposition(d)
        ci = build_ci(d, F)
        assert ci.cycle_count == 4
        assert is_simple(ci)
        assert len(ci.edges) == 6  # K4

    def test_definitive_none(self):
        assert find_simple_decomposition(overlapping_squares()) is None

    def test_budget_exhausted(self):
        with pytest.raises(BudgetExhausted):
            find_simple_decomposition(overlapping_squares(), budget=1)

    def test_requires_eulerian(self):
        with pytest.raises(NotEulerian):
            find_simple_decomposition(build_digraph(3, [(0, 1), (1, 2)]))

    @given(eulerian_digon_free_digraphs())
    @settings(max_examples=30, deadline=None)
    def test_agrees_with_unpruned_enumeration(self, d):
        by_filter = next(
            (
                F
                for F in enumerate_decompositions(d)
                if is_simple(build_ci(d, F))
            ),
            None,
        )
        assert find_simple_decomposition(d) == by_filter


class TestTheorem1Check:
    def test_double_triangle_passes(self):
        d = double_triangle()
        report = theorem1_check(d, greedy_decomposition(d))
        assert report.applicable and report.passed
        assert report.violations == ()

    def test_flower_passes(self):
        d = flower(3, 4)
        report = theorem1_check(d, greedy_decomposition(d))
        assert report.applicable and report.passed

    def test_not_applicable_for_double_edge(self):
        d = overlapping_squares()
        report = theorem1_check(d, greedy_decomposition(d))
        assert not report.applicable
        assert report.passed is None


class TestInducedNeighborhood:
    def test_k2(self):
        d = double_triangle()
        ci = build_ci(d, greedy_decomposition(d))
        sub = induced_closed_neighborhood(ci, 0)
        assert sub.kept == {0, 1}
        assert sub.edges == ((0, 1, 0),)

    def test_flower_k3_whole(self):
        d = flower(3, 3)
        ci = build_ci(d, greedy_decomposition(d))
        for vhat in range(3):
            sub = induced_closed_neighborhood(ci, vhat)
            assert sub.kept == {0, 1, 2}
            assert len(sub.edges) == 3

    def test_isolated_ci_vertex(self):
        ci = build_ci(c3(), greedy_decomposition(c3()))
        sub = induced_closed_neighborhood(ci, 0)
        assert sub.kept == {0}
        assert sub.edges == ()

    def test_index_out_of_range(self):
        ci = build_ci(c3(), greedy_decomposition(c3()))
        with pytest.raises(IndexOutOfRange):
            induced_closed_neighborhood(ci, 5)


class TestCliqueWitness:
    def test_flower_names_the_hub(self):
        d = flower(4, 3)
        ci = build_ci(d, greedy_decomposition(d))
        for vhat in range(4):
            sub = induced_closed_neighborhood(ci, vhat)
            assert clique_single_vertex_witness(sub) == 0

    def test_distinct_witness_clique_rejected(self):
        # triangle ring: simple K3 whose edges carry three different
        # witnesses, so no single vertex corresponds to the clique
        d = triangle_ring()
        F = find_simple_decomposition(d)
        ci = build_ci(d, F)
        sub = induced_closed_neighborhood(ci, 0)
        assert clique_single_vertex_witness(sub) is None

    def test_single_vertex_absent(self):
        ci = build_ci(c3(), greedy_decomposition(c3()))
        sub = induced_closed_neighborhood(ci, 0)
        assert clique_single_vertex_witness(sub) is None

    def test_incomplete_subgraph_rejected(self):
        # path P3: middle cycle adjacent to both ends, ends not adjacent
        d = triangle_chain(3)
        F = greedy_decomposition(d)
        ci = build_ci(d, F)
        sub = induced_closed_neighborhood(ci, 1)
        assert len(sub.kept) == 3
        assert clique_single_vertex_witness(sub) is None

    def test_double_edge_rejected(self):
        sub = InducedCISubgraph(
            kept=frozenset({0, 1}), edges=((0, 1, 2), (0, 1, 4))
        )
        assert clique_single_vertex_witness(sub) is None


class TestBlockGraph:
    def test_clique_is_block_graph(self):
        d = flower(3, 3)
        ci = build_ci(d, greedy_decomposition(d))
        assert is_block_graph(induced_closed_neighborhood(ci, 0))

    def test_four_cycle_is_not(self):
        edges = ((0, 1, 9), (1, 2, 9), (2, 3, 9), (0, 3, 9))
        sub = InducedCISubgraph(kept=frozenset({0, 1, 2, 3}), edges=edges)
        assert not is_block_graph(sub)

    def test_two_triangles_sharing_a_vertex(self):
        edges = (
            (0, 1, 9), (0, 2, 9), (1, 2, 9),
            (2, 3, 9), (2, 4, 9), (3, 4, 9),
        )
        sub = InducedCISubgraph(kept=frozenset(range(5)), edges=edges)
        assert is_block_graph(sub)

    def test_double_edge_is_not(self):
        sub = InducedCISubgraph(kept=frozenset({0, 1}), edges=((0, 1, 2), (0, 1, 3)))
        assert not is_block_graph(sub)

    def test_path_is_block_graph(self):
        sub = InducedCISubgraph(kept=frozenset({0, 1, 2}), edges=((0, 1, 9), (1, 2, 8)))
        assert is_block_graph(sub)

    def test_isolated_vertices_fine(self):
        sub = InducedCISubgraph(kept=frozenset({0}), edges=())
        assert is_block_graph(sub)


class TestTheorem5Witnesses:
    def test_double_triangle(self):
        d = double_triangle()
        F = greedy_decomposition(d)
        assert theorem5_witnesses(d, F, 0) == {0, 1, 2}

    def test_chain_middle(self):
        d = triangle_chain(3)
        F = greedy_decomposition(d)
        witnesses = theorem5_witnesses(d, F, 1)
        assert witnesses == {2, 3, 4}
        assert witnesses <= seymour_vertices(d)

    def test_double_edge_absent(self):
        d = overlapping_squares()
        F = greedy_decomposition(d)
        assert theorem5_witnesses(d, F, 0) is None


class TestPruningSoundness:
    @given(eulerian_digon_free_digraphs())
    @settings(max_examples=20, deadline=None)
    def test_intersections_never_shrink(self, d):
        # pairwise intersection sizes of a prefix never exceed those of the
        # full decomposition, which is what justifies pruning on >= 2
        for F in enumerate_decompositions(d, limit=10):
            cycles = list(F)
            for size in range(1, len(cycles)):
                prefix = cycles[:size]
                for a, b in itertools.combinations(range(len(prefix)), 2):
                    shared = prefix[a].vertex_set() & prefix[b].vertex_set()
                    full_shared = cycles[a].vertex_set() & cycles[b].vertex_set()
                    assert shared <= full_shared


class TestDotExport:
    def test_double_triangle_dot(self):
        d = double_triangle()
        F = greedy_decomposition(d)
        dot = ci_to_dot(build_ci(d, F), F)
        assert dot == (
            "graph ci {\n"
            '  C0 [label="0 1 2"];\n'
            '  C1 [label="0 3 4"];\n'
            '  C0 -- C1 [label="0"];\n'
            "}\n"
        )
