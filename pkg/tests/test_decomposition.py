import pytest
from hypothesis import assume, given, settings, strategies as st

from seymour_lab import (
    CycleDecomposition,
    DiCycle,
    build_digraph,
    double_triangle,
    enumerate_decompositions,
    greedy_decomposition,
    overlapping_squares,
    random_eulerian_digraph,
    rotational_tournament,
    triangle_ring,
    validate_decomposition,
)
from seymour_lab.cycle_decomposition import decomposition_cycle_bound
from seymour_lab.digraph_core import _make_digraph, is_balanced
from seymour_lab.errors import BadParameters, GenerationBudgetExceeded, HasDigon, NotBalanced

from oracles import brute_force_decompositions


def c3():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@st.composite
def balanced_digon_free_digraphs(draw, max_arcs=10):
    n = draw(st.integers(4, 8))
    k = draw(st.integers(1, 3))
    hi = draw(st.integers(3, 4))
    assume(k * hi <= max_arcs)
    seed = draw(st.integers(0, 10**6))
    try:
        return random_eulerian_digraph(n, k, (3, hi), seed)
    except GenerationBudgetExceeded:
        assume(False)


class TestDiCycle:
    def test_canonical_rotation(self):
        assert DiCycle((2, 0, 1)).vertices == (0, 1, 2)
        assert DiCycle((4, 5, 3)).vertices == (3, 4, 5)

    def test_rejects_short(self):
        with pytest.raises(BadParameters):
            DiCycle((0, 1))

    def test_rejects_repeats(self):
        with pytest.raises(BadParameters):
            DiCycle((0, 1, 0, 2))

    def test_arcs_close_the_cycle(self):
        assert DiCycle((1, 2, 0)).arcs() == ((0, 1), (1, 2), (2, 0))

    def test_ordering(self):
        assert DiCycle((0, 1, 2)) < DiCycle((0, 3, 4))


class TestValidate:
    def test_valid_triangle(self):
        assert validate_decomposition(c3(), CycleDecomposition((DiCycle((0, 1, 2)),)))

    def test_uncovered_arcs(self):
        result = validate_decomposition(
            double_triangle(), CycleDecomposition((DiCycle((0, 1, 2)),))
        )
        assert not result
        assert any("uncovered" in p for p in result.problems)

    def test_double_triangle_full(self):
        F = CycleDecomposition((DiCycle((0, 1, 2)), DiCycle((0, 3, 4))))
        assert validate_decomposition(double_triangle(), F)

    def test_foreign_arc(self):
        result = validate_decomposition(c3(), CycleDecomposition((DiCycle((0, 2, 1)),)))
        assert not result

    def test_duplicate_coverage(self):
        F = CycleDecomposition((DiCycle((0, 1, 2)), DiCycle((0, 1, 2))))
        # identical cycles collapse in the sorted tuple but still double-cover
        d = c3()
        if len(F.cycles) == 2:
            assert not validate_decomposition(d, F)


class TestGreedy:
    def test_triangle(self):
        F = greedy_decomposition(c3())
        assert [c.vertices for c in F] == [(0, 1, 2)]

    def test_double_triangle(self):
        F = greedy_decomposition(double_triangle())
        assert [c.vertices for c in F] == [(0, 1, 2), (0, 3, 4)]

    def test_rotational_t5(self):
        d = rotational_tournament(5)
        F = greedy_decomposition(d)
        assert sum(len(c) for c in F) == 10
        assert validate_decomposition(d, F)

    def test_not_balanced(self):
        with pytest.raises(NotBalanced):
            greedy_decomposition(build_digraph(3, [(0, 1), (1, 2)]))

    def test_digon(self):
        with pytest.raises(HasDigon):
            greedy_decomposition(build_digraph(2, [(0, 1), (1, 0)]))

    @given(balanced_digon_free_digraphs())
    def test_round_trip(self, d):
        F = greedy_decomposition(d)
        assert validate_decomposition(d, F)

    @given(balanced_digon_free_digraphs())
    def test_residual_balance_after_any_cycle(self, d):
        F = greedy_decomposition(d)
        for cycle in F:
            residual = _make_digraph(d.n, d.arcs - set(cycle.arcs()))
            assert is_balanced(residual)

    @given(balanced_digon_free_digraphs())
    def test_cycle_bound(self, d):
        F = greedy_decomposition(d)
        assert len(F) <= decomposition_cycle_bound(d)


class TestEnumerate:
    def test_triangle_unique(self):
        assert len(list(enumerate_decompositions(c3()))) == 1

    def test_double_triangle_unique(self):
        found = list(enumerate_decompositions(double_triangle()))
        assert len(found) == 1
        assert [c.vertices for c in found[0]] == [(0, 1, 2), (0, 3, 4)]

    def test_triangle_ring_has_two(self):
        found = list(enumerate_decompositions(triangle_ring()))
        assert len(found) == 2

    def test_overlapping_squares_has_two(self):
        found = list(enumerate_decompositions(overlapping_squares()))
        assert len(found) == 2

    def test_limit(self):
        found = list(enumerate_decompositions(triangle_ring(), limit=1))
        assert len(found) == 1

    def test_deterministic_order(self):
        a = list(enumerate_decompositions(triangle_ring()))
        b = list(enumerate_decompositions(triangle_ring()))
        assert a == b

    def test_matches_brute_force_on_fixtures(self):
        for d in (c3(), double_triangle(), triangle_ring(), overlapping_squares()):
            smart = set(enumerate_decompositions(d))
            brute = brute_force_decompositions(d)
            assert smart == brute

    @given(balanced_digon_free_digraphs(max_arcs=9))
    @settings(max_examples=30, deadline=None)
    def test_matches_brute_force(self, d):
        smart = set(enumerate_decompositions(d))
        brute = brute_force_decompositions(d)
        assert smart == brute

    @given(balanced_digon_free_digraphs())
    @settings(max_examples=25, deadline=None)
    def test_all_emitted_are_valid(self, d):
        for F in enumerate_decompositions(d, limit=50):
            assert validate_decomposition(d, F)
