from __future__ import annotations

from fractions import Fraction

import pytest

from ktrans import (
    decompose,
    degree_counts,
    degree_profile,
    density,
    density_limit,
    edge_count,
    indegree_sequence,
    is_oriented_irregular,
    is_regular,
    outdegree_sequence,
    path_closure_arcs,
    path_closure_graph,
    total_degree_sequence,
)


def expanded_density(k: int, n: int) -> Fraction:
    """Independent closed form in (k, l, m) used to cross-check density()."""
    l, m = divmod(n - 2, k - 1)
    return Fraction(
        l * l * (k - 1) + l * (k + 2 * m + 1) + 2 * (m + 1),
        l * l * (k - 1) ** 2 + l * (k - 1) * (2 * m + 3) + (m + 1) * (m + 2),
    )


@pytest.mark.parametrize("k,n,l,m", [(5, 11, 2, 1), (5, 14, 3, 0), (2, 7, 5, 0)])
def test_decompose(k, n, l, m):
    p = decompose(k, n)
    assert (p.l, p.m) == (l, m)
    assert n == 2 + p.l * (k - 1) + p.m
    assert 0 <= p.m < k - 1


@pytest.mark.parametrize("k,n", [(5, 1), (1, 5), (5, 0)])
def test_decompose_rejects(k, n):
    with pytest.raises(ValueError):
        decompose(k, n)


def test_arcs_k5_n11_lengths():
    arcs = path_closure_arcs(5, 11)
    assert len(arcs) == 18
    assert {j - i for i, j in arcs} == {1, 5, 9}


@pytest.mark.parametrize("n", range(2, 12))
def test_arcs_k2_is_transitive_tournament(n):
    arcs = path_closure_arcs(2, n)
    assert len(arcs) == n * (n - 1) // 2
    assert all(i < j for i, j in arcs)


@pytest.mark.parametrize("k,n", [(5, 3), (5, 5), (7, 4), (3, 1)])
def test_arcs_short_paths_stay_paths(k, n):
    assert path_closure_arcs(k, n) == {(i, i + 1) for i in range(n - 1)}


@pytest.mark.parametrize("k", range(3, 7))
def test_arc_lengths_are_one_mod_k_minus_1(k):
    for n in range(1, 41):
        assert all((j - i - 1) % (k - 1) == 0 for i, j in path_closure_arcs(k, n))


def test_indegree_outdegree_k5_n12():
    assert indegree_sequence(5, 12) == (0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3)
    assert outdegree_sequence(5, 12) == (3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0)


@pytest.mark.parametrize("n", range(1, 10))
def test_indegree_k2_counts_up(n):
    assert indegree_sequence(2, n) == tuple(range(n))


@pytest.mark.parametrize("k,n", [(5, 3), (5, 5), (8, 6)])
def test_indegree_short_paths(k, n):
    assert indegree_sequence(k, n) == (0,) + (1,) * (n - 1)


def test_total_degree_known_values_for_k5():
    assert total_degree_sequence(5, 10) == (3,) * 10
    assert total_degree_sequence(5, 11) == (3, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3)
    assert total_degree_sequence(5, 12) == (3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3)
    assert total_degree_sequence(5, 13) == (3, 4, 4, 4, 3, 4, 4, 4, 3, 4, 4, 4, 3)
    assert total_degree_sequence(5, 14) == (4,) * 14


def test_degenerate_single_vertex():
    assert indegree_sequence(5, 1) == (0,)
    assert outdegree_sequence(5, 1) == (0,)
    assert total_degree_sequence(5, 1) == (0,)
    assert edge_count(5, 1) == 0
    with pytest.raises(ValueError):
        density(5, 1)


def test_degree_counts_examples():
    assert degree_counts(5, 11) == (8, 3)
    assert degree_counts(5, 10) == (10, 0)
    assert degree_counts(3, 11) == (6, 5)


def test_degree_counts_match_engine_histogram_k3_n11():
    from collections import Counter
    from ktrans import k_closure, make_path

    closure = k_closure(make_path(11), 3).closure
    hist = Counter(degree_profile(closure).total)
    low, high = degree_counts(3, 11)
    l = decompose(3, 11).l
    assert hist[l + 1] == low and hist[l + 2] == high


def test_degree_counts_rejects_n1():
    with pytest.raises(ValueError):
        degree_counts(5, 1)


def test_edge_count_examples():
    assert edge_count(5, 11) == 18
    for n in range(2, 31):
        expected = n * n // 4 if n % 2 == 0 else (n * n - 1) // 4
        assert edge_count(3, n) == expected


def test_edge_count_matches_arc_sets():
    for k in range(2, 7):
        for n in range(1, 41):
            assert edge_count(k, n) == len(path_closure_arcs(k, n))


def test_density_k2_is_one():
    assert all(density(2, n) == 1 for n in range(2, 20))


def test_density_k3_alternates_and_exceeds_half():
    for n in range(2, 60):
        d = density(3, n)
        if n % 2 == 0:
            assert d == Fraction(1, 2) * Fraction(n, n - 1)
        else:
            assert d == Fraction(1, 2) * Fraction(n + 1, n)
        assert d > Fraction(1, 2)


def test_density_equals_expanded_form():
    for k in range(2, 9):
        for n in range(2, 80):
            assert density(k, n) == expanded_density(k, n)


def test_density_limit_values():
    assert density_limit(3) == Fraction(1, 2)
    assert density_limit(5) == Fraction(1, 4)
    with pytest.raises(ValueError):
        density_limit(2)


def test_regularity_predicate():
    assert is_regular(5, 10) and is_regular(5, 14)
    assert not is_regular(5, 11)
    assert is_regular(5, 1)
    assert all(is_regular(2, n) for n in range(1, 10))


def test_oriented_irregularity_k3_parity():
    for n in range(3, 31):
        assert is_oriented_irregular(3, n) == (n % 2 == 1)


def test_oriented_irregularity_k2_always():
    assert all(is_oriented_irregular(2, n) for n in range(1, 20))


def test_oriented_irregularity_fails_for_larger_k():
    for k in (4, 5, 6):
        for n in range(k + 2, 31):
            assert not is_oriented_irregular(k, n)


def test_sequences_sum_to_total_and_match_graphs():
    for k in range(2, 7):
        for n in range(1, 41):
            ins = indegree_sequence(k, n)
            outs = outdegree_sequence(k, n)
            total = total_degree_sequence(k, n)
            assert tuple(i + o for i, o in zip(ins, outs)) == total
            profile = degree_profile(path_closure_graph(k, n))
            assert profile.indeg == ins
            assert profile.outdeg == outs
            assert profile.total == total


def test_sum_of_indegrees_is_edge_count():
    for k in range(2, 7):
        for n in range(1, 41):
            assert sum(indegree_sequence(k, n)) == edge_count(k, n)


def test_degree_counts_match_sequence_histogram():
    from collections import Counter

    for k in range(2, 7):
        for n in range(2, 41):
            p = decompose(k, n)
            hist = Counter(total_degree_sequence(k, n))
            low, high = degree_counts(k, n)
            assert hist[p.l + 1] == low
            assert hist[p.l + 2] == high
            assert low + high == n


def test_constant_runs_of_total_degree_have_constant_pairs():
    for k in range(3, 7):
        for n in range(k + 2, 41):
            if is_regular(k, n):
                continue
            total = total_degree_sequence(k, n)
            pairs = tuple(zip(indegree_sequence(k, n), outdegree_sequence(k, n)))
            start = 0
            for i in range(1, n + 1):
                if i == n or total[i] != total[start]:
                    run = set(pairs[start:i])
                    assert len(run) == 1, (k, n, start, i)
                    start = i
