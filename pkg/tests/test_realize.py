"""Tests for realizing precentral functions as star decompositions."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from stardeck import (
    Graph,
    Infeasible,
    Star,
    decompose_exhaustive,
    delta_t,
    minimal,
    realize,
    subset_check,
    verify_decomposition,
)


def _random_instance(rng: random.Random) -> tuple[Graph, int, list[int]]:
    """Random (graph, k, p) with the precentral sum constraint satisfied."""
    k = rng.choice([2, 3, 4])
    n = rng.randint(2, 10)
    pool = list(combinations(range(n), 2))
    rng.shuffle(pool)
    edges = pool[: rng.randint(0, len(pool))]
    edges = edges[: len(edges) - len(edges) % k]
    g = Graph.from_edges(n, edges)
    total = g.edge_count // k
    values = [0] * n
    for _ in range(total):
        values[rng.randrange(n)] += 1
    return g, k, values


# --------------------------------------------------------------------- realize


def test_realize_single_star_center():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    stars = realize(g, 3, [1, 0, 0, 0])
    assert stars == [Star(0, frozenset({1, 2, 3}))]


def test_realize_single_star_leaf_is_infeasible():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    out = realize(g, 3, [0, 1, 0, 0])
    assert isinstance(out, Infeasible)
    assert delta_t(g, 3, [0, 1, 0, 0], out.vertices) < 0


def test_realize_complete_graph_minimal():
    g = Graph.complete(6)
    p = minimal(g, 3)
    stars = realize(g, 3, p)
    assert not isinstance(stars, Infeasible)
    assert verify_decomposition(g, 3, stars, p)
    # independent confirmation that this central function is achievable
    pinned = decompose_exhaustive(g, 3, pinned=p)
    assert pinned.status == "found"


def test_realize_rejects_wrong_sum():
    g = Graph.complete(6)
    with pytest.raises(ValueError):
        realize(g, 3, [1, 1, 1, 1, 1, 1])


def test_realize_is_deterministic():
    g = Graph.complete(9)
    p = minimal(g, 3)
    assert realize(g, 3, p) == realize(g, 3, p)


# ---------------------------------------------------------------- subset_check


def test_subset_check_finds_deficient_leaf():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert subset_check(g, 3, [0, 1, 0, 0]) == (1,)


def test_subset_check_passes_complete_graph_minimal():
    g = Graph.complete(6)
    assert subset_check(g, 3, minimal(g, 3)) is None


def test_subset_check_passes_empty_graph():
    g = Graph.from_edges(5, [])
    assert subset_check(g, 3, [0] * 5) is None


def test_subset_check_enforces_size_guard():
    g = Graph.complete(21)
    with pytest.raises(ValueError):
        subset_check(g, 3, minimal(g, 3))
    small = Graph.complete(4)
    with pytest.raises(ValueError):
        subset_check(small, 2, minimal(small, 2), max_n=3)


# --------------------------------------------------------- verify_decomposition


def test_verify_accepts_realized_decomposition():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    star = Star(0, frozenset({1, 2, 3}))
    assert verify_decomposition(g, 3, [star], [1, 0, 0, 0])


def test_verify_rejects_missing_edge():
    g = Graph.complete(6)
    stars = realize(g, 3, minimal(g, 3))
    assert verify_decomposition(g, 3, stars[:-1]) is False


def test_verify_rejects_wrong_central_function():
    g = Graph.complete(6)
    p = minimal(g, 3)
    stars = realize(g, 3, p)
    wrong = list(p.values)
    wrong[0], wrong[5] = wrong[5], wrong[0]
    assert verify_decomposition(g, 3, stars, wrong) is False


def test_verify_rejects_overlapping_stars():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    stars = [Star(0, frozenset({1, 2, 3})), Star(0, frozenset({2, 3, 4}))]
    assert verify_decomposition(g, 3, stars) is False


def test_verify_rejects_wrong_star_size():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert verify_decomposition(g, 3, [Star(0, frozenset({1, 2}))]) is False


# ----------------------------------------------------------------- equivalence


def test_realize_agrees_with_subset_check():
    rng = random.Random(2024)
    feasible = infeasible = 0
    for _ in range(250):
        g, k, p = _random_instance(rng)
        out = realize(g, k, p)
        verdict = subset_check(g, k, p)
        if isinstance(out, Infeasible):
            infeasible += 1
            assert verdict is not None
            assert delta_t(g, k, p, out.vertices) < 0
        else:
            feasible += 1
            assert verdict is None
            assert verify_decomposition(g, k, out, p)
    assert feasible >= 30 and infeasible >= 30
