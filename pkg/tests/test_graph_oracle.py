import json
import random

import pytest

from fibrun.barriers import certified_distance
from fibrun.errors import BudgetExceededError, InvalidVertexError
from fibrun.graph_oracle import (
    all_pairs_check,
    bfs_distances,
    build_index,
    diameter_exact,
    distance_bfs,
    eccentricity,
    hamming_formula,
    radius_exact,
)
from fibrun.strings import hamming

from conftest import EX21_BETA, EX21_GAMMA


def test_small_graphs():
    g0 = build_index(0)
    assert g0.vertices == [""] and g0.adjacency.nnz == 0
    g1 = build_index(1)
    assert g1.vertices == ["0", "1"] and sorted(g1.edges()) == [(0, 1)]
    g2 = build_index(2)
    edges = {frozenset((g2.vertex(i), g2.vertex(j))) for i, j in g2.edges()}
    assert edges == {frozenset(("00", "01")), frozenset(("00", "10"))}


def test_adjacency_is_symmetric_hamming_one(index_cache):
    g = index_cache(10)
    a = g.adjacency
    assert (a != a.T).nnz == 0
    for i, j in g.edges():
        assert hamming(g.vertex(i), g.vertex(j)) == 1
    assert max(g.degree(i) for i in range(len(g))) <= 10


def test_degree_of_zero_vertex(index_cache):
    g = index_cache(9)
    zero = "0" * 9
    flips = sum(
        1 for k in range(9) if zero[:k] + "1" + zero[k + 1 :] in set(g.vertices)
    )
    assert g.degree(g.index_of(zero)) == flips


def test_distances_on_r2():
    g = build_index(2)
    assert distance_bfs(g, "10", "01") == 2
    assert eccentricity(g, "00").eccentricity == 1
    rep = eccentricity(g, "10")
    assert rep.eccentricity == 2 and rep.farthest == ["01"]
    assert eccentricity(build_index(0), "").eccentricity == 0


def test_example_distance(index_cache):
    assert distance_bfs(index_cache(21), EX21_BETA, EX21_GAMMA) == 14


def test_non_vertex_rejected(index_cache):
    with pytest.raises(InvalidVertexError):
        index_cache(4).index_of("1110")


@pytest.mark.parametrize("n, diam", [(2, 2), (4, 4), (13, 12)])
def test_diameter_values(n, diam):
    assert diameter_exact(build_index(n))[0] == diam


def test_diameter_witness_attains(index_cache):
    g = index_cache(11)
    d, (u, v) = diameter_exact(g)
    assert distance_bfs(g, u, v) == d


@pytest.mark.parametrize("n, rad", [(0, 0), (4, 2), (7, 4)])
def test_radius_values(n, rad):
    assert radius_exact(build_index(n))[0] == rad


def test_parallel_matches_sequential(index_cache):
    g = index_cache(14)
    assert diameter_exact(g, jobs=3) == diameter_exact(g)
    assert radius_exact(g, jobs=3) == radius_exact(g)


def test_time_budget_flags_partial(index_cache):
    g = index_cache(16)
    with pytest.raises(BudgetExceededError) as exc:
        diameter_exact(g, time_budget=-1.0)
    ecc, _ = exc.value.partial
    assert (ecc == -1).all()


def test_hamming_formula_boundary():
    assert all_pairs_check(build_index(6), hamming_formula).ok
    rep = all_pairs_check(build_index(7), hamming_formula)
    assert not rep.ok
    g = build_index(7)
    assert distance_bfs(g, "1001000", "1111000") == hamming("1001000", "1111000") + 2


def test_barrier_formula_exhaustive_small():
    for n in range(0, 12):
        rep = all_pairs_check(build_index(n), certified_distance)
        assert rep.ok, rep.mismatches[:3]
        size = len(build_index(n))
        assert rep.pairs_checked == size * (size + 1) // 2


def test_sampled_mode_is_reproducible(index_cache):
    g = index_cache(15)
    a = all_pairs_check(g, certified_distance, sources=20, targets_per_source=50, seed=7)
    b = all_pairs_check(g, certified_distance, sources=20, targets_per_source=50, seed=7)
    assert a.to_dict() == b.to_dict()
    assert a.mode == "sampled" and a.pairs_checked == 1000 and a.ok
    assert list(json.loads(json.dumps(a.to_dict()))) == ["n", "pairs_checked", "mismatches", "seed"]


def test_bfs_parity_symmetry_triangle(index_cache):
    g = index_cache(12)
    rng = random.Random(3)
    idx = rng.sample(range(len(g)), 30)
    sub = bfs_distances(g, idx)[:, idx]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            h = hamming(g.vertex(i), g.vertex(j))
            assert sub[a, b] >= h and (sub[a, b] - h) % 2 == 0
    assert (sub == sub.T).all()
    # d(a, b) <= d(a, c) + d(c, b) for every sampled triple
    assert (sub[:, None, :] <= sub[:, :, None] + sub[None, :, :]).all()
