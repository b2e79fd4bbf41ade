import time

import pytest

from treepack.corpus import random_connected_graph, random_corpus
from treepack.exceptions import BudgetExceeded
from treepack.families import (
    canonical_g3,
    chorded_cycle_family,
    cycle_family,
    erdos_posa_family,
    h_chain,
    lemma_cover,
    path_family,
)
from treepack.oracle import (
    Budget,
    CoverSolution,
    PackingSolution,
    check_packing,
    max_disjoint_sets,
    max_packing,
    min_cover,
    min_hitting_set,
    validate_solution,
)
from treepack.patterns import TreeEmbedding

from .testing import cycle, naive_alpha, naive_beta, path


#######################################
## set packing and hitting set
#######################################
def test_max_disjoint_sets():
    sets = [{0, 1}, {1, 2}, {2, 3}, {3, 4}]

    assert max_disjoint_sets(sets) == [0, 2]
    assert max_disjoint_sets([]) == []


def test_max_disjoint_sets_keeps_best_on_budget():
    # greedy takes the first set and stops at 1, the optimum is 4
    sets = [{0, 1, 2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}]

    assert max_disjoint_sets(sets) == [1, 2, 3, 4]

    with pytest.raises(BudgetExceeded):
        max_disjoint_sets(sets, max_nodes=3)

    chosen = max_disjoint_sets(sets, max_nodes=3, keep_best=True)
    assert chosen == sorted(chosen)
    assert len(chosen) >= 1
    for a, i in enumerate(chosen):
        for j in chosen[a + 1:]:
            assert not sets[i] & sets[j]


def test_min_hitting_set():
    sets = [{0, 1}, {1, 2}, {2, 3}, {3, 4}]

    assert len(min_hitting_set(sets)) == 2
    assert min_hitting_set([]) == frozenset()
    assert min_hitting_set([{5}]) == frozenset({5})


def test_min_hitting_set_budget():
    sets = [{i, j} for i in range(8) for j in range(i + 1, 8)]

    assert len(min_hitting_set(sets)) == 7
    with pytest.raises(BudgetExceeded):
        min_hitting_set(sets, max_nodes=5)


#######################################
## small instances
#######################################
@pytest.mark.parametrize(
    "g, alpha, beta",
    [
        (cycle(6), 2, 2),
        (path(4), 1, 1),
        (cycle(5), 1, 2),
        (canonical_g3(), 2, 3),
    ],
    ids=["C6", "P4", "C5", "G3-T1"],
)
def test_t1_oracle(g, alpha, beta):
    assert max_packing(g, 1).size == alpha
    assert min_cover(g, 1).size == beta


def test_k0_is_vertex_count():
    assert max_packing(path(4), 0).size == 4
    assert min_cover(path(4), 0).size == 4


def test_empty_instances():
    assert max_packing(path(2), 1) == PackingSolution(1, ())
    assert min_cover(path(2), 1) == CoverSolution(1, frozenset())


@pytest.mark.parametrize("seed", range(12), ids=[f"seed-{s}" for s in range(12)])
def test_oracle_matches_exhaustive_search(seed):
    g = random_connected_graph(5 + seed % 4, extra=seed % 6, seed=seed)

    assert max_packing(g, 1).size == naive_alpha(g, 1)
    assert min_cover(g, 1).size == naive_beta(g, 1)


@pytest.mark.parametrize("seed", range(6), ids=[f"seed-{s}" for s in range(6)])
def test_t2_oracle_matches_exhaustive_search(seed):
    g = random_connected_graph(8 + seed % 4, extra=8 + seed % 5, seed=seed)

    assert max_packing(g, 2).size == naive_alpha(g, 2)
    assert min_cover(g, 2).size == naive_beta(g, 2)


def test_t2_oracle_matches_exhaustive_search_on_h_chain():
    g = h_chain(2)

    assert max_packing(g, 2).size == naive_alpha(g, 2) == 2
    assert min_cover(g, 2).size == naive_beta(g, 2)


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        max_packing(cycle(6), 1, Budget(max_embeddings=2))


#######################################
## family instances
#######################################
@pytest.mark.parametrize("r", range(1, 6), ids=[f"r{r}" for r in range(1, 6)])
@pytest.mark.parametrize("family", [cycle_family, path_family], ids=["cycle", "path"])
def test_path_and_cycle_instances(family, r):
    g = family(r)
    started = time.perf_counter()

    packing = max_packing(g, 1)
    cover = min_cover(g, 1)

    assert (packing.size, cover.size) == (r, r)
    assert validate_solution(g, 1, packing, cover).ok
    assert time.perf_counter() - started < 1


@pytest.mark.parametrize(
    "r, chords, value",
    [
        (2, [(0, 3, 3)], 2),
        (4, [(0, 6, 6)], 5),
        (6, [(0, 6, 6), (9, 15, 6)], 8),
        (3, [(0, 6, 3)], 3),
        (5, [(0, 9, 6)], 6),
    ],
    ids=["case2-r2", "case3-r4", "case3-r6-two-chords", "case3-r3-short-chord", "case4-r5"],
)
def test_chorded_instances(r, chords, value):
    g = chorded_cycle_family(r, chords)
    started = time.perf_counter()

    assert max_packing(g, 1).size == value
    assert min_cover(g, 1).size == value
    assert time.perf_counter() - started < 30


@pytest.mark.parametrize(
    "r, h",
    [(2, 1), (2, 2), (3, 2)],
    ids=["r2-h1", "r2-h2", "r3-h2"],
)
def test_erdos_posa_instances(r, h):
    g = erdos_posa_family(r, h)
    packing = max_packing(g, 1)
    cover = min_cover(g, 1)

    assert packing.size == r
    assert packing.size <= cover.size
    # the explicit cover with r vertices meets every copy, so beta stays at r
    witness = CoverSolution(1, lemma_cover("erdos_posa", r, h=h))
    assert validate_solution(g, 1, packing, witness).ok
    assert cover.size == r


@pytest.mark.parametrize("r", [1, 2], ids=["r1", "r2"])
def test_h_chain_t2(r):
    g = h_chain(r)
    started = time.perf_counter()

    packing = max_packing(g, 2)
    cover = min_cover(g, 2)

    assert packing.size == r
    assert packing.size <= cover.size
    assert validate_solution(g, 2, packing, cover).ok
    assert time.perf_counter() - started < 60


def test_g3_t2_single_vertex_cover():
    assert max_packing(canonical_g3(), 2).size == 1
    assert min_cover(canonical_g3(), 2).size == 1


#######################################
## validation
#######################################
def test_validate_solution_reports_violations():
    g = cycle(6)
    overlapping = PackingSolution(1, (TreeEmbedding(1, (1, 0, 2)), TreeEmbedding(1, (2, 1, 3))))
    bogus = PackingSolution(1, (TreeEmbedding(1, (0, 2, 4)),))

    report = validate_solution(g, 1, overlapping, CoverSolution(1, frozenset({0})))
    assert report.shared_vertices == (1, 2)
    assert report.cover_witness is not None
    assert not report.ok
    assert len(report.problems()) == 4

    report = validate_solution(g, 1, bogus, CoverSolution(1, frozenset({1, 4})))
    assert not report.packing_valid
    assert report.cover_valid


def test_validate_solution_weak_duality():
    g = cycle(6)
    packing = max_packing(g, 1)
    report = validate_solution(g, 1, packing, CoverSolution(1, frozenset({1})))

    assert not report.cover_valid
    assert not report.weak_duality


def test_check_packing():
    g = cycle(6)

    assert check_packing(g, 1, max_packing(g, 1)) == []
    assert check_packing(g, 2, max_packing(g, 1)) != []


#######################################
## duality on the random corpus
#######################################
def test_weak_duality_on_random_corpus():
    violations = []
    for instance in random_corpus():
        packing = max_packing(instance.graph, instance.k)
        cover = min_cover(instance.graph, instance.k)
        if not validate_solution(instance.graph, instance.k, packing, cover).ok:
            violations.append(instance.name)

    assert violations == []
