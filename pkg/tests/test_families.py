import pytest

from treepack.cycles import CycleWitness, longest_cycle
from treepack.exceptions import GraphError
from treepack.families import (
    ChordSpec,
    FamilySpec,
    G3_EDGES,
    all_families,
    anti_contraction_steps,
    build_family,
    canonical_g3,
    chorded_cycle_family,
    cycle_family,
    erdos_posa_family,
    family_from_spec,
    g3_from_k4,
    h_chain,
    lemma_cover,
    path_family,
)
from treepack.graph import complete_graph, from_edge_list, has_clique_minor, is_k_connected, split_vertex


#######################################
## paths and cycles
#######################################
@pytest.mark.parametrize("r", range(1, 6), ids=[f"r{r}" for r in range(1, 6)])
def test_path_and_cycle_family(r):
    p = path_family(r)
    c = cycle_family(r)

    assert (p.vertex_count, p.edge_count) == (3 * r + 1, 3 * r)
    assert (c.vertex_count, c.edge_count) == (3 * r, 3 * r)
    assert all(c.degree(v) == 2 for v in c.vertices)


def test_family_requires_positive_r():
    with pytest.raises(GraphError):
        cycle_family(0)


def test_lemma_cover():
    assert lemma_cover("cycle", 3) == frozenset({1, 4, 7})
    assert lemma_cover("path", 2) == frozenset({1, 4})
    assert lemma_cover("erdos_posa", 2, h=3) == frozenset({1, 4})
    assert lemma_cover("g3", 1) is None


#######################################
## chorded cycles
#######################################
def test_chorded_cycle_layout():
    g = chorded_cycle_family(2, [(0, 3, 3)])

    assert (g.vertex_count, g.edge_count) == (8, 9)
    assert g.has_edge(0, 6) and g.has_edge(6, 7) and g.has_edge(7, 3)


@pytest.mark.parametrize(
    "r, chords",
    [
        (3, [(0, 6, 6)]),
        (2, [(0, 3, 2)]),
        (2, [(0, 0, 3)]),
        (2, [(0, 6, 3)]),
        (6, [(0, 6, 6), (3, 9, 6)]),
    ],
    ids=["longer-cycle", "length-not-multiple", "same-ends", "outside", "two-chords-combine"],
)
def test_chorded_cycle_rejects(r, chords):
    with pytest.raises(GraphError):
        chorded_cycle_family(r, chords)


@pytest.mark.parametrize(
    "r, chords",
    [
        (2, [(0, 3, 3)]),
        (4, [(0, 6, 6)]),
        (6, [(0, 6, 6), (9, 15, 6)]),
        (3, [(0, 6, 3)]),
        (5, [(0, 9, 6)]),
    ],
    ids=["r2", "r4", "r6-two-chords", "r3-short-chord", "r5-long-arc"],
)
def test_chorded_cycle_keeps_longest_cycle(r, chords):
    witness = longest_cycle(chorded_cycle_family(r, chords))

    assert witness.exact
    assert witness.length == 3 * r


def test_chorded_cycle_rejects_inexact_cycle_search(monkeypatch):
    monkeypatch.setattr("treepack.families.cycles.longest_cycle", lambda g: CycleWitness((0, 1, 2), 3, False))

    with pytest.raises(GraphError, match="budget"):
        chorded_cycle_family(6, [(0, 6, 6), (9, 15, 6)])


#######################################
## longest cycle budgets
#######################################
def _cycles(*sizes):
    edges, offset = [], 0
    for size in sizes:
        edges.extend((offset + i, offset + (i + 1) % size) for i in range(size))
        offset += size
    return from_edge_list(offset, edges)


def test_small_blocks_are_exact_in_a_large_core(monkeypatch):
    monkeypatch.setattr("treepack.cycles.CYCLE_NODE_BUDGET", 5)
    witness = longest_cycle(_cycles(12, 12))

    assert (witness.length, witness.exact) == (12, True)


def test_search_continues_after_a_block_runs_out(monkeypatch):
    monkeypatch.setattr("treepack.cycles.CYCLE_NODE_BUDGET", 5)
    witness = longest_cycle(_cycles(21, 9))

    assert witness.length == 9
    assert set(witness.vertices) == set(range(21, 30))
    assert not witness.exact


def test_explicit_budget_bounds_every_block():
    # C9 finishes in 10 nodes, C12 needs 12 before it closes
    witness = longest_cycle(_cycles(9, 12), budget=10)
    assert (witness.length, witness.exact) == (9, False)

    witness = longest_cycle(_cycles(9, 12), budget=1_000)
    assert (witness.length, witness.exact) == (12, True)


#######################################
## erdos_posa
#######################################
def test_erdos_posa_layout():
    g = erdos_posa_family(2, 2)

    assert (g.vertex_count, g.edge_count) == (10, 12)
    assert g.degree(1) == 4 and g.degree(4) == 4
    assert g.has_edge(1, 6) and g.has_edge(6, 7) and g.has_edge(7, 4)


@pytest.mark.parametrize(
    "r, h, i",
    [(1, 1, 0), (2, 0, 0), (2, 1, 1)],
    ids=["small-r", "no-paths", "overflow"],
)
def test_erdos_posa_rejects(r, h, i):
    with pytest.raises(GraphError):
        erdos_posa_family(r, h, i)


#######################################
## G3 and H_r
#######################################
def test_canonical_g3_structure():
    g = canonical_g3()

    assert (g.vertex_count, g.edge_count) == (7, 12)
    assert sorted(g.degree(v) for v in g.vertices) == [3, 3, 3, 3, 4, 4, 4]
    assert is_k_connected(g, 3)
    assert g.sorted_edges() == sorted(G3_EDGES)


def test_g3_grows_from_k4():
    g = complete_graph(4)
    for step in anti_contraction_steps():
        g = split_vertex(g, step)
        assert is_k_connected(g, 3)
        assert has_clique_minor(g, 4)

    assert g == g3_from_k4() == canonical_g3()


@pytest.mark.parametrize("r", [1, 2, 3], ids=["r1", "r2", "r3"])
def test_h_chain(r):
    g = h_chain(r)

    assert g.vertex_count == 7 * r
    assert g.edge_count == 12 * r + 7 * (r - 1)
    assert is_k_connected(g, 3)


#######################################
## registry
#######################################
def test_build_family_dispatch():
    spec = FamilySpec("chorded_cycle", r=2, chords=(ChordSpec(0, 3, 3),))

    assert build_family(spec) == chorded_cycle_family(2, [(0, 3, 3)])
    assert build_family(FamilySpec("erdos_posa", r=2, h=1)) == erdos_posa_family(2, 1)
    assert set(all_families) == {"path", "cycle", "chorded_cycle", "erdos_posa", "g3", "h_chain"}


def test_family_from_spec_unknown():
    with pytest.raises(TypeError):
        family_from_spec(FamilySpec("wheel"))
