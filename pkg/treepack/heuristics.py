"""
Block-based packing heuristics: T1 along longest cycles and paths,
T2 inside copies of the G3 elementary structure.
"""
import functools
import itertools
import logging

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .cycles import longest_cycle
from .families import G3_EDGES, G3_T2_IMAGE, canonical_g3
from .graph import blocks_by_component
from .oracle import PackingSolution, max_disjoint_sets
from .patterns import TreeEmbedding

logger = logging.getLogger(__name__)

MAX_G3_MONOMORPHISMS = 2_000
MAX_LITERAL_EXTENSIONS = 2_000
G3_PACKING_NODES = 100
G3_MODES = ("both", "literal", "fallback")


#######################################
## T1
#######################################
def pack_t1(g):
    """
    Consecutive triples along the longest cycle of every block, then along the
    cycle's residual paths and the inter-block paths, then a greedy pass over
    whatever is left. Always a valid disjoint packing, not necessarily maximum.
    """
    decomposition = blocks_by_component(g, method="protocol")
    used = set()
    embeddings = []

    for block in decomposition.blocks:
        sub, host_ids = g.induced(block)
        witness = longest_cycle(sub)
        if witness is None:
            continue

        cycle = [host_ids[v] for v in witness.vertices]
        for i in range(len(cycle) // 3):
            _take(g, cycle[3 * i: 3 * i + 3], used, embeddings)

        residual = set(block) - set(cycle)
        for component in sorted(nx.connected_components(_members_graph(g, residual)), key=min):
            _pack_sequence(g, _walk(g, component, set(cycle)), used, embeddings)
        logger.debug("Block of %d vertices: cycle %d (exact=%s).", len(block), witness.length, witness.exact)

    for path in decomposition.paths:
        _pack_sequence(g, path.vertices, used, embeddings)

    _pack_greedy(g, used, embeddings)
    return PackingSolution(1, tuple(sorted(embeddings, key=lambda e: e.image_vertices)))


def _take(g, triple, used, embeddings):
    a, b, c = triple
    if used & {a, b, c} or not (g.has_edge(a, b) and g.has_edge(b, c)):
        return False
    used.update(triple)
    embeddings.append(TreeEmbedding(1, (b, a, c)))
    return True


def _pack_sequence(g, sequence, used, embeddings):
    i = 0
    while i + 3 <= len(sequence):
        if _take(g, sequence[i: i + 3], used, embeddings):
            i += 3
        else:
            i += 1


def _pack_greedy(g, used, embeddings):
    for center in g.vertices:
        if center in used:
            continue
        free = [u for u in g.neighbors(center) if u not in used]
        if len(free) < 2:
            continue
        # leaves with fewer free neighbors are harder to use elsewhere
        free.sort(key=lambda u: (sum(1 for w in g.neighbors(u) if w not in used), u))
        leaves = sorted(free[:2])
        _take(g, (leaves[0], center, leaves[1]), used, embeddings)


def _members_graph(g, members):
    linker = nx.Graph()
    linker.add_nodes_from(members)
    linker.add_edges_from((u, v) for u, v in g.edges if u in members and v in members)
    return linker


def _walk(g, component, anchors):
    inside = {v: [u for u in g.neighbors(v) if u in component] for v in component}
    ends = [v for v in component if len(inside[v]) <= 1] or sorted(component)
    start = min(ends, key=lambda v: (0 if anchors.intersection(g.neighbors(v)) else 1, v))

    order, visited, stack = [], set(), [start]
    while stack:
        v = stack.pop()
        if v in visited:
            continue
        visited.add(v)
        order.append(v)
        stack.extend(sorted((u for u in inside[v] if u not in visited), reverse=True))
    return order


#######################################
## T2
#######################################
def find_k4_subgraphs(g):
    cliques = []
    for clique in nx.enumerate_all_cliques(g.to_networkx()):
        if len(clique) > 4:
            break
        if len(clique) == 4:
            cliques.append(tuple(sorted(clique)))
    return sorted(cliques)


def find_g3_units(g, mode="both"):
    """
    Vertex-disjoint 7-vertex sets each containing a copy of G3.

    literal: greedy disjoint K^4 subgraphs, each grown by three neighbors into
    a set holding G3. fallback: disjoint family of G3 copies among the
    vertices the literal phase left free, maximum unless the search budget
    runs out. "both" runs literal then fallback.
    """
    if mode not in G3_MODES:
        raise ValueError(f"Unknown G3 search mode: {mode}. Available: {G3_MODES}.")

    units = []
    used = set()
    nxg = g.to_networkx()

    if mode in ("both", "literal"):
        for unit in _literal_units(g, nxg):
            units.append(unit)
            used.update(unit)

    if mode in ("both", "fallback"):
        free = [v for v in g.vertices if v not in used]
        units.extend(_fallback_units(nxg, free))

    return sorted(units, key=min)


def _literal_units(g, nxg):
    selected, taken = [], set()
    for clique in find_k4_subgraphs(g):
        if not taken.intersection(clique):
            selected.append(clique)
            taken.update(clique)

    units, used = [], set()
    for clique in selected:
        if used.intersection(clique):
            continue
        frontier = sorted({u for v in clique for u in g.neighbors(v)} - set(clique) - used)
        extensions = itertools.islice(itertools.combinations(frontier, 3), MAX_LITERAL_EXTENSIONS)
        for extra in extensions:
            vertices = frozenset(clique + extra)
            if not _may_hold_g3(g, vertices, extra):
                continue
            if _g3_match(nxg, vertices) is not None:
                units.append(vertices)
                used.update(vertices)
                break

    logger.debug("Literal G3 search: %d K4 subgraphs, %d units.", len(selected), len(units))
    return units


def _may_hold_g3(g, vertices, extra):
    # G3 has minimum degree 3 and 12 edges
    inside = {v: sum(1 for u in g.neighbors(v) if u in vertices) for v in vertices}
    if any(inside[v] < 3 for v in extra):
        return False
    return sum(inside.values()) // 2 >= len(G3_EDGES)


def _fallback_units(nxg, free):
    if len(free) < 7:
        return []

    core = nx.k_core(nxg.subgraph(free), 3)
    matcher = GraphMatcher(core, _g3_pattern())

    images = set()
    for count, mapping in enumerate(matcher.subgraph_monomorphisms_iter()):
        if count >= MAX_G3_MONOMORPHISMS:
            logger.warning("G3 search stopped after %d monomorphisms.", MAX_G3_MONOMORPHISMS)
            break
        images.add(frozenset(mapping))

    images = sorted(images, key=sorted)
    chosen = max_disjoint_sets(images, max_nodes=G3_PACKING_NODES, keep_best=True)
    return [images[i] for i in chosen]


@functools.lru_cache(maxsize=None)
def _g3_pattern():
    return canonical_g3().to_networkx()


def _g3_match(nxg, vertices):
    matcher = GraphMatcher(nxg.subgraph(vertices), _g3_pattern())
    for mapping in matcher.subgraph_monomorphisms_iter():
        return {position: host for host, position in mapping.items()}
    return None


def g3_mapping(g, vertices):
    """Pattern position -> host vertex for a copy of G3 inside `vertices`, or None."""
    return _g3_match(g.to_networkx(), vertices)


def pack_t2(g):
    """One T2 per G3 unit found inside the blocks of g."""
    decomposition = blocks_by_component(g, method="protocol")
    nxg = g.to_networkx()
    embeddings = []

    for block in decomposition.blocks:
        if len(block) < 7:
            continue
        sub, host_ids = g.induced(block)
        for unit in find_g3_units(sub):
            unit = frozenset(host_ids[v] for v in unit)
            mapping = _g3_match(nxg, unit)
            embeddings.append(TreeEmbedding(2, tuple(mapping[p] for p in G3_T2_IMAGE)))

    return PackingSolution(2, tuple(sorted(embeddings, key=lambda e: e.image_vertices)))
