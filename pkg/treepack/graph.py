"""
Undirected simple graphs on dense integer ids and the connectivity,
vertex-split and clique-minor machinery shared by every other module.
"""
import itertools
import logging
from collections import namedtuple
from dataclasses import dataclass, field

import networkx as nx

from .exceptions import GraphError, UnsupportedError

logger = logging.getLogger(__name__)

MAX_CLIQUE_MINOR = 6
MINOR_STATE_BUDGET = 500_000


@dataclass(frozen=True)
class Graph:
    """
    Immutable undirected simple graph.

    Vertices are 0..vertex_count-1, edges are stored as (u, v) with u < v.
    Use `from_edge_list` to build one from arbitrary pairs.
    """

    vertex_count: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"Negative vertex count: {self.vertex_count}.")

        adjacency = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if not 0 <= u < v < self.vertex_count:
                raise GraphError(f"Edge ({u}, {v}) is not normalized for n={self.vertex_count}.")
            adjacency[u].append(v)
            adjacency[v].append(u)

        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adjacency))

    @property
    def vertices(self):
        return range(self.vertex_count)

    @property
    def edge_count(self):
        return len(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    def induced(self, vertices):
        """
        Subgraph induced by `vertices`, relabelled to 0..len-1 in ascending
        id order. Returns (subgraph, host_ids) where host_ids[new] = old.
        """
        host_ids = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(host_ids)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return from_edge_list(len(host_ids), edges), host_ids

    def without_vertices(self, removed):
        """Same vertex ids, every edge touching `removed` dropped."""
        removed = set(removed)
        return Graph(
            self.vertex_count,
            frozenset(e for e in self.edges if e[0] not in removed and e[1] not in removed),
        )

    def to_networkx(self):
        nxg = nx.Graph()
        nxg.add_nodes_from(self.vertices)
        nxg.add_edges_from(self.sorted_edges())
        return nxg


@dataclass(frozen=True)
class VertexSplitSpec:
    """
    Anti-contraction of `target`: the new vertex gets id n, takes over
    `moved_neighbors`, and `extra_edges` (which must contain target-n) are added.
    """

    target: int
    kept_neighbors: frozenset
    moved_neighbors: frozenset
    extra_edges: tuple


InterBlockPath = namedtuple("InterBlockPath", ("ends", "vertices"))


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    paths: tuple
    unclassified: frozenset = frozenset()

    def paths_between(self, q, s=None):
        ends = _ordered_ends([q, s])
        return [p.vertices for p in self.paths if p.ends == ends]

    def path_vertices(self):
        return frozenset(v for p in self.paths for v in p.vertices)

    def normalized(self):
        """
        Coalesce blocks sharing a vertex and renumber them by smallest member.
        """
        linker = nx.Graph()
        for index, block in enumerate(self.blocks):
            linker.add_node(("block", index))
            for v in block:
                linker.add_edge(("block", index), ("vertex", v))

        merged = []
        new_index = {}
        components = [
            (
                frozenset(v for kind, v in component if kind == "vertex"),
                [i for kind, i in component if kind == "block"],
            )
            for component in nx.connected_components(linker)
        ]
        components.sort(key=lambda item: min(item[0]))
        for vertices, old_indices in components:
            for old in old_indices:
                new_index[old] = len(merged)
            merged.append(vertices)

        paths = tuple(
            sorted(
                (
                    InterBlockPath(
                        ends=_ordered_ends([new_index.get(q) if q is not None else None for q in p.ends]),
                        vertices=p.vertices,
                    )
                    for p in self.paths
                ),
                key=lambda p: min(p.vertices),
            )
        )

        return BlockDecomposition(tuple(merged), paths, self.unclassified)

    def partition_key(self):
        normalized = self.normalized()
        return normalized.blocks, normalized.paths

    def agrees_with(self, reference):
        """
        Same normalized blocks, and every non-block vertex of `reference` is
        either on one of our paths or left unclassified.
        """
        if self.normalized().blocks != reference.normalized().blocks:
            return False
        return self.path_vertices() | self.unclassified == reference.path_vertices() | reference.unclassified


def from_edge_list(n, pairs):
    """
    Build a Graph on n vertices. Parallel pairs are collapsed,
    out-of-range ids and self-loops raise GraphError.
    """
    if n < 0:
        raise GraphError(f"Negative vertex count: {n}.")

    edges = set()
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Vertex id out of range in edge ({u}, {v}) for n={n}.")
        if u == v:
            raise GraphError(f"Self-loop at vertex {u}.")
        edges.add((min(u, v), max(u, v)))

    return Graph(n, frozenset(edges))


def complete_graph(n):
    return from_edge_list(n, itertools.combinations(range(n), 2))


def is_connected(g):
    if g.vertex_count == 0:
        return False
    return nx.is_connected(g.to_networkx())


def is_k_connected(g, k):
    """
    True iff |V| > k and no set of fewer than k vertices disconnects g.

    Every vertex subset of size k-1 is removed in turn; removing a smaller set
    from a graph with more than k vertices never disconnects it when no
    (k-1)-set does.
    """
    if k < 1:
        raise GraphError(f"Connectivity order must be positive, got {k}.")
    if g.vertex_count <= k:
        return False

    nxg = g.to_networkx()
    if not nx.is_connected(nxg):
        return False

    everything = set(g.vertices)
    for cut in itertools.combinations(g.vertices, k - 1):
        if not nx.is_connected(nxg.subgraph(everything.difference(cut))):
            logger.debug("Vertex cut %s disconnects the graph.", cut)
            return False

    return True


def split_vertex(g, spec):
    """Anti-contraction: returns a graph with one more vertex (id n)."""
    n = g.vertex_count
    target = spec.target
    if not 0 <= target < n:
        raise GraphError(f"Split target {target} out of range for n={n}.")

    kept = frozenset(spec.kept_neighbors)
    moved = frozenset(spec.moved_neighbors)
    if kept & moved:
        raise GraphError(f"Kept and moved neighbors overlap: {sorted(kept & moved)}.")
    if kept | moved != frozenset(g.neighbors(target)):
        raise GraphError(
            f"Kept and moved neighbors {sorted(kept | moved)} do not partition "
            f"the neighbors {list(g.neighbors(target))} of vertex {target}."
        )

    extra = [(min(u, v), max(u, v)) for u, v in spec.extra_edges]
    if (target, n) not in extra:
        raise GraphError(f"Extra edges must join vertex {target} to the new vertex {n}.")
    if len(set(extra)) != len(extra):
        raise GraphError("Extra edges contain duplicates.")

    edges = {e for e in g.edges if not (target in e and (e[0] in moved or e[1] in moved))}
    edges.update((min(u, n), max(u, n)) for u in moved)
    for e in extra:
        if e in edges:
            raise GraphError(f"Extra edge {e} already exists after the split.")
        edges.add(e)

    return from_edge_list(n + 1, edges)


def contract_edge(g, u, v):
    """Merge v into u; ids above v shift down by one."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge.")

    def relabel(w):
        if w == v:
            w = u
        return w - 1 if w > v else w

    pairs = [(relabel(a), relabel(b)) for a, b in g.edges]
    return from_edge_list(g.vertex_count - 1, [(a, b) for a, b in pairs if a != b])


#######################################
## clique minors
#######################################
def has_clique_minor(g, t):
    """
    True iff g has a K^t minor, for t <= 6.

    Low-degree vertices are deleted or suppressed, then edge contractions
    are branched on until a K^t subgraph appears or the graph shrinks
    below t vertices. Visited contraction states are memoized.
    """
    if t > MAX_CLIQUE_MINOR:
        raise UnsupportedError(f"Clique minors are supported up to K^{MAX_CLIQUE_MINOR}, got K^{t}.")
    if t <= 1:
        return g.vertex_count >= t
    if t == 2:
        return g.edge_count > 0
    if t == 3:
        return bool(nx.cycle_basis(g.to_networkx()))

    adjacency = {v: set(g.neighbors(v)) for v in g.vertices}
    seen = set()
    states = [0]
    found = _contracts_to_clique(adjacency, t, seen, states)
    logger.debug("K^%d minor search visited %d states: %s.", t, states[0], found)
    return found


def _contracts_to_clique(adjacency, t, seen, states):
    adjacency = _reduce_for_minor(adjacency)
    if len(adjacency) < t:
        return False

    edges = frozenset((u, v) for u in adjacency for v in adjacency[u] if u < v)
    if len(edges) < t * (t - 1) // 2:
        return False
    if _has_clique(adjacency, t):
        return True
    if len(adjacency) == t or edges in seen:
        return False

    seen.add(edges)
    states[0] += 1
    if states[0] > MINOR_STATE_BUDGET:
        raise UnsupportedError(f"Clique minor search exceeded {MINOR_STATE_BUDGET} states.")

    for u, v in sorted(edges):
        if _contracts_to_clique(_contract(adjacency, u, v), t, seen, states):
            return True

    return False


def _reduce_for_minor(adjacency):
    """Delete vertices of degree <= 1 and suppress degree-2 vertices (valid for t >= 4)."""
    adjacency = {v: set(nbrs) for v, nbrs in adjacency.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adjacency):
            degree = len(adjacency[v])
            if degree <= 1:
                for u in adjacency[v]:
                    adjacency[u].discard(v)
                del adjacency[v]
                changed = True
            elif degree == 2:
                adjacency = _contract(adjacency, min(adjacency[v]), v)
                changed = True
            if changed:
                break
    return adjacency


def _contract(adjacency, u, v):
    adjacency = {w: set(nbrs) for w, nbrs in adjacency.items() if w != v}
    for w in adjacency:
        if v in adjacency[w]:
            adjacency[w].discard(v)
            if w != u:
                adjacency[w].add(u)
                adjacency[u].add(w)
    return adjacency


def _has_clique(adjacency, t):
    nxg = nx.Graph()
    nxg.add_nodes_from(v for v, nbrs in adjacency.items() if len(nbrs) >= t - 1)
    nxg.add_edges_from((u, v) for u in nxg for v in adjacency[u] if v in nxg)
    return any(len(clique) >= t for clique in nx.find_cliques(nxg))


#######################################
## blocks
#######################################
def reference_blocks(g):
    """
    Articulation-point oracle: biconnected components with at least three
    vertices are blocks, remaining vertices form the inter-block paths.
    """
    if not is_connected(g):
        raise GraphError("Block decomposition requires a connected graph.")

    blocks = sorted(
        (frozenset(c) for c in nx.biconnected_components(g.to_networkx()) if len(c) >= 3),
        key=min,
    )
    in_block = set().union(*blocks) if blocks else set()
    path_vertices = [v for v in g.vertices if v not in in_block]

    return BlockDecomposition(tuple(blocks), group_paths(g, blocks, path_vertices))


def group_paths(g, blocks, path_vertices):
    """
    Group non-block vertices into inter-block paths, each ordered from the end
    attached to its lowest-numbered block (smaller id on ties).
    """
    block_of = {}
    for index, block in enumerate(blocks):
        for v in block:
            block_of.setdefault(v, []).append(index)

    members = set(path_vertices)
    linker = nx.Graph()
    linker.add_nodes_from(members)
    linker.add_edges_from((u, v) for u, v in g.edges if u in members and v in members)

    paths = []
    for component in sorted(nx.connected_components(linker), key=min):
        attached = sorted({q for v in component for u in g.neighbors(v) for q in block_of.get(u, ())})
        ends = _ordered_ends(attached[:2])
        paths.append(InterBlockPath(ends, _order_path(g, component, block_of, ends[0])))

    return tuple(paths)


def blocks_by_component(g, method="reference"):
    """
    Block decomposition of every connected component, in host ids.
    `method` is "reference" or "protocol".
    """
    from .simulation import run_block_detection

    blocks, paths, unclassified = [], [], set()
    for component in sorted(nx.connected_components(g.to_networkx()), key=min):
        sub, host_ids = g.induced(component)
        if method == "protocol" and sub.vertex_count >= 2:
            decomposition, _ = run_block_detection(sub, early_stop=True)
        elif method in ("protocol", "reference"):
            decomposition = reference_blocks(sub)
        else:
            raise ValueError(f"Unknown block detection method: {method}.")

        offset = len(blocks)
        blocks.extend(frozenset(host_ids[v] for v in block) for block in decomposition.blocks)
        for path in decomposition.paths:
            ends = tuple(q + offset if q is not None else None for q in path.ends)
            paths.append(InterBlockPath(ends, tuple(host_ids[v] for v in path.vertices)))
        unclassified.update(host_ids[v] for v in decomposition.unclassified)

    return BlockDecomposition(tuple(blocks), tuple(paths), frozenset(unclassified))


def _ordered_ends(ends):
    ends = list(ends) + [None, None]
    first, second = ends[0], ends[1]
    if first is not None and second is not None and second < first:
        first, second = second, first
    if first is None and second is not None:
        first, second = second, None
    return (first, second)


def _order_path(g, component, block_of, anchor_block):
    inside = {v: [u for u in g.neighbors(v) if u in component] for v in component}
    ends = [v for v in component if len(inside[v]) <= 1] or sorted(component)

    def anchored(v):
        touches = any(anchor_block in block_of.get(u, ()) for u in g.neighbors(v))
        return (0 if touches else 1, v)

    start = min(ends, key=anchored)
    order, visited, stack = [], set(), [start]
    while stack:
        v = stack.pop()
        if v in visited:
            continue
        visited.add(v)
        order.append(v)
        stack.extend(sorted((u for u in inside[v] if u not in visited), reverse=True))

    return tuple(order)
