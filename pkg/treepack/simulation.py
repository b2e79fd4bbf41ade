"""
Round-based simulation of the routing-table block detection protocol.

Every vertex keeps one growing path per neighbor port. In each synchronous
round a vertex refreshes port u's path from the table u broadcast in the
previous round and broadcasts its own table. After n rounds each pair
(i, j) gets the number x_ij of independent paths found in the tables, and
the pair rules turn those counts into blocks and inter-block paths.

Port paths are never pruned against each other: on a cycle the two ports of
a vertex run around in opposite directions and share every inner vertex.
Disjointness is enforced on the prefixes ending at j when x_ij is counted.
"""
import logging
import warnings
from dataclasses import dataclass, field, replace
from typing import Optional

import networkx as nx
import numpy as np

from .exceptions import GraphError, ProtocolLimitationWarning, SimulationError
from .graph import BlockDecomposition, group_paths, is_connected, reference_blocks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoutingTable:
    owner: int
    ports: tuple
    port_paths: tuple

    def paths(self):
        return [p for p in self.port_paths if p is not None]

    def as_record(self):
        return dict(
            vertex=self.owner,
            paths={str(port): list(path) if path else None for port, path in zip(self.ports, self.port_paths)},
        )


@dataclass(frozen=True)
class SimState:
    round: int
    tables: tuple
    x_matrix: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    limitations: tuple = ()

    @property
    def finished(self):
        return self.x_matrix is not None


def initial_state(g):
    tables = tuple(
        RoutingTable(v, g.neighbors(v), (None,) * g.degree(v)) for v in g.vertices
    )
    return SimState(0, tables)


def step_round(state, g):
    """
    One refresh-and-broadcast round. Each vertex reads only the tables of the
    previous round, so the result does not depend on processing order.
    """
    if state.round >= g.vertex_count:
        raise SimulationError(f"All {g.vertex_count} rounds already executed.")

    previous = state.tables
    tables = []
    for table in previous:
        v = table.owner
        if state.round == 0:
            port_paths = tuple((v, u) for u in table.ports)
        else:
            port_paths = tuple(_extend(v, previous[u]) for u in table.ports)
        tables.append(RoutingTable(v, table.ports, port_paths))

    return SimState(state.round + 1, tuple(tables))


def _extend(v, neighbor_table):
    """
    Longest continuation v + q over the neighbor's paths q, cut before v;
    lexicographically smallest on ties.
    """
    candidates = []
    for q in neighbor_table.paths():
        if v in q:
            q = q[: q.index(v)]
        candidates.append((v,) + q)

    if not candidates:
        return (v, neighbor_table.owner)
    return min(candidates, key=lambda c: (-len(c), c))


def independent_prefixes(table, j):
    """
    Prefixes (owner .. j) of the owner's port paths that reach j, taken in
    port order; a prefix sharing an inner vertex with one already taken is
    skipped. The full port paths may overlap, these prefixes never do.
    """
    prefixes = []
    used = set()
    for path in table.paths():
        if j not in path:
            continue
        prefix = path[: path.index(j) + 1]
        inner = set(prefix[1:-1])
        if inner & used:
            continue
        used |= inner
        prefixes.append(prefix)
    return prefixes


def count_independent_paths(state):
    """x_ij: the larger of |independent_prefixes| seen from i and from j."""
    n = len(state.tables)
    counts = np.zeros((n, n), dtype=int)

    for table in state.tables:
        i = table.owner
        for j in range(n):
            if j != i:
                counts[i, j] = len(independent_prefixes(table, j))

    return np.maximum(counts, counts.T)


def independent_path_count(state, i, j):
    if not state.finished:
        raise SimulationError("Simulation has not finished, x_ij is not available.")
    return int(state.x_matrix[i, j])


def classify_pairs(g, x_matrix):
    """
    Apply the pair rules for i < j; no-op combinations are skipped.
    Returns (tentative blocks keyed by pivot, path vertices).
    """
    tentative = {}
    on_path = set()

    for i in g.vertices:
        for j in range(i + 1, g.vertex_count):
            x = x_matrix[i, j]
            di, dj = g.degree(i), g.degree(j)
            if x == 0:
                continue
            if x > 1:
                tentative.setdefault(i, set()).update((i, j))
            elif di == 2 and dj == 1:
                continue
            elif di > 2 and dj <= 2:
                tentative.setdefault(i, set()).add(i)
            elif di > 2 and dj > 2:
                tentative.setdefault(i, set()).add(i)
                tentative.setdefault(j, set()).add(j)
            elif di == 2 and dj == 2:
                on_path.update((i, j))

    return tentative, on_path


def coalesce_blocks(tentative):
    """Merge tentative blocks sharing a vertex; pieces under 3 vertices hold no cycle and are dropped."""
    linker = nx.Graph()
    for pivot, members in tentative.items():
        linker.add_node(pivot)
        linker.add_edges_from((pivot, v) for v in members)

    blocks = [frozenset(c) for c in nx.connected_components(linker) if len(c) >= 3]
    return sorted(blocks, key=min)


def run_block_detection(g, verified=False, early_stop=False, trace=None):
    """
    Run the protocol for n rounds and classify every vertex pair.

    Returns (BlockDecomposition, final SimState). With `verified` the result is
    compared with `reference_blocks` and disagreements are recorded on the state
    and raised as ProtocolLimitationWarning. `trace` receives
    (round, RoutingTable) after every round for every vertex.
    """
    if g.vertex_count < 2 or not is_connected(g):
        raise GraphError("Block detection requires a connected graph with at least 2 vertices.")

    state = initial_state(g)
    while state.round < g.vertex_count:
        following = step_round(state, g)
        if trace is not None:
            for table in following.tables:
                trace(following.round, table)
        if early_stop and following.tables == state.tables:
            state = replace(following, round=g.vertex_count)
            break
        state = following

    x_matrix = count_independent_paths(state)
    tentative, on_path = classify_pairs(g, x_matrix)
    blocks = coalesce_blocks(tentative)
    in_block = set().union(*blocks) if blocks else set()
    path_vertices = sorted(on_path - in_block)
    unclassified = frozenset(set(g.vertices) - in_block - set(path_vertices))

    decomposition = BlockDecomposition(
        tuple(blocks),
        group_paths(g, blocks, path_vertices),
        unclassified,
    )
    if unclassified:
        logger.info("Vertices left unclassified by the pair rules: %s.", sorted(unclassified))

    limitations = ()
    if verified:
        limitations = _verify(g, decomposition, x_matrix)

    return decomposition, replace(state, x_matrix=x_matrix, limitations=limitations)


def _verify(g, decomposition, x_matrix):
    reference = reference_blocks(g).normalized()
    limitations = []

    for block in reference.blocks:
        members = sorted(block)
        for a, i in enumerate(members):
            for j in members[a + 1:]:
                if x_matrix[i, j] < 2:
                    limitations.append((i, j, int(x_matrix[i, j])))

    if not decomposition.agrees_with(reference):
        warnings.warn(
            "Block detection protocol disagrees with the articulation-point oracle: "
            f"blocks {[sorted(b) for b in decomposition.normalized().blocks]} "
            f"vs {[sorted(b) for b in reference.blocks]}.",
            ProtocolLimitationWarning,
        )
    if limitations:
        logger.warning("%d pairs inside a block found fewer than 2 independent paths.", len(limitations))

    return tuple(limitations)
