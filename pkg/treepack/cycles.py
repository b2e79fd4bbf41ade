"""Exact longest-cycle search by backtracking, bounded on large blocks."""
import logging
from collections import namedtuple

import networkx as nx

logger = logging.getLogger(__name__)

EXACT_CYCLE_LIMIT = 20
CYCLE_NODE_BUDGET = 20_000

CycleWitness = namedtuple("CycleWitness", ("vertices", "length", "exact"))


def longest_cycle(g, budget=None):
    """
    Longest cycle of g, or None if g is acyclic.

    Each block of the 2-core is searched separately, every cycle is grown
    from its smallest vertex. Blocks with at most EXACT_CYCLE_LIMIT vertices
    are searched exhaustively; larger ones stop after CYCLE_NODE_BUDGET
    search nodes. An explicit `budget` bounds every block. A block that runs
    out makes the witness inexact, the remaining blocks are still searched.
    """
    core = nx.k_core(g.to_networkx(), 2)

    best = []
    exact = True

    blocks = sorted((sorted(c) for c in nx.biconnected_components(core) if len(c) >= 3), key=lambda c: c[0])
    for block in blocks:
        limit = budget
        if limit is None and len(block) > EXACT_CYCLE_LIMIT:
            limit = CYCLE_NODE_BUDGET

        members = set(block)
        adjacency = {v: sorted(u for u in core[v] if u in members) for v in block}
        best, nodes, finished = _search_block(block, adjacency, best, limit)
        exact = exact and finished
        logger.debug("Block of %d vertices: %d nodes, finished=%s.", len(block), nodes, finished)

    logger.debug("Longest cycle search: length %d, exact=%s.", len(best), exact)
    if not best:
        return None

    return CycleWitness(tuple(best), len(best), exact)


def _search_block(block, adjacency, best, limit):
    nodes = 0
    exhausted = False

    for start in block:
        larger = sum(1 for v in block if v > start)
        if larger + 1 <= len(best):
            break

        path = [start]
        on_path = {start}

        def extend():
            nonlocal best, nodes, exhausted
            nodes += 1
            if limit is not None and nodes > limit:
                exhausted = True
                return

            # vertices still reachable from the path end bound the final length
            if len(path) + _reachable(adjacency, path[-1], start, on_path) <= len(best):
                return

            for u in adjacency[path[-1]]:
                if exhausted:
                    return
                if u == start:
                    if len(path) >= 3 and len(path) > len(best):
                        best = list(path)
                    continue
                if u < start or u in on_path:
                    continue
                path.append(u)
                on_path.add(u)
                extend()
                path.pop()
                on_path.discard(u)

        extend()
        if exhausted:
            break

    return best, nodes, not exhausted


def _reachable(adjacency, source, start, on_path):
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if u > start and u not in on_path and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) - 1
