"""
Exact packing number alpha and covering number beta of T_k copies.

Both are solved by branch and bound over vertex bitmasks: packing is a
maximum set packing of embedding vertex sets, covering a minimum hitting set.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .exceptions import BudgetExceeded
from .patterns import TreeEmbedding, enumerate_embeddings, is_valid_embedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    MAX_EMBEDDINGS = 50_000
    MAX_NODES = 10 ** 7

    max_embeddings: int = MAX_EMBEDDINGS
    max_nodes: int = MAX_NODES


@dataclass(frozen=True)
class PackingSolution:
    k: int
    embeddings: tuple = ()

    @property
    def size(self):
        return len(self.embeddings)


@dataclass(frozen=True)
class CoverSolution:
    k: int
    vertices: frozenset = frozenset()

    @property
    def size(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ValidationReport:
    alpha: int
    beta: int
    invalid_embeddings: tuple = ()
    shared_vertices: tuple = ()
    cover_witness: Optional[TreeEmbedding] = None

    @property
    def packing_valid(self):
        return not self.invalid_embeddings and not self.shared_vertices

    @property
    def cover_valid(self):
        return self.cover_witness is None

    @property
    def weak_duality(self):
        return self.alpha <= self.beta

    @property
    def ok(self):
        return self.packing_valid and self.cover_valid and self.weak_duality

    def problems(self):
        problems = [f"invalid embedding {list(e.image_vertices)}" for e in self.invalid_embeddings]
        problems += [f"vertex {v} shared by two packed embeddings" for v in self.shared_vertices]
        if self.cover_witness is not None:
            problems.append(f"cover misses embedding {list(self.cover_witness.image_vertices)}")
        if not self.weak_duality:
            problems.append(f"weak duality violated: {self.alpha} > {self.beta}")
        return problems


#######################################
## packing
#######################################
def max_packing(g, k, budget=None):
    budget = budget or Budget()
    embeddings = enumerate_embeddings(g, k, limit=budget.max_embeddings)
    chosen = max_disjoint_sets([e.vertex_set for e in embeddings], max_nodes=budget.max_nodes)
    return PackingSolution(k, tuple(embeddings[i] for i in chosen))


def max_disjoint_sets(sets, max_nodes=None, keep_best=False):
    """
    Indices (ascending) of a maximum family of pairwise disjoint sets.

    With keep_best, running out of max_nodes returns the largest family met
    so far (at least the greedy one) instead of raising BudgetExceeded.

    Branches on the smallest vertex still covered by a candidate: either one
    of the candidates holding it is taken, or the vertex is dropped. Ties go
    to the first solution met in that order.
    """
    masks = [_mask(s) for s in sets]
    best = _greedy_disjoint(range(len(masks)), masks)
    nodes = 0

    def search(candidates, chosen):
        nonlocal best, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded("search nodes", max_nodes)

        if len(chosen) > len(best):
            best = list(chosen)
        if not candidates:
            return
        if len(chosen) + _packing_bound(candidates, sets, masks) <= len(best):
            return

        union = 0
        for i in candidates:
            union |= masks[i]
        pivot = union & -union

        for i in candidates:
            if masks[i] & pivot:
                chosen.append(i)
                search([j for j in candidates if not masks[j] & masks[i]], chosen)
                chosen.pop()
        search([j for j in candidates if not masks[j] & pivot], chosen)

    try:
        search(list(range(len(masks))), [])
    except BudgetExceeded:
        if not keep_best:
            raise
        logger.warning("Set packing stopped after %d nodes, keeping %d of %d sets.", max_nodes, len(best), len(masks))
        return sorted(best)
    logger.debug("Set packing: %d sets, %d nodes, optimum %d.", len(masks), nodes, len(best))
    return sorted(best)


def _greedy_disjoint(candidates, masks):
    chosen, used = [], 0
    for i in candidates:
        if not masks[i] & used:
            chosen.append(i)
            used |= masks[i]
    return chosen


def _packing_bound(candidates, sets, masks):
    union = 0
    smallest = None
    for i in candidates:
        union |= masks[i]
        smallest = len(sets[i]) if smallest is None else min(smallest, len(sets[i]))
    by_volume = bin(union).count("1") // max(smallest, 1)

    # sets sharing a vertex are pairwise in conflict, at most one per group
    remaining = list(candidates)
    groups = 0
    while remaining and groups < by_volume:
        hits = {}
        for i in remaining:
            for v in sets[i]:
                hits[v] = hits.get(v, 0) + 1
        vertex = min(hits, key=lambda v: (-hits[v], v))
        remaining = [i for i in remaining if vertex not in sets[i]]
        groups += 1

    return min(by_volume, groups)


#######################################
## covering
#######################################
def min_cover(g, k, budget=None):
    budget = budget or Budget()
    embeddings = enumerate_embeddings(g, k, limit=budget.max_embeddings)
    vertices = min_hitting_set([e.vertex_set for e in embeddings], max_nodes=budget.max_nodes)
    return CoverSolution(k, vertices)


def min_hitting_set(sets, max_nodes=None):
    """
    Minimum vertex set meeting every set.

    Branches on the vertices of the remaining set with the fewest allowed
    vertices; the i-th branch forbids the vertices tried before it.
    """
    masks = sorted(set(_mask(s) for s in sets))
    best = _greedy_hitting(masks)
    nodes = 0

    def search(remaining, chosen, forbidden):
        nonlocal best, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded("search nodes", max_nodes)

        if not remaining:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _hitting_bound(remaining, forbidden) >= len(best):
            return

        target = min(remaining, key=lambda m: bin(m & ~forbidden).count("1"))
        allowed = _bits(target & ~forbidden)
        for index, vertex in enumerate(allowed):
            bit = 1 << vertex
            blocked = forbidden
            for earlier in allowed[:index]:
                blocked |= 1 << earlier
            rest = [m for m in remaining if not m & bit]
            if any(not m & ~blocked for m in rest):
                continue
            chosen.append(vertex)
            search(rest, chosen, blocked)
            chosen.pop()

    search(masks, [], 0)
    logger.debug("Hitting set: %d sets, %d nodes, optimum %d.", len(masks), nodes, len(best))
    return frozenset(best)


def _greedy_hitting(masks):
    remaining = list(masks)
    chosen = []
    while remaining:
        hits = {}
        for m in remaining:
            for v in _bits(m):
                hits[v] = hits.get(v, 0) + 1
        vertex = min(hits, key=lambda v: (-hits[v], v))
        chosen.append(vertex)
        remaining = [m for m in remaining if not m & (1 << vertex)]
    return chosen


def _hitting_bound(remaining, forbidden):
    # disjoint sets each need their own vertex
    disjoint, used = 0, 0
    for m in remaining:
        allowed = m & ~forbidden
        if not allowed & used:
            disjoint += 1
            used |= allowed

    hits = {}
    for m in remaining:
        for v in _bits(m & ~forbidden):
            hits[v] = hits.get(v, 0) + 1
    max_degree = max(hits.values())
    by_degree = -(-len(remaining) // max_degree)

    return max(disjoint, by_degree)


#######################################
## validation
#######################################
def check_packing(g, k, p):
    """Problems of a packing on its own, empty when valid."""
    report = ValidationReport(
        alpha=p.size,
        beta=p.size,
        invalid_embeddings=_invalid_embeddings(g, k, p),
        shared_vertices=_shared_vertices(p),
    )
    return report.problems()


def validate_solution(g, k, p, c, budget=None):
    """
    Check a packing and a cover against g. Violations are reported in the
    returned ValidationReport, never raised.
    """
    budget = budget or Budget()
    residual = g.without_vertices(c.vertices)
    missed = enumerate_embeddings(residual, k, limit=budget.max_embeddings)

    return ValidationReport(
        alpha=p.size,
        beta=c.size,
        invalid_embeddings=_invalid_embeddings(g, k, p),
        shared_vertices=_shared_vertices(p),
        cover_witness=missed[0] if missed else None,
    )


def _invalid_embeddings(g, k, p):
    return tuple(e for e in p.embeddings if e.pattern_k != k or not is_valid_embedding(g, e))


def _shared_vertices(p):
    seen, shared = set(), set()
    for e in p.embeddings:
        for v in e.image_vertices:
            if v in seen:
                shared.add(v)
        seen.update(e.image_vertices)
    return tuple(sorted(shared))


def _mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _bits(mask):
    bits = []
    while mask:
        low = mask & -mask
        bits.append(low.bit_length() - 1)
        mask ^= low
    return bits