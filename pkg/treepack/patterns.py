"""
Perfect binary trees T_k and enumeration of their copies in a host graph.

Positions of T_k are numbered in level order: the root is 0 and the
children of position i are 2i+1 and 2i+2.
"""
import logging
from dataclasses import dataclass

from .exceptions import BudgetExceeded, UnsupportedError
from .graph import from_edge_list

logger = logging.getLogger(__name__)

MAX_PATTERN_K = 4
MAX_ENUMERATION_K = 3


@dataclass(frozen=True)
class TreePattern:
    k: int

    @property
    def order(self):
        return 2 ** (self.k + 1) - 1

    @property
    def levels(self):
        return self.k + 1

    @property
    def internal_count(self):
        return 2 ** self.k - 1

    def children(self, position):
        first = 2 * position + 1
        if first >= self.order:
            return ()
        return (first, first + 1)

    def level(self, position):
        return (position + 1).bit_length() - 1

    def tree_edges(self):
        return [((i - 1) // 2, i) for i in range(1, self.order)]


@dataclass(frozen=True)
class TreeEmbedding:
    """
    One copy of T_k in a host graph. `image_vertices[i]` is the host vertex
    at pattern position i. The image is stored in canonical form (smaller
    child first at every internal position), so two embeddings compare equal
    iff they cover the same host edges.
    """

    pattern_k: int
    image_vertices: tuple

    def __post_init__(self):
        image = tuple(self.image_vertices)
        if len(image) == TreePattern(self.pattern_k).order:
            image = canonical_image(self.pattern_k, image)
        object.__setattr__(self, "image_vertices", image)

    @property
    def root(self):
        return self.image_vertices[0]

    @property
    def vertex_set(self):
        return frozenset(self.image_vertices)

    @property
    def image_edges(self):
        image = self.image_vertices
        return frozenset(
            (min(image[p], image[c]), max(image[p], image[c]))
            for p, c in TreePattern(self.pattern_k).tree_edges()
        )

    def level_of(self, vertex):
        return TreePattern(self.pattern_k).level(self.image_vertices.index(vertex))


def canonical_image(k, image):
    """Reorder child subtrees so that the smaller child vertex comes first."""
    pattern = TreePattern(k)

    def arrange(position):
        children = pattern.children(position)
        if not children:
            return (image[position], ())
        subtrees = sorted((arrange(c) for c in children), key=lambda s: s[0])
        return (image[position], tuple(subtrees))

    canonical = []
    level = [arrange(0)]
    while level:
        canonical.extend(vertex for vertex, _ in level)
        level = [child for _, children in level for child in children]

    return tuple(canonical)


def pattern_graph(k):
    if not 0 <= k <= MAX_PATTERN_K:
        raise UnsupportedError(f"T_k is supported for 0 <= k <= {MAX_PATTERN_K}, got k={k}.")

    pattern = TreePattern(k)
    return from_edge_list(pattern.order, pattern.tree_edges())


def enumerate_embeddings(g, k, limit=None):
    """
    All copies of T_k in g, one per subgraph, in canonical (lexicographic) order.

    Positions are filled in level order by backtracking; a right child must
    carry a larger id than its left sibling, which fixes one representative
    per automorphism class. Raises BudgetExceeded once more than `limit`
    copies are found.
    """
    if not 0 <= k <= MAX_ENUMERATION_K:
        raise UnsupportedError(f"Enumeration supports 0 <= k <= {MAX_ENUMERATION_K}, got k={k}.")

    pattern = TreePattern(k)
    if g.vertex_count < pattern.order:
        return []

    # root needs 2 children, other internal positions a parent and 2 children
    def fits(position, vertex):
        if position == 0:
            return k == 0 or g.degree(vertex) >= 2
        if position < pattern.internal_count:
            return g.degree(vertex) >= 3
        return True

    embeddings = []
    image = [None] * pattern.order
    used = set()

    def place(position):
        if position == pattern.order:
            embeddings.append(TreeEmbedding(k, tuple(image)))
            if limit is not None and len(embeddings) > limit:
                raise BudgetExceeded("embeddings", limit)
            return

        parent = image[(position - 1) // 2]
        is_right = position % 2 == 0
        for vertex in g.neighbors(parent):
            if vertex in used or not fits(position, vertex):
                continue
            if is_right and vertex < image[position - 1]:
                continue
            image[position] = vertex
            used.add(vertex)
            place(position + 1)
            used.discard(vertex)
        image[position] = None

    for root in g.vertices:
        if not fits(0, root):
            continue
        image[0] = root
        used.add(root)
        place(1)
        used.discard(root)

    embeddings.sort(key=lambda e: e.image_vertices)
    logger.debug("Found %d copies of T_%d in a graph with n=%d.", len(embeddings), k, g.vertex_count)
    return embeddings


def is_valid_embedding(g, e):
    pattern = TreePattern(e.pattern_k)
    image = e.image_vertices

    if len(image) != pattern.order:
        return False
    if len(set(image)) != len(image):
        return False
    if any(not 0 <= v < g.vertex_count for v in image):
        return False
    if tuple(image) != canonical_image(e.pattern_k, image):
        return False

    return all(g.has_edge(image[p], image[c]) for p, c in pattern.tree_edges())
