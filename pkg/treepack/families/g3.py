from ..graph import VertexSplitSpec, complete_graph, split_vertex
from .base import BaseFamily

# v1 -> 0, v2 -> 1, v3 -> 2, v4 -> 3, v'1 -> 4, v'2 -> 5, v'3 -> 6
G3_EDGES = (
    (0, 4), (0, 3), (0, 2),
    (1, 5), (1, 4), (1, 3),
    (2, 6), (2, 4),
    (3, 5), (3, 6),
    (4, 6), (5, 6),
)

# root v1, second level v4 and v'1, leaves v'3, v'2 under v4 and v3, v2 under v'1
G3_T2_IMAGE = (0, 3, 4, 6, 5, 2, 1)

G3_ORDER = 7


def anti_contraction_steps():
    """The three vertex splits turning K^4 into G3, new vertices get ids 4, 5, 6."""
    return (
        VertexSplitSpec(
            target=0,
            kept_neighbors=frozenset({2, 3}),
            moved_neighbors=frozenset({1}),
            extra_edges=((0, 4), (4, 2)),
        ),
        VertexSplitSpec(
            target=1,
            kept_neighbors=frozenset({3, 4}),
            moved_neighbors=frozenset({2}),
            extra_edges=((1, 5), (5, 3)),
        ),
        VertexSplitSpec(
            target=2,
            kept_neighbors=frozenset({0, 4}),
            moved_neighbors=frozenset({3, 5}),
            extra_edges=((2, 6), (6, 4)),
        ),
    )


def g3_from_k4():
    g = complete_graph(4)
    for step in anti_contraction_steps():
        g = split_vertex(g, step)
    return g


class G3Family(BaseFamily):
    """The 7-vertex, 12-edge elementary structure grown from K^4."""

    name = "g3"

    def validate(self):
        pass

    def _vertex_count(self):
        return G3_ORDER

    def _edges(self):
        return list(G3_EDGES)


class HChainFamily(BaseFamily):
    """
    H_r: r copies of G3, copy i on ids 7i..7i+6, consecutive copies
    joined by the matching {7(i-1)+j, 7i+j}.
    """

    name = "h_chain"

    def _vertex_count(self):
        return G3_ORDER * self.r

    def _edges(self):
        edges = []
        for copy in range(self.r):
            offset = G3_ORDER * copy
            edges.extend((offset + u, offset + v) for u, v in G3_EDGES)
        for copy in range(1, self.r):
            edges.extend(
                (G3_ORDER * (copy - 1) + j, G3_ORDER * copy + j) for j in range(G3_ORDER)
            )
        return edges
