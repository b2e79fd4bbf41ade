import itertools

from treepack.graph import from_edge_list
from treepack.patterns import TreePattern, enumerate_embeddings


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def write_graph(tmp_path, text, name="graph.txt"):
    file = tmp_path / name
    file.write_text(text)
    return str(file)


def naive_alpha(g, k):
    sets = [e.vertex_set for e in enumerate_embeddings(g, k)]
    largest = min(len(sets), g.vertex_count // TreePattern(k).order)
    for size in range(largest, 0, -1):
        for family in itertools.combinations(sets, size):
            if sum(len(s) for s in family) == len(frozenset().union(*family)):
                return size
    return 0


def naive_beta(g, k):
    sets = [e.vertex_set for e in enumerate_embeddings(g, k)]
    for size in range(g.vertex_count + 1):
        for cover in itertools.combinations(g.vertices, size):
            if all(s.intersection(cover) for s in sets):
                return size
    return g.vertex_count
