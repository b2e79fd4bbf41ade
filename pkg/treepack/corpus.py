"""Seeded graph generators for property tests, runtime checks and the report."""
import random
from collections import namedtuple

from .exceptions import GraphError
from .graph import from_edge_list

DEFAULT_SEED = 20240607
DEFAULT_CORPUS_SIZE = 200

# k -> (smallest n, largest n)
CORPUS_ORDERS = {1: (4, 14), 2: (7, 16)}

CorpusInstance = namedtuple("CorpusInstance", ("name", "k", "graph"))


def barbell(path_length):
    """
    Triangles {0, 1, 2} and {t, t+1, t+2} joined by a path of `path_length`
    edges from 2 to t, where t = path_length + 2.
    """
    if path_length < 1:
        raise GraphError(f"Barbell path needs at least one edge, got {path_length}.")

    t = path_length + 2
    edges = [(0, 1), (1, 2), (0, 2), (t, t + 1), (t + 1, t + 2), (t, t + 2)]
    route = [2] + list(range(3, t)) + [t]
    edges.extend(zip(route, route[1:]))
    return from_edge_list(t + 3, edges)


def random_connected_graph(n, extra, seed):
    """Random spanning tree on n vertices plus up to `extra` further edges."""
    if n < 1:
        raise GraphError(f"Random graph needs at least one vertex, got n={n}.")

    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}

    missing = n * (n - 1) // 2 - len(edges)
    for _ in range(min(extra, missing)):
        while True:
            u, v = sorted(rng.sample(range(n), 2))
            if (u, v) not in edges:
                edges.add((u, v))
                break

    return from_edge_list(n, edges)


def sparse_connected_graph(n, seed=DEFAULT_SEED):
    return random_connected_graph(n, extra=n // 20, seed=seed)


def random_corpus(count=DEFAULT_CORPUS_SIZE, seed=DEFAULT_SEED):
    """
    `count` connected graphs, the first half for T_1 and the rest for T_2.
    Orders follow CORPUS_ORDERS; every graph seed is drawn from one
    generator seeded with `seed`, so the corpus is a function of (count, seed).
    """
    rng = random.Random(seed)
    instances = []

    for i in range(count):
        k = 1 if i < (count + 1) // 2 else 2
        low, high = CORPUS_ORDERS[k]
        n = rng.randint(low, high)
        extra = rng.randint(0, n if k == 1 else n // 2 + 2)
        g = random_connected_graph(n, extra, seed=rng.randrange(2 ** 32))
        instances.append(CorpusInstance(f"random-{i:03d}-k{k}-n{n}", k, g))

    return instances
