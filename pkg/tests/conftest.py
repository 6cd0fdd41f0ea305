import random

import pytest

from clusterhodge.exchange import ExtendedExchangeMatrix, validate
from clusterhodge.graphs import Graph


def random_acyclic_matrix(
    rng: random.Random, n_max=5, m_max=5, magnitude=3, full_rank=True
):
    """A random extended exchange matrix whose quiver is acyclic.

    Entries above the diagonal (in a random topological order) are
    nonnegative, which forces acyclicity; frozen rows are unconstrained.
    With ``full_rank`` the draw is repeated until the rank is n.
    """
    from clusterhodge.exchange import RankClass, rank_class

    while True:
        n = rng.randint(1, n_max)
        m = rng.randint(0, m_max)
        order = list(range(n))
        rng.shuffle(order)
        pos = {v: i for i, v in enumerate(order)}
        top = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(0, magnitude)
                if pos[i] < pos[j]:
                    top[i][j], top[j][i] = v, -v
                else:
                    top[i][j], top[j][i] = -v, v
        rows = top + [
            [rng.randint(-magnitude, magnitude) for _ in range(n)] for _ in range(m)
        ]
        matrix = validate(rows, n, m)
        if not full_rank or rank_class(matrix) is not RankClass.NOT_FULL_RANK:
            return matrix


def seeded_orientation(graph: Graph, rng: random.Random, magnitudes=(1,)):
    """Orientation/weights maps for principal_from_graph, from one rng."""
    order = list(range(graph.n_vertices))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    orientation = {}
    weights = {}
    for u, v in sorted(graph.edges):
        orientation[(u, v)] = 1 if pos[u] < pos[v] else -1
        weights[(u, v)] = rng.choice(magnitudes)
    return orientation, weights


@pytest.fixture
def rng():
    return random.Random(20240817)


# a small really-full-rank corpus reused by invariant tests; the last two
# force mutable rows into the N(I) selections
CORPUS_ROWS = [
    ([[0], [1]], 1, 1),
    ([[0, 1], [-1, 0], [1, 0], [0, 1]], 2, 2),
    ([[0, 1], [-1, 0], [1, 1]], 2, 1),
    ([[0, 1, 0], [-1, 0, 1], [0, -1, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], 3, 3),
    ([[0, 2, 0], [-2, 0, 1], [0, -1, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], 3, 3),
    ([[0, 1], [-1, 0], [0, 1]], 2, 1),
    ([[0, 1, 1], [-1, 0, 1], [-1, -1, 0], [0, 0, 1], [0, 1, 0]], 3, 2),
]

FULL_RANK_ROWS = CORPUS_ROWS + [
    ([[0], [2]], 1, 1),
    ([[0, 2], [-2, 0]], 2, 0),
    ([[0, 4], [-4, 0]], 2, 0),
    ([[0, 2], [-2, 0], [1, 0]], 2, 1),
    ([[0, 1, 0], [-1, 0, 2], [0, -2, 0], [1, 1, 1]], 3, 1),
]


def corpus() -> list[ExtendedExchangeMatrix]:
    return [validate(rows, n, m) for rows, n, m in CORPUS_ROWS]


def full_rank_corpus() -> list[ExtendedExchangeMatrix]:
    return [validate(rows, n, m) for rows, n, m in FULL_RANK_ROWS]
