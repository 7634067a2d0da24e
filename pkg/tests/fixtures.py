"""Shared builders for the test suites."""
import json
import os
import random

from latticebox.fan import Polytope, Triangulation, lift_triangulation, stellar_subdivision
from latticebox.lattice import determinant, int_matrix
from latticebox.reflexive import WeightedSimplexSpec, scan_weights, weighted_simplex

SQUARE_FILE = {
    'dimension': 2,
    'points': [[1, 0], [0, 1], [0, -1], [-1, 0]],
    'vertex_indices': [0, 1, 2, 3],
    'triangulation': [[0, 1, 2], [1, 2, 3]],
    'special_face': [1, 2],
}

SLOW = os.environ.get('LATTICEBOX_SLOW_TESTS') == '1'


def square():
    """conv{(1,0), (0,1), (0,-1), (-1,0)} cut along the segment from (0,1) to (0,-1)."""
    polytope = Polytope(
        dim=2,
        points=((1, 0), (0, 1), (0, -1), (-1, 0)),
        vertex_indices=(0, 1, 2, 3),
    )
    return polytope, Triangulation(polytope, ((0, 1, 2), (1, 2, 3)), special_face=(1, 2))


def square_subdivision():
    _, triangulation = square()
    return lift_triangulation(triangulation)


def dilated_triangle(k):
    """k times the standard triangle with the interior point (1, 1) listed last."""
    polytope = Polytope(
        dim=2,
        points=((0, 0), (k, 0), (0, k), (1, 1)),
        vertex_indices=(0, 1, 2),
    )
    return polytope, Triangulation(polytope, ((0, 1, 2),))


def stellar_triangle(k):
    polytope, triangulation = dilated_triangle(k)
    return polytope, stellar_subdivision(triangulation, 3)


def segment():
    return Polytope(dim=1, points=((0,), (1,), (-1,)), vertex_indices=(1, 2))


def weighted(weights, b):
    polytope, _ = weighted_simplex(WeightedSimplexSpec(weights=list(weights), b=b))
    return polytope


def random_specs(seed, dim, max_weight, max_b, count):
    specs = list(scan_weights(dim, max_weight, max_b))
    rng = random.Random(seed)
    return rng.sample(specs, min(count, len(specs)))


def _unimodular_columns(rng, dim):
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(2 * dim):
        i, j = rng.sample(range(dim), 2)
        factor = rng.choice((-1, 1))
        rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
    return [tuple(row) for row in rows]


def simplex_corpus(seed=2024, count=60):
    """Seeded simplices with the origin strictly inside, each alone and subdivided at the origin.

    Vertices are v_1, ..., v_d and -(w_1 v_1 + ... + w_d v_d); the origin is the last point.
    About a quarter use a unimodular basis with unit weights, so the subdivision is unimodular.
    """
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < 2 * count:
        dim = rng.choice((2, 2, 3))
        if rng.random() < 0.25:
            columns = _unimodular_columns(rng, dim)
            weights = [1] * dim
        else:
            columns = [tuple(rng.randint(-2, 2) for _ in range(dim)) for _ in range(dim)]
            weights = [rng.randint(1, 3) for _ in range(dim)]
        if determinant(int_matrix(columns)) == 0:
            continue
        apex = tuple(-sum(w * column[i] for w, column in zip(weights, columns)) for i in range(dim))
        polytope = Polytope(
            dim=dim,
            points=tuple(columns) + (apex, (0,) * dim),
            vertex_indices=tuple(range(dim + 1)),
        )
        simplex = Triangulation(polytope, (tuple(range(dim + 1)),))
        corpus.append((polytope, simplex))
        corpus.append((polytope, stellar_subdivision(simplex, dim + 1)))
    return corpus


def write_json(directory, name, data):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        json.dump(data, f)
    return path
