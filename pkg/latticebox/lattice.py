"""Exact integer linear algebra.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so every
entry is an arbitrary-precision integer. Normal forms and determinants go
through sympy's ``DomainMatrix`` over ZZ. Rationals are ``fractions.Fraction``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as sympy_hermite_normal_form, smith_normal_decomp

from latticebox.errors import DependentGenerators, NotInLattice, ZeroVector

IntMatrix = np.ndarray
LatticePoint = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]


def int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Builds an object-dtype integer matrix from nested rows."""
    rows = [list(row) for row in rows]
    matrix = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = int(value)
    return matrix


def columns_matrix(columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> IntMatrix:
    if not columns:
        return np.empty((rows or 0, 0), dtype=object)
    return int_matrix(columns).T.copy()


def identity(n: int) -> IntMatrix:
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def to_domain_matrix(M: IntMatrix) -> DomainMatrix:
    rows, cols = np.shape(M)
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in np.array(M, dtype=object)], (rows, cols), ZZ)


def from_domain_matrix(dm: DomainMatrix) -> IntMatrix:
    rows, cols = dm.shape
    matrix = np.empty((rows, cols), dtype=object)
    for i, row in enumerate(dm.to_list()):
        for j, value in enumerate(row):
            matrix[i, j] = int(value)
    return matrix


def smith_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Returns (S, U, V) with S = U @ M @ V diagonal, s1 | s2 | ..., s_i >= 0."""
    rows, cols = np.shape(M)
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=object), identity(rows), identity(cols)
    S, U, V = (from_domain_matrix(m) for m in smith_normal_decomp(to_domain_matrix(M)))
    for i in range(min(rows, cols)):
        if S[i, i] < 0:
            S[i] = -S[i]
            U[i] = -U[i]
    return S, U, V


def hermite_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns (H, U) with H = M @ U, U unimodular and H lower triangular: each
    pivot is positive and the entries to its left lie in [0, pivot). Rank
    deficient input yields an echelon form with trailing zero columns.

    sympy reduces to the upper triangular convention, so the pivot rows are
    reversed before the reduction and the result is reversed back.
    """
    M = np.array(M, dtype=object)
    rows, cols = M.shape
    S, _, V = smith_normal_form(M)
    image = [j for j in range(min(rows, cols)) if S[j, j] != 0]
    kernel = [j for j in range(cols) if j not in image]
    if not image:
        return np.zeros((rows, cols), dtype=object), identity(cols)

    rank = len(image)
    basis = Matrix(M.dot(V[:, image]).tolist())
    _, pivots = basis.T.rref()
    square = basis.extract(list(pivots), list(range(rank)))
    flipped = square.extract(list(reversed(range(rank))), list(range(rank)))
    upper = sympy_hermite_normal_form(DomainMatrix.from_Matrix(flipped).convert_to(ZZ)).to_Matrix()
    lower = Matrix(rank, rank, lambda i, j: upper[rank - 1 - i, rank - 1 - j])
    # square @ X = lower with X unimodular
    X = int_matrix((square.inv() * lower).tolist())

    U = np.concatenate([V[:, image].dot(X), V[:, kernel]], axis=1)
    return M.dot(U), U


def determinant(M: IntMatrix) -> int:
    """Exact determinant of a square integer matrix."""
    if np.shape(M)[0] == 0:
        return 1
    return int(to_domain_matrix(M).det())


def _frac_part(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


class GeneratorSystem:
    """Integer column vectors together with their Smith normal form.

    Serves exact solving in the generator basis, the index of the generated
    sublattice in its saturation, and enumeration of the cosets of that
    sublattice.
    """

    def __init__(self, columns: Tuple[LatticePoint, ...], ambient: int):
        self.columns = columns
        self.ambient = ambient
        self.matrix = columns_matrix(columns, rows=ambient)
        S, U, V = smith_normal_form(self.matrix)
        self.U = U
        self.V = V
        diagonal = [S[i, i] for i in range(min(S.shape))]
        self.invariants = tuple(s for s in diagonal if s != 0)
        self.rank = len(self.invariants)

    @property
    def independent(self) -> bool:
        return self.rank == len(self.columns)

    def require_independent(self):
        if not self.independent:
            raise DependentGenerators(self.columns)

    @property
    def index(self) -> int:
        self.require_independent()
        return reduce(lambda a, b: a * b, self.invariants, 1)

    def coordinates(self, point: Sequence) -> Optional[RationalVector]:
        """Solves sum a_i c_i = point; None when the point is outside the span."""
        self.require_independent()
        y = [sum(Fraction(self.U[i, j]) * Fraction(point[j]) for j in range(self.ambient))
             for i in range(self.ambient)]
        if any(value != 0 for value in y[self.rank:]):
            return None
        scaled = [y[i] / self.invariants[i] for i in range(self.rank)]
        return tuple(
            sum((self.V[i, j] * scaled[j] for j in range(self.rank)), Fraction(0))
            for i in range(len(self.columns)))

    def combine(self, coefficients: Sequence) -> Tuple:
        return tuple(
            sum((coefficients[k] * self.columns[k][i] for k in range(len(self.columns))), 0)
            for i in range(self.ambient))

    def cell(self) -> Iterator[RationalVector]:
        """Coefficient vectors in [0, 1) of every lattice point in the half-open cell."""
        self.require_independent()
        for residue in product(*(range(s) for s in self.invariants)):
            scaled = [Fraction(residue[j], self.invariants[j]) for j in range(self.rank)]
            yield tuple(
                _frac_part(sum((self.V[i, j] * scaled[j] for j in range(self.rank)), Fraction(0)))
                for i in range(len(self.columns)))


@lru_cache(maxsize=4096)
def generator_system(columns: Tuple[LatticePoint, ...], ambient: int) -> GeneratorSystem:
    return GeneratorSystem(columns, ambient)


def system_for(columns: Sequence[Sequence[int]], ambient: Optional[int] = None) -> GeneratorSystem:
    columns = tuple(tuple(int(x) for x in column) for column in columns)
    if ambient is None:
        if not columns:
            raise ValueError("Ambient rank is required for an empty generator set.")
        ambient = len(columns[0])
    return generator_system(columns, ambient)


@dataclass(frozen=True)
class CoordinateMap:
    """A full-rank lattice in Q^d.

    ``generators`` holds d columns, each equal to the denominator times a
    basis vector. Lattice coordinates are coordinates in that basis.
    """
    dim: int
    denominator: int
    generators: Tuple[LatticePoint, ...]

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("Denominator must be positive.")
        if len(self.generators) != self.dim:
            raise ValueError("Expected {} basis columns.".format(self.dim))
        if determinant(columns_matrix(self.generators, self.dim)) == 0:
            raise ValueError("Lattice basis is singular.")

    @classmethod
    def standard(cls, dim: int) -> 'CoordinateMap':
        basis = tuple(tuple(int(i == j) for i in range(dim)) for j in range(dim))
        return cls(dim=dim, denominator=1, generators=basis)

    @classmethod
    def from_generators(cls, denominator: int, columns: Sequence[Sequence[int]], dim: Optional[int] = None) -> 'CoordinateMap':
        """Reduces any generating set (scaled by ``denominator``) to a Hermite basis."""
        if dim is None:
            dim = len(columns[0])
        H, _ = hermite_normal_form(columns_matrix(columns, dim))
        basis = [tuple(int(x) for x in H[:, j]) for j in range(H.shape[1]) if any(H[:, j])]
        if len(basis) != dim:
            raise ValueError("Lattice generators do not span a full-rank lattice.")
        return cls(dim=dim, denominator=denominator, generators=tuple(basis))

    @property
    def system(self) -> GeneratorSystem:
        return system_for(self.generators, self.dim)

    def scale(self, point: Sequence) -> Optional[LatticePoint]:
        scaled = [Fraction(x) * self.denominator for x in point]
        if any(x.denominator != 1 for x in scaled):
            return None
        return tuple(int(x) for x in scaled)

    def lattice_coordinates(self, scaled_point: Sequence[int]) -> Optional[LatticePoint]:
        coords = self.system.coordinates(scaled_point)
        if coords is None or any(x.denominator != 1 for x in coords):
            return None
        return tuple(int(x) for x in coords)

    def to_scaled(self, coords: Sequence[int]) -> LatticePoint:
        return tuple(int(x) for x in self.system.combine(coords))

    def to_ambient(self, coords: Sequence[int]) -> RationalVector:
        return tuple(Fraction(x, self.denominator) for x in self.to_scaled(coords))


def embed_points(points: Sequence[Sequence], coordinate_map: CoordinateMap) -> List[LatticePoint]:
    """Lattice coordinates of ambient rational points."""
    embedded = []
    for index, point in enumerate(points):
        scaled = coordinate_map.scale(point)
        coords = coordinate_map.lattice_coordinates(scaled) if scaled is not None else None
        if coords is None:
            raise NotInLattice(index, point)
        embedded.append(coords)
    return embedded


def primitive_vector(vector: Sequence) -> LatticePoint:
    values = [Fraction(x) for x in vector]
    if all(x == 0 for x in values):
        raise ZeroVector()
    common = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in values), 1)
    integral = [int(x * common) for x in values]
    divisor = reduce(gcd, (abs(x) for x in integral))
    return tuple(x // divisor for x in integral)


def primitive_generator(ray: Sequence, coordinate_map: CoordinateMap) -> LatticePoint:
    """The first lattice point on a rational ray, in lattice coordinates."""
    scaled = [Fraction(x) * coordinate_map.denominator for x in ray]
    if all(x == 0 for x in scaled):
        raise ZeroVector()
    return primitive_vector(coordinate_map.system.coordinates(scaled))


def cone_index(cone) -> int:
    """Index of the generator lattice of ``cone`` in its saturated span; 1 iff unimodular."""
    if not cone.generators:
        return 1
    system = system_for(cone.generators, cone.rank)
    if not system.independent:
        raise DependentGenerators(cone.rays)
    return system.index
