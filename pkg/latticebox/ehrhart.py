"""h*-vectors of lattice polytopes from triangulations, with a brute-force oracle.

The h*-vector is computed from a triangulation T in two ways: from the box
polynomials of all faces (Betke-McMullen), and from the relative box
polynomials over a face F' contained in every maximal simplex. Both reduce to
univariate arithmetic on f-vectors of links.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import comb, gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mashumaro import DataClassDictMixin
from sympy import QQ, Poly, Rational, factorial

from latticebox.boxpoints import box_decomposition, relative_box_polynomials
from latticebox.errors import CheckFailed, InvalidTriangulation, MethodDisagreement, NotSpecial
from latticebox.fan import (
    Polytope,
    Subdivision,
    Triangulation,
    f_vector,
    is_special,
    lift_triangulation,
    link,
    ray_faces,
)
from latticebox.lattice import cone_index, system_for
from latticebox.polynomials import ONE_MINUS_T, UniPoly, t

METHODS = ('bm', 'special', 'both')


@dataclass
class HStarVector(DataClassDictMixin):
    coeffs: List[int]
    dim: int

    def __post_init__(self):
        self.coeffs = [int(c) for c in self.coeffs]
        if len(self.coeffs) < self.dim + 1:
            self.coeffs += [0] * (self.dim + 1 - len(self.coeffs))

    @classmethod
    def from_poly(cls, poly: UniPoly, dim: int) -> 'HStarVector':
        return cls(poly.padded(dim + 1), dim)

    def as_poly(self) -> UniPoly:
        return UniPoly(tuple(self.coeffs))

    @property
    def volume(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        return '({})'.format(','.join(str(c) for c in self.coeffs))


def h_complex(subdivision: Subdivision) -> UniPoly:
    """sum f_i t^i (1 - t)^(D - i) for a pure complex with maximal cones of size D."""
    size = subdivision.dim
    poly = UniPoly()
    for i, count in enumerate(f_vector(subdivision)):
        if count:
            poly = poly + UniPoly.monomial(i, count) * ONE_MINUS_T ** (size - i)
    return poly


def h_polynomial(triangulation: Triangulation) -> UniPoly:
    subdivision, _ = lift_triangulation(triangulation)
    return h_complex(subdivision)


def _checked(poly: UniPoly, dim: int) -> HStarVector:
    if poly.degree > dim or any(c < 0 for c in poly.coeffs):
        raise CheckFailed(
            "Computed h*-polynomial {} is not a nonnegative polynomial of degree at most {}.".format(poly, dim),
            {'coeffs': list(poly.coeffs)})
    return HStarVector.from_poly(poly, dim)


def hstar_betke_mcmullen(triangulation: Triangulation) -> HStarVector:
    """h_T(t) + sum over faces F of B_F(t) h_{lk F}(t)."""
    subdivision, grading = lift_triangulation(triangulation)
    poly = h_complex(subdivision)
    for face, points in box_decomposition(subdivision, grading).items():
        box = UniPoly.from_terms((p.height, 1) for p in points)
        poly = poly + box * h_complex(link(subdivision, face))
    return _checked(poly, triangulation.polytope.dim)


def hstar_special(triangulation: Triangulation, special: Sequence[int] = ()) -> HStarVector:
    """h_{lk F'}(t) + sum over faces F containing F' of B_{F,F'}(t) h_{lk F}(t).

    ``special`` lists polytope point indices of a face in every maximal simplex.
    """
    subdivision, grading = lift_triangulation(triangulation)
    used = set(triangulation.used_points())
    if not set(special) <= used:
        raise NotSpecial(special)
    base = ray_faces(subdivision, special)
    if not is_special(subdivision, base):
        raise NotSpecial(special)
    poly = h_complex(link(subdivision, base))
    for face, box in relative_box_polynomials(subdivision, base, grading).items():
        poly = poly + box * h_complex(link(subdivision, face))
    return _checked(poly, triangulation.polytope.dim)


def hstar(polytope: Optional[Polytope], triangulation: Triangulation,
          special: Optional[Sequence[int]] = None, method: str = 'both') -> HStarVector:
    if polytope is not None and polytope is not triangulation.polytope and polytope != triangulation.polytope:
        raise InvalidTriangulation("Triangulation belongs to a different polytope.")
    if method not in METHODS:
        raise ValueError("Unknown method {!r}.".format(method))
    if special is None:
        special = triangulation.special_face or ()
    if method == 'bm':
        return hstar_betke_mcmullen(triangulation)
    if method == 'special':
        return hstar_special(triangulation, special)
    first = hstar_betke_mcmullen(triangulation)
    second = hstar_special(triangulation, special)
    if first != second:
        raise MethodDisagreement(first.coeffs, second.coeffs)
    return first


def normalized_volume(triangulation: Triangulation) -> int:
    subdivision, _ = lift_triangulation(triangulation)
    return sum(cone_index(subdivision.cone(c)) for c in subdivision.maximal_cones)


def is_unimodular(triangulation: Triangulation) -> bool:
    subdivision, _ = lift_triangulation(triangulation)
    return all(cone_index(subdivision.cone(c)) == 1 for c in subdivision.maximal_cones)


@dataclass
class BetkeMcMullenBound(DataClassDictMixin):
    h: List[int]
    hstar: List[int]
    dominated: bool
    equality: bool
    unimodular: bool


def betke_mcmullen_bound(triangulation: Triangulation) -> BetkeMcMullenBound:
    """h*_i(P) >= h_i(T) coefficientwise, with equality throughout iff T is unimodular."""
    dim = triangulation.polytope.dim
    h = h_polynomial(triangulation).padded(dim + 1)
    h_star = hstar_betke_mcmullen(triangulation).coeffs
    return BetkeMcMullenBound(
        h=h,
        hstar=h_star,
        dominated=all(a >= b for a, b in zip(h_star, h)),
        equality=h == h_star,
        unimodular=is_unimodular(triangulation),
    )


# Oracle

def _scaled_inverse(columns: Sequence[Sequence[int]], rank: int) -> np.ndarray:
    """An integer matrix W with W = L * inverse(columns) for some L > 0."""
    system = system_for(columns, rank)
    inverse = [system.coordinates([int(i == k) for i in range(rank)]) for k in range(rank)]
    denominator = reduce(lambda a, b: a * b // gcd(a, b),
                         (Fraction(x).denominator for column in inverse for x in column), 1)
    W = np.empty((rank, rank), dtype=object)
    for k, column in enumerate(inverse):
        for i, x in enumerate(column):
            W[i, k] = int(x * denominator)
    return W


def count_lattice_points(polytope: Polytope, triangulation: Triangulation, m: int) -> int:
    """Lattice points of mP, scanning the bounding box slab by slab."""
    d = polytope.dim
    if m == 0 or d == 0:
        return 1
    points = [polytope.points[i] for i in triangulation.used_points()]
    bounds = [(m * min(p[k] for p in points), m * max(p[k] for p in points)) for k in range(d)]
    inverses = [
        _scaled_inverse([polytope.lift(i) for i in face], d + 1)
        for face in triangulation.maximal_faces
    ]
    rest = [range(lo, hi + 1) for lo, hi in bounds[1:]]
    total = 0
    for first in range(bounds[0][0], bounds[0][1] + 1):
        slab = np.array([(first,) + tail + (m,) for tail in product(*rest)], dtype=object)
        inside = np.zeros(len(slab), dtype=bool)
        for W in inverses:
            inside |= (slab.dot(W.T) >= 0).astype(bool).all(axis=1)
        total += int(inside.sum())
    return total


def hstar_oracle(polytope: Polytope, triangulation: Triangulation) -> HStarVector:
    d = polytope.dim
    counts = UniPoly(tuple(count_lattice_points(polytope, triangulation, m) for m in range(d + 1)))
    numerator = counts * ONE_MINUS_T ** (d + 1)
    return HStarVector(numerator.padded(d + 1), d)


def ehrhart_coefficient(h: HStarVector, m: int) -> int:
    """#(mP), read off the h*-vector."""
    d = h.dim
    return sum(c * comb(m - j + d, d) for j, c in enumerate(h.coeffs) if j <= m)


def ehrhart_counts(h: HStarVector, terms: int) -> List[Tuple[int, int]]:
    return [(m, ehrhart_coefficient(h, m)) for m in range(terms + 1)]


@lru_cache(maxsize=None)
def _binomial_polynomial(d: int, k: int) -> Poly:
    """binom(t + k, d) as a polynomial in t."""
    poly = Poly(Rational(1, factorial(d)), t, domain=QQ)
    for i in range(d):
        poly *= Poly(t + k - i, t, domain=QQ)
    return poly


def ehrhart_polynomial(h: HStarVector) -> Poly:
    """L_P(t) = sum_j h*_j binom(t - j + d, d) over QQ."""
    d = h.dim
    total = Poly(0, t, domain=QQ)
    for j, c in enumerate(h.coeffs):
        if c:
            total += c * _binomial_polynomial(d, d - j)
    return total
