from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, List, Optional, Sequence

from mashumaro import DataClassDictMixin

from latticebox.boxpoints import box_decomposition
from latticebox.errors import NegativeDegree, NotSpecial, RayOutsideUniverse, TermBudgetExceeded
from latticebox.fan import Face, FaceLike, Grading, Subdivision, face_key, is_special, link, star_rays
from latticebox.lattice import LatticePoint
from latticebox.polynomials import LaurentPoly, UniPoly

DEFAULT_MAX_TERMS = 1000000


@dataclass
class VerificationReport(DataClassDictMixin):
    passed: bool
    degree: int
    special_face: List[int] = field(default_factory=list)
    first_difference: Optional[List[int]] = None
    lhs_coefficient: int = 0
    rhs_coefficient: int = 0
    compared_terms: int = 0


def _binomial_product(rays: Sequence[LatticePoint], indices: Iterable[int], start: LaurentPoly,
                      max_terms: int) -> LaurentPoly:
    result = start
    for j in indices:
        result = result.multiply(LaurentPoly.binomial(rays[j]), budget=max_terms)
    return result


def h_multivariate(rays: Sequence[LatticePoint], faces: Iterable[Face], universe: Iterable[int],
                   max_terms: int = DEFAULT_MAX_TERMS) -> LaurentPoly:
    """Sum over faces gamma of prod_{i in gamma} x^v_i * prod_{j in universe - gamma} (1 - x^v_j)."""
    universe = set(universe)
    rank = len(rays[0])
    total = LaurentPoly(rank=rank)
    for face in faces:
        for ray in face:
            if ray not in universe:
                raise RayOutsideUniverse(ray)
        exponent = tuple(sum(rays[i][k] for i in face) for k in range(rank))
        others = sorted(universe - set(face))
        total = total + _binomial_product(rays, others, LaurentPoly.monomial(exponent), max_terms)
        if len(total) > max_terms:
            raise TermBudgetExceeded(max_terms)
    return total


def h_delta(subdivision: Subdivision, max_terms: int = DEFAULT_MAX_TERMS) -> LaurentPoly:
    return h_multivariate(subdivision.rays, subdivision.face_keys(), subdivision.ray_indices(), max_terms)


def h_link(subdivision: Subdivision, face: FaceLike, max_terms: int = DEFAULT_MAX_TERMS) -> LaurentPoly:
    """H of the link of ``face``; complement products run over the link's own rays."""
    complex_ = link(subdivision, face)
    return h_multivariate(subdivision.rays, complex_.face_keys(), complex_.ray_indices(), max_terms)


def rhs_generating_identity(subdivision: Subdivision, special: FaceLike = (),
                            max_terms: int = DEFAULT_MAX_TERMS) -> LaurentPoly:
    """H_{lk lambda} + sum over tau containing lambda of B(tau, lambda) H_{lk tau} prod_{v not in Star tau} (1 - x^v)."""
    base = face_key(special)
    if not is_special(subdivision, base):
        raise NotSpecial(base)
    rank = subdivision.rank
    result = h_link(subdivision, base, max_terms)
    boxes = {}
    for face, points in box_decomposition(subdivision).items():
        tau = tuple(sorted(set(base) | set(face)))
        poly = boxes.setdefault(tau, LaurentPoly(rank=rank))
        for p in points:
            poly.add_term(tuple(p.point), 1)
    all_rays = set(subdivision.ray_indices())
    for tau, box in sorted(boxes.items()):
        outside = sorted(all_rays - set(star_rays(subdivision, tau)))
        term = box.multiply(h_link(subdivision, tau, max_terms), budget=max_terms)
        term = _binomial_product(subdivision.rays, outside, term, max_terms)
        result = result + term
    return result


def truncated_series(subdivision: Subdivision, grading: Grading, degree: int) -> LaurentPoly:
    """Sum of x^v over the lattice points v of the support with grading(v) <= degree."""
    grading.check_positive(subdivision.rays, subdivision.ray_indices())
    points = set()
    for maximal in subdivision.maximal_cones:
        cone = subdivision.cone(maximal)
        system = cone.system
        system.require_independent()
        heights = [grading(g) for g in cone.generators]
        for coefficients in system.cell():
            base = tuple(int(x) for x in system.combine(coefficients))
            budget = degree - grading(base)
            if budget < 0:
                continue
            ranges = [range(budget // h + 1) for h in heights]
            for multiples in product(*ranges):
                if sum(n * h for n, h in zip(multiples, heights)) > budget:
                    continue
                points.add(tuple(
                    x + sum(n * g[i] for n, g in zip(multiples, cone.generators))
                    for i, x in enumerate(base)))
    return LaurentPoly({p: 1 for p in points}, rank=subdivision.rank)


def verify_identity(subdivision: Subdivision, special: FaceLike, grading: Grading, degree: int,
                    series: Optional[LaurentPoly] = None,
                    max_terms: int = DEFAULT_MAX_TERMS) -> VerificationReport:
    """Compares prod (1 - x^v_i) * G against the generating identity in every grading <= degree.

    ``series`` replaces the enumerated truncation of G when given.
    """
    base = face_key(special)
    if series is None:
        series = truncated_series(subdivision, grading, degree)
    lhs = series.truncate(grading, degree)
    for ray in subdivision.ray_indices():
        lhs = lhs.multiply(LaurentPoly.binomial(subdivision.rays[ray]), budget=max_terms).truncate(grading, degree)
    rhs = rhs_generating_identity(subdivision, base, max_terms).truncate(grading, degree)
    difference = lhs - rhs
    compared = len(set(lhs.terms) | set(rhs.terms))
    if not difference:
        return VerificationReport(passed=True, degree=degree, special_face=list(base), compared_terms=compared)
    witness = min(difference.terms)
    return VerificationReport(
        passed=False,
        degree=degree,
        special_face=list(base),
        first_difference=list(witness),
        lhs_coefficient=lhs.coefficient(witness),
        rhs_coefficient=rhs.coefficient(witness),
        compared_terms=compared,
    )


def specialize(poly: LaurentPoly, grading: Grading) -> UniPoly:
    """x^v -> t^grading(v)."""
    terms = []
    for exponent, coefficient in poly.items():
        degree = grading(exponent)
        if degree < 0:
            raise NegativeDegree(exponent, degree)
        terms.append((degree, coefficient))
    return UniPoly.from_terms(terms)
