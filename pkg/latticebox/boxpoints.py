"""Lattice points of the half-open parallelepipeds of simplicial cones.

Box(tau) holds the lattice points whose coefficients in the generators of tau
all lie strictly between 0 and 1; the zero cone has an empty box. Relative to
a face lambda, coefficients on the rays of lambda may also be 0, but the zero
point itself is never a box point.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple

from latticebox.errors import NotAFace, OutsideSupport
from latticebox.fan import Face, FaceLike, Grading, SimplicialCone, Subdivision, face_key
from latticebox.lattice import LatticePoint
from latticebox.polynomials import UniPoly


@dataclass
class BoxPoint:
    point: List[int]
    fractional_coords: List[Fraction]
    rays: List[int] = field(default_factory=list)
    height: Optional[int] = None

    @property
    def support(self) -> Face:
        return tuple(r for r, c in zip(self.rays, self.fractional_coords) if c != 0)

    def to_dict(self):
        return {
            "point": list(self.point),
            "fractional_coords": [str(c) for c in self.fractional_coords],
            "rays": list(self.rays),
            "height": self.height,
        }


@dataclass
class FractionalDecomposition:
    """v = sum(integer_coeffs[i] * g_i) + fractional_part over the generators of ``carrier``."""
    carrier: SimplicialCone
    integer_coeffs: Tuple[int, ...]
    fractional_coeffs: Tuple[Fraction, ...]
    fractional_part: LatticePoint
    box_face: SimplicialCone


def _cell_points(cone: SimplicialCone, grading: Optional[Grading] = None):
    system = cone.system
    system.require_independent()
    for coefficients in system.cell():
        if all(c == 0 for c in coefficients):
            continue
        point = tuple(int(x) for x in system.combine(coefficients))
        yield BoxPoint(
            point=list(point),
            fractional_coords=list(coefficients),
            rays=list(cone.rays),
            height=grading(point) if grading is not None else None,
        )


def box_points(cone: SimplicialCone, relative_to: Optional[FaceLike] = None,
               grading: Optional[Grading] = None) -> List[BoxPoint]:
    """Box(cone) or, given a face lambda, the relative box B(cone, lambda).

    Points are sorted lexicographically by coefficient vector.
    """
    allowed_zero = set()
    if relative_to is not None:
        if isinstance(relative_to, SimplicialCone):
            if not cone.has_face(relative_to):
                raise NotAFace(relative_to.rays, cone.rays)
        else:
            cone.face(relative_to)
        allowed_zero = set(face_key(relative_to))
    if not cone.generators:
        return []
    points = [
        p for p in _cell_points(cone, grading)
        if all(c != 0 or r in allowed_zero for r, c in zip(p.rays, p.fractional_coords))
    ]
    return sorted(points, key=lambda p: p.fractional_coords)


def box_polynomial(cone: SimplicialCone, relative_to: Optional[FaceLike], grading: Grading) -> UniPoly:
    """Sum of t^u(p) over the relative box points."""
    return UniPoly.from_terms((grading(p.point), 1) for p in box_points(cone, relative_to))


def fractional_part(point: Sequence[int], subdivision: Subdivision) -> FractionalDecomposition:
    point = tuple(int(x) for x in point)
    for maximal in subdivision.maximal_cones:
        cone = subdivision.cone(maximal)
        coords = cone.system.coordinates(point)
        if coords is None or any(c < 0 for c in coords):
            continue
        carrier_rays = tuple(r for r, c in zip(cone.rays, coords) if c > 0)
        values = [c for c in coords if c > 0]
        integer = tuple(floor(c) for c in values)
        fractions = tuple(c - n for c, n in zip(values, integer))
        carrier = subdivision.cone(carrier_rays)
        residue = tuple(
            x - sum(n * g[i] for n, g in zip(integer, carrier.generators))
            for i, x in enumerate(point))
        box_face = subdivision.cone(tuple(r for r, c in zip(carrier_rays, fractions) if c != 0))
        return FractionalDecomposition(carrier, integer, fractions, residue, box_face)
    raise OutsideSupport(point)


def box_decomposition(subdivision: Subdivision, grading: Optional[Grading] = None) -> Dict[Face, List[BoxPoint]]:
    """Box(gamma) for every face gamma with a nonempty box.

    Each maximal cone's cell is enumerated once; a face's box is taken from
    the first maximal cone containing it.
    """
    boxes: Dict[Face, List[BoxPoint]] = {}
    for maximal in subdivision.maximal_cones:
        found: Dict[Face, List[BoxPoint]] = {}
        for p in _cell_points(subdivision.cone(maximal), grading):
            support = p.support
            if support in boxes:
                continue
            found.setdefault(support, []).append(BoxPoint(
                point=p.point,
                fractional_coords=[c for c in p.fractional_coords if c != 0],
                rays=list(support),
                height=p.height,
            ))
        boxes.update(found)
    return {face: sorted(points, key=lambda p: p.fractional_coords) for face, points in sorted(boxes.items())}


def relative_box_polynomials(subdivision: Subdivision, relative_to: FaceLike,
                             grading: Grading) -> Dict[Face, UniPoly]:
    """B(tau, lambda)(t) for every face tau containing lambda with a nonempty relative box.

    B(tau, lambda) is the disjoint union of Box(gamma) over the nonzero faces
    gamma with gamma joined with lambda equal to tau.
    """
    base = set(face_key(relative_to))
    polynomials: Dict[Face, UniPoly] = {}
    for face, points in box_decomposition(subdivision, grading).items():
        tau = tuple(sorted(base | set(face)))
        if not subdivision.contains(tau):
            continue
        poly = UniPoly.from_terms((p.height, 1) for p in points)
        polynomials[tau] = polynomials.get(tau, UniPoly()) + poly
    return polynomials
