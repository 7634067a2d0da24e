from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import comb, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from mashumaro import DataClassDictMixin

from latticebox.errors import (
    FaceNotInComplex,
    InvalidTriangulation,
    NonPositiveGrading,
    NotAFace,
    OriginNotInterior,
    UnsupportedShape,
)
from latticebox.lattice import CoordinateMap, GeneratorSystem, LatticePoint, system_for

Face = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialCone:
    """Cone spanned by primitive generators; ``rays`` labels them (ray-table indices)."""
    generators: Tuple[LatticePoint, ...]
    rays: Tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        generators = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, 'generators', generators)
        if not self.rays:
            object.__setattr__(self, 'rays', tuple(range(len(generators))))
        if not self.rank:
            if not generators:
                raise ValueError("The zero cone needs an explicit lattice rank.")
            object.__setattr__(self, 'rank', len(generators[0]))

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def system(self) -> GeneratorSystem:
        return system_for(self.generators, self.rank)

    def generator(self, ray: int) -> LatticePoint:
        return self.generators[self.rays.index(ray)]

    def face(self, rays: Iterable[int]) -> 'SimplicialCone':
        rays = tuple(sorted(rays))
        if not set(rays) <= set(self.rays):
            raise NotAFace(rays, self.rays)
        return SimplicialCone(tuple(self.generator(r) for r in rays), rays, self.rank)

    def has_face(self, other: 'SimplicialCone') -> bool:
        return all(r in self.rays and self.generator(r) == g for r, g in zip(other.rays, other.generators))


FaceLike = Union[SimplicialCone, Sequence[int]]


def face_key(face: FaceLike) -> Face:
    if isinstance(face, SimplicialCone):
        return tuple(sorted(face.rays))
    return tuple(sorted(face))


@dataclass(frozen=True)
class Grading:
    functional: Tuple[int, ...]

    def __call__(self, point: Sequence) -> int:
        return sum(u * x for u, x in zip(self.functional, point))

    def check_positive(self, rays: Sequence[LatticePoint], indices: Iterable[int]):
        for i in indices:
            value = self(rays[i])
            if value <= 0:
                raise NonPositiveGrading(i, value)

    @classmethod
    def height(cls, rank: int) -> 'Grading':
        return cls(tuple([0] * (rank - 1) + [1]))


@dataclass
class Subdivision:
    """A pure simplicial fan given by its maximal cones (sorted ray-index tuples).

    ``rays`` may be an ambient table; the complex's own rays are ``ray_indices()``.
    ``ray_labels`` maps ray indices back to polytope point indices after lifting.
    """
    rays: Tuple[LatticePoint, ...]
    maximal_cones: Tuple[Face, ...]
    dim: int = -1
    rank: int = 0
    ray_labels: Optional[Tuple[int, ...]] = None
    validated: bool = False
    _faces: Optional[Tuple[Face, ...]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.rays = tuple(tuple(int(x) for x in ray) for ray in self.rays)
        self.maximal_cones = tuple(sorted({tuple(sorted(c)) for c in self.maximal_cones}))
        if self.dim < 0:
            self.dim = max((len(c) for c in self.maximal_cones), default=0)
        if not self.rank:
            self.rank = len(self.rays[0])

    def ray_indices(self) -> Tuple[int, ...]:
        return tuple(sorted({r for c in self.maximal_cones for r in c}))

    def cone(self, face: FaceLike) -> SimplicialCone:
        key = face_key(face)
        return SimplicialCone(tuple(self.rays[r] for r in key), key, self.rank)

    def face_keys(self) -> Tuple[Face, ...]:
        if self._faces is None:
            faces = set()
            for cone in self.maximal_cones:
                for size in range(len(cone) + 1):
                    faces.update(combinations(cone, size))
            self._faces = tuple(sorted(faces, key=lambda f: (len(f), f)))
        return self._faces

    def contains(self, face: FaceLike) -> bool:
        key = set(face_key(face))
        return any(key <= set(c) for c in self.maximal_cones)

    def require_face(self, face: FaceLike) -> Face:
        key = face_key(face)
        if not self.contains(key):
            raise FaceNotInComplex(key)
        return key

    def star(self, face: FaceLike) -> Tuple[Face, ...]:
        key = set(self.require_face(face))
        return tuple(c for c in self.maximal_cones if key <= set(c))


def enumerate_faces(subdivision: Subdivision) -> List[SimplicialCone]:
    """Every face of every maximal cone, once, the zero cone first."""
    return [subdivision.cone(f) for f in subdivision.face_keys()]


def _new_face_counts(cone: Face, earlier: Sequence[Face]) -> Dict[int, int]:
    """Counts, by size, the faces of ``cone`` lying in none of the ``earlier`` cones.

    Such a face must meet every difference ``cone - other``; singleton differences
    force a ray, the rest are handled by inclusion-exclusion.
    """
    members = set(cone)
    blocks = {frozenset(members - set(other)) for other in earlier}
    minimal = [b for b in blocks if not any(c < b for c in blocks)]
    forced = set().union(*(b for b in minimal if len(b) == 1))
    rest = [b for b in minimal if not b & forced]
    free = len(members) - len(forced)
    counts: Dict[int, int] = {}
    for size in range(len(rest) + 1):
        for chosen in combinations(rest, size):
            excluded = len(frozenset().union(*chosen))
            sign = -1 if size % 2 else 1
            for extra in range(free - excluded + 1):
                total = len(forced) + extra
                counts[total] = counts.get(total, 0) + sign * comb(free - excluded, extra)
    return counts


def f_vector(subdivision: Subdivision) -> List[int]:
    """Number of faces of each dimension, the zero cone included at position 0."""
    counts = [0] * (subdivision.dim + 1)
    cones = subdivision.maximal_cones
    for j, cone in enumerate(cones):
        for size, count in _new_face_counts(cone, cones[:j]).items():
            counts[size] += count
    return counts


def link(subdivision: Subdivision, face: FaceLike) -> Subdivision:
    key = subdivision.require_face(face)
    removed = set(key)
    cones = tuple(tuple(r for r in c if r not in removed) for c in subdivision.star(key))
    return Subdivision(
        rays=subdivision.rays,
        maximal_cones=cones,
        dim=subdivision.dim - len(key),
        rank=subdivision.rank,
        ray_labels=subdivision.ray_labels,
        validated=True,
    )


def star_rays(subdivision: Subdivision, face: FaceLike) -> Tuple[int, ...]:
    return tuple(sorted({r for c in subdivision.star(face) for r in c}))


def special_faces(subdivision: Subdivision) -> List[SimplicialCone]:
    """Faces contained in every maximal cone, largest first; always ends with the zero cone."""
    common = reduce(lambda a, b: a & b, (set(c) for c in subdivision.maximal_cones))
    common = tuple(sorted(common))
    faces = [f for size in range(len(common), -1, -1) for f in combinations(common, size)]
    return [subdivision.cone(f) for f in faces]


def is_special(subdivision: Subdivision, face: FaceLike) -> bool:
    key = set(face_key(face))
    return all(key <= set(c) for c in subdivision.maximal_cones)


# Polytopes and triangulations

@dataclass
class Polytope:
    """Lattice polytope; ``points`` are lattice coordinates and include every vertex.

    ``summands`` lists the vertex groups of a free sum of simplices (one group for a simplex).
    """
    dim: int
    points: Tuple[LatticePoint, ...]
    vertex_indices: Tuple[int, ...]
    summands: Optional[Tuple[Tuple[int, ...], ...]] = None
    coordinate_map: Optional[CoordinateMap] = None

    def __post_init__(self):
        self.points = tuple(tuple(int(x) for x in p) for p in self.points)
        self.vertex_indices = tuple(self.vertex_indices)
        if self.summands is not None:
            self.summands = tuple(tuple(group) for group in self.summands)
        if self.coordinate_map is None:
            self.coordinate_map = CoordinateMap.standard(self.dim)

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.points[i] for i in self.vertex_indices)

    @property
    def origin_index(self) -> Optional[int]:
        zero = tuple([0] * self.dim)
        return next((i for i, p in enumerate(self.points) if p == zero), None)

    def lift(self, index: int) -> LatticePoint:
        return self.points[index] + (1,)


@dataclass
class Triangulation:
    polytope: Polytope
    maximal_faces: Tuple[Face, ...]
    special_face: Optional[Face] = None

    def __post_init__(self):
        self.maximal_faces = tuple(sorted({tuple(sorted(f)) for f in self.maximal_faces}))
        if self.special_face is not None:
            self.special_face = tuple(sorted(self.special_face))

    def used_points(self) -> Tuple[int, ...]:
        return tuple(sorted({i for f in self.maximal_faces for i in f}))

    def validate(self, full: bool = True):
        d = self.polytope.dim
        for face in self.maximal_faces:
            if len(face) != d + 1:
                raise InvalidTriangulation(
                    "Maximal face {} has {} points; expected {}.".format(list(face), len(face), d + 1))
            lifted = [self.polytope.lift(i) for i in face]
            if not system_for(lifted, d + 1).independent:
                raise InvalidTriangulation(
                    "Maximal face {} is not affinely independent.".format(list(face)))
        missing = set(self.polytope.vertex_indices) - set(self.used_points())
        if missing:
            raise InvalidTriangulation(
                "Vertices {} are not covered by the triangulation.".format(sorted(missing)))
        if self.special_face is not None and not all(set(self.special_face) <= set(f) for f in self.maximal_faces):
            raise InvalidTriangulation(
                "Special face {} is not contained in every maximal face.".format(list(self.special_face)))
        if full:
            subdivision, _ = lift_triangulation(self)
            report = validate_subdivision(subdivision)
            if not report.passed:
                raise InvalidTriangulation(report.message, {'condition': report.condition})


def barycentric(polytope: Polytope, face: Sequence[int], point: Sequence, height=1):
    """Coordinates of (point, height) in the cone over ``face``; None if outside its span."""
    lifted = [polytope.lift(i) for i in face]
    return system_for(lifted, polytope.dim + 1).coordinates(tuple(point) + (height,))


def origin_interior(polytope: Polytope, group: Sequence[int]) -> bool:
    coords = barycentric(polytope, group, [0] * polytope.dim)
    return coords is not None and all(c > 0 for c in coords)


def free_sum_summands(polytope: Polytope) -> Tuple[Tuple[int, ...], ...]:
    d = polytope.dim
    groups = polytope.summands
    if groups is None:
        if len(polytope.vertex_indices) != d + 1:
            raise UnsupportedShape(
                "Only simplices and free sums of simplices are supported; got {} vertices in dimension {}."
                .format(len(polytope.vertex_indices), d))
        groups = (polytope.vertex_indices,)
    if sorted(i for g in groups for i in g) != sorted(polytope.vertex_indices):
        raise UnsupportedShape("Free-sum summands must partition the vertices.")
    for group in groups:
        vectors = [polytope.points[i] for i in group]
        if system_for(vectors, d).rank != len(group) - 1:
            raise UnsupportedShape("Summand {} is not a simplex around the origin.".format(list(group)))
    all_vertices = [polytope.points[i] for i in polytope.vertex_indices]
    if sum(len(g) - 1 for g in groups) != d or system_for(all_vertices, d).rank != d:
        raise UnsupportedShape("Summands do not span complementary subspaces.")
    return groups


def boundary_join(polytope: Polytope) -> Triangulation:
    """Joins the origin with the boundary complex of a simplex or a free sum of simplices."""
    origin = polytope.origin_index
    if origin is None:
        raise OriginNotInterior("The origin must be listed among the polytope's points.")
    groups = free_sum_summands(polytope)
    for group in groups:
        if not origin_interior(polytope, group):
            raise OriginNotInterior()
    faces = []
    for omitted in product(*groups):
        face = {origin}
        for group, skip in zip(groups, omitted):
            face.update(i for i in group if i != skip)
        faces.append(tuple(sorted(face)))
    return Triangulation(polytope, tuple(faces), special_face=(origin,))


def simplex_triangulation(polytope: Polytope) -> Triangulation:
    if len(polytope.vertex_indices) != polytope.dim + 1:
        raise UnsupportedShape("Polytope is not a simplex.")
    return Triangulation(polytope, (polytope.vertex_indices,))


def stellar_subdivision(triangulation: Triangulation, point: int) -> Triangulation:
    """Subdivides the maximal face whose interior contains ``point``."""
    polytope = triangulation.polytope
    target = None
    for face in triangulation.maximal_faces:
        coords = barycentric(polytope, face, polytope.points[point])
        if coords is not None and all(c > 0 for c in coords):
            target = face
            break
    if target is None:
        raise UnsupportedShape("Point {} is not interior to a maximal face.".format(point))
    faces = [f for f in triangulation.maximal_faces if f != target]
    faces += [tuple(sorted(set(target) - {v} | {point})) for v in target]
    special = (point,) if len(triangulation.maximal_faces) == 1 else None
    return Triangulation(polytope, tuple(faces), special_face=special)


def lift_triangulation(triangulation: Triangulation) -> Tuple[Subdivision, Grading]:
    polytope = triangulation.polytope
    used = triangulation.used_points()
    position = {p: i for i, p in enumerate(used)}
    subdivision = Subdivision(
        rays=tuple(polytope.lift(p) for p in used),
        maximal_cones=tuple(tuple(position[p] for p in f) for f in triangulation.maximal_faces),
        dim=polytope.dim + 1,
        rank=polytope.dim + 1,
        ray_labels=used,
        validated=True,
    )
    return subdivision, Grading.height(polytope.dim + 1)


def ray_faces(subdivision: Subdivision, points: Sequence[int]) -> Face:
    """Translates polytope point indices to ray indices of a lifted triangulation."""
    position = {p: i for i, p in enumerate(subdivision.ray_labels)}
    return tuple(sorted(position[p] for p in points))


# Validation

@dataclass
class ValidationReport(DataClassDictMixin):
    passed: bool
    condition: Optional[str] = None
    message: str = ''
    witnesses: List[List[int]] = field(default_factory=list)


Constraint = Tuple[Dict[int, Fraction], Fraction]


def _substitute(constraint: Constraint, var: int, expr: Constraint) -> Constraint:
    coeffs, rhs = constraint
    c = coeffs.get(var, 0)
    if not c:
        return constraint
    coeffs = {k: v for k, v in coeffs.items() if k != var}
    expr_coeffs, expr_const = expr
    for k, v in expr_coeffs.items():
        coeffs[k] = coeffs.get(k, 0) + c * v
    return {k: v for k, v in coeffs.items() if v != 0}, rhs - c * expr_const


def _normalize(constraint: Constraint) -> Tuple:
    coeffs, rhs = constraint
    scale = max(abs(v) for v in coeffs.values())
    return tuple(sorted((k, v / scale) for k, v in coeffs.items())), rhs / scale


def feasible(equalities: List[Constraint], inequalities: List[Constraint]) -> bool:
    """Exact feasibility of {a.x = b} and {a.x >= b} by Fourier-Motzkin elimination."""
    equalities = [({k: Fraction(v) for k, v in c.items() if v}, Fraction(r)) for c, r in equalities]
    inequalities = [({k: Fraction(v) for k, v in c.items() if v}, Fraction(r)) for c, r in inequalities]

    while equalities:
        coeffs, rhs = equalities.pop()
        if not coeffs:
            if rhs != 0:
                return False
            continue
        var, c = next(iter(coeffs.items()))
        # var = rhs/c - sum (a_k/c) x_k
        expr = ({k: -v / c for k, v in coeffs.items() if k != var}, rhs / c)
        equalities = [_substitute(e, var, expr) for e in equalities]
        inequalities = [_substitute(i, var, expr) for i in inequalities]

    while True:
        trivial = [rhs for coeffs, rhs in inequalities if not coeffs]
        if any(rhs > 0 for rhs in trivial):
            return False
        inequalities = [i for i in inequalities if i[0]]
        if not inequalities:
            return True
        var = next(iter(inequalities[0][0]))
        lower, upper, rest = [], [], []
        for coeffs, rhs in inequalities:
            c = coeffs.get(var, 0)
            (lower if c > 0 else upper if c < 0 else rest).append((coeffs, rhs, c))
        combined = {}
        for constraint in [(coeffs, rhs) for coeffs, rhs, _ in rest]:
            combined[_normalize(constraint) if constraint[0] else ((), constraint[1])] = constraint
        for lo_coeffs, lo_rhs, lo_c in lower:
            for up_coeffs, up_rhs, up_c in upper:
                coeffs = {}
                for k in set(lo_coeffs) | set(up_coeffs):
                    if k == var:
                        continue
                    v = lo_coeffs.get(k, 0) * -up_c + up_coeffs.get(k, 0) * lo_c
                    if v != 0:
                        coeffs[k] = v
                rhs = lo_rhs * -up_c + up_rhs * lo_c
                key = _normalize((coeffs, rhs)) if coeffs else ((), rhs)
                combined[key] = (coeffs, rhs)
        inequalities = list(combined.values())


def _overlap(subdivision: Subdivision, first: Face, second: Face) -> bool:
    """True when the cones meet outside the cone on their shared rays.

    One direction suffices: a point of cone(shared) has coordinates supported
    on the shared rays in both cones.
    """
    shared = set(first) & set(second)
    own = [r for r in first if r not in shared]
    if not own:
        return False
    variables = [('a', r) for r in first] + [('b', r) for r in second]
    index = {v: i for i, v in enumerate(variables)}
    equalities = []
    for coord in range(subdivision.rank):
        coeffs = {}
        for r in first:
            coeffs[index[('a', r)]] = subdivision.rays[r][coord]
        for r in second:
            coeffs[index[('b', r)]] = -subdivision.rays[r][coord]
        equalities.append((coeffs, 0))
    equalities.append(({index[('a', r)]: 1 for r in own}, 1))
    inequalities = [({i: 1}, 0) for i in range(len(variables))]
    return feasible(equalities, inequalities)


def validate_subdivision(subdivision: Subdivision) -> ValidationReport:
    rays = subdivision.rays
    used = subdivision.ray_indices()

    # (a) primitive, distinct generators; independent cones
    for r in used:
        if reduce(gcd, (abs(x) for x in rays[r])) != 1:
            return ValidationReport(False, 'primitive', "Ray {} is not primitive.".format(r), [[r]])
    for r, s in combinations(used, 2):
        if rays[r] == rays[s]:
            return ValidationReport(False, 'primitive', "Rays {} and {} coincide.".format(r, s), [[r, s]])
    for i, cone in enumerate(subdivision.maximal_cones):
        if not subdivision.cone(cone).system.independent:
            return ValidationReport(False, 'independent',
                                    "Maximal cone {} has dependent generators.".format(i), [list(cone)])

    # (b) purity
    for i, cone in enumerate(subdivision.maximal_cones):
        if len(cone) != subdivision.dim:
            return ValidationReport(False, 'pure',
                                    "Maximal cone {} has dimension {}, expected {}.".format(i, len(cone), subdivision.dim),
                                    [list(cone)])
    if used and system_for([rays[r] for r in used], subdivision.rank).rank != subdivision.dim:
        return ValidationReport(False, 'pure', "Rays span more than the cone dimension.", [list(used)])

    # (c) cones meet in common faces
    cones = subdivision.maximal_cones
    for i, j in combinations(range(len(cones)), 2):
        if _overlap(subdivision, cones[i], cones[j]):
            return ValidationReport(False, 'intersection',
                                    "Maximal cones {} and {} overlap beyond a common face.".format(i, j),
                                    [list(cones[i]), list(cones[j])])

    # (d) convex support
    facet_count = {}
    for cone in cones:
        for omitted in cone:
            facet = tuple(r for r in cone if r != omitted)
            facet_count[facet] = facet_count.get(facet, 0) + 1
    for cone in cones:
        system = subdivision.cone(cone).system
        for position, omitted in enumerate(cone):
            facet = tuple(r for r in cone if r != omitted)
            if facet_count[facet] != 1:
                continue
            for r in used:
                coords = system.coordinates(rays[r])
                if coords is None or coords[position] < 0:
                    return ValidationReport(False, 'convex',
                                            "Ray {} lies outside boundary facet {}.".format(r, list(facet)),
                                            [list(facet), [r]])
    return ValidationReport(True, message="Subdivision is valid.")
