"""JSON polytope files.

All coordinates are integers: ambient coordinates multiplied by ``denominator``.
``lattice_generators`` lists the columns (also scaled) generating the lattice;
it defaults to ``denominator`` times the identity. Indices are 0-based.
"""
from dataclasses import dataclass
from fractions import Fraction
import json
import os
from typing import List, Optional, Tuple

from mashumaro import DataClassDictMixin

from latticebox.errors import MalformedInput, NotInLattice, OriginNotInterior
from latticebox.fan import Polytope, Triangulation, boundary_join, simplex_triangulation
from latticebox.lattice import CoordinateMap


@dataclass
class PolytopeFile(DataClassDictMixin):
    dimension: int
    points: List[List[int]]
    vertex_indices: List[int]
    denominator: int = 1
    lattice_generators: Optional[List[List[int]]] = None
    triangulation: Optional[List[List[int]]] = None
    special_face: Optional[List[int]] = None
    summands: Optional[List[List[int]]] = None

    def validate(self):
        d = self.dimension
        if d < 0 or self.denominator <= 0:
            raise MalformedInput("dimension must be nonnegative and denominator positive.")
        for i, p in enumerate(self.points):
            if len(p) != d:
                raise MalformedInput("Point {} has {} coordinates; expected {}.".format(i, len(p), d), {'index': i})
        n = len(self.points)
        indices = list(self.vertex_indices)
        for face in (self.triangulation or []) + (self.summands or []) + [self.special_face or []]:
            indices += face
        if any(not 0 <= i < n for i in indices):
            raise MalformedInput("Point index out of range (0-based, {} points).".format(n))
        if self.lattice_generators is not None and any(len(g) != d for g in self.lattice_generators):
            raise MalformedInput("Each lattice generator needs {} coordinates.".format(d))

    def coordinate_map(self) -> CoordinateMap:
        if self.lattice_generators is None:
            return CoordinateMap.from_generators(
                self.denominator, [[self.denominator * int(i == j) for i in range(self.dimension)]
                                   for j in range(self.dimension)], self.dimension)
        try:
            return CoordinateMap.from_generators(self.denominator, self.lattice_generators, self.dimension)
        except ValueError as e:
            raise MalformedInput(str(e))

    def to_polytope(self) -> Polytope:
        self.validate()
        coordinate_map = self.coordinate_map()
        points = []
        for index, point in enumerate(self.points):
            coords = coordinate_map.lattice_coordinates(point)
            if coords is None:
                raise NotInLattice(index, [Fraction(x, self.denominator) for x in point])
            points.append(coords)
        summands = tuple(tuple(g) for g in self.summands) if self.summands else None
        return Polytope(
            dim=self.dimension,
            points=tuple(points),
            vertex_indices=tuple(self.vertex_indices),
            summands=summands,
            coordinate_map=coordinate_map,
        )

    def to_triangulation(self, polytope: Polytope) -> Triangulation:
        """The listed triangulation, else the boundary join about the origin, else the simplex itself."""
        if self.triangulation:
            return Triangulation(
                polytope,
                tuple(tuple(face) for face in self.triangulation),
                special_face=tuple(self.special_face) if self.special_face else None,
            )
        try:
            return boundary_join(polytope)
        except OriginNotInterior:
            return simplex_triangulation(polytope)

    def load(self) -> Tuple[Polytope, Triangulation]:
        polytope = self.to_polytope()
        return polytope, self.to_triangulation(polytope)

    @classmethod
    def from_polytope(cls, polytope: Polytope, triangulation: Optional[Triangulation] = None) -> 'PolytopeFile':
        coordinate_map = polytope.coordinate_map
        return cls(
            dimension=polytope.dim,
            points=[list(coordinate_map.to_scaled(p)) for p in polytope.points],
            vertex_indices=list(polytope.vertex_indices),
            denominator=coordinate_map.denominator,
            lattice_generators=[list(g) for g in coordinate_map.generators],
            triangulation=[list(f) for f in triangulation.maximal_faces] if triangulation else None,
            special_face=list(triangulation.special_face) if triangulation and triangulation.special_face else None,
            summands=[list(g) for g in polytope.summands] if polytope.summands else None,
        )

    @classmethod
    def from_json(cls, text: str) -> 'PolytopeFile':
        try:
            data = json.loads(text)
        except ValueError as e:
            raise MalformedInput("Invalid JSON: {}".format(e))
        if not isinstance(data, dict):
            raise MalformedInput("A polytope file must hold a JSON object.")
        try:
            return cls.from_dict(data)
        except MalformedInput:
            raise
        except Exception as e:
            raise MalformedInput("Invalid polytope file: {}".format(e))

    def to_json(self) -> str:
        data = {key: value for key, value in self.to_dict().items() if value is not None}
        return json.dumps(data, sort_keys=True, indent=2) + '\n'


def read_polytope_file(path: str) -> PolytopeFile:
    if not os.path.isfile(path):
        raise MalformedInput("File not found: {}".format(path), {'path': path})
    with open(path) as f:
        return PolytopeFile.from_json(f.read())


def write_polytope_file(path: str, polytope_file: PolytopeFile):
    with open(path, 'w') as f:
        f.write(polytope_file.to_json())
