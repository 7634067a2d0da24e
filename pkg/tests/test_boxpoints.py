from fractions import Fraction
import unittest

from .context import latticebox
from latticebox.boxpoints import (
    box_decomposition,
    box_points,
    box_polynomial,
    fractional_part,
    relative_box_polynomials,
)
from latticebox.errors import NotAFace, OutsideSupport
from latticebox.fan import SimplicialCone, boundary_join, lift_triangulation
from latticebox.polynomials import UniPoly

from .fixtures import square_subdivision, weighted


class BoxPointsTestSuite(unittest.TestCase):
    """Box points of the faces of the lifted square."""

    def setUp(self):
        self.subdivision, self.grading = square_subdivision()

    def test_box_of_diagonal(self):
        points = box_points(self.subdivision.cone((1, 2)), grading=self.grading)
        assert [p.point for p in points] == [[0, 0, 1]]
        assert points[0].fractional_coords == [Fraction(1, 2), Fraction(1, 2)]
        assert points[0].height == 1
        assert points[0].support == (1, 2)

    def test_box_of_maximal_cone_is_empty(self):
        assert box_points(self.subdivision.cone((0, 1, 2))) == []

    def test_relative_box(self):
        cone = self.subdivision.cone((0, 1, 2))
        assert [p.point for p in box_points(cone, (1, 2))] == []
        assert [p.point for p in box_points(cone, (0,))] == [[0, 0, 1]]
        assert box_points(cone, (1,)) == []

    def test_relative_box_of_face_itself(self):
        cone = self.subdivision.cone((1, 2))
        assert [p.point for p in box_points(cone, (1, 2))] == [[0, 0, 1]]

    def test_zero_cone(self):
        zero = self.subdivision.cone(())
        assert box_points(zero) == []
        assert box_points(zero, ()) == []

    def test_not_a_face(self):
        with self.assertRaises(NotAFace):
            box_points(self.subdivision.cone((1, 2)), (0,))
        with self.assertRaises(NotAFace):
            box_points(self.subdivision.cone((1, 2)), self.subdivision.cone((0,)))

    def test_unimodular_cone(self):
        cone = SimplicialCone(((1, 0), (0, 1)))
        assert box_points(cone) == []

    def test_box_polynomial(self):
        cone = self.subdivision.cone((1, 2))
        assert box_polynomial(cone, None, self.grading) == UniPoly((0, 1))

    def test_to_dict(self):
        point = box_points(self.subdivision.cone((1, 2)), grading=self.grading)[0]
        assert point.to_dict() == {
            'point': [0, 0, 1],
            'fractional_coords': ['1/2', '1/2'],
            'rays': [1, 2],
            'height': 1,
        }


class FractionalPartTestSuite(unittest.TestCase):
    def setUp(self):
        self.subdivision, _ = square_subdivision()

    def test_interior_point(self):
        decomposition = fractional_part((0, 0, 3), self.subdivision)
        assert decomposition.carrier.rays == (1, 2)
        assert decomposition.integer_coeffs == (1, 1)
        assert decomposition.fractional_coeffs == (Fraction(1, 2), Fraction(1, 2))
        assert decomposition.fractional_part == (0, 0, 1)
        assert decomposition.box_face.rays == (1, 2)

    def test_lattice_generated_point(self):
        decomposition = fractional_part((2, 0, 2), self.subdivision)
        assert decomposition.carrier.rays == (0,)
        assert decomposition.integer_coeffs == (2,)
        assert decomposition.fractional_part == (0, 0, 0)
        assert decomposition.box_face.rays == ()

    def test_outside_support(self):
        with self.assertRaises(OutsideSupport):
            fractional_part((5, 0, 1), self.subdivision)


class BoxDecompositionTestSuite(unittest.TestCase):
    def test_square(self):
        subdivision, grading = square_subdivision()
        boxes = box_decomposition(subdivision, grading)
        assert list(boxes) == [(1, 2)]
        assert [p.point for p in boxes[(1, 2)]] == [[0, 0, 1]]

    def test_relative_polynomials(self):
        subdivision, grading = square_subdivision()
        assert relative_box_polynomials(subdivision, (1, 2), grading) == {(1, 2): UniPoly((0, 1))}
        assert relative_box_polynomials(subdivision, (), grading) == {(1, 2): UniPoly((0, 1))}

    def test_matches_per_face_enumeration(self):
        polytope = weighted([1, 1, 2], 2)
        subdivision, grading = lift_triangulation(boundary_join(polytope))
        boxes = box_decomposition(subdivision, grading)
        for face in subdivision.face_keys():
            expected = [p.point for p in box_points(subdivision.cone(face))]
            assert sorted(p.point for p in boxes.get(face, [])) == sorted(expected), face


if __name__ == '__main__':
    unittest.main()
