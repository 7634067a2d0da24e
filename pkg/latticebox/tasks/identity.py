from latticebox.boxpoints import box_points
from latticebox.errors import CheckFailed
from latticebox.fan import lift_triangulation, ray_faces
from latticebox.genfun import verify_identity
from latticebox.polynomials import UniPoly
from latticebox.tasks.base import TaskBase, parse_indices


class IdentityTask(TaskBase):
    """Checks the generating-function identity for the lifted triangulation up to a degree."""

    def run(self):
        polytope, triangulation = self.load_polytope(self.args.file)
        subdivision, grading = lift_triangulation(triangulation)
        points = parse_indices(self.args.special)
        special = ray_faces(subdivision, points)
        report = verify_identity(subdivision, special, grading, self.args.truncate,
                                 max_terms=self.config.max_terms)
        check = self.check('identity up to degree {}'.format(self.args.truncate), True, report.passed)
        if not check.passed:
            raise CheckFailed("Generating-function identity fails at monomial {}.".format(report.first_difference),
                              report.to_dict())
        payload = report.to_dict()
        payload['special_face'] = list(points)
        return payload


class BoxPointsTask(TaskBase):
    def run(self):
        polytope, triangulation = self.load_polytope(self.args.file)
        subdivision, grading = lift_triangulation(triangulation)
        face_points = parse_indices(self.args.face)
        relative_points = parse_indices(self.args.rel)
        cone = subdivision.cone(subdivision.require_face(ray_faces(subdivision, face_points)))
        relative = subdivision.cone(subdivision.require_face(ray_faces(subdivision, relative_points)))
        found = box_points(cone, relative, grading)
        coordinate_map = polytope.coordinate_map
        return {
            'face': list(face_points),
            'relative_to': list(relative_points),
            'denominator': coordinate_map.denominator,
            'points': [
                {
                    'point': list(coordinate_map.to_scaled(p.point[:-1])),
                    'height': p.height,
                    'fractional_coords': [str(c) for c in p.fractional_coords],
                }
                for p in found
            ],
            'polynomial': list(UniPoly.from_terms((p.height, 1) for p in found).coeffs),
        }
