import itertools
import unittest

from .context import latticebox
from latticebox.boxpoints import box_points
from latticebox.ehrhart import (
    betke_mcmullen_bound,
    count_lattice_points,
    ehrhart_coefficient,
    h_complex,
    hstar,
    hstar_betke_mcmullen,
    hstar_oracle,
    hstar_special,
    is_unimodular,
    normalized_volume,
)
from latticebox.errors import NotReflexive
from latticebox.fan import boundary_join, face_key, lift_triangulation, special_faces
from latticebox.genfun import h_delta, h_link, specialize, truncated_series, verify_identity
from latticebox.lattice import cone_index
from latticebox.polynomials import ONE_MINUS_T, LaurentPoly, UniPoly
from latticebox.reflexive import (
    WeightedSimplexSpec,
    analyze_hstar,
    braun_hstar,
    family_hstar,
    family_simplex,
    free_sum,
    is_reflexive,
    simplex_polytope,
    weighted_simplex,
)

from .fixtures import SLOW, random_specs, simplex_corpus, stellar_triangle


class FamilyGridTestSuite(unittest.TestCase):
    """Computed h* of the nonunimodal family against its closed form."""

    def test_grid(self):
        for b in range(1, 5):
            for k in range(1, 4):
                for r in range(0, 3):
                    polytope, _ = family_simplex(b, k, r)
                    h = hstar(polytope, boundary_join(polytope), method='bm')
                    assert h == family_hstar(b, k, r), (b, k, r)
                    assert analyze_hstar(h).palindromic, (b, k, r)


class RandomSimplexTestSuite(unittest.TestCase):
    """Seeded samples of reflexive weighted simplices."""

    def agree(self, dim, max_weight, max_b, count, seed=7):
        specs = random_specs(seed, dim, max_weight, max_b, count)
        assert specs
        for spec in specs:
            polytope, _ = weighted_simplex(spec)
            triangulation = boundary_join(polytope)
            h = hstar(polytope, triangulation, method='both')
            assert h == hstar_oracle(polytope, triangulation), spec
            for m in range(dim + 3):
                assert ehrhart_coefficient(h, m) == count_lattice_points(polytope, triangulation, m), (spec, m)
            bound = betke_mcmullen_bound(triangulation)
            assert bound.dominated, spec
            assert analyze_hstar(h).palindromic, spec

    def test_dimensions_one_to_three(self):
        self.agree(1, 4, 4, 3)
        self.agree(2, 6, 6, 5)
        self.agree(3, 6, 6, 5)

    @unittest.skipUnless(SLOW, 'set LATTICEBOX_SLOW_TESTS=1 to run')
    def test_dimension_four(self):
        self.agree(4, 6, 6, 4)

    def test_every_special_face(self):
        for spec in random_specs(11, 2, 6, 6, 3):
            polytope, _ = weighted_simplex(spec)
            triangulation = boundary_join(polytope)
            expected = hstar_betke_mcmullen(triangulation)
            subdivision, grading = lift_triangulation(triangulation)
            for face in map(face_key, special_faces(subdivision)):
                points = tuple(subdivision.ray_labels[r] for r in face)
                assert hstar_special(triangulation, points) == expected, (spec, points)
                assert verify_identity(subdivision, face, grading, 6).passed, (spec, points)


class StellarTriangleTestSuite(unittest.TestCase):
    def test_dilates(self):
        for k in range(3, 6):
            polytope, triangulation = stellar_triangle(k)
            h = hstar(polytope, triangulation, method='both')
            assert h == hstar_oracle(polytope, triangulation), k
            assert sum(h.coeffs) == k * k


class FreeSumTestSuite(unittest.TestCase):
    def test_product_formula(self):
        firsts = random_specs(3, 1, 4, 4, 2)
        seconds = random_specs(5, 2, 4, 4, 2)
        for first_spec in firsts:
            for second_spec in seconds:
                first, _ = weighted_simplex(first_spec)
                second, _ = weighted_simplex(second_spec)
                polytope, _ = free_sum(first, second)
                h = hstar(polytope, boundary_join(polytope), method='bm')
                expected = braun_hstar(
                    hstar(first, boundary_join(first)),
                    hstar(second, boundary_join(second)),
                )
                assert h == expected, (first_spec, second_spec)


class SubdivisionCorpusTestSuite(unittest.TestCase):
    """Seeded lattice simplices, whole and subdivided at an interior point."""

    @classmethod
    def setUpClass(cls):
        cls.corpus = simplex_corpus()

    def lifted(self):
        for polytope, triangulation in self.corpus:
            subdivision, grading = lift_triangulation(triangulation)
            yield polytope, triangulation, subdivision, grading

    def test_corpus_size(self):
        assert len(self.corpus) >= 100
        assert {is_unimodular(t) for _, t in self.corpus} == {True, False}

    def test_special_face_regrouping(self):
        for _, triangulation, subdivision, _ in self.lifted():
            whole = h_delta(subdivision)
            specials = [face_key(c) for c in special_faces(subdivision)]
            for special in specials:
                assert h_link(subdivision, special) == whole, (triangulation.maximal_faces, special)
            largest = specials[0]
            for face in subdivision.face_keys():
                joined = tuple(sorted(set(face) | set(largest)))
                assert h_link(subdivision, face) == h_link(subdivision, joined), (triangulation.maximal_faces, face)

    def test_hstar_from_every_special_face(self):
        for polytope, triangulation, subdivision, _ in self.lifted():
            expected = hstar_betke_mcmullen(triangulation)
            assert expected.volume == normalized_volume(triangulation)
            for face in map(face_key, special_faces(subdivision)):
                points = tuple(subdivision.ray_labels[r] for r in face)
                assert hstar_special(triangulation, points) == expected, (triangulation.maximal_faces, points)

    def test_generating_identity(self):
        for _, triangulation, subdivision, grading in itertools.islice(self.lifted(), 12):
            series = truncated_series(subdivision, grading, 3)
            for face in map(face_key, special_faces(subdivision)):
                report = verify_identity(subdivision, face, grading, 3, series=series)
                assert report.passed, (triangulation.maximal_faces, face, report.first_difference)

    def test_boxes_partition_the_parallelepiped(self):
        for _, triangulation, subdivision, _ in self.lifted():
            for maximal in subdivision.maximal_cones:
                faces = [f for size in range(1, len(maximal) + 1) for f in itertools.combinations(maximal, size)]
                total = 1 + sum(len(box_points(subdivision.cone(f))) for f in faces)
                assert total == cone_index(subdivision.cone(maximal)), (triangulation.maximal_faces, maximal)

    def test_specialized_h_delta(self):
        for polytope, triangulation, subdivision, grading in self.lifted():
            extra = len(subdivision.ray_indices()) - polytope.dim - 1
            expected = ONE_MINUS_T ** extra * h_complex(subdivision)
            assert specialize(h_delta(subdivision), grading) == expected, triangulation.maximal_faces

    def test_bound_equality_iff_unimodular(self):
        for _, triangulation in self.corpus:
            bound = betke_mcmullen_bound(triangulation)
            assert bound.dominated
            assert bound.equality == bound.unimodular, triangulation.maximal_faces

    def test_specialize_is_a_ring_map(self):
        for _, _, subdivision, grading in itertools.islice(self.lifted(), 40):
            first = h_delta(subdivision)
            second = h_link(subdivision, subdivision.maximal_cones[0][:1])
            assert specialize(first + second, grading) == specialize(first, grading) + specialize(second, grading)
            assert specialize(first - second, grading) == specialize(first, grading) - specialize(second, grading)
            assert specialize(first.multiply(second), grading) == \
                specialize(first, grading) * specialize(second, grading)
            assert specialize(LaurentPoly.one(subdivision.rank), grading) == UniPoly.one()


class ReflexiveCriterionTestSuite(unittest.TestCase):
    """The divisibility criterion against the dual vertices, over a full grid."""

    def test_grid(self):
        seen = set()
        for dim in range(1, 5):
            for weights in itertools.combinations_with_replacement(range(1, 5), dim):
                for b in range(1, 5):
                    spec = WeightedSimplexSpec(list(weights), b)
                    polytope, _ = simplex_polytope(spec)
                    try:
                        weighted_simplex(spec)
                        built = True
                    except NotReflexive:
                        built = False
                    assert built == is_reflexive(polytope), (weights, b)
                    seen.add(built)
        assert seen == {True, False}


if __name__ == '__main__':
    unittest.main()
