import os
from typing import Any, Dict

from latticebox.boxpoints import box_points, box_polynomial
from latticebox.ehrhart import HStarVector, hstar
from latticebox.fan import boundary_join, lift_triangulation, ray_faces
from latticebox.genfun import rhs_generating_identity, verify_identity
from latticebox.parsers import PolytopeFile
from latticebox.polynomials import LaurentPoly, UniPoly
from latticebox.reflexive import (
    WeightedSimplexSpec,
    analyze_hstar,
    braun_hstar,
    family_hstar,
    family_simplex,
    free_sum,
    valley_construction,
    valley_pattern,
    weighted_simplex,
)
from latticebox.tasks.base import TaskBase
import latticebox.utils.yaml as yaml

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures', 'reproductions.yml')
TARGETS = ('ex1.4', 'ex4.3', 'ex4.4', 'thm1.3', 'thm1.4', 'thm1.5')


def load_reproductions() -> Dict[str, Any]:
    return yaml.parse_file(FIXTURES)


class ReproduceTask(TaskBase):
    def run(self):
        target = self.args.target
        data = load_reproductions()[target]
        handler = getattr(self, '_' + target.replace('.', '_'))
        results = handler(data)
        return {
            'target': target,
            'checks': len(self.reporter.checks),
            'failures': len(self.reporter.failed_checks),
            'results': results,
        }

    def _ex1_4(self, data):
        polytope, triangulation = PolytopeFile.from_dict(data['polytope']).load()
        subdivision, grading = lift_triangulation(triangulation)
        face = ray_faces(subdivision, data['box-face'])
        found = [p.point for p in box_points(subdivision.cone(face), face)]
        self.check('Box(lambda, lambda)', data['box-points'], found)

        rays = subdivision.rays
        box_point = tuple(data['box-points'][0])
        corner = tuple(a + b for a, b in zip(rays[0], rays[3]))
        factored = (LaurentPoly.one(3) + LaurentPoly.monomial(box_point)) * (
            LaurentPoly.one(3) - LaurentPoly.monomial(corner))
        self.check('right-hand side', factored.items(), rhs_generating_identity(subdivision, face).items())

        reports = {}
        for points in data['special-faces']:
            special = ray_faces(subdivision, points)
            report = verify_identity(subdivision, special, grading, data['truncate'],
                                     max_terms=self.config.max_terms)
            self.check('identity with special face {}'.format(list(points)), True, report.passed)
            reports[','.join(str(p) for p in points) or 'zero'] = report.to_dict()
        return reports

    def _weighted_example(self, data):
        spec = WeightedSimplexSpec(weights=data['weights'], b=data['b'])
        polytope, _ = weighted_simplex(spec)
        triangulation = boundary_join(polytope)
        h = hstar(polytope, triangulation, method='both')
        self.check('h*', data['hstar'], h.coeffs)

        subdivision, grading = lift_triangulation(triangulation)
        origin = ray_faces(subdivision, [0])
        polynomials = {}
        for entry in data['box-polynomials']:
            face = ray_faces(subdivision, entry['face'])
            actual = box_polynomial(subdivision.cone(face), origin, grading)
            self.check('B_F for F = {}'.format(entry['face']), UniPoly(tuple(entry['coeffs'])), actual)
            polynomials[','.join(map(str, entry['face']))] = list(actual.coeffs)
        return {'hstar': h.coeffs, 'box_polynomials': polynomials}

    _ex4_3 = _weighted_example
    _ex4_4 = _weighted_example

    def _thm1_3(self, data):
        results = []
        for b, k, r in data['families']:
            polytope, _ = family_simplex(b, k, r)
            h = hstar(polytope, boundary_join(polytope), method='bm')
            self.check('family ({}, {}, {}) closed form'.format(b, k, r), family_hstar(b, k, r).coeffs, h.coeffs)
            self.check('family ({}, {}, {}) not unimodal'.format(b, k, r), False, analyze_hstar(h).unimodal)
            results.append({'b': b, 'k': k, 'r': r, 'hstar': h.coeffs})
        for b, k, r in data.get('boundary-families', []):
            polytope, _ = family_simplex(b, k, r)
            h = hstar(polytope, boundary_join(polytope), method='bm')
            self.check('family ({}, {}, {}) closed form'.format(b, k, r), family_hstar(b, k, r).coeffs, h.coeffs)
            self.check('family ({}, {}, {}) unimodal'.format(b, k, r), True, analyze_hstar(h).unimodal)
            results.append({'b': b, 'k': k, 'r': r, 'hstar': h.coeffs})
        for coeffs in data['vectors']:
            report = analyze_hstar(HStarVector(coeffs, len(coeffs) - 1))
            self.check('{} not unimodal'.format(coeffs), False, report.unimodal)
        return results

    def _thm1_4(self, data):
        b, k, r = data['family']
        polytope, _ = family_simplex(b, k, r)
        h = hstar(polytope, boundary_join(polytope), method='both')
        report = analyze_hstar(h)
        self.check('h*', data['hstar'], h.coeffs)
        self.check('unimodal', True, report.unimodal)
        self.check('g*', data['gstar'], report.gstar.entries)
        self.check('Macaulay', False, report.macaulay)
        return {'hstar': h.coeffs, 'analysis': report.to_dict()}

    def _thm1_5(self, data):
        summand_spec = WeightedSimplexSpec(**data['summand'])
        summand, _ = weighted_simplex(summand_spec)
        summand_hstar = hstar(summand, boundary_join(summand), method='both')
        self.check('summand h*', data['summand-hstar'], summand_hstar.coeffs)

        construction = valley_construction(summand, data['valleys'], summand_hstar)
        predicted = construction.predicted
        direct_hstar = hstar(construction.polytope, boundary_join(construction.polytope), method='bm')
        self.check('valley construction h* matches the product formula', predicted.coeffs, direct_hstar.coeffs)
        self.check('valley pattern', [], valley_pattern(direct_hstar, summand_hstar, construction.b, construction.k))
        report = analyze_hstar(direct_hstar)
        deep = [v for v in report.valleys if v[2] >= data['min-depth']]
        self.check('at least {} valleys of depth >= {}'.format(data['valleys'], data['min-depth']),
                   True, len(deep) >= data['valleys'])

        b, k, r = data['direct-family']
        family, _ = family_simplex(b, k, r)
        direct, _ = free_sum(summand, family)
        computed = hstar(direct, boundary_join(direct), method='bm')
        self.check('product formula on family ({}, {}, {})'.format(b, k, r),
                   braun_hstar(summand_hstar, family_hstar(b, k, r)).coeffs, computed.coeffs)
        return {
            'b': construction.b,
            'k': construction.k,
            'hstar': direct_hstar.coeffs,
            'valleys': report.valleys,
            'family_sum_hstar': computed.coeffs,
        }
