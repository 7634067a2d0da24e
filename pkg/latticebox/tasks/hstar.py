from latticebox.ehrhart import (
    count_lattice_points,
    ehrhart_counts,
    ehrhart_polynomial,
    hstar_betke_mcmullen,
    hstar_oracle,
    hstar_special,
    normalized_volume,
)
from latticebox.errors import MethodDisagreement
from latticebox.tasks.base import TaskBase


class HStarTask(TaskBase):
    def run(self):
        polytope, triangulation = self.load_polytope(self.args.file)
        method = self.args.method
        special = triangulation.special_face or ()

        if method == 'bm':
            result = hstar_betke_mcmullen(triangulation)
        elif method == 'special':
            result = hstar_special(triangulation, special)
        else:
            result = hstar_betke_mcmullen(triangulation)
            other = hstar_special(triangulation, special)
            check = self.check('Betke-McMullen vs special face', result.coeffs, other.coeffs)
            if not check.passed:
                raise MethodDisagreement(result.coeffs, other.coeffs)

        payload = {
            'dimension': polytope.dim,
            'hstar': result.coeffs,
            'method': method,
            'special_face': list(special),
            'volume': normalized_volume(triangulation),
        }
        if getattr(self.args, 'oracle', False):
            self.check_oracle_size(polytope.dim)
            oracle = hstar_oracle(polytope, triangulation)
            payload['oracle'] = oracle.coeffs
            self.require('brute-force oracle', result.coeffs, oracle.coeffs)
        return payload


class SeriesTask(TaskBase):
    """Lattice-point counts of the dilates mP, m = 0..terms."""

    def run(self):
        polytope, triangulation = self.load_polytope(self.args.file)
        h = hstar_betke_mcmullen(triangulation)
        counts = [count for _, count in ehrhart_counts(h, self.args.terms)]
        polynomial = ehrhart_polynomial(h)
        payload = {'counts': counts, 'hstar': h.coeffs,
                   'ehrhart_polynomial': [str(c) for c in reversed(polynomial.all_coeffs())]}
        if getattr(self.args, 'oracle', False):
            self.check_oracle_size(polytope.dim)
            for m, expected in enumerate(counts):
                self.require('#({}P)'.format(m), expected, count_lattice_points(polytope, triangulation, m))
        return payload
