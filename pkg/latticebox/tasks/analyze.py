from latticebox.ehrhart import HStarVector, hstar
from latticebox.errors import MalformedInput
from latticebox.fan import boundary_join
from latticebox.reflexive import analyze_hstar, scan_weights, simplex_polytope
from latticebox.tasks.base import TaskBase, parse_indices


class AnalyzeTask(TaskBase):
    def run(self):
        coeffs = list(parse_indices(self.args.hstar))
        if not coeffs:
            raise MalformedInput("--hstar needs at least one coefficient.")
        report = analyze_hstar(HStarVector(coeffs, len(coeffs) - 1))
        payload = report.to_dict()
        payload['hstar'] = coeffs
        return payload


class ScanTask(TaskBase):
    """h* and diagnostics for every reflexive weighted simplex within the bounds."""

    def run(self):
        results = []
        for spec in scan_weights(self.args.dim, self.args.max_weight, self.args.max_b):
            polytope, _ = simplex_polytope(spec)
            h = hstar(polytope, boundary_join(polytope), method='bm')
            report = analyze_hstar(h)
            results.append({
                'weights': spec.weights,
                'b': spec.b,
                'hstar': h.coeffs,
                'unimodal': report.unimodal,
                'macaulay': report.macaulay,
                'valleys': report.valleys,
            })
        return {'count': len(results), 'results': results}
