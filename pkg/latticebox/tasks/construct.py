from latticebox.errors import MalformedInput
from latticebox.parsers import PolytopeFile, read_polytope_file, write_polytope_file
from latticebox.reflexive import WeightedSimplexSpec, family_hstar, family_spec, free_sum, weighted_simplex
from latticebox.tasks.base import TaskBase, parse_indices


class MakeSimplexTask(TaskBase):
    def run(self):
        spec = WeightedSimplexSpec(weights=list(parse_indices(self.args.weights)), b=self.args.b)
        polytope, _ = weighted_simplex(spec)
        payload = spec.to_dict()
        payload['c'] = spec.c
        if self.args.output:
            write_polytope_file(self.args.output, PolytopeFile.from_polytope(polytope))
            payload['file'] = self.args.output
        return payload


class FamilyTask(TaskBase):
    def run(self):
        b, k, r = self.args.b, self.args.k, self.args.r
        if b < 1 or k < 1 or r < 0:
            raise MalformedInput("Family parameters need b >= 1, k >= 1 and r >= 0.")
        spec = family_spec(b, k, r)
        polytope, _ = weighted_simplex(spec)
        payload = {'b': b, 'k': k, 'r': r, 'dimension': polytope.dim, 'hstar': family_hstar(b, k, r).coeffs}
        if self.args.output:
            write_polytope_file(self.args.output, PolytopeFile.from_polytope(polytope))
            payload['file'] = self.args.output
        return payload


class FreeSumTask(TaskBase):
    def run(self):
        first = read_polytope_file(self.args.first).to_polytope()
        second = read_polytope_file(self.args.second).to_polytope()
        polytope, _ = free_sum(first, second)
        write_polytope_file(self.args.output, PolytopeFile.from_polytope(polytope))
        return {'dimension': polytope.dim, 'file': self.args.output, 'points': len(polytope.points)}
