"""Reflexive simplices with weights, free sums, and h*-vector diagnostics."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, gcd
from typing import Iterator, List, Optional, Tuple

from mashumaro import DataClassDictMixin

from latticebox.ehrhart import HStarVector, hstar
from latticebox.errors import MalformedInput, NotReflexive, OriginNotInterior
from latticebox.fan import Polytope, boundary_join, free_sum_summands, origin_interior
from latticebox.lattice import CoordinateMap, RationalVector, system_for
from latticebox.polynomials import UniPoly


@dataclass
class WeightedSimplexSpec(DataClassDictMixin):
    """conv{e_1, ..., e_d, -f} with f = (a_1, ..., a_d) / b over the lattice Z^d + Zf."""
    weights: List[int]
    b: int

    def __post_init__(self):
        if not self.weights or any(a <= 0 for a in self.weights) or self.b <= 0:
            raise MalformedInput("Weights and b must be positive integers.",
                                 {'weights': list(self.weights), 'b': self.b})

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def c(self) -> Optional[int]:
        total = sum(self.weights)
        return total // self.b if total % self.b == 0 else None

    @property
    def f(self) -> RationalVector:
        return tuple(Fraction(a, self.b) for a in self.weights)

    def violation(self) -> Optional[NotReflexive]:
        if self.c is None:
            return NotReflexive(
                'sum', "Weight sum {} is not divisible by b = {}.".format(sum(self.weights), self.b),
                sum=sum(self.weights), b=self.b)
        bound = self.b * (self.c + 1)
        for index, a in enumerate(self.weights):
            if bound % a:
                return NotReflexive(
                    'divisibility', "Weight a_{} = {} does not divide b(c+1) = {}.".format(index, a, bound),
                    index=index, weight=a, bound=bound)
        return None

    @property
    def reflexive(self) -> bool:
        return self.violation() is None


def simplex_polytope(spec: WeightedSimplexSpec) -> Tuple[Polytope, CoordinateMap]:
    """Builds the simplex without checking reflexivity."""
    d, b = spec.dim, spec.b
    columns = [tuple(b * int(i == j) for i in range(d)) for j in range(d)]
    columns.append(tuple(spec.weights))
    coordinate_map = CoordinateMap.from_generators(b, columns, d)
    scaled = [tuple([0] * d)] + columns[:d] + [tuple(-a for a in spec.weights)]
    points = tuple(coordinate_map.lattice_coordinates(p) for p in scaled)
    polytope = Polytope(
        dim=d,
        points=points,
        vertex_indices=tuple(range(1, d + 2)),
        summands=(tuple(range(1, d + 2)),),
        coordinate_map=coordinate_map,
    )
    return polytope, coordinate_map


def weighted_simplex(spec: WeightedSimplexSpec) -> Tuple[Polytope, CoordinateMap]:
    error = spec.violation()
    if error is not None:
        raise error
    return simplex_polytope(spec)


def family_spec(b: int, k: int, r: int) -> WeightedSimplexSpec:
    return WeightedSimplexSpec(weights=[1] * (b * k) + [b] * r, b=b)


def family_simplex(b: int, k: int, r: int) -> Tuple[Polytope, CoordinateMap]:
    return weighted_simplex(family_spec(b, k, r))


def _facets(polytope: Polytope) -> List[Tuple[int, ...]]:
    groups = free_sum_summands(polytope)
    for group in groups:
        if not origin_interior(polytope, group):
            raise OriginNotInterior()
    facets = []
    for omitted in product(*groups):
        facets.append(tuple(sorted(i for group, skip in zip(groups, omitted) for i in group if i != skip)))
    return facets


def dual_vertices(polytope: Polytope) -> List[RationalVector]:
    """Vertices u_F of the dual polytope, one per facet F, solving <u_F, v> = -1 on F.

    Coordinates are taken in the basis dual to the polytope's lattice basis, so
    u_F lies in the dual lattice iff it is integral.
    """
    d = polytope.dim
    vertices = []
    for facet in _facets(polytope):
        rows = [polytope.points[i] for i in facet]
        columns = [tuple(row[j] for row in rows) for j in range(d)]
        vertices.append(system_for(columns, d).coordinates((-1,) * d))
    return vertices


def is_reflexive(polytope: Polytope) -> bool:
    try:
        vertices = dual_vertices(polytope)
    except OriginNotInterior:
        return False
    return all(x.denominator == 1 for u in vertices for x in u)


def free_sum(first: Polytope, second: Polytope) -> Tuple[Polytope, CoordinateMap]:
    """conv(P x {0} and {0} x Q) over the product lattice; the origin is listed once, first."""
    groups = []
    for polytope in (first, second):
        if polytope.origin_index is None:
            raise OriginNotInterior("The origin must be listed among the summand's points.")
        summands = free_sum_summands(polytope)
        if not all(origin_interior(polytope, group) for group in summands):
            raise OriginNotInterior()
        groups.append(summands)
    d1, d2 = first.dim, second.dim
    map1, map2 = first.coordinate_map, second.coordinate_map
    denominator = map1.denominator * map2.denominator // gcd(map1.denominator, map2.denominator)
    generators = [
        tuple(x * (denominator // map1.denominator) for x in g) + (0,) * d2 for g in map1.generators
    ] + [
        (0,) * d1 + tuple(x * (denominator // map2.denominator) for x in g) for g in map2.generators
    ]
    coordinate_map = CoordinateMap(dim=d1 + d2, denominator=denominator, generators=tuple(generators))

    points = [(0,) * (d1 + d2)]
    positions = []
    for polytope, pad_before, pad_after in ((first, 0, d2), (second, d1, 0)):
        position = {}
        for i, p in enumerate(polytope.points):
            if i == polytope.origin_index:
                continue
            position[i] = len(points)
            points.append((0,) * pad_before + p + (0,) * pad_after)
        positions.append(position)
    summands = tuple(
        tuple(position[i] for i in group)
        for summand_groups, position in zip(groups, positions) for group in summand_groups)
    vertex_indices = tuple(sorted(i for group in summands for i in group))
    polytope = Polytope(
        dim=d1 + d2,
        points=tuple(points),
        vertex_indices=vertex_indices,
        summands=summands,
        coordinate_map=coordinate_map,
    )
    return polytope, coordinate_map


def braun_hstar(first: HStarVector, second: HStarVector) -> HStarVector:
    """h* of a free sum of reflexive polytopes is the product of the summands' h*."""
    return HStarVector.from_poly(first.as_poly() * second.as_poly(), first.dim + second.dim)


def family_hstar(b: int, k: int, r: int) -> HStarVector:
    """(1 + ... + t^d) + (1 + ... + t^r)(t^k + ... + t^((b-1)k)) with d = bk + r."""
    d = b * k + r
    bumps = UniPoly.from_terms((j * k, 1) for j in range(1, b))
    return HStarVector.from_poly(UniPoly.geometric(d) + UniPoly.geometric(r) * bumps, d)


# Diagnostics

@dataclass
class GStarVector(DataClassDictMixin):
    entries: List[int]


@dataclass
class AnalysisReport(DataClassDictMixin):
    unimodal: bool
    palindromic: bool
    hibi_ok: bool
    gstar: GStarVector
    macaulay: bool
    valleys: List[List[int]] = field(default_factory=list)


def macaulay_pseudopower(value: int, i: int) -> int:
    """value^<i> from the greedy i-binomial expansion of value."""
    total = 0
    remainder = value
    j = i
    while remainder > 0 and j >= 1:
        a = j
        while comb(a + 1, j) <= remainder:
            a += 1
        remainder -= comb(a, j)
        total += comb(a + 1, j + 1)
        j -= 1
    return total


def is_macaulay(entries: List[int]) -> bool:
    if not entries or entries[0] != 1 or any(g < 0 for g in entries):
        return False
    return all(entries[i + 1] <= macaulay_pseudopower(entries[i], i) for i in range(1, len(entries) - 1))


def find_valleys(coeffs: List[int]) -> List[List[int]]:
    """Triples (i, j, depth) with i < j < i' and depth = min(h_i, h_i') - h_j, one per valley.

    A valley is a maximal run of indices lying strictly below the lower of the
    highest values on either side; it is reported at its deepest index.
    """
    n = len(coeffs)
    depths = [0] * n
    left = [None] * n
    for j in range(1, n - 1):
        left_index = max(range(j), key=lambda i: (coeffs[i], -i))
        right_max = max(coeffs[j + 1:])
        depths[j] = min(coeffs[left_index], right_max) - coeffs[j]
        left[j] = left_index
    valleys = []
    j = 0
    while j < n:
        if depths[j] <= 0:
            j += 1
            continue
        end = j
        while end + 1 < n and depths[end + 1] > 0:
            end += 1
        deepest = max(range(j, end + 1), key=lambda i: (depths[i], -i))
        valleys.append([left[deepest], deepest, depths[deepest]])
        j = end + 1
    return valleys


def analyze_hstar(h: HStarVector) -> AnalysisReport:
    c = h.coeffs
    d = h.dim
    half = d // 2
    gstar = [c[0]] + [c[i] - c[i - 1] for i in range(1, half + 1)]
    hibi_ok = d < 1 or (c[0] <= c[1] and all(c[1] <= c[i] for i in range(2, d)))
    return AnalysisReport(
        unimodal=all(c[i] <= c[i + 1] for i in range(half)),
        palindromic=all(c[i] == c[d - i] for i in range(d + 1)),
        hibi_ok=hibi_ok,
        gstar=GStarVector(gstar),
        macaulay=is_macaulay(gstar),
        valleys=find_valleys(c),
    )


# Valleys from free sums

@dataclass
class ValleyConstruction:
    polytope: Polytope
    coordinate_map: CoordinateMap
    predicted: HStarVector
    b: int
    k: int


def valley_construction(summand: Polytope, valleys: int,
                        summand_hstar: Optional[HStarVector] = None) -> ValleyConstruction:
    """Free sum of ``summand`` with the family simplex (b = valleys + 2, k = dim + 2, r = 0).

    The family's h* carries b - 1 bumps; consecutive bumps enclose the valleys.
    """
    if valleys < 1:
        raise MalformedInput("At least one valley is required.", {'valleys': valleys})
    if summand_hstar is None:
        summand_hstar = hstar(summand, boundary_join(summand), method='bm')
    b = valleys + 2
    k = summand.dim + 2
    family, _ = family_simplex(b, k, 0)
    polytope, coordinate_map = free_sum(summand, family)
    predicted = braun_hstar(summand_hstar, family_hstar(b, k, 0))
    return ValleyConstruction(polytope, coordinate_map, predicted, b, k)


def valley_pattern(h: HStarVector, summand_hstar: HStarVector, b: int, k: int) -> List[Tuple[int, int, int]]:
    """Mismatches (index, expected, actual) against the bump pattern of a free sum with the family.

    Expects h_{kl+i} = vol + h_i(summand) for 1 <= l <= b-1 and h_{k(l+1)-1} = vol for 1 <= l <= b-2.
    """
    volume = summand_hstar.volume
    expected = {}
    for level in range(1, b):
        for i in range(summand_hstar.dim + 1):
            expected[k * level + i] = volume + summand_hstar[i]
    for level in range(1, b - 1):
        expected[k * (level + 1) - 1] = volume
    mismatches = []
    for index, value in sorted(expected.items()):
        actual = h[index] if index < len(h) else 0
        if actual != value:
            mismatches.append((index, value, actual))
    return mismatches


def scan_weights(dim: int, max_weight: int, max_b: int) -> Iterator[WeightedSimplexSpec]:
    """Reflexive weight specs with nondecreasing weights, ordered by b then weights."""
    for b in range(1, max_b + 1):
        for weights in combinations_with_replacement(range(1, max_weight + 1), dim):
            spec = WeightedSimplexSpec(list(weights), b)
            if spec.reflexive:
                yield spec
