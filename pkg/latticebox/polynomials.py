from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import ZZ, Poly, Symbol

from latticebox.errors import TermBudgetExceeded

Exponent = Tuple[int, ...]

t = Symbol('t')


@dataclass(frozen=True)
class UniPoly:
    """Integer polynomial in t; coeffs[i] is the coefficient of t^i, trailing zeros trimmed.

    Arithmetic is done by ``sympy.Poly`` over ZZ.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: Poly) -> 'UniPoly':
        return cls(tuple(reversed(poly.all_coeffs())))

    def as_poly(self) -> Poly:
        return Poly.from_list(list(reversed(self.coeffs)) or [0], t, domain=ZZ)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> 'UniPoly':
        return cls.from_poly(Poly(coefficient * t ** degree, t, domain=ZZ))

    @classmethod
    def one(cls) -> 'UniPoly':
        return cls((1,))

    @classmethod
    def geometric(cls, degree: int) -> 'UniPoly':
        """1 + t + ... + t^degree (zero for negative degree)."""
        return cls(tuple([1] * (degree + 1)))

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]]) -> 'UniPoly':
        poly = Poly(0, t, domain=ZZ)
        for degree, coefficient in terms:
            poly += Poly(coefficient * t ** degree, t, domain=ZZ)
        return cls.from_poly(poly)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, degree: int) -> int:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else 0

    def padded(self, length: int) -> List[int]:
        return [self.coefficient(i) for i in range(length)]

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        return UniPoly.from_poly(self.as_poly() + other.as_poly())

    def __neg__(self) -> 'UniPoly':
        return UniPoly.from_poly(-self.as_poly())

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return UniPoly.from_poly(self.as_poly() - other.as_poly())

    def __mul__(self, other: 'UniPoly') -> 'UniPoly':
        return UniPoly.from_poly(self.as_poly() * other.as_poly())

    def __pow__(self, exponent: int) -> 'UniPoly':
        return UniPoly.from_poly(self.as_poly() ** exponent)

    def __str__(self):
        return str(self.as_poly().as_expr())


ONE_MINUS_T = UniPoly((1, -1))


class LaurentPoly:
    """Sparse integer Laurent polynomial in the monomials x^v, v an integer vector."""

    def __init__(self, terms: Optional[Dict[Exponent, int]] = None, rank: int = 0):
        self.terms: Dict[Exponent, int] = {}
        self.rank = rank
        for exponent, coefficient in (terms or {}).items():
            if coefficient:
                self.terms[tuple(exponent)] = coefficient
                self.rank = len(exponent)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: int = 1) -> 'LaurentPoly':
        return cls({tuple(exponent): coefficient}, rank=len(exponent))

    @classmethod
    def one(cls, rank: int) -> 'LaurentPoly':
        return cls.monomial((0,) * rank)

    @classmethod
    def binomial(cls, exponent: Sequence[int]) -> 'LaurentPoly':
        """1 - x^exponent."""
        poly = cls.one(len(exponent))
        poly.add_term(tuple(exponent), -1)
        return poly

    def add_term(self, exponent: Exponent, coefficient: int):
        value = self.terms.get(exponent, 0) + coefficient
        if value:
            self.terms[exponent] = value
        else:
            self.terms.pop(exponent, None)

    def copy(self) -> 'LaurentPoly':
        return LaurentPoly(dict(self.terms), self.rank)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        result = self.copy()
        for exponent, coefficient in other.terms.items():
            result.add_term(exponent, coefficient)
        result.rank = self.rank or other.rank
        return result

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.rank)

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def multiply(self, other: 'LaurentPoly', budget: Optional[int] = None) -> 'LaurentPoly':
        result = LaurentPoly(rank=self.rank or other.rank)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                result.add_term(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            if budget is not None and len(result.terms) > budget:
                raise TermBudgetExceeded(budget)
        return result

    def __mul__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self.multiply(other)

    def truncate(self, grading, degree: int) -> 'LaurentPoly':
        """Keeps the monomials x^v with grading(v) <= degree."""
        return LaurentPoly({e: c for e, c in self.terms.items() if grading(e) <= degree}, self.rank)

    def items(self) -> List[Tuple[Exponent, int]]:
        """Terms in lexicographic order of exponents."""
        return sorted(self.terms.items())

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def __repr__(self):
        return 'LaurentPoly({})'.format(dict(self.items()))
