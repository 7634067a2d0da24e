from typing import Any, Dict, Optional


class LatticeBoxError(Exception):
    """Base error. `code` is stable and appears in JSON error objects."""
    code = 'LatticeBoxError'
    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            'error': self.code,
            'message': self.message,
            'details': self.details,
        }


class InputError(LatticeBoxError):
    exit_code = 2


class VerificationError(LatticeBoxError):
    exit_code = 1


class NotInLattice(InputError):
    code = 'NotInLattice'

    def __init__(self, index: int, point):
        super().__init__(
            "Point {} ({}) does not lie in the lattice.".format(index, list(map(str, point))),
            {'index': index})


class ZeroVector(InputError):
    code = 'ZeroVector'

    def __init__(self):
        super().__init__("A ray must be a nonzero vector.")


class DependentGenerators(InputError):
    code = 'DependentGenerators'

    def __init__(self, rays):
        super().__init__(
            "Cone generators {} are linearly dependent.".format(list(rays)),
            {'rays': list(rays)})


class FaceNotInComplex(InputError):
    code = 'FaceNotInComplex'

    def __init__(self, face):
        super().__init__(
            "Cone {} is not a face of the subdivision.".format(list(face)),
            {'face': list(face)})


class NotAFace(InputError):
    code = 'NotAFace'

    def __init__(self, face, cone):
        super().__init__(
            "Cone {} is not a face of {}.".format(list(face), list(cone)),
            {'face': list(face), 'cone': list(cone)})


class OutsideSupport(InputError):
    code = 'OutsideSupport'

    def __init__(self, point):
        super().__init__(
            "Point {} is outside the support of the subdivision.".format(list(point)),
            {'point': list(point)})


class NotSpecial(InputError):
    code = 'NotSpecial'

    def __init__(self, face):
        super().__init__(
            "Face {} is not contained in every maximal cone.".format(list(face)),
            {'face': list(face)})


class RayOutsideUniverse(InputError):
    code = 'RayOutsideUniverse'

    def __init__(self, ray: int):
        super().__init__(
            "Ray {} is not part of the ray universe.".format(ray),
            {'ray': ray})


class NonPositiveGrading(InputError):
    code = 'NonPositiveGrading'

    def __init__(self, ray: int, value: int):
        super().__init__(
            "Grading is {} on ray {}; it must be strictly positive.".format(value, ray),
            {'ray': ray, 'value': value})


class NegativeDegree(InputError):
    code = 'NegativeDegree'

    def __init__(self, exponent, degree: int):
        super().__init__(
            "Monomial {} specializes to negative degree {}.".format(list(exponent), degree),
            {'exponent': list(exponent), 'degree': degree})


class UnsupportedShape(InputError):
    code = 'UnsupportedShape'


class OriginNotInterior(InputError):
    code = 'OriginNotInterior'

    def __init__(self, message: str = "The origin is not an interior lattice point of the polytope."):
        super().__init__(message)


class NotReflexive(InputError):
    code = 'NotReflexive'

    def __init__(self, clause: str, message: str, **details):
        details['clause'] = clause
        super().__init__(message, details)


class InvalidTriangulation(InputError):
    code = 'InvalidTriangulation'


class MalformedInput(InputError):
    code = 'MalformedInput'


class ConfigurationError(InputError):
    code = 'ConfigurationError'


class TermBudgetExceeded(InputError):
    code = 'TermBudgetExceeded'

    def __init__(self, budget: int):
        super().__init__(
            "Expansion exceeded the term budget of {} terms.".format(budget),
            {'budget': budget})


class MethodDisagreement(VerificationError):
    code = 'MethodDisagreement'

    def __init__(self, first, second):
        super().__init__(
            "h*-vector methods disagree: {} != {}.".format(list(first), list(second)),
            {'betke_mcmullen': list(first), 'special': list(second)})


class CheckFailed(VerificationError):
    code = 'CheckFailed'
