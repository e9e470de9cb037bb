"""Domain errors raised by the arithmetic core.

Every error carries a stable machine-readable ``code`` so the service and the
CLI can map failures without parsing messages.
"""


class DomainError(ValueError):
    """Base class for all arithmetic domain errors."""

    code = "domain_error"


class ZeroCoefficient(DomainError):
    code = "zero_coefficient"


class ZeroInput(DomainError):
    code = "zero_input"


class CubeCase(DomainError):
    """abc (or the relevant product) is a rational cube; classification
    hypotheses exclude this case."""

    code = "cube_case"


class NotCoprimeToThree(DomainError):
    code = "not_coprime_to_three"


class NotPrime(DomainError):
    code = "not_prime"


class NotCoprime(DomainError):
    code = "not_coprime"


class BadResidueNorm(DomainError):
    code = "bad_residue_norm"


class BadReduction(DomainError):
    code = "bad_reduction"


class WitnessNotFound(DomainError):
    """No certifying prime below the scan bound."""

    code = "witness_not_found"


class NotImaginary(DomainError):
    code = "not_imaginary"


class NotOrderThree(DomainError):
    code = "not_order_three"


class ZeroIsogeny(DomainError):
    code = "zero_isogeny"


class ZeroD(DomainError):
    code = "zero_d"


class PrecisionTooLow(DomainError):
    code = "precision_too_low"


class DepthExceeded(DomainError):
    code = "depth_exceeded"


class UnsupportedPlace(DomainError):
    code = "unsupported_place"
