"""Hecke character values for y^2 = x^3 + D and the m(3) = 0 witness scan.

At a split prime of good reduction with primary generator pi, the character
value is psi = (4D/pi)_6^{-1} * pi, normalized so that psi + psi-bar equals
the Frobenius trace of the reduced curve.  A witness prime certifies that
some character value escapes Z + 3*Z[omega], which forces the relevant
order of vanishing invariant m(3) to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime, primerange

from .cubeclass import LambdaChoice, PrimitiveTriple, is_cube
from .eisenstein import (
    EisensteinInt,
    PrimaryPrime,
    SexticUnit,
    cubic_symbol,
    sextic_symbol,
    split_prime,
)
from .errors import BadReduction, CubeCase, NotPrime, WitnessNotFound, ZeroD, ZeroInput


@dataclass(frozen=True)
class CurveModel:
    """The elliptic curve y^2 = x^3 + d."""

    d: int

    def __post_init__(self):
        if self.d == 0:
            raise ZeroD("the model y^2 = x^3 + d requires d != 0")


@dataclass(frozen=True)
class HeckeValue:
    value: EisensteinInt
    prime: PrimaryPrime
    inertia_degree: int

    def trace(self) -> int:
        return self.value.trace()


@dataclass(frozen=True)
class OrderMembership:
    """The suborder Z + l^k * Z[omega]."""

    l: int
    k: int

    def __post_init__(self):
        if not isprime(self.l):
            raise NotPrime(f"{self.l} is not prime")
        if self.k < 0:
            raise ZeroInput("exponent must be nonnegative")


def jacobian_coefficient(t: PrimitiveTriple) -> int:
    """The Jacobian of a x^3 + b y^3 + c z^3 = 0 is y^2 = x^3 - 432*(abc)^2."""
    abc = t.product()
    return -(2**4) * (3**3) * abc * abc


def hecke_at_split_prime(
    curve: CurveModel, prime: PrimaryPrime, inertia_degree: int = 1
) -> HeckeValue:
    """psi(p)^f for a split prime of good reduction.

    Good reduction means N(pi) coprime to 6d; the inertia degree accounts
    for primes of an extension lying over pi.
    """
    n = prime.residue_norm
    if not prime.is_split:
        raise BadReduction("character values are evaluated at split primes")
    if (6 * curve.d) % n == 0:
        raise BadReduction(f"prime of norm {n} divides 6*d")
    unit = sextic_symbol(EisensteinInt.from_int(4 * curve.d), prime).inverse()
    base = unit.as_eisenstein() * prime.pi
    return HeckeValue(base**inertia_degree, prime, inertia_degree)


def in_order(value: HeckeValue | EisensteinInt, membership: OrderMembership) -> bool:
    """Whether u + v*omega lies in Z + l^k * Z[omega], i.e. l^k divides v."""
    z = value.value if isinstance(value, HeckeValue) else value
    return z.y % (membership.l**membership.k) == 0


def frobenius_trace(curve: CurveModel, p: int) -> int:
    """a_p = p + 1 - #E(F_p) by direct point counting."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if (6 * curve.d) % p == 0:
        raise BadReduction(f"{p} divides 6*d")
    squares: dict[int, int] = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    count = 1  # point at infinity
    for x in range(p):
        count += squares.get((x * x * x + curve.d) % p, 0)
    return p + 1 - count


@dataclass(frozen=True)
class M3Certificate:
    """A split prime whose character value escapes Z + 3*Z[omega].

    The chain: p splits in Z[omega]; lambda is a cube mod p, so primes above
    p split completely in the cubic Kummer extension cut out by lambda and
    keep inertia degree 1; 4d is not a cube mod p, so the sextic symbol of
    4d is not +-1 and psi = (4d/pi)_6^{-1} * pi has omega-coefficient
    nonzero mod 3.
    """

    prime: int
    pi: EisensteinInt
    inertia_degree: int
    lam: Fraction
    lambda_symbol: SexticUnit
    four_d_symbol: SexticUnit
    hecke_value: EisensteinInt
    membership: OrderMembership
    member: bool

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "pi": [self.pi.x, self.pi.y],
            "inertia_degree": self.inertia_degree,
            "lambda": [self.lam.numerator, self.lam.denominator],
            "lambda_cubic_symbol_exponent": self.lambda_symbol.k,
            "four_d_cubic_symbol_exponent": self.four_d_symbol.k,
            "hecke_value": [self.hecke_value.x, self.hecke_value.y],
            "order": [self.membership.l, self.membership.k],
            "in_order": self.member,
        }


def find_m3_witness(
    curve: CurveModel, lam: LambdaChoice | Fraction, bound: int = 100_000
) -> M3Certificate:
    """Smallest split prime p <= bound certifying m(3) = 0.

    Scans p == 1 mod 3 with p coprime to 6*d and to lambda, requiring
    lambda to be a cube mod p while 4d is not.  Requires 4d not a rational
    cube, otherwise no such prime exists.
    """
    lam = lam.value if isinstance(lam, LambdaChoice) else Fraction(lam)
    if lam == 0:
        raise ZeroInput("lambda must be nonzero")
    d4 = 4 * curve.d
    if is_cube(d4):
        raise CubeCase("4d is a rational cube; the symbol of 4d is always trivial")
    num, den = lam.numerator, lam.denominator
    skip = abs(6 * curve.d * num * den)
    for p in primerange(5, bound + 1):
        if p % 3 != 1 or skip % p == 0:
            continue
        e = (p - 1) // 3
        if pow(num * pow(den, -1, p), e, p) != 1:
            continue
        if pow(d4, e, p) == 1:
            continue
        prime = split_prime(p)
        assert isinstance(prime, PrimaryPrime)
        # lambda cleared of denominators: num*den^2 differs from lambda by a cube
        lam_sym = cubic_symbol(EisensteinInt.from_int(num * den * den), prime)
        d4_sym = cubic_symbol(EisensteinInt.from_int(d4), prime)
        assert lam_sym.is_one and not d4_sym.is_one
        psi = hecke_at_split_prime(curve, prime)
        membership = OrderMembership(3, 1)
        member = in_order(psi, membership)
        assert not member, "nontrivial unit times a primary prime cannot lie in Z + 3Z[omega]"
        return M3Certificate(
            prime=p,
            pi=prime.pi,
            inertia_degree=1,
            lam=lam,
            lambda_symbol=lam_sym,
            four_d_symbol=d4_sym,
            hecke_value=psi.value,
            membership=membership,
            member=member,
        )
    raise WitnessNotFound(f"no witness prime below {bound}")
