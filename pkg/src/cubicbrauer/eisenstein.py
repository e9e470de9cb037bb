"""Arithmetic in Z[omega], omega^2 + omega + 1 = 0, and power residue symbols.

Primes are normalized to the primary generator pi == 1 (mod 3).  The cubic
symbol of alpha at pi is the unique cube root of unity congruent to
alpha^((N(pi)-1)/3) mod pi, and the sextic symbol is the unique sixth root
congruent to alpha^((N(pi)-1)/6).  Sixth roots of unity are encoded as
powers of -omega.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import BadResidueNorm, NotCoprime, NotCoprimeToThree, NotPrime


@dataclass(frozen=True)
class EisensteinInt:
    """x + y*omega with integer x, y."""

    x: int
    y: int

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.x, -self.y)

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":
        # omega^2 = -1 - omega
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        return EisensteinInt(x1 * x2 - y1 * y2, x1 * y2 + y1 * x2 - y1 * y2)

    def __pow__(self, n: int) -> "EisensteinInt":
        if n < 0:
            raise ValueError("negative powers are not defined in Z[omega]")
        result = EisensteinInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "EisensteinInt":
        # omega-bar = omega^2 = -1 - omega
        return EisensteinInt(self.x - self.y, -self.y)

    def norm(self) -> int:
        return self.x * self.x - self.x * self.y + self.y * self.y

    def trace(self) -> int:
        return 2 * self.x - self.y

    @classmethod
    def from_int(cls, n: int) -> "EisensteinInt":
        return cls(n, 0)


ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)

#: the six units, indexed so UNITS[k] = (-omega)^k
UNITS = (
    EisensteinInt(1, 0),
    EisensteinInt(0, -1),
    EisensteinInt(-1, -1),
    EisensteinInt(-1, 0),
    EisensteinInt(0, 1),
    EisensteinInt(1, 1),
)


@dataclass(frozen=True)
class SexticUnit:
    """A sixth root of unity (-omega)^k, k mod 6.

    The cube roots of unity are the even exponents: 1, omega^2, omega at
    k = 0, 2, 4.  Squaring a sextic symbol yields the cubic symbol.
    """

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 6)

    def __mul__(self, other: "SexticUnit") -> "SexticUnit":
        return SexticUnit(self.k + other.k)

    def inverse(self) -> "SexticUnit":
        return SexticUnit(-self.k)

    def square(self) -> "SexticUnit":
        return SexticUnit(2 * self.k)

    @property
    def is_one(self) -> bool:
        return self.k == 0

    def as_eisenstein(self) -> EisensteinInt:
        return UNITS[self.k]


def norm(z: EisensteinInt) -> int:
    return z.norm()


def primary_associate(z: EisensteinInt) -> EisensteinInt:
    """The unique unit multiple of z congruent to 1 mod 3.

    The six units reduce to the six distinct residues of (Z[omega]/3)^*, so
    exactly one associate works whenever gcd(N(z), 3) = 1.
    """
    if z.norm() % 3 == 0:
        raise NotCoprimeToThree("norm divisible by 3; no primary associate")
    for u in UNITS:
        w = u * z
        if (w.x - 1) % 3 == 0 and w.y % 3 == 0:
            return w
    raise AssertionError("unreachable: one associate must be primary")


class Splitting(enum.Enum):
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class PrimaryPrime:
    """A primary prime pi == 1 (mod 3) of Z[omega] with its residue norm."""

    pi: EisensteinInt
    residue_norm: int

    @property
    def is_split(self) -> bool:
        return isprime(self.residue_norm)


def _cornacchia_3(p: int) -> tuple[int, int]:
    # smallest-remainder descent solving a^2 + 3*b^2 = p for p == 1 mod 3
    from math import isqrt

    r = sqrt_mod(-3, p)
    if r is None:
        raise NotPrime(f"{p} admits no square root of -3")
    if r < p - r:
        r = p - r
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    s, exact = _isqrt_exact(rem // 3) if rem % 3 == 0 else (0, False)
    if not exact:
        raise NotPrime(f"Cornacchia descent failed for {p}")
    return b, s


def _isqrt_exact(n: int) -> tuple[int, bool]:
    from math import isqrt

    s = isqrt(n)
    return s, s * s == n


def split_prime(p: int) -> PrimaryPrime | Splitting:
    """Factor the rational prime p in Z[omega].

    p == 1 mod 3 splits; the primary generator of one prime above p is
    returned.  p == 2 mod 3 is inert and p = 3 is ramified.
    """
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 3:
        return Splitting.RAMIFIED
    if p % 3 == 2:
        return Splitting.INERT
    a, b = _cornacchia_3(p)
    # a^2 + 3b^2 = (a+b)^2 - (a+b)(2b) + (2b)^2
    z = EisensteinInt(a + b, 2 * b)
    assert z.norm() == p
    return PrimaryPrime(primary_associate(z), p)


def primary_above(p: int) -> PrimaryPrime:
    """A primary prime of Z[omega] above the unramified rational prime p."""
    result = split_prime(p)
    if result is Splitting.RAMIFIED:
        raise NotCoprimeToThree("3 ramifies; no primary prime above it")
    if result is Splitting.INERT:
        # -p == 1 mod 3 since p == 2 mod 3
        return PrimaryPrime(EisensteinInt(-p, 0), p * p)
    return result


def _omega_image(prime: PrimaryPrime) -> int:
    # split pi = u + v*omega: omega == -u/v in the degree-1 residue field
    p = prime.residue_norm
    u, v = prime.pi.x, prime.pi.y
    w = (-u * pow(v, -1, p)) % p
    assert (w * w + w + 1) % p == 0
    return w


def _residue_pow_split(alpha: EisensteinInt, prime: PrimaryPrime, e: int) -> int:
    p = prime.residue_norm
    w = _omega_image(prime)
    r = (alpha.x + alpha.y * w) % p
    if r == 0:
        raise NotCoprime("alpha lies in the prime ideal")
    return pow(r, e, p)


def _residue_pow_inert(alpha: EisensteinInt, q: int, e: int) -> EisensteinInt:
    # exponentiation in the field Z[omega]/q of q^2 elements
    a = EisensteinInt(alpha.x % q, alpha.y % q)
    if a.x == 0 and a.y == 0:
        raise NotCoprime("alpha lies in the prime ideal")
    result = EisensteinInt(1, 0)
    while e:
        if e & 1:
            m = result * a
            result = EisensteinInt(m.x % q, m.y % q)
        m = a * a
        a = EisensteinInt(m.x % q, m.y % q)
        e >>= 1
    return result


def _match_unit(prime: PrimaryPrime, value, allowed: tuple[int, ...]) -> SexticUnit:
    if prime.is_split:
        p = prime.residue_norm
        w = _omega_image(prime)
        for k in allowed:
            u = UNITS[k]
            if (u.x + u.y * w) % p == value:
                return SexticUnit(k)
    else:
        q = isqrt_of(prime.residue_norm)
        for k in allowed:
            u = UNITS[k]
            if (u.x % q, u.y % q) == (value.x, value.y):
                return SexticUnit(k)
    raise AssertionError("power residue is not the expected root of unity")


def isqrt_of(n: int) -> int:
    from math import isqrt

    return isqrt(n)


def cubic_symbol(alpha: EisensteinInt, prime: PrimaryPrime) -> SexticUnit:
    """The cubic residue symbol of alpha at a primary prime.

    Equals 1 exactly when alpha is a cube in the residue field.
    """
    n = prime.residue_norm
    if n % 3 != 1:
        raise BadResidueNorm(f"residue norm {n} is not 1 mod 3")
    e = (n - 1) // 3
    if prime.is_split:
        value = _residue_pow_split(alpha, prime, e)
    else:
        value = _residue_pow_inert(alpha, isqrt_of(n), e)
    return _match_unit(prime, value, (0, 2, 4))


def sextic_symbol(alpha: EisensteinInt, prime: PrimaryPrime) -> SexticUnit:
    """The sextic residue symbol of alpha at a primary prime.

    Its square is the cubic symbol.  Requires N(pi) == 1 mod 6, which
    excludes only the inert prime 2.
    """
    n = prime.residue_norm
    if n % 6 != 1:
        raise BadResidueNorm(f"residue norm {n} is not 1 mod 6")
    e = (n - 1) // 6
    if prime.is_split:
        value = _residue_pow_split(alpha, prime, e)
    else:
        value = _residue_pow_inert(alpha, isqrt_of(n), e)
    return _match_unit(prime, value, (0, 1, 2, 3, 4, 5))
