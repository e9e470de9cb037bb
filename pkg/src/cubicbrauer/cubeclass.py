"""Cube classes in Q*/(Q*)^3 and the lambda selection for diagonal cubics.

A nonzero rational q is recorded by the exponents of its cube-free part,
a map {prime: e} with e in {1, 2}.  Signs are absorbed: -1 = (-1)^3 is a
cube, so q and -q land in the same class.  1/p is equivalent to p^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import factorint, integer_nthroot

from .errors import CubeCase, ZeroCoefficient, ZeroInput

Rational = int | Fraction

# A class in Q*/(Q*)^3: {prime: exponent} with exponents in {1, 2}, empty
# exactly for cubes.  Multiplication is componentwise addition mod 3.
CubeClass = dict[int, int]


@dataclass(frozen=True)
class PrimitiveTriple:
    """Coefficients of a x^3 + b y^3 + c z^3 = 0, positive and coprime."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ZeroCoefficient("triple entries must be positive after normalization")

    def product(self) -> int:
        return self.a * self.b * self.c

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class LambdaChoice:
    """A ratio of two triple entries with abc != lambda and abc != lambda^2
    in Q*/(Q*)^3, reduced to lowest terms."""

    numerator: int
    denominator: int
    source: str  # one of "a/b", "b/c", "c/a"

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def normalize_triple(a: int, b: int, c: int) -> PrimitiveTriple:
    """Divide out the gcd and make all entries positive.

    Negating a coefficient multiplies it by the cube (-1)^3, so solubility
    and all cube classes are unchanged.
    """
    if a == 0 or b == 0 or c == 0:
        raise ZeroCoefficient("coefficients must be nonzero")
    a, b, c = abs(a), abs(b), abs(c)
    g = gcd(gcd(a, b), c)
    return PrimitiveTriple(a // g, b // g, c // g)


@lru_cache(maxsize=65536)
def _cubefree_exponents(n: int) -> tuple[tuple[int, int], ...]:
    # n positive; exponents of the cube-free part, sorted by prime
    items = []
    for p, e in sorted(factorint(n).items()):
        r = e % 3
        if r:
            items.append((p, r))
    return tuple(items)


def cube_class(q: Rational) -> CubeClass:
    """The class of q in Q*/(Q*)^3 as {prime: exponent} with exponents in {1,2}.

    >>> cube_class(12)
    {2: 2, 3: 1}
    >>> cube_class(Fraction(1, 2))
    {2: 2}
    """
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("0 has no cube class")
    cls: dict[int, int] = {}
    for p, e in _cubefree_exponents(abs(q.numerator)):
        cls[p] = e
    for p, e in _cubefree_exponents(q.denominator):
        # 1/p ~ p^2
        e = (cls.get(p, 0) - e) % 3
        if e:
            cls[p] = e
        else:
            cls.pop(p, None)
    return dict(sorted(cls.items()))


def is_cube(q: Rational) -> bool:
    """True iff q is a rational cube (sign ignored: -x^3 = (-x)^3)."""
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("0 is excluded")
    for n in (abs(q.numerator), q.denominator):
        _, exact = integer_nthroot(n, 3)
        if not exact:
            return False
    return True


def _same_class(x: Rational, y: Rational) -> bool:
    return is_cube(Fraction(x) / Fraction(y))


def choose_lambda(t: PrimitiveTriple) -> LambdaChoice:
    """Pick lambda in {a/b, b/c, c/a} with abc != lambda and abc != lambda^2
    modulo cubes.  Requires abc not a cube.

    The three candidate conditions reduce to cube tests on b^2*c and a^2*c:
    abc ~ a/b iff b^2*c ~ 1, and abc ~ (a/b)^2 iff a^2*c ~ 1.  Since abc is
    not a cube the two cannot both hold, and each failure forces the next
    candidate to work.
    """
    a, b, c = t.a, t.b, t.c
    if is_cube(a * b * c):
        raise CubeCase("abc is a rational cube; no valid lambda exists")
    b2c_cube = is_cube(b * b * c)
    a2c_cube = is_cube(a * a * c)
    if not b2c_cube and not a2c_cube:
        num, den, source = a, b, "a/b"
    elif b2c_cube:
        num, den, source = b, c, "b/c"
    else:
        num, den, source = c, a, "c/a"
    f = Fraction(num, den)
    return LambdaChoice(f.numerator, f.denominator, source)
