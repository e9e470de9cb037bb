"""Local arithmetic: Hilbert symbols, p-adic cube tests, solubility of
diagonal cubics, and evaluation of the quaternion class on 2-adic points.

Everything is exact.  p-adic numbers appear only as residues modulo an
explicit power of p together with enough Hensel slack to make every
reported digit correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime

from .cubeclass import PrimitiveTriple, Rational
from .errors import (
    BadReduction,
    DepthExceeded,
    NotCoprime,
    PrecisionTooLow,
    UnsupportedPlace,
    ZeroD,
    ZeroInput,
)

INFINITE_PLACE = "infinity"
Place = int | str


def _check_place(place: Place) -> Place:
    if place == INFINITE_PLACE or place == "oo":
        return INFINITE_PLACE
    if isinstance(place, int) and isprime(place):
        return place
    raise UnsupportedPlace(f"{place!r} is not a prime or the infinite place")


def _val_unit(q: Fraction, p: int) -> tuple[int, Fraction]:
    # q = p^v * unit with unit a p-adic unit
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _legendre_unit(u: Fraction, p: int) -> int:
    # quadratic character of a p-adic unit written as a fraction
    r = (u.numerator * pow(u.denominator, -1, p)) % p
    s = pow(r, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def _unit_mod(u: Fraction, p_power: int) -> int:
    return (u.numerator * pow(u.denominator, -1, p_power)) % p_power


def hilbert_symbol(a: Rational, b: Rational, place: Place) -> int:
    """(a, b)_v in {1, -1}: whether z^2 = a x^2 + b y^2 has a nonzero
    local solution."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroInput("Hilbert symbol arguments must be nonzero")
    place = _check_place(place)
    if place == INFINITE_PLACE:
        return -1 if a < 0 and b < 0 else 1
    p = place
    alpha, u = _val_unit(a, p)
    beta, v = _val_unit(b, p)
    if p != 2:
        sign = 1
        if (alpha * beta) % 2 == 1 and (p - 1) // 2 % 2 == 1:
            sign = -sign
        if beta % 2 == 1 and _legendre_unit(u, p) == -1:
            sign = -sign
        if alpha % 2 == 1 and _legendre_unit(v, p) == -1:
            sign = -sign
        return sign
    u8, v8 = _unit_mod(u, 8), _unit_mod(v, 8)
    eps_u, eps_v = (u8 - 1) // 2 % 2, (v8 - 1) // 2 % 2
    om_u, om_v = (u8 * u8 - 1) // 8 % 2, (v8 * v8 - 1) // 8 % 2
    exponent = eps_u * eps_v + alpha * om_v + beta * om_u
    return -1 if exponent % 2 else 1


def is_cube_in_zp(t: Rational, p: int, depth: int = 8) -> bool:
    """Whether the p-adic unit t is a cube in Z_p.

    A candidate x certifies via v(x^3 - t) > 2 v(3 x^2), so the decision is
    complete once residues mod p^(1 + 2 v_p(3)) are searched: mod 27 at
    p = 3, mod p elsewhere.  Every unit of Z_2 is a cube.
    """
    if depth < 1:
        raise DepthExceeded("depth must be at least 1")
    t = Fraction(t)
    if t == 0:
        raise ZeroInput("0 is not a unit")
    if not isprime(p):
        raise UnsupportedPlace(f"{p} is not prime")
    v, unit = _val_unit(t, p)
    if v != 0:
        raise NotCoprime(f"{t} is not a p-adic unit at {p}")
    threshold = 1 + 2 * _vp(3, p)
    if depth < threshold:
        raise DepthExceeded(f"undecidable below residue depth {threshold}")
    if p == 2:
        return True
    if p == 3:
        r = _unit_mod(unit, 27)
        return any(pow(x, 3, 27) == r for x in range(27))
    if p % 3 == 2:
        return True  # cubing permutes the units
    r = _unit_mod(unit, p)
    return pow(r, (p - 1) // 3, p) == 1


def _vp(n: int, p: int) -> int:
    if n == 0:
        return 1 << 62
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def diagonal_cubic_soluble(t: PrimitiveTriple, place: Place) -> bool:
    """Whether a x^3 + b y^3 + c z^3 = 0 has a nontrivial solution over the
    completion at the given place.

    Real points always exist.  For p coprime to 3abc the reduction is a
    smooth plane cubic, which has a smooth F_p-point by Hasse-Weil, and it
    lifts.  Otherwise a lifting tree over (Z/p^j)^3 is searched, accepting a
    residue once v(f) > 2 v(df/dx_i) for some coordinate; depth
    1 + 2 v_p(3) + 2 max_i v_p(coeff_i) is enough to find the truncation of
    any genuine point.
    """
    place = _check_place(place)
    if place == INFINITE_PLACE:
        return True
    p = place
    a, b, c = t.a, t.b, t.c
    if (3 * a * b * c) % p != 0:
        return True
    vals = (_vp(a, p), _vp(b, p), _vp(c, p))
    depth = 1 + 2 * _vp(3, p) + 2 * max(vals)

    def f(x, y, z):
        return a * x**3 + b * y**3 + c * z**3

    def accepted(x, y, z) -> bool:
        w = f(x, y, z)
        vf = _vp(w, p)
        for coeff, coord in ((a, x), (b, y), (c, z)):
            dv = _vp(3 * coeff * coord * coord, p)
            if vf > 2 * dv:
                return True
        return False

    survivors = []
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if (x, y, z) == (0, 0, 0) or f(x, y, z) % p != 0:
                    continue
                if accepted(x, y, z):
                    return True
                survivors.append((x, y, z))
    modulus = p
    for level in range(2, depth + 1):
        step = modulus
        modulus *= p
        nxt = []
        for sx, sy, sz in survivors:
            for dx in range(p):
                x = sx + dx * step
                for dy in range(p):
                    y = sy + dy * step
                    for dz in range(p):
                        z = sz + dz * step
                        if f(x, y, z) % modulus != 0:
                            continue
                        if accepted(x, y, z):
                            return True
                        nxt.append((x, y, z))
        survivors = nxt
        if not survivors:
            return False
    return False


# -- 2-adic points on y^2 = x^3 + d ----------------------------------------


@dataclass(frozen=True)
class PadicApprox:
    """A residue class value + O(p^precision)."""

    p: int
    precision: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % (self.p**self.precision))

    @property
    def valuation(self) -> int:
        # capped at the working precision
        return min(_vp(self.value, self.p), self.precision)

    def refine_of(self, coarser: "PadicApprox") -> bool:
        return (
            self.p == coarser.p
            and self.precision >= coarser.precision
            and self.value % (self.p**coarser.precision) == coarser.value
        )


@dataclass(frozen=True)
class CurvePointApprox:
    """A residue class of E(Q_p) points on y^2 = x^3 + d, or the origin."""

    d: int
    infinity: bool
    x: PadicApprox | None = None
    y: PadicApprox | None = None

    @classmethod
    def origin(cls, d: int) -> "CurvePointApprox":
        return cls(d, True)

    @classmethod
    def affine(cls, d: int, p: int, precision: int, x: int, y: int) -> "CurvePointApprox":
        return cls(d, False, PadicApprox(p, precision, x), PadicApprox(p, precision, y))


def _odd_sqrt(u: int, bits: int) -> int:
    # the root of y^2 == u mod 2^bits with y == 1 mod 4; needs u == 1 mod 8
    y = 1
    for m in range(3, bits):
        if ((y * y - u) >> m) & 1:
            y |= 1 << (m - 1)
    return y


@lru_cache(maxsize=32)
def enumerate_curve_points(d: int, p: int = 2, precision: int = 8) -> tuple[CurvePointApprox, ...]:
    """All residue classes mod p^precision containing a point of E(Q_p) with
    integral coordinates, plus the origin.

    Supported at p = 2 with d odd.  Classes are found by subdividing in x:
    a class is kept once w = x^3 + d is an exact square unit times an even
    power of 2 with enough known digits, and the branch converging to a
    2-adic root of x^3 + d collapses to the 2-torsion class (x, 0).
    """
    if p != 2:
        raise UnsupportedPlace("only the 2-adic enumeration is supported")
    if d == 0:
        raise ZeroD("d must be nonzero")
    if d % 2 == 0:
        raise BadReduction("an odd d is required at p = 2")
    if precision < 3:
        raise PrecisionTooLow("precision must be at least 3")
    k = precision
    mod_k = 1 << k
    found: set[tuple[int, int]] = set()

    def explore(x: int, j: int):
        w = x**3 + d
        a = _vp(w, 2)
        if a >= j and j >= 2 * k:
            # the branch hugs the 2-adic root of x^3 + d (cubing is a
            # bijection on odd units, so the root exists): at this depth
            # every nearby point has y == 0 mod 2^k
            found.add((x % mod_k, 0))
            return
        if a + 3 <= j and j >= k + a // 2 + 1:
            if a % 2 == 0 and ((w >> a) & 7) == 1:
                root = _odd_sqrt(w >> a, k + 2) << (a // 2)
                found.add((x % mod_k, root % mod_k))
                found.add((x % mod_k, (-root) % mod_k))
            return
        explore(x, j + 1)
        explore(x + (1 << j), j + 1)

    for x0 in range(mod_k):
        explore(x0, k)
    points = [CurvePointApprox.origin(d)]
    for x, y in sorted(found):
        points.append(CurvePointApprox.affine(d, 2, k, x, y))
    return tuple(points)


BETA_D = -27


def _beta_slot(point: CurvePointApprox) -> int:
    # x - 3 when its 2-adic valuation is resolved, else the complementary
    # factor x^2 + 3x + 9 of x^3 - 27, which is always odd
    k = point.x.precision
    xv = point.x.value
    t = xv - 3
    if t != 0 and _vp(t, 2) < k / 2:
        if _vp(t, 2) + 3 > k:
            raise PrecisionTooLow("unit part of x - 3 is not determined")
        return t
    return xv * xv + 3 * xv + 9


def evaluate_beta(pt1: CurvePointApprox, pt2: CurvePointApprox) -> Fraction:
    """The local invariant at 2 of the quaternion class on a pair of points
    of y^2 = x^3 - 27: 0 if split, 1/2 if ramified.

    The class is (x - 3, u - 3); on points where x - 3 degenerates it is
    rewritten through the square y^2 = (x - 3)(x^2 + 3x + 9).  The origin
    evaluates to 0.
    """
    for pt in (pt1, pt2):
        if pt.d != BETA_D:
            raise ValueError("the class is attached to y^2 = x^3 - 27")
    if pt1.infinity or pt2.infinity:
        return Fraction(0)
    g1, g2 = _beta_slot(pt1), _beta_slot(pt2)
    return Fraction(0) if hilbert_symbol(g1, g2, 2) == 1 else Fraction(1, 2)


def beta_image(precision: int = 8) -> dict[Fraction, tuple[CurvePointApprox, CurvePointApprox]]:
    """The image of the evaluation over all enumerated pairs, with one
    witnessing pair per value."""
    points = enumerate_curve_points(BETA_D, 2, precision)
    image: dict[Fraction, tuple[CurvePointApprox, CurvePointApprox]] = {}
    for p1 in points:
        for p2 in points:
            value = evaluate_beta(p1, p2)
            if value not in image:
                image[value] = (p1, p2)
                if len(image) == 2:
                    return image
    return image


def beta_surjective_at_2(precision: int = 8) -> bool:
    """Whether the evaluation attains both 0 and 1/2 on 2-adic points."""
    return set(beta_image(precision)) == {Fraction(0), Fraction(1, 2)}
