"""Top-level classification of the transcendental Brauer group.

For a primitive triple (a, b, c) with abc not a rational cube, the diagonal
cubic a x^3 + b y^3 + c z^3 = 0 has Jacobian y^2 = x^3 + D with
D = -2^4 3^3 (abc)^2, and the transcendental Brauer groups of the curve
square and of the attached Kummer surface coincide: Z/2 exactly when 4abc
is a rational cube, trivial otherwise.  The self-product of the Jacobian
has the finer three-way classification by cube conditions on D and 4D.
The report assembles the groups, the m(3) = 0 witness certificate, local
solubility of the curve, and the obstruction verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .cubeclass import PrimitiveTriple, choose_lambda, is_cube
from .errors import CubeCase, ZeroD
from .hecke import CurveModel, M3Certificate, find_m3_witness, jacobian_coefficient
from .localarith import (
    INFINITE_PLACE,
    Place,
    beta_surjective_at_2,
    diagonal_cubic_soluble,
)

Rational = int | Fraction


class BrauerGroup(Enum):
    """Transcendental Brauer quotient: trivial, order 2, or order 3."""

    TRIVIAL = "0"
    Z2 = "Z/2"
    Z3 = "Z/3"

    @property
    def tag(self) -> str:
        return self.value


class Verdict(Enum):
    """Outcome of the obstruction analysis."""

    NO_OBSTRUCTION = "NoObstruction"
    CUBE_CASE_DESCENT = "CubeCaseDescent"
    NOT_APPLICABLE = "NotApplicable"


def brauer_of_jacobian_square(d: Rational) -> BrauerGroup:
    """Transcendental Brauer group of the self-product of y^2 = x^3 + d.

    Z/2 when d is a rational cube, Z/3 when 4d is, trivial otherwise.  The
    two cube conditions are exclusive: if both held, their ratio 4 would be
    a cube.
    """
    if d == 0:
        raise ZeroD("the model y^2 = x^3 + d requires d != 0")
    if is_cube(d):
        return BrauerGroup.Z2
    if is_cube(4 * d):
        return BrauerGroup.Z3
    return BrauerGroup.TRIVIAL


@dataclass(frozen=True)
class CurveSquareResult:
    """Group of the curve square plus the witness certificate when requested."""

    group: BrauerGroup
    certificate: M3Certificate | None

    @property
    def m3_witness(self) -> int | None:
        return None if self.certificate is None else self.certificate.prime


def brauer_of_curve_square(
    t: PrimitiveTriple, *, certify: bool = True, bound: int = 100_000
) -> CurveSquareResult:
    """Transcendental Brauer group of C x C for C: a x^3 + b y^3 + c z^3 = 0.

    Requires abc not a rational cube.  The group is Z/2 when 4abc is a
    rational cube and trivial otherwise; the 2-primary answer is determined
    by the cube condition alone, while ruling out 3-torsion rests on the
    m(3) = 0 certificate, attached when ``certify`` is set.
    """
    abc = t.product()
    if is_cube(abc):
        raise CubeCase("abc is a rational cube; the classification assumes otherwise")
    group = BrauerGroup.Z2 if is_cube(4 * abc) else BrauerGroup.TRIVIAL
    certificate = None
    if certify:
        lam = choose_lambda(t)
        certificate = find_m3_witness(CurveModel(jacobian_coefficient(t)), lam, bound)
    return CurveSquareResult(group, certificate)


def brauer_of_kummer_surface(
    t: PrimitiveTriple, *, certify: bool = True, bound: int = 100_000
) -> CurveSquareResult:
    """Transcendental Brauer group of the Kummer surface attached to the curve.

    Equal to the group of the curve square: the quotient-and-resolve
    construction changes nothing away from 3, and the 3-part vanishes on
    both sides.
    """
    return brauer_of_curve_square(t, certify=certify, bound=bound)


def cube_case_consistency(t: PrimitiveTriple) -> bool:
    """Check the two cube-condition equivalences linking the curve and its
    Jacobian: D = -2^4 3^3 (abc)^2 is a cube iff 4abc is, and 4D is a cube
    iff abc is.  Both hold identically; a False return would be a bug.
    """
    abc = t.product()
    d = jacobian_coefficient(t)
    return (is_cube(d) == is_cube(4 * abc)) and (is_cube(4 * d) == is_cube(abc))


def solubility_places(t: PrimitiveTriple) -> tuple[Place, ...]:
    """The places where local solubility of the curve needs checking: the
    real place, 2, 3, and every prime dividing abc (everywhere else a
    smooth plane cubic has points by the Hasse-Weil bound)."""
    primes = {2, 3}
    for entry in (t.a, t.b, t.c):
        n = entry
        for p in (2, 3):
            while n % p == 0:
                n //= p
        f = 5
        while f * f <= n:
            if n % f == 0:
                primes.add(f)
                while n % f == 0:
                    n //= f
            f += 2
        if n > 1:
            primes.add(n)
    return (INFINITE_PLACE, *sorted(primes))


@dataclass(frozen=True)
class ClassificationReport:
    """Full classification output with a stable JSON rendering."""

    triple: PrimitiveTriple
    D: int
    br_ExE: BrauerGroup | None
    br_CxC: BrauerGroup | None
    br_Y: BrauerGroup | None
    m3_witness: int | None
    local_solubility: Mapping[str, bool]
    obstruction: Verdict
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "triple": list(self.triple.as_tuple()),
            "D": self.D,
            "br_ExE": None if self.br_ExE is None else self.br_ExE.tag,
            "br_CxC": None if self.br_CxC is None else self.br_CxC.tag,
            "br_Y": None if self.br_Y is None else self.br_Y.tag,
            "m3_witness": self.m3_witness,
            "local_solubility": dict(self.local_solubility),
            "obstruction": self.obstruction.value,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationReport":
        def group(tag: str | None) -> BrauerGroup | None:
            return None if tag is None else BrauerGroup(tag)

        return cls(
            triple=PrimitiveTriple(*data["triple"]),
            D=data["D"],
            br_ExE=group(data["br_ExE"]),
            br_CxC=group(data["br_CxC"]),
            br_Y=group(data["br_Y"]),
            m3_witness=data["m3_witness"],
            local_solubility=dict(data["local_solubility"]),
            obstruction=Verdict(data["obstruction"]),
            notes=tuple(data["notes"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ClassificationReport":
        return cls.from_dict(json.loads(text))


_ALGEBRAIC_PART_NOTE = (
    "the algebraic Brauer group of the surface is assumed to consist of "
    "constant classes only; the report covers the transcendental quotient"
)
_THREE_PRIMARY_NOTE = (
    "3-torsion is excluded on two counts: 4D is a cube only when abc is, "
    "and the m(3) = 0 certificate (witness prime in m3_witness) shows a "
    "character value outside Z + 3Z[omega]"
)
_CUBE_CASE_NOTE = (
    "abc is a rational cube: the classification assumes otherwise, and "
    "curves of this shape are settled by an infinite descent argument "
    "instead of a Brauer group computation"
)
_SURJECTIVITY_NOTE = (
    "the order-2 class evaluates onto both values on 2-adic point pairs of "
    "the reference model y^2 = x^3 - 27, so it obstructs nothing"
)
_CONDITIONAL_NOTE = (
    "conditional on Skorobogatov's conjecture (the Brauer-Manin obstruction "
    "is the only obstruction on K3 surfaces): no obstruction implies the "
    "surface has a rational point and the curve a Galois cubic point"
)


def full_report(
    t: PrimitiveTriple,
    *,
    bound: int = 100_000,
    assume_surface_soluble: bool = False,
) -> ClassificationReport:
    """Classify, certify, test local solubility, and render the verdict.

    When abc is a cube the verdict is CubeCaseDescent and no groups are
    computed.  Otherwise the three Brauer groups and the witness prime are
    attached; the verdict is NoObstruction when the curve is soluble at
    every tested place (an order-2 class is additionally checked to
    evaluate surjectively at 2), and NotApplicable when local solubility
    fails and is not asserted by the caller, since solubility of the
    surface itself -- a weaker condition -- is not tested directly.
    """
    d = jacobian_coefficient(t)
    notes: list[str] = []
    if is_cube(t.product()):
        return ClassificationReport(
            triple=t,
            D=d,
            br_ExE=None,
            br_CxC=None,
            br_Y=None,
            m3_witness=None,
            local_solubility={},
            obstruction=Verdict.CUBE_CASE_DESCENT,
            notes=(_CUBE_CASE_NOTE,),
        )

    jacobian_group = brauer_of_jacobian_square(d)
    curve_result = brauer_of_curve_square(t, certify=True, bound=bound)
    surface_result = curve_result  # the surface group equals the curve-square group
    notes.append(_ALGEBRAIC_PART_NOTE)
    notes.append(_THREE_PRIMARY_NOTE)

    solubility = {
        str(place): diagonal_cubic_soluble(t, place) for place in solubility_places(t)
    }
    failing = [place for place, ok in solubility.items() if not ok]

    if failing and not assume_surface_soluble:
        verdict = Verdict.NOT_APPLICABLE
        notes.append(
            "the curve has no local points at "
            + ", ".join(failing)
            + "; solubility of the surface (a weaker condition) is not tested "
            "directly, so the verdict is withheld -- pass "
            "assume_surface_soluble to assert it"
        )
    else:
        if failing:
            notes.append(
                "surface-level local solubility asserted by the caller; the "
                "curve itself has no local points at " + ", ".join(failing)
            )
        if surface_result.group is BrauerGroup.Z2:
            if beta_surjective_at_2():
                verdict = Verdict.NO_OBSTRUCTION
                notes.append(_SURJECTIVITY_NOTE)
            else:  # pragma: no cover - the evaluation map is surjective
                verdict = Verdict.NOT_APPLICABLE
                notes.append("order-2 evaluation did not reach both values")
        else:
            verdict = Verdict.NO_OBSTRUCTION
        if verdict is Verdict.NO_OBSTRUCTION:
            notes.append(_CONDITIONAL_NOTE)

    return ClassificationReport(
        triple=t,
        D=d,
        br_ExE=jacobian_group,
        br_CxC=curve_result.group,
        br_Y=surface_result.group,
        m3_witness=curve_result.m3_witness,
        local_solubility=solubility,
        obstruction=verdict,
        notes=tuple(notes),
    )
