"""Request and response schemas for the HTTP service.

Field names follow the stable JSON report schema; ``lambda`` is a Python
keyword, so the scan models carry it via an alias.  All numbers are exact
integers or integer pairs; rationals travel as [numerator, denominator]
and evaluation values as the strings "0" and "1/2".
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator


class ClassifyRequest(BaseModel):
    a: int
    b: int
    c: int
    bound: int = Field(default=100_000, ge=7)
    assume_surface_soluble: bool = False


class ClassifyResponse(BaseModel):
    triple: list[int]
    D: int
    br_ExE: str | None
    br_CxC: str | None
    br_Y: str | None
    m3_witness: int | None
    local_solubility: dict[str, bool]
    obstruction: str
    notes: list[str]


class HeckeScanRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    D: int
    lam: str = Field(alias="lambda", description="rational as 'num/den' or 'num'")
    bound: int = Field(default=100_000, ge=7)


class CertificateModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    prime: int
    pi: list[int]
    inertia_degree: int
    lam: list[int] = Field(alias="lambda")
    lambda_cubic_symbol_exponent: int
    four_d_cubic_symbol_exponent: int
    hecke_value: list[int]
    order: list[int]
    in_order: bool


class HeckeScanResponse(BaseModel):
    witness: int
    certificate: CertificateModel


class LatticeH1Request(BaseModel):
    cm: list[int] | None = Field(
        default=None, description="[c, d] for the order with x^2 + c x + d = 0"
    )

    @field_validator("cm")
    @classmethod
    def _two_entries(cls, v: list[int] | None) -> list[int] | None:
        if v is not None and len(v) != 2:
            raise ValueError("cm must be a pair [c, d]")
        return v


class LatticeH1Response(BaseModel):
    dimension: int
    kernel_rank: int
    image_rank: int
    invariant_factors: list[int]
    trivial: bool


class VerifyA2Response(BaseModel):
    ok: bool


class SolubilityRequest(BaseModel):
    a: int
    b: int
    c: int
    place: str = Field(
        default="all", description="'all', 'infinity', or a prime written in decimal"
    )


class SolubilityResponse(BaseModel):
    triple: list[int]
    places: dict[str, bool]
    soluble: bool


class ResidueSymbolRequest(BaseModel):
    alpha: list[int] = Field(description="[x, y] for x + y*omega")
    prime: int
    degree: int

    @field_validator("alpha")
    @classmethod
    def _two_entries(cls, v: list[int]) -> list[int]:
        if len(v) != 2:
            raise ValueError("alpha must be a pair [x, y]")
        return v

    @field_validator("degree")
    @classmethod
    def _three_or_six(cls, v: int) -> int:
        if v not in (3, 6):
            raise ValueError("degree must be 3 or 6")
        return v


class ResidueSymbolResponse(BaseModel):
    prime: int
    pi: list[int]
    residue_norm: int
    degree: int
    exponent: int = Field(description="k with symbol value (-omega)^k")
    unit: list[int]


class EvaluateBetaRequest(BaseModel):
    precision: int = Field(default=8, ge=3, le=12)


class PointClassModel(BaseModel):
    infinity: bool
    x: int | None = None
    y: int | None = None


class BetaWitnessModel(BaseModel):
    value: str
    first: PointClassModel
    second: PointClassModel


class EvaluateBetaResponse(BaseModel):
    precision: int
    image: list[str]
    surjective: bool
    witnesses: list[BetaWitnessModel]


class BatchRequest(BaseModel):
    triples: list[list[int]]
    bound: int = Field(default=100_000, ge=7)
    assume_surface_soluble: bool = False
    jobs: int | None = Field(default=None, ge=1, le=64)

    @field_validator("triples")
    @classmethod
    def _rows_of_three(cls, v: list[list[int]]) -> list[list[int]]:
        for row in v:
            if len(row) != 3:
                raise ValueError("each triple must have exactly three entries")
        return v


class BatchRowError(BaseModel):
    code: str
    message: str


class BatchRowResult(BaseModel):
    report: ClassifyResponse | None = None
    error: BatchRowError | None = None


class BatchResponse(BaseModel):
    rows: list[BatchRowResult]


class ErrorResponse(BaseModel):
    code: str
    message: str


class HealthResponse(BaseModel):
    name: str
    version: str
