"""HTTP front end: one endpoint per computation, exact JSON in and out.

Domain failures (cube case, bad primes, precision too low, ...) map to
HTTP 400 with a machine-readable ``code``; schema violations are FastAPI's
usual 422.  The batch endpoint never fails row-wise: each row carries
either a report or an error object, in input order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..classify import ClassificationReport, full_report
from ..cubeclass import normalize_triple
from ..eisenstein import EisensteinInt, cubic_symbol, primary_above, sextic_symbol
from ..errors import DomainError, UnsupportedPlace, ZeroInput
from ..hecke import CurveModel, find_m3_witness
from ..localarith import beta_image, diagonal_cubic_soluble
from ..nslattice import cyclic_h1, rho_action, verify_a2_invariants
from ..classify import solubility_places
from .models import (
    BatchRequest,
    BatchResponse,
    BatchRowError,
    BatchRowResult,
    BetaWitnessModel,
    CertificateModel,
    ClassifyRequest,
    ClassifyResponse,
    EvaluateBetaRequest,
    EvaluateBetaResponse,
    HealthResponse,
    HeckeScanRequest,
    HeckeScanResponse,
    LatticeH1Request,
    LatticeH1Response,
    PointClassModel,
    ResidueSymbolRequest,
    ResidueSymbolResponse,
    SolubilityRequest,
    SolubilityResponse,
    VerifyA2Response,
)

DEFAULT_JOBS_ENV = "CUBICBRAUER_JOBS"


def _report_response(report: ClassificationReport) -> ClassifyResponse:
    return ClassifyResponse(**report.to_dict())


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ZeroInput(f"cannot read {text!r} as a rational") from exc


def _parse_place(text: str):
    text = text.strip()
    if text in ("infinity", "oo"):
        return "infinity"
    try:
        return int(text)
    except ValueError as exc:
        raise UnsupportedPlace(f"cannot read {text!r} as a place") from exc


def _batch_jobs(requested: int | None) -> int:
    if requested is not None:
        return requested
    env = os.environ.get(DEFAULT_JOBS_ENV, "")
    try:
        return max(1, min(64, int(env)))
    except ValueError:
        return 4


def create_app() -> FastAPI:
    app = FastAPI(
        title="cubicbrauer",
        version=__version__,
        description=(
            "Transcendental Brauer group classification for Kummer surfaces "
            "attached to diagonal cubic curves, with the supporting exact "
            "arithmetic: residue symbols, Hecke values, lattice cohomology, "
            "and local solubility."
        ),
    )

    @app.exception_handler(DomainError)
    async def _domain_error(_request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"code": exc.code, "message": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(name="cubicbrauer", version=__version__)

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest) -> ClassifyResponse:
        triple = normalize_triple(req.a, req.b, req.c)
        report = full_report(
            triple, bound=req.bound, assume_surface_soluble=req.assume_surface_soluble
        )
        return _report_response(report)

    @app.post("/hecke/scan", response_model=HeckeScanResponse)
    def hecke_scan(req: HeckeScanRequest) -> HeckeScanResponse:
        certificate = find_m3_witness(
            CurveModel(req.D), _parse_rational(req.lam), req.bound
        )
        return HeckeScanResponse(
            witness=certificate.prime,
            certificate=CertificateModel.model_validate(certificate.to_dict()),
        )

    @app.post("/lattice/h1", response_model=LatticeH1Response)
    def lattice_h1(req: LatticeH1Request) -> LatticeH1Response:
        cm = None if req.cm is None else (req.cm[0], req.cm[1])
        action = rho_action(cm)
        result = cyclic_h1(action)
        return LatticeH1Response(
            dimension=action.dim,
            kernel_rank=result.kernel_rank,
            image_rank=result.image_rank,
            invariant_factors=list(result.invariant_factors),
            trivial=result.is_trivial,
        )

    @app.get("/lattice/verify-a2", response_model=VerifyA2Response)
    def lattice_verify_a2() -> VerifyA2Response:
        return VerifyA2Response(ok=verify_a2_invariants())

    @app.post("/local/solubility", response_model=SolubilityResponse)
    def local_solubility(req: SolubilityRequest) -> SolubilityResponse:
        triple = normalize_triple(req.a, req.b, req.c)
        if req.place == "all":
            places = solubility_places(triple)
        else:
            places = (_parse_place(req.place),)
        results = {str(place): diagonal_cubic_soluble(triple, place) for place in places}
        return SolubilityResponse(
            triple=list(triple.as_tuple()),
            places=results,
            soluble=all(results.values()),
        )

    @app.post("/residue-symbol", response_model=ResidueSymbolResponse)
    def residue_symbol(req: ResidueSymbolRequest) -> ResidueSymbolResponse:
        prime = primary_above(req.prime)
        alpha = EisensteinInt(req.alpha[0], req.alpha[1])
        if req.degree == 3:
            unit = cubic_symbol(alpha, prime)
        else:
            unit = sextic_symbol(alpha, prime)
        value = unit.as_eisenstein()
        return ResidueSymbolResponse(
            prime=req.prime,
            pi=[prime.pi.x, prime.pi.y],
            residue_norm=prime.residue_norm,
            degree=req.degree,
            exponent=unit.k,
            unit=[value.x, value.y],
        )

    @app.post("/evaluate-beta", response_model=EvaluateBetaResponse)
    def evaluate_beta_endpoint(req: EvaluateBetaRequest) -> EvaluateBetaResponse:
        image = beta_image(req.precision)

        def point_model(point) -> PointClassModel:
            if point.infinity:
                return PointClassModel(infinity=True)
            return PointClassModel(infinity=False, x=point.x.value, y=point.y.value)

        witnesses = [
            BetaWitnessModel(
                value=str(value), first=point_model(pair[0]), second=point_model(pair[1])
            )
            for value, pair in sorted(image.items())
        ]
        return EvaluateBetaResponse(
            precision=req.precision,
            image=[str(value) for value in sorted(image)],
            surjective=set(image) == {Fraction(0), Fraction(1, 2)},
            witnesses=witnesses,
        )

    @app.post("/batch", response_model=BatchResponse)
    def batch(req: BatchRequest) -> BatchResponse:
        def one(row: list[int]) -> BatchRowResult:
            try:
                triple = normalize_triple(row[0], row[1], row[2])
                report = full_report(
                    triple,
                    bound=req.bound,
                    assume_surface_soluble=req.assume_surface_soluble,
                )
                return BatchRowResult(report=_report_response(report))
            except DomainError as exc:
                return BatchRowResult(error=BatchRowError(code=exc.code, message=str(exc)))

        jobs = _batch_jobs(req.jobs)
        if jobs == 1 or len(req.triples) <= 1:
            rows = [one(row) for row in req.triples]
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                rows = list(pool.map(one, req.triples))
        return BatchResponse(rows=rows)

    return app


app = create_app()
