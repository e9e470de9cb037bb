"""Command-line front end, a thin client of the HTTP service.

Every subcommand builds a request, sends it to the service -- in-process
by default, or to a running server via --server -- and renders the JSON
response as text or verbatim with --json.  Exit codes: 0 on success, 1 on
domain errors (including the cube case abc a rational cube), 2 on usage
errors.
"""

from __future__ import annotations

import json
import sys
from typing import Any

import click
import httpx

SERVER_ENV = "CUBICBRAUER_SERVER"
JOBS_ENV = "CUBICBRAUER_JOBS"


class ServiceClient:
    """POST/GET against the live service or an in-process app instance."""

    def __init__(self, server: str | None):
        if server is None:
            import warnings

            with warnings.catch_warnings():
                # some starlette builds warn at TestClient import time
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import create_app

            self._client: httpx.Client | Any = TestClient(create_app())
        else:
            self._client = httpx.Client(base_url=server, timeout=600.0)

    def request(self, method: str, path: str, payload: dict | None = None) -> dict:
        try:
            if method == "GET":
                response = self._client.get(path)
            else:
                response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            click.echo(f"error (connection): {exc}", err=True)
            sys.exit(1)
        if response.status_code == 400:
            body = response.json()
            click.echo(f"error ({body['code']}): {body['message']}", err=True)
            sys.exit(1)
        if response.status_code == 422:
            click.echo(f"invalid request: {response.text}", err=True)
            sys.exit(2)
        if response.status_code >= 300:
            click.echo(f"error (http {response.status_code}): {response.text}", err=True)
            sys.exit(1)
        return response.json()


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise click.UsageError(f"--curve expects 'a,b,c', got {text!r}")
    try:
        a, b, c = (int(part) for part in parts)
    except ValueError:
        raise click.UsageError(f"--curve entries must be integers, got {text!r}")
    return a, b, c


def _parse_pair(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise click.UsageError(f"{flag} expects 'x,y', got {text!r}")
    try:
        x, y = (int(part) for part in parts)
    except ValueError:
        raise click.UsageError(f"{flag} entries must be integers, got {text!r}")
    return x, y


def _echo_json(data: dict) -> None:
    click.echo(json.dumps(data))


def _omega_str(pair: list[int]) -> str:
    x, y = pair
    return f"{x} + {y}*omega"


@click.group()
@click.option(
    "--server",
    default=None,
    envvar=SERVER_ENV,
    help="Base URL of a running service; default runs the app in-process.",
)
@click.version_option(package_name="cubicbrauer")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Transcendental Brauer groups of Kummer surfaces of diagonal cubics."""
    ctx.obj = server


def _client(ctx: click.Context) -> ServiceClient:
    return ServiceClient(ctx.obj)


@main.command()
@click.option("--curve", required=True, help="Coefficients a,b,c of a x^3 + b y^3 + c z^3.")
@click.option("--bound", default=100_000, show_default=True, help="Witness scan bound.")
@click.option(
    "--assume-surface-soluble",
    is_flag=True,
    help="Assert surface-level local solubility where the curve fails.",
)
@click.option("--json", "as_json", is_flag=True, help="Emit the raw JSON report.")
@click.pass_context
def classify(
    ctx: click.Context, curve: str, bound: int, assume_surface_soluble: bool, as_json: bool
) -> None:
    """Full classification report for one curve."""
    a, b, c = _parse_triple(curve)
    data = _client(ctx).request(
        "POST",
        "/classify",
        {
            "a": a,
            "b": b,
            "c": c,
            "bound": bound,
            "assume_surface_soluble": assume_surface_soluble,
        },
    )
    if as_json:
        _echo_json(data)
    else:
        triple = ",".join(str(n) for n in data["triple"])
        click.echo(f"curve: {triple}  (jacobian coefficient D = {data['D']})")
        click.echo(
            "Brauer groups: jacobian-square "
            + str(data["br_ExE"])
            + "; curve-square "
            + str(data["br_CxC"])
            + "; surface "
            + str(data["br_Y"])
        )
        click.echo(f"m(3) witness prime: {data['m3_witness']}")
        if data["local_solubility"]:
            rendered = "; ".join(
                f"{place} {'yes' if ok else 'NO'}"
                for place, ok in data["local_solubility"].items()
            )
            click.echo(f"curve local solubility: {rendered}")
        click.echo(f"verdict: {data['obstruction']}")
        for note in data["notes"]:
            click.echo(f"  note: {note}")
    if data["obstruction"] == "CubeCaseDescent":
        sys.exit(1)


@main.group()
def hecke() -> None:
    """Hecke character computations."""


@hecke.command()
@click.option("--D", "d", type=int, required=True, help="Coefficient of y^2 = x^3 + D.")
@click.option("--lambda", "lam", required=True, help="Rational lambda as num/den.")
@click.option("--bound", default=100_000, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def scan(ctx: click.Context, d: int, lam: str, bound: int, as_json: bool) -> None:
    """Scan for the m(3) = 0 witness prime and print its certificate."""
    data = _client(ctx).request(
        "POST", "/hecke/scan", {"D": d, "lambda": lam, "bound": bound}
    )
    if as_json:
        _echo_json(data)
        return
    cert = data["certificate"]
    num, den = cert["lambda"]
    click.echo(f"witness prime: {data['witness']}")
    click.echo(f"primary prime pi: {_omega_str(cert['pi'])}")
    click.echo(f"inertia degree: {cert['inertia_degree']}")
    click.echo(
        f"lambda = {num}/{den}: cubic symbol exponent "
        f"{cert['lambda_cubic_symbol_exponent']} (a cube mod pi)"
    )
    click.echo(
        f"4D cubic symbol exponent: {cert['four_d_cubic_symbol_exponent']} (not a cube)"
    )
    click.echo(f"character value: {_omega_str(cert['hecke_value'])}")
    inside = "yes" if cert["in_order"] else "no"
    l, k = cert["order"]
    click.echo(f"in Z + {l}^{k} Z[omega]: {inside}")


@main.group()
def lattice() -> None:
    """Neron-Severi lattice computations."""


@lattice.command()
@click.option("--cm", "cm", default=None, help="CM order parameters c,d.")
@click.option("--non-cm", "non_cm", is_flag=True, help="Use the rank-3 non-CM lattice.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def h1(ctx: click.Context, cm: str | None, non_cm: bool, as_json: bool) -> None:
    """Cyclic cohomology H^1 of the order-3 lattice action."""
    if cm is not None and non_cm:
        raise click.UsageError("--cm and --non-cm are mutually exclusive")
    if non_cm:
        payload: dict = {"cm": None}
    else:
        c, d = _parse_pair(cm if cm is not None else "1,1", "--cm")
        payload = {"cm": [c, d]}
    data = _client(ctx).request("POST", "/lattice/h1", payload)
    if as_json:
        _echo_json(data)
        return
    state = "trivial" if data["trivial"] else "NONTRIVIAL"
    click.echo(
        f"H1 {state}; image rank {data['image_rank']}; kernel rank {data['kernel_rank']}"
    )
    factors = ", ".join(str(n) for n in data["invariant_factors"])
    click.echo(f"invariant factors: {factors}")


@lattice.command("verify-a2")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify_a2(ctx: click.Context, as_json: bool) -> None:
    """Check the invariant-ring identities of the A2 quotient singularity."""
    data = _client(ctx).request("GET", "/lattice/verify-a2")
    if as_json:
        _echo_json(data)
        return
    click.echo("A2 invariant identities: " + ("ok" if data["ok"] else "FAILED"))
    if not data["ok"]:
        sys.exit(1)


@main.group()
def local() -> None:
    """Local solubility tests."""


@local.command()
@click.option("--curve", required=True, help="Coefficients a,b,c.")
@click.option(
    "--p",
    "place",
    default="all",
    show_default=True,
    help="'all', 'infinity', or a single prime.",
)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def solubility(ctx: click.Context, curve: str, place: str, as_json: bool) -> None:
    """Decide curve solubility over R and over Q_p."""
    a, b, c = _parse_triple(curve)
    data = _client(ctx).request(
        "POST", "/local/solubility", {"a": a, "b": b, "c": c, "place": place}
    )
    if as_json:
        _echo_json(data)
        return
    for name, ok in data["places"].items():
        click.echo(f"place {name}: {'soluble' if ok else 'insoluble'}")
    if len(data["places"]) > 1:
        click.echo("soluble at every tested place: " + ("yes" if data["soluble"] else "no"))


@main.command("residue-symbol")
@click.option("--alpha", required=True, help="Eisenstein integer x,y for x + y*omega.")
@click.option("--prime", type=int, required=True, help="Rational prime to compute above.")
@click.option(
    "--degree",
    type=click.Choice(["3", "6"]),
    default="3",
    show_default=True,
    help="Cubic or sextic symbol.",
)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def residue_symbol(
    ctx: click.Context, alpha: str, prime: int, degree: str, as_json: bool
) -> None:
    """Cubic or sextic residue symbol at the primary prime above p."""
    x, y = _parse_pair(alpha, "--alpha")
    data = _client(ctx).request(
        "POST",
        "/residue-symbol",
        {"alpha": [x, y], "prime": prime, "degree": int(degree)},
    )
    if as_json:
        _echo_json(data)
        return
    click.echo(
        f"pi = {_omega_str(data['pi'])} above {data['prime']} "
        f"(residue norm {data['residue_norm']})"
    )
    click.echo(
        f"symbol exponent: {data['exponent']}  "
        f"(value (-omega)^{data['exponent']} = {_omega_str(data['unit'])})"
    )


@main.command("evaluate-beta")
@click.option("--prec", "precision", type=int, default=8, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def evaluate_beta_command(ctx: click.Context, precision: int, as_json: bool) -> None:
    """Image of the order-2 evaluation map on 2-adic point pairs."""
    data = _client(ctx).request("POST", "/evaluate-beta", {"precision": precision})
    if as_json:
        _echo_json(data)
        return

    def point_str(point: dict) -> str:
        if point["infinity"]:
            return "O"
        return f"({point['x']}, {point['y']})"

    click.echo(f"image at precision 2^{precision}: " + ", ".join(data["image"]))
    click.echo("surjective: " + ("yes" if data["surjective"] else "no"))
    for witness in data["witnesses"]:
        click.echo(
            f"  value {witness['value']} at pair "
            f"{point_str(witness['first'])}, {point_str(witness['second'])}"
        )


@main.command()
@click.argument("csvfile", type=click.File("r"))
@click.option("--jobs", type=int, default=None, envvar=JOBS_ENV, help="Worker pool size.")
@click.option("--bound", default=100_000, show_default=True)
@click.option(
    "--assume-surface-soluble",
    is_flag=True,
    help="Assert surface-level local solubility where the curve fails.",
)
@click.option("--output", "-o", type=click.File("w"), default="-", help="JSON-lines sink.")
@click.pass_context
def batch(
    ctx: click.Context,
    csvfile,
    jobs: int | None,
    bound: int,
    assume_surface_soluble: bool,
    output,
) -> None:
    """Classify a CSV of triples (one a,b,c per line) to JSON lines."""
    triples = []
    for lineno, line in enumerate(csvfile, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise click.UsageError(f"line {lineno}: expected 'a,b,c', got {line!r}")
        try:
            triples.append([int(part) for part in parts])
        except ValueError:
            raise click.UsageError(f"line {lineno}: entries must be integers")
    payload = {
        "triples": triples,
        "bound": bound,
        "assume_surface_soluble": assume_surface_soluble,
    }
    if jobs is not None:
        payload["jobs"] = jobs
    data = _client(ctx).request("POST", "/batch", payload)
    for source, row in zip(triples, data["rows"]):
        if row["report"] is not None:
            output.write(json.dumps(row["report"]) + "\n")
        else:
            output.write(json.dumps({"input": source, "error": row["error"]}) + "\n")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service under uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
