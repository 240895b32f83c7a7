"""
theta-orbits command line.

Reports go to standard output as JSON (default) or rich tables; logs go to
standard error. Exit codes: 0 success, 2 bad parameters, 3 failed verification.
"""

import functools
import logging
from typing import Optional, Tuple

import typer
from pydantic import ValidationError

from theta_orbits.characters.spectrum import theta_sigma_spectrum
from theta_orbits.cli.reports import OutputFormat, emit, mapping_table, rows_table
from theta_orbits.config import load_settings
from theta_orbits.dualpairs.normalization import normalize_outside_range
from theta_orbits.dualpairs.params import DualPairParams, PairFamily, build_params
from theta_orbits.errors import ParameterError, TruncationError, VerificationError
from theta_orbits.log import setup_logging
from theta_orbits.momentmap.nullcone import Stratum
from theta_orbits.momentmap.verify import verify_pair
from theta_orbits.orbitlifts.compact_type import GenuineCompactType
from theta_orbits.orbitlifts.cycles import assoc_cycle_theta_L, assoc_cycle_theta_sigma
from theta_orbits.orbitlifts.lifts import lift_orbit
from theta_orbits.partitions.partition import Level, LieType, orbit_dim
from theta_orbits.partitions.signed_partition import signature
from theta_orbits.unipotent.certificate import check_special_unipotent

logger = logging.getLogger(__name__)

EXIT_PARAMETER = 2
EXIT_VERIFICATION = 3

app = typer.Typer(help="Theta lifts of nilpotent orbits and their numerical verification.", no_args_is_help=True)
orbits_app = typer.Typer(help="Lifted orbits and associated cycles.", no_args_is_help=True)
unipotent_app = typer.Typer(help="Special unipotent certificates.", no_args_is_help=True)
numeric_app = typer.Typer(help="Moment-map cross-checks.", no_args_is_help=True)
app.add_typer(orbits_app, name="orbits")
app.add_typer(unipotent_app, name="unipotent")
app.add_typer(numeric_app, name="numeric")

FamilyOpt = typer.Option("osp", "--family", help="Pair family: osp or spostar.")
POpt = typer.Option(..., "-p", help="p in O(p, q+t).")
QOpt = typer.Option(..., "-q", help="q in O(p, q+t).")
TOpt = typer.Option(0, "-t", help="Size t of the compact factor.")
NOpt = typer.Option(..., "-n", help="n in Sp(2n, R).")
OutputOpt = typer.Option(OutputFormat.JSON, "--output", help="json or table.")


def handle_errors(func):
    """Map library errors onto exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ParameterError, ValidationError) as exc:
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(EXIT_PARAMETER)
        except (VerificationError, TruncationError) as exc:
            typer.echo(f"verification failed: {exc}", err=True)
            raise typer.Exit(EXIT_VERIFICATION)

    return wrapper


def _params(family: str, p: int, q: int, t: int, n: int) -> DualPairParams:
    families = {"osp": PairFamily.OSP, "spostar": PairFamily.SPOSTAR}
    if family.lower() not in families:
        raise ParameterError(f"family {family!r} is not supported here; use osp or spostar")
    return build_params(family=families[family.lower()], p=p, q=q, t=t, n=n)


def _parse_mu(text: Optional[str]) -> Tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ParameterError(f"--mu takes comma separated integers, got {text!r}") from exc


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level for standard error.")):
    setup_logging(log_level or load_settings().log_level)


@orbits_app.command("lift")
@handle_errors
def orbits_lift(
    family: str = FamilyOpt,
    p: int = POpt,
    q: int = QOpt,
    t: int = TOpt,
    n: int = NOpt,
    output: OutputFormat = OutputOpt,
):
    """Lifted orbit with its signature, dimensions and provenance."""
    pp = _params(family, p, q, t, n)
    orbit, provenance = lift_orbit(pp)
    lie_type = LieType.orthogonal(p + q)
    payload = {
        "pair": pp.label(),
        "orbit": orbit.to_text(),
        "signature": list(signature(orbit)),
        "dims": {"complex": orbit_dim(orbit, lie_type), "K": orbit_dim(orbit, lie_type, Level.K)},
        "provenance": provenance.value,
    }
    table = mapping_table(pp.label(), {**payload, "orbit": orbit.to_superscript()})
    emit(payload, output, table)


@orbits_app.command("ac")
@handle_errors
def orbits_ac(
    family: str = FamilyOpt,
    p: int = POpt,
    q: int = QOpt,
    t: int = TOpt,
    n: int = NOpt,
    mu: Optional[str] = typer.Option(None, "--mu", help="Partition of the O(t) type, e.g. 1,1."),
    det_twist: bool = typer.Option(False, "--det-twist", help="Tensor the O(t) type with det."),
    dmax: Optional[int] = typer.Option(None, "--dmax", help="Degree cap for Case II."),
    window: Optional[int] = typer.Option(None, "--window", help="Stabilization window for Case II."),
    output: OutputFormat = OutputOpt,
):
    """Associated cycle of the lift of the trivial character (t = 0) or of L(mu)."""
    pp = _params(family, p, q, t, n)
    if t == 0 and mu is None and not det_twist:
        cycle = assoc_cycle_theta_sigma(p, q, n)
        payload = {"pair": pp.label(), "cycle": cycle.to_json(), "provenance": "eq7"}
    else:
        compact = GenuineCompactType.for_pair(_parse_mu(mu), n, int(det_twist))
        result = assoc_cycle_theta_L(pp, compact, dmax, window)
        cycle = result.cycle
        payload = {"pair": pp.label(), "mu": compact.describe(), **result.to_json()}
    table = rows_table(
        pp.label(), ["mult", "orbit"], [(term.mult, term.orbit.to_superscript()) for term in cycle.terms]
    )
    emit(payload, output, table)


@unipotent_app.command("check")
@handle_errors
def unipotent_check(
    p: int = POpt,
    q: int = QOpt,
    t: int = TOpt,
    n: int = NOpt,
    dim_mu: int = typer.Option(1, "--dim-mu", help="Dimension of the O(t) type."),
    output: OutputFormat = OutputOpt,
):
    """Special unipotent certificate for the lift of L(mu)."""
    certificate = check_special_unipotent(p, q, t, n, dim_mu)
    payload = certificate.model_dump(mode="json")
    emit(payload, output, mapping_table(f"({p},{q},{t},{n})", payload))
    if certificate.hypotheses_met and not certificate.passed:
        raise typer.Exit(EXIT_VERIFICATION)


@numeric_app.command("verify")
@handle_errors
def numeric_verify(
    pair: str = typer.Option(..., "--pair", help="Pair such as osp:6,4,0,2."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed; defaults to THETA_ORBITS_SEED."),
    count: int = typer.Option(50, "--count", min=1, help="Samples per check."),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative rank threshold."),
    stratum: Stratum = typer.Option(Stratum.GENERIC, "--stratum", help="generic or boundary."),
    output: OutputFormat = OutputOpt,
):
    """Cross-check orbit formulas against sampled null-cone points."""
    report = verify_pair(DualPairParams.parse(pair), seed, count, tol, stratum)
    payload = report.to_json()
    table = rows_table(
        report.pair,
        ["check", "pass", "data"],
        [(check.name, check.passed, check.data) for check in report.checks],
    )
    emit(payload, output, table)
    if not report.passed:
        raise typer.Exit(EXIT_VERIFICATION)


@app.command("spectrum")
@handle_errors
def spectrum(
    pair: str = typer.Option(..., "--pair", help="Pair osp:p,q,0,n."),
    dmax: Optional[int] = typer.Option(None, "--dmax", help="Highest degree."),
    output: OutputFormat = OutputOpt,
):
    """K-types of the lift of the trivial character by degree."""
    pp = DualPairParams.parse(pair)
    if pp.family is not PairFamily.OSP or pp.t != 0:
        raise ParameterError("spectrum takes an OSp pair with t = 0")
    dmax = load_settings().dmax if dmax is None else dmax
    result = theta_sigma_spectrum(pp.p, pp.q, pp.n, dmax)
    payload = {"pair": pp.label(), "degrees": result.to_json()}
    rows = [
        (entry["degree"], row["o_p"], row["o_q"], row["mult"])
        for entry in payload["degrees"]
        for row in entry["k_types"]
    ]
    emit(payload, output, rows_table(pp.label(), ["degree", "O(p)", "O(q)", "mult"], rows))


@app.command("normalize")
@handle_errors
def normalize(
    p: int = POpt,
    q: int = QOpt,
    t: int = TOpt,
    n: int = NOpt,
    output: OutputFormat = OutputOpt,
):
    """Move an out-of-range lift of the trivial character back into the stable range."""
    result = normalize_outside_range(p, q, t, n)
    payload = result.model_dump(mode="json")
    emit(payload, output, mapping_table(f"({p},{q},{t},{n})", payload))


if __name__ == "__main__":
    app()
