"""``verify`` command line: run, list and show claims, and check bracket tables."""
from __future__ import annotations

import sys
from pathlib import Path

import click

from . import lie
from .claims import ConfigError, Report, RunConfig, UnknownClaim, get_claim, list_claims, run


def _momentum(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise click.BadParameter(f"expected px,py,pz, got {text!r}")
    try:
        return tuple(float(v) for v in parts)
    except ValueError:
        raise click.BadParameter(f"non-numeric momentum {text!r}") from None


@click.group()
def main():
    """Verify the identities of the chiral gamma representation."""


@main.command("run")
@click.option("--claims", "pattern", default="*", show_default=True,
              help="Claim id glob; several globs may be separated by commas.")
@click.option("--mass", "masses", type=float, multiple=True, help="Mass (repeatable).")
@click.option("--momentum", "momenta", multiple=True, help="Momentum px,py,pz (repeatable).")
@click.option("--random-momenta", type=int, default=None, help="Number of random momentum draws.")
@click.option("--samples", type=int, default=None, help="Number of random spacetime points.")
@click.option("--seed", type=int, default=None, help="Seed (falls back to VERIFY_SEED, then 42).")
@click.option("--tol", type=float, default=None, help="Float tolerance.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the report here instead of stdout.")
def run_cmd(pattern, masses, momenta, random_momenta, samples, seed, tol, fmt, out):
    """Run claims and emit a report; exit status 1 if any exact/float claim fails."""
    kw = {}
    if masses:
        kw["masses"] = tuple(masses)
    if momenta:
        kw["momenta"] = tuple(_momentum(m) for m in momenta)
    if random_momenta is not None:
        kw["random_momenta"] = random_momenta
    if samples is not None:
        kw["samples"] = samples
    if seed is not None:
        kw["seed"] = seed
    if tol is not None:
        kw["tol"] = tol
    try:
        report = run(RunConfig(**kw), pattern)
    except ConfigError as exc:
        raise click.UsageError(f"invalid configuration: {exc}") from None
    except UnknownClaim as exc:
        raise click.UsageError(f"no claim matches {exc.args[0]!r}") from None
    text = report.to_json() if fmt == "json" else report.to_text()
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)
    sys.exit(report.exit_code)


@main.command("list")
def list_cmd():
    """Print id, section, kind and anchor of every claim."""
    for c in list_claims():
        click.echo(f"{c.id}  {c.section:<14} {c.kind:<8} {c.anchor}")


@main.command("show")
@click.argument("claim_id")
@click.option("--report", "report_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Take the result from this JSON report instead of running the claim.")
def show_cmd(claim_id, report_path):
    """Print a claim's anchor, formula and latest result."""
    try:
        c = get_claim(claim_id)
    except UnknownClaim:
        raise click.UsageError(f"unknown claim {claim_id!r}") from None
    click.echo(f"{c.id} [{c.section}, {c.kind}]")
    click.echo(f"anchor:  {c.anchor}")
    click.echo(f"formula: {c.formula}")
    if report_path is not None:
        found = [r for r in Report.from_json(report_path.read_text()).results if r.claim_id == c.id]
        if not found:
            click.echo("result:  not present in report")
            return
        result = found[0]
    else:
        result = run(RunConfig(), c.id).results[0]
    click.echo(f"result:  {result.status} residual={result.residual:.3e} tolerance={result.tolerance:.1e}")
    if result.expected is not None:
        click.echo(f"expected: {result.expected}")
    if result.notes:
        click.echo(f"notes:   {result.notes}")
    for k, v in sorted(result.details.items(), key=lambda kv: -kv[1])[:12]:
        click.echo(f"  {k}: {v:.3e}")


@main.command("jacobi")
@click.argument("table", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def jacobi_cmd(table):
    """Jacobi residual of a plain-text bracket table."""
    try:
        sc = lie.parse_table(table.read_text())
        res = lie.jacobi_residual(sc)
    except lie.IncompleteTable as exc:
        raise click.ClickException(f"incomplete table: missing [{exc.pair[0]}, {exc.pair[1]}]") from None
    except lie.TableError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(f"basis size {sc.n}, jacobi residual {res:g}")
    for x, y, z, size in lie.jacobi_violations(sc)[:20]:
        click.echo(f"  ({x}, {y}, {z}): {size:g}")
    sys.exit(0 if res == 0 else 1)


if __name__ == "__main__":
    main()
