"""Command line interface.

Map arguments use the text grammar from the parsing module: either an
expression in z ("z^3-1", "(z^5-1)/z^3") or coefficient lists highest
degree first ("(1,0,0,-1)/(1,0,0)").  Exit codes: 0 success, 1
verification or diagnostic failure, 2 usage or parse error.
"""

from __future__ import annotations

import json
import sys

import click

from . import mcmullen as mc
from . import reports
from .dynamics import basin_grid
from .newton import newton_map
from .parsing import ParseError, parse_complex, parse_map
from .ppm import write_ppm
from .reports import SCHEMA, cnum


def _emit(report, json_path):
    text = json.dumps(report, sort_keys=True, indent=2)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _parse_or_die(spec):
    try:
        return parse_map(spec)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
def main():
    """Newton map analysis, classification and basin rendering."""


@main.command()
@click.argument("spec")
@click.option("--already-newton", is_flag=True, help="treat SPEC as the Newton map itself")
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
def analyze(spec, already_newton, tol, json_path):
    """Fixed points, multipliers, residue indices and characterization."""
    if tol <= 0:
        click.echo("error: tol must be positive", err=True)
        sys.exit(2)
    r = _parse_or_die(spec)
    report = reports.analyze_report(r, already_newton=already_newton, tol=tol)
    _emit(report, json_path)
    if "warning" in report:
        click.echo(f"warning: {report['warning']}", err=True)


@main.command()
@click.argument("d", type=int)
@click.option("--json", "json_path", type=click.Path(), default=None)
def classify(d, json_path):
    """Enumerate the degree-d maps with an exceptional attractor (3 <= d <= 5)."""
    if d not in (3, 4, 5):
        click.echo("error: d must be 3, 4 or 5", err=True)
        sys.exit(2)
    report = reports.classify_report(d)
    _emit(report, json_path)
    sys.exit(0 if report["all_match"] else 1)


@main.command()
@click.argument("spec")
@click.option("--window", nargs=4, type=float, required=True, metavar="CX CY HW HH")
@click.option("--res", nargs=2, type=int, required=True, metavar="W H")
@click.option("--cap", type=int, default=1000, show_default=True)
@click.option("--already-newton", is_flag=True, help="iterate SPEC directly")
@click.option("--out", type=click.Path(), required=True)
def render(spec, window, res, cap, already_newton, out):
    """Basin-of-attraction image (PPM P6) with a JSON sidecar at OUT.json."""
    if cap < 1 or res[0] < 16 or res[1] < 16:
        click.echo("error: cap >= 1 and resolution >= 16x16 required", err=True)
        sys.exit(2)
    r = _parse_or_die(spec)
    n_map = r if already_newton else newton_map(r)
    cx, cy, hw, hh = window
    try:
        grid = basin_grid(n_map, (complex(cx, cy), hw, hh), tuple(res), cap=cap)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    write_ppm(grid.labels, out)
    sidecar = grid.sidecar()
    sidecar["schema"] = SCHEMA
    with open(str(out) + ".json", "w") as fh:
        fh.write(json.dumps(sidecar, sort_keys=True, indent=2) + "\n")
    click.echo(f"wrote {out} and {out}.json")


@main.command()
@click.argument("suite", type=click.Choice(reports.SUITES))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
def verify(suite, seed, json_path):
    """Run a built-in verification suite; exit 0 iff every check passes."""
    report = reports.verify_suite(suite, seed=seed)
    _emit(report, json_path)
    for check in report["checks"]:
        status = "pass" if check["passed"] else "FAIL"
        click.echo(f"{status}  {check['name']}", err=True)
    sys.exit(0 if report["passed"] else 1)


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.argument("sub", type=click.Choice(["report", "render"]), default="report")
@click.option("--lambda", "lam_text", default="1", show_default=True, metavar="RE,IM")
@click.option("--out", type=click.Path(), default=None, help="image path for render")
@click.option("--res", nargs=2, type=int, default=(400, 400), show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
def mcmullen(m, n, sub, lam_text, out, res, json_path):
    """Report on (or render) the Newton map of (z^(m+n) - lambda)/z^n."""
    try:
        lam = parse_complex(lam_text)
        mc.McMullenParams(m, n, lam)
    except (ParseError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    N = mc.newton_mcmullen(m, n)
    if sub == "render":
        if not out:
            click.echo("error: render needs --out", err=True)
            sys.exit(2)
        grid = basin_grid(N, (0j, 2.0, 2.0), tuple(res))
        write_ppm(grid.labels, out)
        sidecar = grid.sidecar()
        sidecar["schema"] = SCHEMA
        with open(str(out) + ".json", "w") as fh:
            fh.write(json.dumps(sidecar, sort_keys=True, indent=2) + "\n")
        click.echo(f"wrote {out} and {out}.json")
        return
    sc = mc.lambda_scaling(m, n, lam)
    c, pts = mc.free_critical(m, n)
    ev = mc.basin_evidence(m, n, samples=20)
    report = {
        "schema": SCHEMA,
        "m": m,
        "n": n,
        "lambda": cnum(lam),
        "case": mc.case_of(m, n),
        "degree": N.degree,
        "symmetry_order": mc.symmetry_group_order(m, n),
        "scaling": {"a": cnum(sc.a), "prefactor": cnum(sc.lam)},
        "free_critical_radius": c,
        "free_critical_points": [cnum(p) for p in pts],
        "free_critical_value": cnum(mc.nf_at_free_critical(m, n)) if c else None,
        "evidence_complete": bool(ev["evidence_complete"]),
    }
    _emit(report, json_path)


if __name__ == "__main__":
    main()
