"""Command-line entry points for the experiment suite.

Exit codes: 0 on success, 2 when a workload guard refuses the request,
3 when an iterative solver fails to converge (the data file is still
written in that case, with the affected primes recorded in its metadata).
"""

from __future__ import annotations

import sys

import click

from . import experiments as exp
from .errors import ConvergenceError, GuardError
from .output import sibling_path


def _common(fn):
    fn = click.option("--out", required=True, type=click.Path(dir_okay=False),
                      help="Output table path.")(fn)
    fn = click.option("--format", "fmt", default="csv",
                      type=click.Choice(["csv", "json"]), show_default=True)(fn)
    fn = click.option("--seed", default=0, show_default=True, type=int)(fn)
    fn = click.option("--threads", default=1, show_default=True, type=int)(fn)
    fn = click.option("--full-scale", is_flag=True,
                      help="Use the full-size parameter ranges instead of the quick defaults.")(fn)
    return fn


@click.group()
def main():
    """Spectral pseudorandomness experiments on Paley graphs."""


def _run(builder, cfg, out, fmt):
    try:
        result = builder(cfg)
    except (GuardError, ValueError) as err:
        click.echo(f"guard violation: {err}", err=True)
        sys.exit(2)
    except ConvergenceError as err:
        click.echo(f"solver did not converge: {err}", err=True)
        sys.exit(3)
    if isinstance(result, tuple):
        main_table, overlay = result
        main_table.write(out, fmt)
        overlay.write(sibling_path(out, "overlay"), fmt)
        click.echo(f"wrote {out} and {sibling_path(out, 'overlay')}")
    else:
        result.write(out, fmt)
        click.echo(f"wrote {out}")
        if result.config.get("non_converged"):
            click.echo(f"solver flagged at p = {result.config['non_converged']}",
                       err=True)
            sys.exit(3)


@main.command()
@click.option("--p", type=int, default=None, help="Prime (default 8009; 20021 full-scale).")
@click.option("--a", "a_list", type=int, multiple=True, help="Localization degrees (default 0..5).")
@_common
def spectrum(p, a_list, out, fmt, seed, threads, full_scale):
    """Scaled localization spectra plus KM density overlay (figure 1 data)."""
    cfg = exp.ExperimentConfig("spectrum", p=p, a_list=tuple(a_list), seed=seed,
                               fmt=fmt, threads=threads, full_scale=full_scale)
    _run(exp.run_spectrum, cfg, out, fmt)


@main.command("esd-distance")
@click.option("--p-max", type=int, default=None, help="Largest prime (default 2000; 5000 full-scale).")
@click.option("--a", "a_list", type=int, multiple=True, help="Degrees (default 1 2 3).")
@_common
def esd_distance(p_max, a_list, out, fmt, seed, threads, full_scale):
    """Kolmogorov distances of scaled spectra to KM(2^a) (figure 2 data)."""
    cfg = exp.ExperimentConfig("esd-distance", p_max=p_max, a_list=tuple(a_list),
                               seed=seed, fmt=fmt, threads=threads, full_scale=full_scale)
    _run(exp.run_esd_distance, cfg, out, fmt)


@main.command("min-eig")
@click.option("--p-max", type=int, default=None, help="Largest prime (default 2000; 5000 full-scale).")
@click.option("--a", "a_list", type=int, multiple=True, help="Degrees (default 1 2 3).")
@_common
def min_eig(p_max, a_list, out, fmt, seed, threads, full_scale):
    """Minimum localization eigenvalues with the conjectured edge (figure 3 data)."""
    cfg = exp.ExperimentConfig("min-eig", p_max=p_max, a_list=tuple(a_list),
                               seed=seed, fmt=fmt, threads=threads, full_scale=full_scale)
    _run(exp.run_min_eig, cfg, out, fmt)


@main.command()
@click.option("--p-max", type=int, default=None, help="Largest prime (default 320; 800 full-scale).")
@_common
def theta(p_max, out, fmt, seed, threads, full_scale):
    """Degree-2 theta bound vs sqrt(p) and Hanson-Petridis (figure 4 data)."""
    cfg = exp.ExperimentConfig("theta", p_max=p_max, seed=seed, fmt=fmt,
                               threads=threads, full_scale=full_scale)
    _run(exp.run_theta, cfg, out, fmt)


@main.command()
@click.option("--p", type=int, default=None,
              help="Single prime: emit the e.s.d. comparison (figure 6 data).")
@click.option("--p-max", type=int, default=None,
              help="Scan mode: largest prime for the min-eigenvalue sweep (figure 7 data).")
@_common
def quartic(p, p_max, out, fmt, seed, threads, full_scale):
    """Quartic-residue subgraph: e.s.d. comparison (--p) or min-eig scan (--p-max)."""
    if p is not None and p_max is not None:
        raise click.UsageError("pass either --p (e.s.d. mode) or --p-max (scan mode)")
    if p is not None:
        cfg = exp.ExperimentConfig("quartic-esd", p=p, seed=seed, fmt=fmt,
                                   threads=threads, full_scale=full_scale)
        _run(exp.run_quartic_esd, cfg, out, fmt)
    else:
        cfg = exp.ExperimentConfig("quartic-scan", p_max=p_max, seed=seed, fmt=fmt,
                                   threads=threads, full_scale=full_scale)
        _run(exp.run_quartic_scan, cfg, out, fmt)


@main.command()
@click.option("--p-max", type=int, default=None, help="Largest prime (default 250; 625 full-scale).")
@click.option("--a", "a_list", type=int, multiple=True, help="Max union size (default 2).")
@click.option("--k", "k_list", type=int, multiple=True, help="Cycle lengths (default 2 3 4).")
@_common
def necklace(p_max, a_list, k_list, out, fmt, seed, threads, full_scale):
    """Normalized cyclic character sums over canonical low-degree families."""
    cfg = exp.ExperimentConfig("necklace", p_max=p_max, a_list=tuple(a_list),
                               k_list=tuple(k_list), seed=seed, fmt=fmt,
                               threads=threads, full_scale=full_scale)
    _run(exp.run_necklace, cfg, out, fmt)


@main.command()
@click.option("--p-max", type=int, default=None, help="Largest prime (default 101; 401 full-scale).")
@_common
def bounds(p_max, out, fmt, seed, threads, full_scale):
    """Independence-number bounds per prime with exact values where feasible."""
    cfg = exp.ExperimentConfig("bounds", p_max=p_max, seed=seed, fmt=fmt,
                               threads=threads, full_scale=full_scale)
    _run(exp.run_bounds, cfg, out, fmt)


@main.command()
@click.option("--p", type=int, default=229, show_default=True)
@click.option("--a", "a_list", type=int, multiple=True, help="Localization degree (default 1).")
@click.option("--k", "k_list", type=int, multiple=True, help="Largest moment order (default 10).")
@_common
def traces(p, a_list, k_list, out, fmt, seed, threads, full_scale):
    """Centered trace moments of the projection pair for both signs."""
    cfg = exp.ExperimentConfig("traces", p=p, a_list=tuple(a_list),
                               k_list=tuple(k_list), seed=seed, fmt=fmt,
                               threads=threads, full_scale=full_scale)
    _run(exp.run_traces, cfg, out, fmt)


if __name__ == "__main__":
    main()
