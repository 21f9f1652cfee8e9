"""Experiment drivers behind the CLI: each produces one figure-ready
data product as a frozen table (plus a density-overlay companion where
histograms get an analytic curve drawn over them).

Scans parallelize over primes with a thread pool; results are collected and
sorted by (p, ...) before writing so the output order never depends on
scheduling.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .bounds import hanson_petridis_bound, km_edge_bound, localization_bound
from .errors import GuardError
from .field import PrimeField, make_field
from .laws import KestenMcKay, kolmogorov_distance
from .necklace import (
    NecklaceSpec,
    degree1_bound,
    necklace_trace,
    scan_configurations,
    trivial_bound,
)
from .output import SCHEMAS, Table
from .paley import (
    build_paley,
    enumerate_localizations,
    exact_clique_number,
    localize,
    quartic_subgraph,
)
from .spectra import (
    Spectrum,
    circulant_spectrum_localized,
    circulant_spectrum_paley,
    dense_spectrum,
    esd_scaled,
    quartic_spectrum,
    trace_moments,
)
from .theta import theta_circulant_lp, theta_localization2_bound

OVERLAY_POINTS = 401


def primes_1mod4(lo: int, hi: int) -> list[int]:
    out = []
    for n in range(max(lo, 5) | 1, hi + 1, 2):
        if n % 4 != 1:
            continue
        if all(n % d for d in range(3, int(math.isqrt(n)) + 1, 2)):
            out.append(n)
    return out


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    p: int | None = None
    p_max: int | None = None
    a_list: tuple[int, ...] = ()
    k_list: tuple[int, ...] = ()
    seed: int = 0
    fmt: str = "csv"
    threads: int = 1
    full_scale: bool = False
    extra: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, not {self.fmt!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def echo(self) -> dict:
        out = {"experiment": self.experiment, "seed": self.seed,
               "threads": self.threads, "full_scale": self.full_scale}
        if self.p is not None:
            out["p"] = self.p
        if self.p_max is not None:
            out["p_max"] = self.p_max
        if self.a_list:
            out["a"] = list(self.a_list)
        if self.k_list:
            out["k"] = list(self.k_list)
        out.update(self.extra)
        return out


def _pool_map(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _localization_spectrum(field: PrimeField, members) -> Spectrum:
    if tuple(members) == (0,):
        return circulant_spectrum_localized(field)
    return dense_spectrum(localize(build_paley(field), members))


def _overlay_rows(a_list) -> list[tuple]:
    rows = []
    for a in sorted(set(a_list)):
        if a == 0:
            continue  # KM(1) is a pair of atoms; nothing to draw as a curve
        law = KestenMcKay(2 ** a)
        xs = np.linspace(-law.edge, law.edge, OVERLAY_POINTS)
        dens = law.density(xs)
        rows.extend((a, float(x), float(d)) for x, d in zip(xs, dens))
    return rows


def run_spectrum(cfg: ExperimentConfig) -> tuple[Table, Table]:
    """Scaled localization spectra for one prime, one row per eigenvalue,
    Perron dropped, plus the rescaled KM(2^a) density overlay."""
    p = cfg.p or (20021 if cfg.full_scale else 8009)
    a_list = cfg.a_list or (0, 1, 2, 3, 4, 5)
    field = make_field(p)
    rows = []
    for a in a_list:
        if a == 0:
            spec = circulant_spectrum_paley(field)
            label = ""
        else:
            members = enumerate_localizations(field, min(a, 3))[0].elements
            while len(members) < a:  # extend canonically for a > 3
                ext = localize(build_paley(field), members)
                if ext.n == 0:
                    raise GuardError(f"no degree-{a} localization reachable at p = {p}")
                members = tuple(sorted(members + (int(ext.vertices[0]),)))
            spec = _localization_spectrum(field, members)
            label = ";".join(str(m) for m in members)
        esd = esd_scaled(spec, a, drop_perron=True)
        raw = spec.values[:-1]
        rows.extend((p, a, label, i, float(v), float(s))
                    for i, (v, s) in enumerate(zip(raw, esd.scaled_values)))
    main = Table(SCHEMAS["spectrum"],
                 ("p", "a", "I", "index", "eigenvalue", "scaled_eigenvalue"),
                 rows, cfg.echo(), cfg.seed)
    overlay = Table(SCHEMAS["overlay"], ("a", "x", "density"),
                    _overlay_rows(a_list), cfg.echo(), cfg.seed)
    return main, overlay


def _distance_stats(field: PrimeField, a: int) -> tuple[float, float, float, int]:
    law = KestenMcKay(2 ** a)
    if a in (1, 2):
        reps = enumerate_localizations(field, a)[:1]
    else:
        reps = enumerate_localizations(field, a)
    vals = []
    for s in reps:
        spec = _localization_spectrum(field, s.elements)
        if spec.n == 0:
            continue
        vals.append(kolmogorov_distance(esd_scaled(spec, a), law))
    if not vals:
        return (math.nan, math.nan, math.nan, 0)
    return (float(np.mean(vals)), float(min(vals)), float(max(vals)), len(vals))


def run_esd_distance(cfg: ExperimentConfig) -> Table:
    """Kolmogorov distance of scaled localization spectra to KM(2^a) per prime;
    degree 3 aggregates mean/min/max over every canonical representative."""
    p_max = cfg.p_max or (5000 if cfg.full_scale else 2000)
    a_list = cfg.a_list or (1, 2, 3)
    ps = primes_1mod4(13, p_max)

    def work(p):
        field = make_field(p)
        return [(p, a) + _distance_stats(field, a) for a in a_list]

    rows = [r for chunk in _pool_map(work, ps, cfg.threads) for r in chunk]
    rows.sort(key=lambda r: (r[0], r[1]))
    return Table(SCHEMAS["distance"],
                 ("p", "a", "dist_mean", "dist_min", "dist_max", "n_reps"),
                 [(p, a, m, lo, hi, n) for (p, a, m, lo, hi, n) in rows],
                 cfg.echo(), cfg.seed)


def run_min_eig(cfg: ExperimentConfig) -> Table:
    """-lambda_min of localizations per prime with the conjectured edge line
    2 sqrt(2^a - 1) sqrt(p) / 2^{a+1}."""
    p_max = cfg.p_max or (5000 if cfg.full_scale else 2000)
    a_list = cfg.a_list or (1, 2, 3)
    ps = primes_1mod4(13, p_max)

    def work(p):
        field = make_field(p)
        out = []
        for a in a_list:
            reps = enumerate_localizations(field, a)
            if a in (1, 2):
                reps = reps[:1]
            vals = []
            for s in reps:
                spec = _localization_spectrum(field, s.elements)
                if spec.n:
                    vals.append(-float(spec.values[0]))
            if not vals:
                continue
            line = 2 * math.sqrt(2 ** a - 1) * math.sqrt(p) / 2 ** (a + 1)
            out.append((p, a, float(np.mean(vals)), float(min(vals)),
                        float(max(vals)), len(vals), line))
        return out

    rows = [r for chunk in _pool_map(work, ps, cfg.threads) for r in chunk]
    rows.sort(key=lambda r: (r[0], r[1]))
    return Table(SCHEMAS["mineig"],
                 ("p", "a", "neg_min_mean", "neg_min_min", "neg_min_max",
                  "n_reps", "conjecture_line"),
                 rows, cfg.echo(), cfg.seed)


def run_theta(cfg: ExperimentConfig) -> Table:
    """The degree-2 theta bound against the sqrt(p) and Hanson-Petridis lines."""
    p_max = cfg.p_max or (800 if cfg.full_scale else 320)
    ps = primes_1mod4(13, p_max)

    def work(p):
        rep = theta_localization2_bound(make_field(p), tol=cfg.extra.get("tol", 1e-4))
        residual = float(rep.note.split("residual=")[1].split(";")[0])
        converged = "not-converged" not in rep.note
        theta_val = rep.value - 2.0
        return (p, "loc2", theta_val, residual, rep.value,
                hanson_petridis_bound(p), math.sqrt(p), converged)

    rows = _pool_map(work, ps, cfg.threads)
    rows.sort(key=lambda r: r[0])
    flagged = [r[0] for r in rows if not r[7]]
    echo = cfg.echo()
    if flagged:
        echo["non_converged"] = flagged
    return Table(SCHEMAS["theta"],
                 ("p", "graph_tag", "theta", "residual", "alpha_bound",
                  "hp_bound", "sqrt_p"),
                 [r[:7] for r in rows], echo, cfg.seed)


def run_quartic_esd(cfg: ExperimentConfig) -> tuple[Table, Table]:
    """Scaled spectra of the quartic-residue subgraph and the degree-2
    localization side by side (both scaled as degree 2), with KM(4) overlay."""
    p = cfg.p or (20021 if cfg.full_scale else 8009)
    field = make_field(p)
    rows = []
    law = KestenMcKay(4)
    distances = {}
    for tag, spec in (("quartic", quartic_spectrum(field)),
                      ("loc2", _localization_spectrum(
                          field, enumerate_localizations(field, 2)[0].elements))):
        esd = esd_scaled(spec, 2, drop_perron=True)
        distances[tag] = kolmogorov_distance(esd, law)
        rows.extend((p, tag, i, float(v))
                    for i, v in enumerate(esd.scaled_values))
    cfg_echo = cfg.echo()
    cfg_echo["kolmogorov_to_km4"] = {k: round(v, 6) for k, v in distances.items()}
    main = Table(SCHEMAS["quartic-esd"], ("p", "source", "index", "scaled_eigenvalue"),
                 rows, cfg_echo, cfg.seed)
    overlay = Table(SCHEMAS["overlay"], ("a", "x", "density"), _overlay_rows([2]),
                    cfg_echo, cfg.seed)
    return main, overlay


def run_quartic_scan(cfg: ExperimentConfig) -> Table:
    """-lambda_min of the quartic subgraph per prime against sqrt(p)/2 and the
    degree-2 localization prediction sqrt(3) sqrt(p) / 4."""
    p_max = cfg.p_max or (20021 if cfg.full_scale else 2000)
    ps = primes_1mod4(13, p_max)

    def work(p):
        field = make_field(p)
        spec = quartic_spectrum(field)
        return (p, spec.n, -float(spec.values[0]), math.sqrt(p) / 2,
                math.sqrt(3) * math.sqrt(p) / 4)

    rows = _pool_map(work, ps, cfg.threads)
    rows.sort(key=lambda r: r[0])
    return Table(SCHEMAS["quartic-mineig"],
                 ("p", "n_vertices", "neg_min_eig", "half_sqrt_p", "loc2_prediction"),
                 rows, cfg.echo(), cfg.seed)


def _necklace_bound(spec: NecklaceSpec, p: int) -> float:
    zs = spec.zs
    if spec.degree <= 1:
        return degree1_bound(p, spec.k)
    if len(set(zs)) == 1 and len(zs[0]) == 2:
        return spec.k * p ** ((spec.k + 1) / 2) + 2 ** spec.k * p ** (spec.k / 2)
    return trivial_bound(p, spec.k)


def run_necklace(cfg: ExperimentConfig) -> Table:
    """Normalized cyclic character sums over canonical degree <= a families."""
    p_max = cfg.p_max or (625 if cfg.full_scale else 250)
    a = max(cfg.a_list) if cfg.a_list else 2
    ks = cfg.k_list or (2, 3, 4)
    if a > 2:
        raise GuardError("necklace scans are guarded at degree a <= 2")
    ps = primes_1mod4(13, p_max)

    def work(p):
        field = make_field(p)
        out = []
        for k in ks:
            for spec in scan_configurations(field, a, k):
                val = necklace_trace(field, spec, snap=False)
                out.append((p, k, spec.degree, spec.label(), val,
                            abs(val) / trivial_bound(p, k),
                            _necklace_bound(spec, p), "trace"))
        return out

    rows = [r for chunk in _pool_map(work, ps, cfg.threads) for r in chunk]
    rows.sort(key=lambda r: (r[0], r[1], r[3]))
    return Table(SCHEMAS["necklace"],
                 ("p", "k", "a", "zs", "sigma", "normalized", "bound", "method"),
                 rows, cfg.echo(), cfg.seed)


def run_bounds(cfg: ExperimentConfig) -> Table:
    """Upper-bound comparison per prime, with the exact clique number where
    the branch-and-bound guard allows."""
    p_max = cfg.p_max or (401 if cfg.full_scale else 101)
    ps = primes_1mod4(13, p_max)

    def work(p):
        field = make_field(p)
        omega = exact_clique_number(build_paley(field)) if p <= 500 else None
        witness = omega if omega is not None else ""
        rows = [
            (p, "sqrt", 0, math.sqrt(p), witness),
            (p, "hanson-petridis", 0, hanson_petridis_bound(p), witness),
            (p, "km-edge-a3-nonrigorous", 3, km_edge_bound(3, p), witness),
        ]
        for a in (1, 2):
            rep = localization_bound(field, a, "haemers")
            rows.append((p, rep.method, a, rep.value, witness))
        if p <= 401:
            for a in (1, 2):
                rep = localization_bound(field, a, "exact")
                rows.append((p, rep.method, a, rep.value, witness))
        return rows

    rows = [r for chunk in _pool_map(work, ps, cfg.threads) for r in chunk]
    rows.sort(key=lambda r: (r[0], r[1]))
    return Table(SCHEMAS["bounds"],
                 ("p", "method", "a", "bound", "exact_omega_if_known"),
                 rows, cfg.echo(), cfg.seed)


def run_traces(cfg: ExperimentConfig) -> Table:
    """Centered trace moments for both projection signs at one prime."""
    p = cfg.p or 229
    k_max = max(cfg.k_list) if cfg.k_list else 10
    a = max(cfg.a_list) if cfg.a_list else 1
    field = make_field(p)
    rep = enumerate_localizations(field, min(a, 3))[0]
    label = ";".join(str(m) for m in rep.elements)
    rows = []
    for sign in ("+", "-"):
        for tm in trace_moments(field, rep, k_max, sign):
            rows.append((p, a, label, tm.k, sign, tm.value, tm.normalized,
                         tm.edge_weighted))
    rows.sort(key=lambda r: (r[3], r[4]))
    return Table(SCHEMAS["traces"],
                 ("p", "a", "I", "k", "sign", "t_k", "t_k_over_p", "edge_weighted"),
                 rows, cfg.echo(), cfg.seed)
