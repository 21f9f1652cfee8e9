"""Lovász theta by a splitting SDP solver and, for circulant graphs, an LP.

The SDP is the standard one: maximize <J, X> over X psd with unit trace and
X_ij = 0 across edges.  The solver alternates projection onto that affine
slice (edge zeroing plus a trace shift, which decouple exactly) with
projection onto the psd cone, with over-relaxation; the objective enters
through a linear tilt in the affine step.  Residuals are reported, and a
run that exhausts its iteration cap comes back flagged rather than raising.

For a circulant graph, averaging any feasible X over the cyclic group keeps
it feasible, so the optimum is attained at a circulant X and the psd
constraint diagonalizes into n linear inequalities on the Fourier
coefficients of the first row; the resulting LP is solved exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .errors import GuardError
from .field import PrimeField
from .paley import InducedGraph, build_paley, enumerate_localizations, localize
from . import bounds as _bounds

SDP_VERTEX_LIMIT = 400


@dataclass(frozen=True)
class ThetaResult:
    value: float
    gap: float            # combined feasibility/duality residual
    method: str           # "sdp" | "lp-circulant"
    converged: bool = True


def _project_affine(x: np.ndarray, edge_mask: np.ndarray, tilt: np.ndarray | None = None):
    """Nearest matrix with zero edge entries and unit trace (plus linear tilt).

    The edge coordinates and the diagonal are disjoint, so the projection
    splits: zero the edges, then shift the diagonal uniformly.
    """
    y = x if tilt is None else x + tilt
    y = (y + y.T) / 2
    y[edge_mask] = 0.0
    n = y.shape[0]
    idx = np.arange(n)
    y[idx, idx] -= (np.trace(y) - 1.0) / n
    return y


def _project_psd(x: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh((x + x.T) / 2)
    pos = w > 0
    if pos.all():
        return x
    vp = v[:, pos] * w[pos]
    return vp @ v[:, pos].T


def theta_sdp(graph: InducedGraph, tol: float = 1e-4,
              max_iter: int = 200_000) -> ThetaResult:
    """Lovász theta of the graph, accurate to `tol` relative in the objective."""
    n = graph.n
    if n > SDP_VERTEX_LIMIT:
        raise GuardError(f"theta_sdp guarded at {SDP_VERTEX_LIMIT} vertices")
    if n == 0:
        return ThetaResult(0.0, 0.0, "sdp")
    edges = np.asarray(graph.adjacency)
    if not edges.any():
        return ThetaResult(float(n), 0.0, "sdp")

    rho = 1.0
    alpha = 1.6
    tilt = np.ones((n, n)) / rho
    x = np.eye(n) / n
    z = x.copy()
    u = np.zeros((n, n))
    stop = max(tol * 1e-2, 1e-9)
    check_every = 25
    obj = prev_obj = float(z.sum())
    converged = False
    res = np.inf
    for it in range(1, max_iter + 1):
        x = _project_affine(z - u, edges, tilt)
        x_rel = alpha * x + (1 - alpha) * z
        z_new = _project_psd(x_rel + u)
        u += x_rel - z_new
        if it % check_every == 0:
            primal = float(np.linalg.norm(x - z_new)) / n
            dual = rho * float(np.linalg.norm(z_new - z)) / n
            obj = float(z_new.sum())
            drift = abs(obj - prev_obj) / max(1.0, abs(obj))
            prev_obj = obj
            res = max(primal, dual)
            if res < stop and drift < stop:
                z = z_new
                converged = True
                break
        z = z_new
    obj_x = float(x.sum())
    obj_z = float(z.sum())
    value = (obj_x + obj_z) / 2
    gap = max(res, abs(obj_x - obj_z) / max(1.0, abs(value)))
    return ThetaResult(value, gap, "sdp", converged)


def _circulant_first_row(graph: InducedGraph) -> np.ndarray:
    """First adjacency row, verified to generate the whole matrix cyclically."""
    adj = np.asarray(graph.adjacency)
    n = graph.n
    row = adj[0]
    shifts = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    if not np.array_equal(adj, row[(shifts - 2 * np.arange(n)[:, None]) % n]):
        # entry (i, j) must equal row[(j - i) mod n]
        expected = row[(np.arange(n)[None, :] - np.arange(n)[:, None]) % n]
        if not np.array_equal(adj, expected):
            raise ValueError("graph is not circulant in its stored vertex order")
    return row


def theta_circulant_lp(graph: InducedGraph, tol: float = 1e-9) -> ThetaResult:
    """Lovász theta of a circulant graph via its Fourier-diagonalized LP."""
    n = graph.n
    if n == 0:
        return ThetaResult(0.0, 0.0, "lp-circulant")
    row = _circulant_first_row(graph)
    reps = [d for d in range(1, n // 2 + 1) if not row[d]]
    if not reps:
        return ThetaResult(1.0, 0.0, "lp-circulant")
    mult = np.array([1.0 if 2 * d == n else 2.0 for d in reps])
    ms = np.arange(n // 2 + 1)
    # lambda_m = 1/n + sum_d c_d mult_d cos(2 pi m d / n) >= 0
    w = mult[None, :] * np.cos(2 * np.pi * ms[:, None] * np.array(reps)[None, :] / n)
    res = linprog(c=-n * mult, A_ub=-w, b_ub=np.full(len(ms), 1.0 / n),
                  bounds=[(None, None)] * len(reps), method="highs")
    if not res.success:
        return ThetaResult(math.nan, math.inf, "lp-circulant", converged=False)
    value = 1.0 + float(n * mult @ res.x)
    # feasibility residual over the full eigenvalue list
    lam = 1.0 / n + (mult[None, :] * np.cos(
        2 * np.pi * np.arange(n)[:, None] * np.array(reps)[None, :] / n)) @ res.x
    gap = max(0.0, -float(lam.min()))
    return ThetaResult(value, gap, "lp-circulant", converged=gap <= max(tol, 1e-8))


def theta_localization2_bound(field: PrimeField, tol: float = 1e-4) -> _bounds.BoundReport:
    """alpha(G_p) <= 2 + theta of the canonical degree-2 localization."""
    if field.p > 800:
        raise GuardError("the degree-2 theta experiment is guarded at p <= 800")
    rep = enumerate_localizations(field, 2)[0]
    g = localize(build_paley(field), rep)
    r = theta_sdp(g, tol)
    note = f"residual={r.gap:.2e}" + ("" if r.converged else ";not-converged")
    return _bounds.BoundReport(field.p, "theta-loc2", 2, 2.0 + r.value, note=note)


def theta_paley(field: PrimeField, tol: float = 1e-4) -> ThetaResult:
    """theta of the full Paley graph (equals sqrt(p) for these graphs)."""
    return theta_sdp(build_paley(field), tol)
