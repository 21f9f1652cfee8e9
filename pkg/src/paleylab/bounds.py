"""Upper bounds on the Paley independence number.

The localization pipeline bounds alpha(G_p) by a + max over size-a
independent sets of an inner bound on the localization; with the exact
clique number inside, the pipeline is an equality whenever a <= alpha(G_p).
The spectral inner bound is the Hoffman/Haemers form

    alpha(G) <= |V| (mindeg^2 / (-lambda_min maxdeg) + 1)^{-1},

which simplifies to sqrt(p) on the full Paley graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import PrimeField
from .paley import (
    InducedGraph,
    build_paley,
    enumerate_localizations,
    exact_independence_number,
    localize,
)
from . import theta as _theta


@dataclass(frozen=True)
class BoundReport:
    p: int
    method: str
    a: int
    value: float
    witness: int | None = None  # exact clique number, when computed
    note: str = ""


def haemers_bound(graph: InducedGraph) -> float:
    """Spectral upper bound on alpha(G); |V| for an edgeless graph (vacuous)."""
    n = graph.n
    if n == 0:
        return 0.0
    adj = graph.adjacency.astype(np.float64)
    if not adj.any():
        return float(n)
    lam_min = float(np.linalg.eigvalsh(adj)[0])
    d = graph.degrees
    mindeg, maxdeg = float(d.min()), float(d.max())
    return n / (mindeg ** 2 / (-lam_min * maxdeg) + 1)


_INNER = {
    "haemers": haemers_bound,
    "exact": lambda g: float(exact_independence_number(g)),
    "theta": lambda g: _theta.theta_sdp(g).value,
}


def localization_bound(field: PrimeField, a: int, inner="haemers") -> BoundReport:
    """a + max over canonical size-a independent sets of inner(G_{p,I}).

    Every independent set extending I stays independent inside the
    localization, so the inner quantity is (an upper bound on) the
    localization's independence number; with the exact value inside, the
    pipeline reproduces alpha(G_p) whenever a <= alpha(G_p).
    """
    if callable(inner):
        fn, name = inner, getattr(inner, "__name__", "custom")
    else:
        if inner not in _INNER:
            raise ValueError(f"unknown inner bound {inner!r}; pick from {sorted(_INNER)}")
        fn, name = _INNER[inner], inner
    reps = enumerate_localizations(field, a)
    if not reps:
        raise ValueError(f"no independent sets of size {a} at p = {field.p}: inapplicable")
    full = build_paley(field)
    best = max(fn(localize(full, s)) for s in reps)
    return BoundReport(field.p, f"loc{a}-{name}", a, a + best)


def hanson_petridis_bound(p: int) -> float:
    """alpha(G_p) <= (sqrt(2p - 1) + 1)/2."""
    return (math.sqrt(2 * p - 1) + 1) / 2


def km_edge_bound(a: int, p: int) -> float:
    """Leading-order sqrt(2^a - 1)/2^{a-1} sqrt(p) from the conjectured
    spectral edge of degree-a localizations.

    Non-rigorous: the o(sqrt(p)) correction is unquantified, so this is a
    trend line, not a certified bound.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    return math.sqrt(2 ** a - 1) / 2 ** (a - 1) * math.sqrt(p)
