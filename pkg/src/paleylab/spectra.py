"""Eigenvalue machinery: dense paths, circulant character-sum paths, scaled
empirical spectral distributions, and the centered trace moments that drive
the freeness diagnostics.

The sign adjacency of the full Paley graph splits as sqrt(p) (P+ - P-) with
P+- complementary rank-(p-1)/2 projections, so the full spectrum is known in
closed form.  The localization at {0} and the quartic-residue subgraph are
circulant in the right vertex order, so their spectra come from one discrete
Fourier transform of a first row built out of Legendre evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GuardError
from .field import PrimeField
from .laws import Esd
from .paley import DENSE_VERTEX_LIMIT, InducedGraph, localization_vertices

_IMAG_TOL = 1e-8
TRACE_P_LIMIT = 2000
TRACE_K_LIMIT = 20


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalues with the path that produced them."""

    values: np.ndarray
    p: int
    source: str          # "dense" | "circulant-character"
    label: str = ""

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float))
        object.__setattr__(self, "values", vals)
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.values)


def dense_spectrum(graph: InducedGraph) -> Spectrum:
    """Full symmetric eigendecomposition of the 0/1 adjacency matrix."""
    if graph.n > DENSE_VERTEX_LIMIT:
        raise GuardError(f"dense spectra guarded at {DENSE_VERTEX_LIMIT} vertices")
    vals = np.linalg.eigvalsh(graph.adjacency.astype(np.float64))
    return Spectrum(vals, graph.field.p, "dense", graph.provenance.label())


def _real_fft_spectrum(row: np.ndarray, p: int, label: str) -> Spectrum:
    lam = np.fft.fft(row)
    worst = float(np.max(np.abs(lam.imag))) if len(row) else 0.0
    if worst > _IMAG_TOL:
        raise AssertionError(f"circulant spectrum has imaginary residue {worst:.2e}")
    return Spectrum(lam.real, p, "circulant-character", label)


def circulant_spectrum_paley(field: PrimeField) -> Spectrum:
    """Spectrum of the full Paley graph via its circulant first row."""
    row = (field.legendre == 1).astype(float)
    return _real_fft_spectrum(row, field.p, "full")


def circulant_spectrum_localized(field: PrimeField) -> Spectrum:
    """Spectrum of the localization at {0} from its character-sum first row.

    With vertices ordered g, g^3, ..., g^{p-2}, entry d of the first row is
    (1 - chi(g^{2d} - 1))/2 for d != 0 (and 0 at d = 0, where the Legendre
    table contributes chi(0) = 0 and the self-loop correction cancels the
    1/2), so the (p-1)/2 eigenvalues are one Fourier transform away.
    """
    p = field.p
    n = (p - 1) // 2
    d = np.arange(n)
    s = field.powers[(2 * d) % (p - 1)]
    row = (1 - field.legendre[(s - 1) % p]) / 2.0
    row[0] = 0.0
    return _real_fft_spectrum(row, p, "localization(0)")


def quartic_spectrum(field: PrimeField) -> Spectrum:
    """Spectrum of the quartic-residue subgraph via its circulant first row.

    With vertices g^4, g^8, ..., the first row is 1{g^{4d} - 1 is a residue};
    each eigenvalue appears once per Fourier mode of length (p-1)/4.
    """
    p = field.p
    m = (p - 1) // 4
    d = np.arange(m)
    s = field.powers[(4 * d) % (p - 1)]
    row = (field.legendre[(s - 1) % p] == 1).astype(float)
    return _real_fft_spectrum(row, p, "quartic")


def esd_scaled(spectrum: Spectrum, a: int, drop_perron: bool = False) -> Esd:
    """Scale by 2^{a+1}/sqrt(p), optionally dropping the top (Perron) value."""
    vals = spectrum.values
    if drop_perron:
        vals = vals[:-1]
    return Esd(vals, scale=(2.0 ** (a + 1) / math.sqrt(spectrum.p), 0.0))


def sign_adjacency(field: PrimeField) -> np.ndarray:
    """The +-1 adjacency matrix: entry (x, y) is chi(x - y)."""
    p = field.p
    x = np.arange(p)
    return field.legendre[(x[:, None] - x[None, :]) % p].astype(np.float64)


def paley_projection(field: PrimeField, sign: str) -> np.ndarray:
    """The rank-(p-1)/2 projection P(+) or P(-): (I - J/p +- S/sqrt(p)) / 2."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    p = field.p
    s = sign_adjacency(field) / math.sqrt(p)
    out = 0.5 * (np.eye(p) - np.full((p, p), 1.0 / p) + (s if sign == "+" else -s))
    return out


@dataclass(frozen=True)
class TraceMoment:
    k: int
    value: float          # Tr((P - I/2)(E - I/2^a))^k
    normalized: float     # value / p
    edge_weighted: float  # (2/sqrt(beta(1-beta)))^k * |value|


def trace_moments(field: PrimeField, indep, k_max: int, sign: str = "+") -> list[TraceMoment]:
    """Centered trace moments of the projection pair, for k = 1 .. k_max.

    P is the Paley projection with the requested sign, recentered by I/2; E
    is the 0/1 diagonal of the localization vertex set, recentered by
    I/2^a.  Computed by dense matrix powers.  The edge-weighted column
    carries the (2/sqrt(beta(1-beta)))^k factor from the extreme-eigenvalue
    criterion, with beta = 2^-a.
    """
    members = tuple(getattr(indep, "elements", indep))
    a = len(members)
    p = field.p
    if p > TRACE_P_LIMIT or k_max > TRACE_K_LIMIT:
        raise GuardError(
            f"trace moments guarded at p <= {TRACE_P_LIMIT}, k <= {TRACE_K_LIMIT}")
    beta = 2.0 ** (-a)
    weight = 2.0 / math.sqrt(beta * (1 - beta))

    centered_p = paley_projection(field, sign) - 0.5 * np.eye(p)
    e_diag = np.full(p, -beta)
    e_diag[localization_vertices(field, members)] += 1.0
    m = centered_p * e_diag[None, :]

    out = []
    power = m
    for k in range(1, k_max + 1):
        if k > 1:
            power = power @ m
        t = float(np.trace(power))
        out.append(TraceMoment(k, t, t / p, weight ** k * abs(t)))
    return out
