"""Cyclic ("necklace") character sums by four independent routes.

The sum attached to subsets Z_1, ..., Z_k of F_p is

    Sigma = sum over x_1..x_k of chi(x_2-x_1) ... chi(x_1-x_k)
            * prod_i prod_{z in Z_i} chi(x_i - z),

equal to the trace of D_1 S D_2 S ... D_k S where S is the +-1 Paley
adjacency and D_i the diagonal of prod_{z in Z_i} chi(x - z).  Routes:

  * necklace_bruteforce    - literal sum over all p^k tuples (exact integers)
  * necklace_trace         - trace form, S applied as a circular convolution
  * degree1_jacobi_moment  - power sums of Jacobi sums over the dual group
  * degree1_kloosterman_moment - quadratic-twisted Kloosterman moments

plus the restriction of every coordinate to F_p^x and its expansion into a
constrained sum of Gauss-angle products (gauss_reduction_eval).

Every Sigma is an integer (a sum of products of chi values); computed values
are snapped to the nearest integer when within 1e-4 and otherwise flagged as
numerically invalid rather than rounded.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import GuardError, NumericallyInvalid
from .field import PrimeField, kloosterman_table
from .paley import smallest_nonresidue

BRUTE_GUARD = 10 ** 8
TRACE_P_LIMIT = 5000
TRACE_K_LIMIT = 12
REDUCTION_GUARD = 10 ** 7
SNAP_TOL = 1e-4


@dataclass(frozen=True)
class NecklaceSpec:
    """k non-empty subsets of F_p defining one cyclic character sum."""

    zs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.zs:
            raise ValueError("need at least one subset")
        norm = tuple(tuple(sorted(set(int(z) for z in zz))) for zz in self.zs)
        if any(not zz for zz in norm):
            raise ValueError("every Z_i must be non-empty")
        object.__setattr__(self, "zs", norm)

    @property
    def k(self) -> int:
        return len(self.zs)

    @property
    def degree(self) -> int:
        return len(set().union(*map(set, self.zs)))

    def label(self) -> str:
        return "|".join(";".join(str(z) for z in zz) for zz in self.zs)


def spec_of(zs) -> NecklaceSpec:
    return zs if isinstance(zs, NecklaceSpec) else NecklaceSpec(tuple(tuple(z) for z in zs))


def snap_integer(value: float, tol: float = SNAP_TOL) -> float:
    nearest = round(value)
    if abs(value - nearest) > tol:
        raise NumericallyInvalid(
            f"value {value!r} is {abs(value - nearest):.2e} from an integer "
            f"(tolerance {tol}); refusing to round")
    return float(nearest)


def _diagonal(field: PrimeField, zz: tuple[int, ...]) -> np.ndarray:
    """prod_{z in Z} chi(x - z) over all x, as an int8 vector."""
    x = np.arange(field.p, dtype=np.int64)
    d = np.ones(field.p, dtype=np.int8)
    for z in zz:
        d = d * field.legendre[(x - z) % field.p]
    return d


def necklace_bruteforce(field: PrimeField, zs, restrict_nonzero: bool = False) -> float:
    """Literal evaluation over all tuples; exact integer arithmetic.

    restrict_nonzero confines every coordinate to F_p^x.
    """
    spec = spec_of(zs)
    p, k = field.p, spec.k
    if p ** k > BRUTE_GUARD:
        raise GuardError(f"p^k = {p}^{k} exceeds {BRUTE_GUARD}; use necklace_trace")
    chi = field.legendre.astype(np.int64)
    diags = [_diagonal(field, zz).astype(np.int64) for zz in spec.zs]
    lo = 1 if restrict_nonzero else 0
    if k == 1:
        return float(sum(int(chi[0]) * int(diags[0][x]) for x in range(lo, p)))

    axes = np.meshgrid(*([np.arange(lo, p, dtype=np.int64)] * (k - 1)), indexing="ij")
    inner = [ax.ravel() for ax in axes]  # x_2 .. x_k
    mid = np.ones(inner[0].shape, dtype=np.int64)
    for i in range(k - 2):
        mid *= chi[(inner[i + 1] - inner[i]) % p]
    for i in range(k - 1):
        mid *= diags[i + 1][inner[i]]
    total = 0
    for x1 in range(lo, p):
        w = int(diags[0][x1])
        if w == 0:
            continue
        total += w * int(np.sum(mid * chi[(inner[0] - x1) % p] * chi[(x1 - inner[-1]) % p]))
    return float(total)


def _apply_sign_adjacency(field: PrimeField, block: np.ndarray, s_hat: np.ndarray) -> np.ndarray:
    """Multiply the +-1 circulant adjacency into a block of column vectors."""
    return np.fft.irfft(np.fft.rfft(block, axis=0) * s_hat[:, None], n=field.p, axis=0)


def necklace_trace(field: PrimeField, zs, snap: bool = True,
                   restrict_nonzero: bool = False) -> float:
    """Trace evaluation: propagate basis columns through k diagonal-then-
    circulant multiplies and sum the diagonal of the product."""
    spec = spec_of(zs)
    p, k = field.p, spec.k
    if p > TRACE_P_LIMIT or k > TRACE_K_LIMIT:
        raise GuardError(
            f"necklace_trace guarded at p <= {TRACE_P_LIMIT}, k <= {TRACE_K_LIMIT}")
    diags = [_diagonal(field, zz).astype(np.float64) for zz in spec.zs]
    if restrict_nonzero:
        for d in diags:
            d[0] = 0.0
    s_hat = np.fft.rfft(field.legendre.astype(np.float64))
    block_size = max(1, min(p, 2_000_000 // p))
    total = 0.0
    for start in range(0, p, block_size):
        cols = np.arange(start, min(start + block_size, p))
        block = np.zeros((p, len(cols)))
        block[cols, np.arange(len(cols))] = 1.0
        for i in range(k - 1, -1, -1):
            block = _apply_sign_adjacency(field, block, s_hat)
            block *= diags[i][:, None]
        total += float(block[cols, np.arange(len(cols))].sum())
    return snap_integer(total) if snap else total


def jacobi_legendre_table(field: PrimeField) -> np.ndarray:
    """J(chi, psi_t) for every character index t, via one length-(p-1) DFT
    of chi(1 - g^j)."""
    p = field.p
    b = field.legendre[(1 - field.powers) % p].astype(np.float64)
    return np.fft.ifft(b) * (p - 1)


def degree1_jacobi_moment(field: PrimeField, k: int) -> float:
    """sum over the dual group of J(chi, psi)^k; equals the all-singleton
    necklace sum for any pinned point."""
    if k < 2:
        raise ValueError("k must be >= 2")
    total = np.sum(jacobi_legendre_table(field) ** k)
    if abs(total.imag) > 1e-8 * field.p ** (k / 2):
        raise NumericallyInvalid(f"imaginary residue {total.imag:.2e} in Jacobi moment")
    return float(total.real)


def degree1_kloosterman_moment(field: PrimeField, k: int) -> float:
    """(p-1) p^{-k/2} sum_b chi(b) |K_k(b)|^2; same target as the Jacobi route."""
    if k < 2:
        raise ValueError("k must be >= 2")
    p = field.p
    tab = kloosterman_table(field, k)[1:]
    chi = field.legendre[1:].astype(np.float64)
    return float((p - 1) / p ** (k / 2) * np.sum(chi * np.abs(tab) ** 2))


@dataclass(frozen=True)
class BoundedValue:
    value: float
    bound: float

    @property
    def satisfied(self) -> bool:
        return abs(self.value) <= self.bound + 1e-6


def degree2_special(field: PrimeField, k: int, z: int, z_prime: int) -> BoundedValue:
    """The all-equal doubleton sum Sigma({z,z'},...,{z,z'}) with its
    k p^{(k+1)/2} + 2^k p^{k/2} bound."""
    p = field.p
    z, z_prime = z % p, z_prime % p
    if z == z_prime:
        raise ValueError("z and z' must be distinct (the degree collapses)")
    val = necklace_trace(field, [(z, z_prime)] * k)
    return BoundedValue(val, k * p ** ((k + 1) / 2) + 2 ** k * p ** (k / 2))


def restricted_necklace(field: PrimeField, zs) -> float:
    """Sigma with every coordinate restricted to F_p^x."""
    spec = spec_of(zs)
    if field.p ** spec.k <= BRUTE_GUARD:
        return necklace_bruteforce(field, spec, restrict_nonzero=True)
    return necklace_trace(field, spec, restrict_nonzero=True)


def gauss_reduction_eval(field: PrimeField, zs) -> float:
    """The restricted sum as a constrained character-side expansion.

    Every chi(x - z) and every cycle factor is Fourier-expanded into Jacobi
    sums against the dual group; the surviving coordinate sums force a
    character chain, leaving one free character phi and the Z-characters
    psi_ij constrained by prod psi_ij = chi^k (resolved by eliminating the
    first one).  Requires 0 outside every Z_i; shift the configuration first
    otherwise.
    """
    spec = spec_of(zs)
    p, k = field.p, spec.k
    n = p - 1
    if any(0 in zz for zz in spec.zs):
        raise ValueError("requires 0 not in any Z_i; translate the sets first "
                         "(Sigma is shift-invariant)")
    positions = [(i, z) for i, zz in enumerate(spec.zs) for z in zz]
    m_total = len(positions)
    if n ** m_total > REDUCTION_GUARD:
        raise GuardError(f"(p-1)^{m_total} exceeds {REDUCTION_GUARD}")

    half = n // 2
    jt = jacobi_legendre_table(field)
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    dlog = field.dlog
    f_idx = np.arange(n)

    prefactor = 1
    for _, z in positions:
        prefactor *= int(field.legendre[z])
    if prefactor == 0:
        raise AssertionError("unreachable: z = 0 was excluded above")

    total = 0j
    for assign in itertools.product(range(n), repeat=m_total - 1):
        t_first = (k * half - sum(assign)) % n
        ts = (t_first,) + assign
        weight = 1 + 0j
        for (pos, t) in zip(positions, ts):
            weight *= roots[(t * int(dlog[pos[1]])) % n] * jt[t]
        per_slot = [0] * k
        for (i, _), t in zip(positions, ts):
            per_slot[i] += t
        chain = jt[f_idx]
        suffix = 0
        for step in range(1, k):
            suffix += per_slot[k - 1 - step]
            chain = chain * jt[(f_idx + step * half - suffix) % n]
        total += weight * chain.sum()

    value = prefactor * total / n ** m_total
    if abs(value.imag) > 1e-6 * max(1.0, abs(value.real)):
        raise NumericallyInvalid(f"imaginary residue {value.imag:.2e} in reduction")
    return float(value.real)


def trivial_bound(p: int, k: int) -> float:
    """|Sigma| <= p^{k/2 + 1}, from the operator norm of the sign adjacency."""
    return p ** (k / 2 + 1)


def degree1_bound(p: int, k: int) -> float:
    """|Sigma| <= k p^{(k+1)/2} for all-equal singleton configurations."""
    return k * p ** ((k + 1) / 2)


def scan_configurations(field: PrimeField, a: int, k: int):
    """Canonical degree <= a set families, one per affine-scaling orbit.

    Translation pins 0 into the union; multiplication by a residue (a graph
    automorphism) pins the second element to 1 or the smallest non-residue.
    """
    if a == 1:
        yield NecklaceSpec(((0,),) * k)
        return
    seen = set()
    for c in (1, smallest_nonresidue(field)):
        choices = ((0,), (c,), (0, c))
        for combo in itertools.product(choices, repeat=k):
            spec = NecklaceSpec(combo)
            if spec.zs not in seen:
                seen.add(spec.zs)
                yield spec


def necklace_scan(field: PrimeField, a: int, k: int) -> float:
    """max over canonical degree <= a families of |Sigma| / p^{k/2 + 1}."""
    if a > 2 or k > 6 or field.p > 1000:
        raise GuardError("scan guarded at a <= 2, k <= 6, p <= 1000")
    norm = trivial_bound(field.p, k)
    best = 0.0
    for spec in scan_configurations(field, a, k):
        val = abs(necklace_trace(field, spec, snap=False))
        best = max(best, val / norm)
    return best
