"""Reference spectral laws and distribution distances.

Kesten-McKay KM(v) has continuous density

    v sqrt(4(v-1) - x^2) / (2 pi (v^2 - x^2))   on |x| <= 2 sqrt(v-1),

plus, when v < 2, atoms of mass (2-v)/2 at both endpoints +-v.  Wachter's
MANOVA(alpha, beta) law lives on [r_-, r_+] with atoms at 0 and 1; pushing
its conditional-on-nonzero part through x -> (2/beta)(x - 1/2) recovers
KM(1/beta) when alpha = 1/2, which manova_to_km_deviation verifies
pointwise.

The closed-form KM CDF (v >= 2) is

    1/2 + (v/2pi) asin(x / 2sqrt(v-1))
        - ((v-2)/4pi) [atan(A+) + atan(A-)],
    A+- = (v x +- 4(v-1)) / ((v-2) sqrt(4(v-1) - x^2)),

with the arctan terms read as zero at v = 2.  The arguments blow up at the
support edges, so evaluation nudges x inward by 1e-12 before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

_EDGE_NUDGE = 1e-12


@dataclass(frozen=True)
class KestenMcKay:
    v: float

    def __post_init__(self):
        if self.v < 1:
            raise ValueError("KM parameter must be >= 1")

    @property
    def edge(self) -> float:
        return 2 * math.sqrt(self.v - 1)

    def density(self, x):
        """Continuous part only; atoms (v < 2) are reported separately."""
        x = np.asarray(x, dtype=float)
        v = self.v
        inside = np.abs(x) < self.edge
        out = np.zeros_like(x)
        xs = x[inside]
        out[inside] = v * np.sqrt(4 * (v - 1) - xs ** 2) / (2 * np.pi * (v ** 2 - xs ** 2))
        return out if out.ndim else float(out)

    def atoms(self) -> list[tuple[float, float]]:
        if self.v < 2:
            m = (2 - self.v) / 2
            return [(-self.v, m), (self.v, m)]
        return []

    def cdf(self, x: float) -> float:
        v = self.v
        if v >= 2:
            e = self.edge
            if x <= -e:
                return 0.0
            if x >= e:
                return 1.0
            xn = min(max(x, -e + _EDGE_NUDGE), e - _EDGE_NUDGE)
            val = 0.5 + v / (2 * np.pi) * math.asin(xn / e)
            if v > 2:
                root = math.sqrt(4 * (v - 1) - xn ** 2)
                ap = (v * xn + 4 * (v - 1)) / ((v - 2) * root)
                am = (v * xn - 4 * (v - 1)) / ((v - 2) * root)
                val -= (v - 2) / (4 * np.pi) * (math.atan(ap) + math.atan(am))
            return min(max(val, 0.0), 1.0)
        # v < 2: quadrature of the continuous part plus endpoint atoms
        total = sum(m for a, m in self.atoms() if a <= x)
        lo = -self.edge
        if x > lo:
            hi = min(x, self.edge)
            total += quad(self.density, lo, hi, epsabs=1e-9, limit=200)[0]
        return min(max(total, 0.0), 1.0)

    def cdf_left(self, x: float) -> float:
        jump = sum(m for a, m in self.atoms() if a == x)
        return self.cdf(x) - jump


@dataclass(frozen=True)
class Manova:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (0 < self.alpha < 1 and 0 < self.beta < 1):
            raise ValueError("MANOVA parameters must lie in (0, 1)")

    @property
    def edges(self) -> tuple[float, float]:
        return manova_edges(self.alpha, self.beta)

    def density(self, x):
        """Continuous part; atoms at 0 and 1 are reported separately."""
        x = np.asarray(x, dtype=float)
        rm, rp = self.edges
        inside = (x > rm) & (x < rp)
        out = np.zeros_like(x)
        xs = x[inside]
        out[inside] = np.sqrt((rp - xs) * (xs - rm)) / (2 * np.pi * xs * (1 - xs))
        return out if out.ndim else float(out)

    def atoms(self) -> list[tuple[float, float]]:
        out = []
        m0 = 1 - min(self.alpha, self.beta)
        m1 = max(self.alpha + self.beta - 1, 0.0)
        if m0 > 0:
            out.append((0.0, m0))
        if m1 > 0:
            out.append((1.0, m1))
        return out


def km_density(v: float, x) -> float:
    return KestenMcKay(v).density(x)


def km_cdf(v: float, x: float) -> float:
    return KestenMcKay(v).cdf(x)


def manova_edges(alpha: float, beta: float) -> tuple[float, float]:
    """Support endpoints r_-+; the two printed forms must agree to 1e-12."""
    s = alpha + beta - 2 * alpha * beta
    d = 2 * math.sqrt(alpha * (1 - alpha) * beta * (1 - beta))
    rm, rp = s - d, s + d
    u = math.sqrt(alpha * (1 - beta))
    w = math.sqrt(beta * (1 - alpha))
    alt_m, alt_p = (u - w) ** 2, (u + w) ** 2
    if abs(rm - alt_m) > 1e-12 or abs(rp - alt_p) > 1e-12:
        raise AssertionError("the two r_+- forms disagree beyond 1e-12")
    return rm, rp


def manova_to_km_deviation(beta: float, grid=None) -> float:
    """Max pointwise gap between the mapped MANOVA(1/2, beta) and KM(1/beta).

    The continuous part of MANOVA(1/2, beta), conditioned on being non-zero,
    is pushed through x -> (2/beta)(x - 1/2) and compared with the KM(1/beta)
    density on a grid over the open support.
    """
    if not 0 < beta <= 0.5:
        raise ValueError("requires beta <= 1/2")
    v = 1 / beta
    km = KestenMcKay(v)
    if grid is None:
        e = km.edge
        grid = np.linspace(-e + 1e-9, e - 1e-9, 1001)
    man = Manova(0.5, beta)
    cond_mass = beta  # continuous mass of MANOVA(1/2, beta) for beta <= 1/2
    x = beta * grid / 2 + 0.5
    pushed = man.density(x) * (beta / 2) / cond_mass
    return float(np.max(np.abs(pushed - km.density(grid))))


@dataclass(frozen=True)
class Esd:
    """Empirical spectral distribution: sorted eigenvalues plus an affine scale."""

    values: np.ndarray
    scale: tuple[float, float] = (1.0, 0.0)

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float))
        if vals.size and not np.all(np.isfinite(vals)):
            raise ValueError("eigenvalues must be finite")
        object.__setattr__(self, "values", vals)
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def scaled_values(self) -> np.ndarray:
        m, b = self.scale
        return m * self.values + b

    def cdf(self, x: float) -> float:
        return np.searchsorted(self.scaled_values, x, side="right") / self.n

    def cdf_left(self, x: float) -> float:
        return np.searchsorted(self.scaled_values, x, side="left") / self.n

    def atoms(self) -> list[tuple[float, float]]:
        vals, counts = np.unique(self.scaled_values, return_counts=True)
        return [(float(v), c / self.n) for v, c in zip(vals, counts)]


def kolmogorov_distance(esd: Esd, law) -> float:
    """sup_x |F_esd(x) - F_law(x)|, exact over the jump points of both sides.

    The supremum of the difference of a step function and a piecewise
    continuous CDF is attained at a jump of one of them, approached from the
    left or right; both one-sided values are checked at every candidate.
    """
    if esd.n == 0:
        raise ValueError("empty spectrum")
    pts = sorted({float(x) for x in esd.scaled_values}
                 | {float(a) for a, _ in law.atoms()})
    law_left = getattr(law, "cdf_left", law.cdf)
    best = 0.0
    for x in pts:
        best = max(best,
                   abs(esd.cdf(x) - law.cdf(x)),
                   abs(esd.cdf_left(x) - law_left(x)))
    return best
