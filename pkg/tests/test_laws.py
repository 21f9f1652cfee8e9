"""Reference laws: densities, CDFs, transforms, Kolmogorov distance."""

import math
import random

import numpy as np
import pytest
from scipy.integrate import quad

from paleylab.laws import (
    Esd,
    KestenMcKay,
    Manova,
    km_cdf,
    km_density,
    kolmogorov_distance,
    manova_edges,
    manova_to_km_deviation,
)


def test_km_density_values():
    # KM(2) is the arcsine law 1/(pi sqrt(4 - x^2))
    assert abs(km_density(2, 0.0) - 1 / (2 * math.pi)) < 1e-12
    assert km_density(2, 3.0) == 0.0
    xs = np.linspace(-3, 3, 41)
    assert np.allclose(km_density(4, xs), km_density(4, -xs))


def test_km_density_integrates_to_one():
    for v in (2.0, 4.0, 8.0):
        law = KestenMcKay(v)
        e = law.edge
        mass, _ = quad(law.density, -e, e, epsabs=1e-9, limit=300,
                       points=[-e, 0, e])
        mass += sum(m for _, m in law.atoms())
        assert abs(mass - 1) < 1e-6
    # v < 2 carries atoms at +-v of mass (2-v)/2
    law = KestenMcKay(1.5)
    assert law.atoms() == [(-1.5, 0.25), (1.5, 0.25)]


def test_km_cdf_against_quadrature():
    for v in (2.0, 4.0, 8.0):
        law = KestenMcKay(v)
        e = law.edge
        for x in np.linspace(-e, e, 17):
            ref, _ = quad(law.density, -e, x, epsabs=1e-9, limit=300)
            assert abs(law.cdf(x) - ref) < 1e-6, (v, x)


def test_km_cdf_examples():
    assert abs(km_cdf(2, 0.0) - 0.5) < 1e-12
    assert abs(km_cdf(4, 2 * math.sqrt(3)) - 1.0) < 1e-12
    assert abs(km_cdf(4, 0.0) - 0.5) < 1e-9
    for x in np.linspace(-3, 3, 21):
        assert abs(km_cdf(4, x) + km_cdf(4, -x) - 1) < 1e-9


def test_km_cdf_monotone_and_edges():
    for v in (2.0, 4.0):
        law = KestenMcKay(v)
        grid = np.linspace(-law.edge - 0.5, law.edge + 0.5, 1000)
        vals = [law.cdf(x) for x in grid]
        assert all(b - a >= -1e-12 for a, b in zip(vals, vals[1:]))
        assert vals[0] == 0.0 and vals[-1] == 1.0


def test_km_moments():
    # mean 0, variance v (continuous part plus atoms)
    for v in (2.0, 4.0, 8.0):
        law = KestenMcKay(v)
        e = law.edge
        mean, _ = quad(lambda x: x * law.density(x), -e, e, epsabs=1e-9, limit=300)
        var, _ = quad(lambda x: x * x * law.density(x), -e, e, epsabs=1e-9, limit=300)
        var += sum(m * a * a for a, m in law.atoms())
        assert abs(mean) < 1e-8
        assert abs(var - v) < 1e-4


def test_km_cdf_below_two_includes_atoms():
    law = KestenMcKay(1.5)
    assert abs(law.cdf(-1.5) - 0.25) < 1e-9
    assert law.cdf(-1.51) == 0.0
    assert abs(law.cdf(1.5) - 1.0) < 1e-9
    assert abs(law.cdf_left(1.5) - 0.75) < 1e-6


def test_manova_edges():
    assert manova_edges(0.5, 0.5) == (pytest.approx(0.0, abs=1e-12),
                                      pytest.approx(1.0, abs=1e-12))
    rm, rp = manova_edges(0.5, 0.25)
    assert abs(rm - 0.066987) < 1e-5
    assert abs(rp - 0.933013) < 1e-5
    # symmetric in the two parameters
    for a, b in [(0.3, 0.7), (0.2, 0.45)]:
        assert manova_edges(a, b) == pytest.approx(manova_edges(b, a), abs=1e-12)


def test_manova_total_mass():
    for a, b in [(0.5, 0.25), (0.5, 0.5), (0.3, 0.6), (0.7, 0.8)]:
        law = Manova(a, b)
        rm, rp = law.edges
        mass, _ = quad(law.density, rm, rp, epsabs=1e-10, limit=300,
                       points=[rm, rp])
        mass += sum(m for _, m in law.atoms())
        assert abs(mass - 1) < 1e-6, (a, b)


def test_manova_to_km():
    assert manova_to_km_deviation(0.5) < 1e-6
    assert manova_to_km_deviation(0.25) < 1e-6
    # support edges map onto +-2 sqrt(1/beta - 1)
    for beta in (0.5, 0.25, 0.125):
        rm, rp = manova_edges(0.5, beta)
        v = 1 / beta
        assert abs((2 / beta) * (rp - 0.5) - 2 * math.sqrt(v - 1)) < 1e-12
        assert abs((2 / beta) * (rm - 0.5) + 2 * math.sqrt(v - 1)) < 1e-12


def test_kolmogorov_quantile_grid():
    # empirical measure on the KM(2) quantile grid converges like 1/n
    law = KestenMcKay(2)
    n = 10 ** 4
    qs = (np.arange(n) + 0.5) / n
    xs = 2 * np.sin(np.pi * (qs - 0.5))  # arcsine quantile function
    d = kolmogorov_distance(Esd(xs), law)
    assert d <= 1 / n + 1e-4


def test_kolmogorov_point_masses_and_self():
    a = Esd(np.array([0.0]))
    b = Esd(np.array([1.0]))
    assert kolmogorov_distance(a, b) == 1.0
    e = Esd(np.array([0.3, 0.7, 1.1]))
    assert kolmogorov_distance(e, e) == 0.0


def test_kolmogorov_triangle_inequality():
    rng = random.Random(5)
    for _ in range(20):
        xs = [Esd(np.array([rng.uniform(-2, 2) for _ in range(rng.randrange(1, 8))]))
              for _ in range(3)]
        d01 = kolmogorov_distance(xs[0], xs[1])
        d12 = kolmogorov_distance(xs[1], xs[2])
        d02 = kolmogorov_distance(xs[0], xs[2])
        assert d02 <= d01 + d12 + 1e-12


def test_kolmogorov_rejects_empty():
    with pytest.raises(ValueError):
        kolmogorov_distance(Esd(np.array([])), KestenMcKay(2))


def test_esd_scale():
    e = Esd(np.array([1.0, 2.0]), scale=(2.0, -1.0))
    assert list(e.scaled_values) == [1.0, 3.0]
