"""Spectra: dense vs circulant paths, projections, scaled e.s.d., trace moments."""

import math

import numpy as np
import pytest

from paleylab.errors import GuardError
from paleylab.field import make_field
from paleylab.paley import build_paley, localize, quartic_subgraph
from paleylab.spectra import (
    circulant_spectrum_localized,
    circulant_spectrum_paley,
    dense_spectrum,
    esd_scaled,
    paley_projection,
    quartic_spectrum,
    sign_adjacency,
    trace_moments,
)


def paley_reference_values(p):
    """Closed-form spectrum of the full Paley graph."""
    r = math.sqrt(p)
    return np.sort(np.concatenate([
        np.full((p - 1) // 2, -(r + 1) / 2),
        np.full((p - 1) // 2, (r - 1) / 2),
        [(p - 1) / 2],
    ]))


def test_dense_spectrum_g5():
    s = dense_spectrum(build_paley(make_field(5)))
    expect = np.sort([2, 2 * math.cos(2 * math.pi / 5), 2 * math.cos(2 * math.pi / 5),
                      2 * math.cos(4 * math.pi / 5), 2 * math.cos(4 * math.pi / 5)])
    assert np.allclose(s.values, expect, atol=1e-10)
    assert np.allclose(s.values, paley_reference_values(5), atol=1e-10)


def test_dense_spectrum_g13_and_sum_rules():
    g = build_paley(make_field(13))
    s = dense_spectrum(g)
    assert np.allclose(s.values, paley_reference_values(13), atol=1e-10)
    assert abs(s.values.sum()) < 1e-9
    assert abs((s.values ** 2).sum() - 2 * g.edge_count) < 1e-8


def test_dense_residual_contract():
    # spot-check ||Av - lambda v|| <= 1e-8 ||A|| on an eigenpair
    g = localize(build_paley(make_field(101)), (0,))
    adj = g.adjacency.astype(float)
    w, v = np.linalg.eigh(adj)
    for i in (0, g.n // 2, g.n - 1):
        r = np.linalg.norm(adj @ v[:, i] - w[i] * v[:, i])
        assert r <= 1e-8 * np.abs(w).max()


def test_circulant_full_matches_closed_form():
    for p in (13, 29, 101):
        s = circulant_spectrum_paley(make_field(p))
        assert np.allclose(s.values, paley_reference_values(p), atol=1e-8)


def test_circulant_localized_matches_dense():
    for p in (13, 29, 101, 229):
        f = make_field(p)
        circ = circulant_spectrum_localized(f)
        dense = dense_spectrum(localize(build_paley(f), (0,)))
        assert circ.n == (p - 1) // 2
        assert np.allclose(np.sort(circ.values), np.sort(dense.values), atol=1e-6)


def test_circulant_localized_perron_is_degree():
    f = make_field(229)
    g = localize(build_paley(f), (0,))
    circ = circulant_spectrum_localized(f)
    assert abs(circ.values[-1] - g.degrees.max()) < 1e-6  # regular graph


def test_quartic_matches_dense():
    for p in (13, 17, 29, 101, 229, 997):
        f = make_field(p)
        circ = quartic_spectrum(f)
        dense = dense_spectrum(quartic_subgraph(f))
        assert circ.n == (p - 1) // 4
        assert abs(circ.values.sum()) < 1e-6  # zero trace
        assert np.allclose(np.sort(circ.values), np.sort(dense.values), atol=1e-6)


def test_projection_identities():
    # 1-hat 1-hat^T + P+ + P- = I entrywise, S = sqrt(p)(P+ - P-), P+- idempotent
    for p in (13, 29, 101):
        f = make_field(p)
        pp = paley_projection(f, "+")
        pm = paley_projection(f, "-")
        s = sign_adjacency(f)
        ones = np.full((p, p), 1.0 / p)
        assert np.max(np.abs(ones + pp + pm - np.eye(p))) < 1e-10
        assert np.max(np.abs(math.sqrt(p) * (pp - pm) - s)) < 1e-10
        for proj in (pp, pm):
            assert np.max(np.abs(proj @ proj - proj)) < 1e-10
            assert abs(np.trace(proj) - (p - 1) / 2) < 1e-8
            evals = np.linalg.eigvalsh(proj)
            assert int(np.sum(evals > 0.5)) == (p - 1) // 2


def test_esd_scaled_g13():
    s = dense_spectrum(build_paley(make_field(13)))
    e = esd_scaled(s, a=0, drop_perron=True)
    # closed form scaled by 2/sqrt(13)
    assert np.allclose(np.unique(np.round(e.scaled_values, 4)), [-1.2774, 0.7226])
    # a = 1 doubles the a = 0 scale factor
    e1 = esd_scaled(s, a=1, drop_perron=True)
    assert np.allclose(e1.scaled_values, 2 * e.scaled_values)
    # perron drop removes exactly the maximum
    assert e.n == s.n - 1
    assert e.values.max() < s.values.max()


def test_min_eigenvalue_sanity():
    for p in (101, 229):
        f = make_field(p)
        for members in [(0,), tuple(sorted(map(int, (0, np.flatnonzero(f.legendre == -1)[0]))))]:
            s = dense_spectrum(localize(build_paley(f), members))
            neg_min = -s.values[0]
            assert neg_min <= (p - 1) / 2
            assert neg_min <= math.sqrt(p) + 1
            # sharp interlacing cap from the full graph's bottom eigenvalue
            assert neg_min <= (math.sqrt(p) + 1) / 2 + 1e-9


def test_trace_moment_direct_oracle():
    # T_1 = sum_x P~[x,x] E~[x,x], a plain double sum over the diagonals
    f = make_field(101)
    from paleylab.paley import localization_vertices

    centered = paley_projection(f, "+") - 0.5 * np.eye(101)
    e = np.full(101, -0.5)
    e[localization_vertices(f, (0,))] += 1.0
    direct = float(np.sum(np.diag(centered) * e))
    t = trace_moments(f, (0,), 3, "+")
    assert abs(t[0].value - direct) < 1e-8
    assert t[0].k == 1 and t[2].k == 3
    # moments are real and the normalization is value/p
    assert abs(t[1].normalized - t[1].value / 101) < 1e-15


def test_trace_moment_matrix_oracle():
    # independent check against an explicit matrix power
    f = make_field(29)
    centered = paley_projection(f, "-") - 0.5 * np.eye(29)
    from paleylab.paley import localization_vertices

    e = np.full(29, -0.5)
    e[localization_vertices(f, (0,))] += 1.0
    m = centered @ np.diag(e)
    want = float(np.trace(np.linalg.matrix_power(m, 4)))
    got = trace_moments(f, (0,), 4, "-")[3].value
    assert abs(got - want) < 1e-10


def test_trace_moment_guards():
    f = make_field(13)
    with pytest.raises(GuardError):
        trace_moments(f, (0,), 25)
    with pytest.raises(GuardError):
        trace_moments(make_field(2017), (0,), 3)


def test_trace_moment_trend_with_p():
    # |T_3|/p shrinks as p grows at fixed k, a = 1
    small = trace_moments(make_field(197), (0,), 3)[2]
    big = trace_moments(make_field(1997), (0,), 3)[2]
    assert abs(big.normalized) < abs(small.normalized)
