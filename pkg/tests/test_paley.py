"""Paley graph construction, localization, and clique machinery."""

import itertools
import random

import numpy as np
import pytest

from paleylab.errors import GuardError
from paleylab.field import make_field
from paleylab.paley import (
    build_paley,
    degree_extremes,
    edge_list_text,
    enumerate_localizations,
    exact_clique_number,
    exact_independence_number,
    independent_set,
    localization_vertices,
    localize,
    localized_nonresidues,
    quartic_subgraph,
    sample_random_subgraph,
    smallest_nonresidue,
)


def brute_clique_number(graph):
    """Independent oracle: check all vertex subsets of increasing size."""
    adj = graph.adjacency
    n = graph.n
    best = 1 if n else 0
    size = 2
    while True:
        found = False
        for combo in itertools.combinations(range(n), size):
            if all(adj[i, j] for i, j in itertools.combinations(combo, 2)):
                found = True
                break
        if not found:
            return best
        best = size
        size += 1


def test_paley_p5_is_pentagon():
    g = build_paley(make_field(5))
    edges = {(i, j) for i in range(5) for j in range(5) if g.adjacency[i, j] and i < j}
    assert edges == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


def test_paley_p13_regular_and_edges():
    g = build_paley(make_field(13))
    assert all(d == 6 for d in g.degrees)
    assert g.adjacency[0, 3] and not g.adjacency[0, 2]
    assert not g.adjacency.diagonal().any()
    assert np.array_equal(g.adjacency, g.adjacency.T)


def test_automorphism_invariance():
    # x -> a x + b with chi(a) = +1 preserves adjacency
    rng = random.Random(11)
    for p in (13, 29, 61, 101):
        f = make_field(p)
        g = build_paley(f)
        residues = [x for x in range(1, p) if f.legendre[x] == 1]
        for _ in range(100):
            a = rng.choice(residues)
            b = rng.randrange(p)
            x, y = rng.randrange(p), rng.randrange(p)
            fx, fy = (a * x + b) % p, (a * y + b) % p
            assert g.adjacency[x, y] == g.adjacency[fx, fy]


def test_localize_p13_zero():
    f = make_field(13)
    loc = localize(build_paley(f), (0,))
    assert list(loc.vertices) == [2, 5, 6, 7, 8, 11]
    assert loc.provenance.label() == "localization(0)"


def test_localize_p5_zero():
    f = make_field(5)
    loc = localize(build_paley(f), (0,))
    assert list(loc.vertices) == [2, 3]
    assert loc.edge_count == 1  # chi(1) = +1


def test_localize_rejects_dependent_set():
    f = make_field(13)
    with pytest.raises(ValueError):
        localize(build_paley(f), (0, 3))  # 3 is a residue: adjacent to 0


def test_localization_size_bound():
    # | |V| - p/2^a | <= (a-1) sqrt(p) + a/2
    for p in (13, 29, 101, 229):
        f = make_field(p)
        for a in (1, 2, 3):
            for s in enumerate_localizations(f, a):
                nv = len(localization_vertices(f, s.elements))
                assert abs(nv - p / 2 ** a) <= (a - 1) * np.sqrt(p) + a / 2 + 1e-9


def test_every_localization_vertex_extends_independent_set():
    f = make_field(29)
    for a in (1, 2):
        for s in enumerate_localizations(f, a):
            for x in localization_vertices(f, s.elements):
                independent_set(f, s.elements + (int(x),))  # must not raise


def test_enumerate_localizations():
    f = make_field(13)
    assert enumerate_localizations(f, 1)[0].elements == (0,)
    q = smallest_nonresidue(f)
    assert enumerate_localizations(f, 2) == [independent_set(f, (0, q))]
    for s in enumerate_localizations(f, 3):
        independent_set(f, s.elements)  # pairwise non-adjacent by construction
    with pytest.raises(GuardError):
        enumerate_localizations(f, 4)


def test_localized_nonresidues_matches_localize():
    f = make_field(29)
    a = localized_nonresidues(f)
    b = localize(build_paley(f), (0,))
    assert sorted(a.vertices) == sorted(b.vertices)
    # same edge multiset regardless of vertex order
    ea = {tuple(sorted((int(a.vertices[i]), int(a.vertices[j]))))
          for i in range(a.n) for j in range(i + 1, a.n) if a.adjacency[i, j]}
    eb = {tuple(sorted((int(b.vertices[i]), int(b.vertices[j]))))
          for i in range(b.n) for j in range(i + 1, b.n) if b.adjacency[i, j]}
    assert ea == eb


def test_quartic_subgraph():
    f13 = make_field(13)
    q = quartic_subgraph(f13)
    assert list(q.vertices) == [3, 9, 1]  # 2^4, 2^8, 2^12 mod 13
    assert q.n == 3
    assert quartic_subgraph(make_field(17)).n == 4
    # vertex set = fourth powers
    assert sorted(q.vertices) == sorted({pow(x, 4, 13) for x in range(1, 13)})


def test_random_subgraph_determinism_and_degenerate_beta():
    f = make_field(13)
    g1 = sample_random_subgraph(f, 0.5, seed=1)
    g2 = sample_random_subgraph(f, 0.5, seed=1)
    assert np.array_equal(g1.vertices, g2.vertices)
    assert sample_random_subgraph(f, 1.0, seed=3).n == 13


def test_random_subgraph_count_concentration():
    f = make_field(4001)
    g = sample_random_subgraph(f, 0.25, seed=7)
    sigma = np.sqrt(4001 * 0.25 * 0.75)
    assert abs(g.n - 4001 * 0.25) <= 4 * sigma


def test_clique_numbers_small_paley():
    for p, omega in [(5, 2), (13, 3), (17, 3), (29, 4)]:
        g = build_paley(make_field(p))
        assert exact_clique_number(g) == omega
        assert brute_clique_number(g) == omega


def test_self_complementarity_alpha_equals_omega():
    for p in (5, 13, 17, 29, 37, 41, 53, 61):
        g = build_paley(make_field(p))
        assert exact_independence_number(g) == exact_clique_number(g)


def test_clique_guard():
    f = make_field(521)
    with pytest.raises(GuardError):
        exact_clique_number(build_paley(f))


def test_degree_extremes_bounds():
    # p/2^{a+1} - a sqrt(p) - (a+1)/2 <= deg <= p/2^{a+1} + a sqrt(p) + (a+1)/2
    for p in (13, 101, 229):
        f = make_field(p)
        g = build_paley(f)
        for a in (1, 2, 3):
            for s in enumerate_localizations(f, a):
                loc = localize(g, s)
                if loc.n == 0:
                    continue
                lo, hi = degree_extremes(loc)
                assert lo >= p / 2 ** (a + 1) - a * np.sqrt(p) - (a + 1) / 2 - 1e-9
                assert hi <= p / 2 ** (a + 1) + a * np.sqrt(p) + (a + 1) / 2 + 1e-9


def test_degree_complements_next_localization_size():
    # within the localization, the non-neighbors of x are exactly the
    # vertices extending I + {x}: deg(x) = |V| - 1 - |V(G_{p, I + {x}})|
    f = make_field(101)
    loc = localize(build_paley(f), (0,))
    for i in (0, 3, 10):
        x = int(loc.vertices[i])
        ext = len(localization_vertices(f, (0, x)))
        assert loc.degrees[i] == loc.n - 1 - ext
        # both quantities sit in the same degree window
        assert abs(ext - 101 / 8) <= 2 * np.sqrt(101) + 1.5


def test_edge_list_text():
    f = make_field(5)
    txt = edge_list_text(localize(build_paley(f), (0,)))
    lines = txt.strip().split("\n")
    assert lines[0] == "p 5 a 1 provenance localization(0)"
    assert lines[1] == "vertices 2 3"
    assert lines[2] == "edges"
    assert lines[3] == "2 3"


def test_adjacency_guard():
    f = make_field(20021)
    g = build_paley(f)
    with pytest.raises(GuardError):
        _ = g.adjacency
