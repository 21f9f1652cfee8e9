"""Paley graphs, their localizations, and induced-subgraph machinery.

The Paley graph on F_p joins x and y when x - y is a non-zero quadratic
residue (well defined because p = 1 mod 4 makes -1 a residue).  A
localization keeps the vertices non-adjacent to every element of an
independent set I, excluding I itself.  Everything here is immutable after
construction; adjacency matrices are materialized lazily and only up to
6000 vertices (larger spectra go through the circulant paths in spectra.py).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import GuardError
from .field import PrimeField

DENSE_VERTEX_LIMIT = 6000
CLIQUE_VERTEX_LIMIT = 500


@dataclass(frozen=True)
class Provenance:
    kind: str                      # full | localization | quartic | random
    members: tuple[int, ...] = ()  # localization set I
    beta: float | None = None
    seed: int | None = None

    def label(self) -> str:
        if self.kind == "localization":
            return "localization(%s)" % ";".join(str(m) for m in self.members)
        if self.kind == "random":
            return f"random({self.beta};{self.seed})"
        return self.kind


@dataclass(frozen=True)
class IndependentSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("independent set elements must be sorted and distinct")

    def __len__(self):
        return len(self.elements)


def is_independent(field: PrimeField, elements) -> bool:
    """Pairwise non-adjacency: chi(x - y) = -1 for every pair."""
    elems = list(elements)
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if field.legendre[(x - y) % field.p] != -1:
                return False
    return True


def independent_set(field: PrimeField, elements) -> IndependentSet:
    s = IndependentSet(tuple(sorted(set(int(e) % field.p for e in elements))))
    if not is_independent(field, s.elements):
        raise ValueError(f"{s.elements} is not independent in the Paley graph on F_{field.p}")
    return s


@dataclass(frozen=True, eq=False)
class InducedGraph:
    """A vertex subset of F_p with the Paley adjacency, plus provenance."""

    field: PrimeField
    vertices: np.ndarray   # stored order matters for circulant structure
    provenance: Provenance
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.vertices.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def adjacency(self) -> np.ndarray:
        """Boolean adjacency in the stored vertex order (lazily cached)."""
        if "adj" not in self._cache:
            if self.n > DENSE_VERTEX_LIMIT:
                raise GuardError(
                    f"refusing to materialize a {self.n}x{self.n} adjacency "
                    f"(limit {DENSE_VERTEX_LIMIT}); use a circulant path")
            diff = (self.vertices[:, None] - self.vertices[None, :]) % self.field.p
            adj = self.field.legendre[diff] == 1
            adj.setflags(write=False)
            self._cache["adj"] = adj
        return self._cache["adj"]

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def __repr__(self):
        return f"InducedGraph(p={self.field.p}, n={self.n}, {self.provenance.label()})"


def build_paley(field: PrimeField) -> InducedGraph:
    """The full Paley graph on F_p in natural vertex order (circulant)."""
    return InducedGraph(field, np.arange(field.p, dtype=np.int64), Provenance("full"))


def localization_vertices(field: PrimeField, members) -> np.ndarray:
    """Sorted vertex set of the localization at I: chi(x - z) = -1 for all z in I."""
    x = np.arange(field.p, dtype=np.int64)
    mask = np.ones(field.p, dtype=bool)
    for z in members:
        mask &= field.legendre[(x - int(z)) % field.p] == -1
    return x[mask]


def localize(graph: InducedGraph, indep) -> InducedGraph:
    """Induced subgraph on the vertices non-adjacent to every element of I."""
    if graph.provenance.kind != "full":
        raise ValueError("localize expects the full Paley graph")
    f = graph.field
    s = indep if isinstance(indep, IndependentSet) else independent_set(f, indep)
    if not is_independent(f, s.elements):
        raise ValueError(f"{s.elements} is not an independent set")
    verts = localization_vertices(f, s.elements)
    return InducedGraph(f, verts, Provenance("localization", members=s.elements))


def localized_nonresidues(field: PrimeField) -> InducedGraph:
    """The localization at {0} with vertices in generator-power order g, g^3, ...

    Under this order the adjacency matrix is circulant, which the LP route
    to the theta function relies on.  Same graph as localize(..., {0}) up to
    vertex ordering.
    """
    verts = field.powers[1::2].copy()
    return InducedGraph(field, verts, Provenance("localization", members=(0,)))


def smallest_nonresidue(field: PrimeField) -> int:
    return int(np.flatnonzero(field.legendre == -1)[0])


def enumerate_localizations(field: PrimeField, a: int) -> list[IndependentSet]:
    """Canonical independent sets of size a, one per affine-equivalence class.

    a = 1 and a = 2 each have a single class; for a = 3 the normal form is
    {0, q, x} with q the smallest non-residue, deduplicated only by this
    form (no isomorph rejection beyond the affine action).
    """
    if a not in (1, 2, 3):
        raise GuardError(f"localization degree a = {a} unsupported (a <= 3)")
    if a == 1:
        return [IndependentSet((0,))]
    q = smallest_nonresidue(field)
    if a == 2:
        return [IndependentSet((0, q))]
    xs = localization_vertices(field, (0, q))
    return [IndependentSet(tuple(sorted((0, q, int(x))))) for x in xs]


def quartic_subgraph(field: PrimeField) -> InducedGraph:
    """Induced subgraph on the non-zero fourth powers g^4, g^8, ..., g^{p-1}.

    Vertices are stored in that power order, under which the adjacency is
    circulant; the vertex count is (p - 1)/4.
    """
    m = (field.p - 1) // 4
    exps = (4 * np.arange(1, m + 1)) % (field.p - 1)
    return InducedGraph(field, field.powers[exps].copy(), Provenance("quartic"))


def sample_random_subgraph(field: PrimeField, beta: float, seed: int) -> InducedGraph:
    """Induced subgraph on a Bernoulli(beta) random vertex subset.

    Reproducible: vertex inclusion is driven by numpy's PCG64 stream for the
    given seed (one uniform draw per field element, in order).
    """
    if not 0 < beta <= 1:
        raise ValueError("beta must lie in (0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    keep = rng.random(field.p) < beta
    verts = np.flatnonzero(keep).astype(np.int64)
    return InducedGraph(field, verts, Provenance("random", beta=beta, seed=seed))


def degree_extremes(graph: InducedGraph) -> tuple[int, int]:
    """(min degree, max degree); (0, 0) for an empty vertex set."""
    if graph.n == 0:
        return (0, 0)
    d = graph.degrees
    return int(d.min()), int(d.max())


def _max_clique_bitset(adj_masks: list[int], n: int) -> int:
    """Branch and bound with greedy-coloring bounds on bitset adjacency rows."""
    if n == 0:
        return 0
    best = 1

    def color_order(cand: int):
        order = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~(adj_masks[v] | bit)
                uncolored &= ~bit
                order.append((v, color))
        return order

    def expand(size: int, cand: int):
        nonlocal best
        for v, c in reversed(color_order(cand)):
            if size + c <= best:
                return
            new = cand & adj_masks[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _masks_from_matrix(adj: np.ndarray) -> list[int]:
    n = adj.shape[0]
    # order vertices by descending degree for better early bounds
    order = np.argsort(-adj.sum(axis=1), kind="stable")
    sub = adj[np.ix_(order, order)]
    return [int.from_bytes(np.packbits(sub[i], bitorder="little").tobytes(), "little")
            for i in range(n)]


def exact_clique_number(graph: InducedGraph) -> int:
    """Exact clique number by branch and bound; guarded at 500 vertices."""
    if graph.n > CLIQUE_VERTEX_LIMIT:
        raise GuardError(
            f"exact clique number guarded at {CLIQUE_VERTEX_LIMIT} vertices "
            f"(got {graph.n}); use the bound pipeline instead")
    return _max_clique_bitset(_masks_from_matrix(graph.adjacency), graph.n)


def exact_independence_number(graph: InducedGraph) -> int:
    """Exact independence number: clique number of the complement."""
    if graph.n > CLIQUE_VERTEX_LIMIT:
        raise GuardError(
            f"exact independence number guarded at {CLIQUE_VERTEX_LIMIT} vertices "
            f"(got {graph.n})")
    comp = ~graph.adjacency & ~np.eye(graph.n, dtype=bool)
    return _max_clique_bitset(_masks_from_matrix(comp), graph.n)


def edge_list_text(graph: InducedGraph) -> str:
    """Plain-text export: header with p and localization degree, vertices, edges.

    Format (documented in the README):
        p <p> a <degree> provenance <label>
        vertices <v0> <v1> ...
        edges
        <x> <y>
        ...
    """
    a = len(graph.provenance.members) if graph.provenance.kind == "localization" else 0
    lines = [
        f"p {graph.field.p} a {a} provenance {graph.provenance.label()}",
        "vertices " + " ".join(str(int(v)) for v in graph.vertices),
        "edges",
    ]
    adj = graph.adjacency
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            if adj[i, j]:
                lines.append(f"{int(graph.vertices[i])} {int(graph.vertices[j])}")
    return "\n".join(lines) + "\n"
