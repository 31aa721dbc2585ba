"""Exhaustive enumeration of small 2-complexes, one per isomorphism class.

A complex of dimension <= 2 is its 1-skeleton G plus a set of triangles of
G.  Graphs come from the networkx atlas (one per isomorphism class); triangle
sets are reduced modulo Aut(G) by keeping the bitmask that is minimal in its
orbit.  The result contains each isomorphism class exactly once.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

import networkx as nx
import numpy as np

from .complex import SimplicialComplex, build_from_facets

_CHUNK = 10


def _automorphisms(n: int, edges: set) -> list[tuple[int, ...]]:
    out = []
    for p in permutations(range(n)):
        if all(tuple(sorted((p[a], p[b]))) in edges for a, b in edges):
            out.append(p)
    return out


def _orbit_minimal(t: int, perms_on_triangles: list[list[int]]) -> np.ndarray:
    masks = np.arange(1 << t, dtype=np.int64)
    keep = np.ones(1 << t, dtype=bool)
    chunks = [(lo, min(_CHUNK, t - lo)) for lo in range(0, t, _CHUNK)]
    for sigma in perms_on_triangles:
        if sigma == list(range(t)):
            continue
        img = np.zeros(1 << t, dtype=np.int64)
        for lo, width in chunks:
            table = np.zeros(1 << width, dtype=np.int64)
            for bit in range(width):
                idx = np.arange(1 << width)
                table |= ((idx >> bit) & 1).astype(np.int64) << sigma[lo + bit]
            img |= table[(masks >> lo) & ((1 << width) - 1)]
        keep &= masks <= img
    return masks[keep]


def two_complexes(max_vertices: int = 6, cap: int | None = 100_000) -> Iterator[SimplicialComplex]:
    """Every complex of dimension <= 2 on 1..max_vertices vertices, up to
    isomorphism, in a fixed order (by vertex count, atlas index, mask)."""
    produced = 0
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0:
            continue
        if n > max_vertices:
            break
        edges = {tuple(sorted(e)) for e in G.edges()}
        tris = [t for t in combinations(range(n), 3)
                if all(tuple(sorted(p)) in edges for p in combinations(t, 2))]
        tindex = {t: i for i, t in enumerate(tris)}
        auts = _automorphisms(n, edges)
        sigmas = [[tindex[tuple(sorted(p[v] for v in t))] for t in tris] for p in auts]
        reps = _orbit_minimal(len(tris), sigmas) if tris else np.zeros(1, dtype=np.int64)
        base = [(v + 1,) for v in range(n)] + [(a + 1, b + 1) for a, b in edges]
        for mask in reps.tolist():
            chosen = [tuple(v + 1 for v in tris[i]) for i in range(len(tris)) if mask >> i & 1]
            yield build_from_facets(n, base + chosen)
            produced += 1
            if cap is not None and produced >= cap:
                return


def count_two_complexes(max_vertices: int = 6) -> dict[int, int]:
    out: dict[int, int] = {}
    for K in two_complexes(max_vertices, cap=None):
        out[K.m] = out.get(K.m, 0) + 1
    return out
