"""Field-coefficient shortcuts used by the subset enumerations.

Over a field every question the checkers ask reduces to ranks of spans of
chains, so these routines skip presentations and work on face sets in the
ambient labels of K.  The exact lattice route in :mod:`golod.homology` checks
them in the tests.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .complex import SimplicialComplex
from .linalg import field_nullspace, field_rank, zeros


def _faces_within(K: SimplicialComplex, I: frozenset, d: int) -> list:
    return [f for f in K.faces(d) if I.issuperset(f)]


def _boundary(src: list, dst: list):
    idx = {f: i for i, f in enumerate(dst)}
    B = zeros(len(dst), len(src))
    for j, f in enumerate(src):
        for i in range(len(f)):
            B[idx[f[:i] + f[i + 1:]], j] = -1 if i % 2 else 1
    return B


class FieldChains:
    """Reduced chains of the full subcomplexes of K over GF(p) (p = 0: Q)."""

    def __init__(self, K: SimplicialComplex, p: int):
        self.K = K
        self.p = p
        self._betti: dict = {}

    def faces(self, I: frozenset, d: int) -> list:
        if d == -1:
            return [()]
        return _faces_within(self.K, I, d)

    def betti(self, I: frozenset) -> dict[int, int]:
        """Reduced Betti numbers of K_I (only non-zero entries)."""
        if I not in self._betti:
            dims = {}
            fc = {d: self.faces(I, d) for d in range(-1, self.K.dim + 2)}
            ranks = {d: field_rank(_boundary(fc[d], fc[d - 1]), self.p) if fc[d] and fc[d - 1] else 0
                     for d in range(0, self.K.dim + 2)}
            for d in range(-1, self.K.dim + 1):
                b = len(fc[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
                if b:
                    dims[d] = b
            self._betti[I] = dims
        return self._betti[I]

    def breakable(self, I: frozenset, n: int) -> bool:
        """Whether the joint deletion map of K_I in degree n fails to be onto."""
        if not self.betti(I).get(n):
            return False
        faces = self.faces(I, n)
        lower = self.faces(I, n - 1)
        upper = self.faces(I, n + 1)
        bd = _boundary(faces, lower)
        cycles = field_nullspace(bd, self.p)
        gens = [_boundary(upper, faces)] if upper else []
        for v in sorted(I):
            cols = [j for j, f in enumerate(faces) if v not in f]
            if not cols:
                continue
            ker = field_nullspace(bd[:, cols], self.p)
            emb = zeros(len(faces), ker.shape[1])
            for i, j in enumerate(cols):
                emb[j, :] = ker[i, :]
            gens.append(emb)
        gens = [g for g in gens if g.shape[1]]
        if not gens:
            return cycles.shape[1] > 0
        G = np.concatenate(gens, axis=1)
        return field_rank(G.T, self.p) < cycles.shape[1]

    def product_nonzero(self, I1: frozenset, I2: frozenset, k: int) -> bool:
        """Whether m_{I1,I2} is non-zero on H_k over the field.

        In ambient labels K_{I1 u I2} is a subcomplex of K_{I1} * K_{I2} and
        the product map is that inclusion.
        """
        I = I1 | I2
        src = self.faces(I, k)
        if not src:
            return False
        cyc = field_nullspace(_boundary(src, self.faces(I, k - 1)), self.p)
        if not cyc.shape[1]:
            return False
        jk = _join_faces(self, I1, I2, k)
        jk1 = _join_faces(self, I1, I2, k + 1)
        idx = {f: i for i, f in enumerate(jk)}
        emb = zeros(len(jk), cyc.shape[1])
        for i, f in enumerate(src):
            emb[idx[f], :] = cyc[i, :]
        bd = _boundary(jk1, jk) if jk1 else zeros(len(jk), 0)
        r0 = field_rank(bd.T, self.p) if bd.shape[1] else 0
        r1 = field_rank(np.concatenate([bd, emb], axis=1).T, self.p)
        return r1 > r0


def _join_faces(fc: FieldChains, I1, I2, d):
    out = []
    for a in range(-1, d + 1):
        b = d - 1 - a
        if b < -1:
            continue
        for s in fc.faces(I1, a):
            for t in fc.faces(I2, b):
                out.append(tuple(sorted(s + t)))
    return sorted(out)


def subsets(m: int, min_size: int = 1):
    """Non-empty subsets of [m] in lexicographic order of sorted tuples."""
    def rec(start, prefix):
        for v in range(start, m + 1):
            cur = prefix + (v,)
            if len(cur) >= min_size:
                yield cur
            yield from rec(v + 1, cur)
    yield from rec(1, ())


def splittings(I: tuple):
    """Unordered pairs {I1, I2} partitioning I; I1 holds min(I)."""
    first, rest = I[0], I[1:]
    for k in range(0, len(rest)):
        for extra in combinations(rest, k):
            I1 = (first,) + extra
            I2 = tuple(v for v in rest if v not in extra)
            yield I1, I2
