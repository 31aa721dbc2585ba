"""Vertex-breakable homology over Z, Q, GF(p) and Z/n.

A complex has vertex-breakable n-th homology over A when the sum of the maps
H_n(dl_K(v); A) -> H_n(K; A) is not onto.  For "some finitely generated A"
the question splits over cyclic summands, and Z/n splits over prime powers,
so it is enough to try Z and a finite list of Z/p^r (see
:func:`coefficient_schedule`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import homology as hom
from .complex import SimplicialComplex, vertex_deletion
from .homology import ZZ, Coefficient, Zmod
from .linalg import AbelianGroup, _factorize


class HypothesisNotMet(ValueError):
    """The pair is not breakable, so the edge/product equivalence is not claimed."""


@dataclass
class BreakabilityResult:
    breakable: bool
    witness_coefficient: Coefficient | None
    cokernel: AbelianGroup
    unhit_cycle: list | None  # [(face, coefficient), ...] in the complex's own labels
    tried: list = field(default_factory=list)  # (coefficient, breakable)

    def to_json(self):
        return {
            "breakable": self.breakable,
            "witness_coefficient": self.witness_coefficient.to_json() if self.witness_coefficient else None,
            "cokernel": self.cokernel.to_json(),
            "unhit_cycle": [[list(f), c] for f, c in self.unhit_cycle] if self.unhit_cycle else None,
            "tried": [[str(c), b] for c, b in self.tried],
        }


def _chain_terms(faces, vec):
    return [(tuple(f), int(c)) for f, c in zip(faces, vec) if c]


def vertex_breakable(K: SimplicialComplex, n: int, coeff: Coefficient) -> BreakabilityResult:
    if K.m < 2:
        raise ValueError("vertex-breakability needs at least two vertices")
    jd = hom.joint_deletion_map(K, n, coeff)
    if jd.surjective:
        return BreakabilityResult(False, None, jd.cokernel, None, [(coeff, False)])
    cyc = _chain_terms(jd.codomain.faces, jd.unhit)
    return BreakabilityResult(True, coeff, jd.cokernel, cyc, [(coeff, True)])


def pair_breakable(K: SimplicialComplex, v: int, w: int, n: int, coeff: Coefficient) -> bool:
    if v == w:
        raise ValueError("pair_breakable needs two distinct vertices")
    return not hom.joint_deletion_map(K, n, coeff, vertices=[v, w]).surjective


def coefficient_schedule(K: SimplicialComplex, n: int) -> list[Coefficient]:
    """Z plus Z/p^r, r = 1 .. r_max(p), for each prime p in the torsion of
    H_n, H_{n-1} of K and of its vertex deletions.

    r_max(p) is one more than the least r with p^r at least the p-part of the
    torsion exponent.
    """
    expo: dict[int, int] = {}
    pieces = [K] + ([vertex_deletion(K, v) for v in K.vertices] if K.m >= 2 else [])
    for L in pieces:
        for d in (n - 1, n):
            if d < -1:
                continue
            for t in hom.homology(L, d, ZZ).group.torsion:
                for p, e in _factorize(t).items():
                    expo[p] = max(expo.get(p, 0), p ** e)
    out = [ZZ]
    for p in sorted(expo):
        r = 1
        while p ** r < expo[p]:
            r += 1
        for k in range(1, r + 2):
            out.append(Zmod(p ** k))
    return out


def vertex_breakable_any(K: SimplicialComplex, n: int, schedule=None) -> BreakabilityResult:
    """Breakability over some finitely generated abelian group."""
    tried = []
    last = None
    for c in schedule or coefficient_schedule(K, n):
        res = vertex_breakable(K, n, c)
        tried.append((c, res.breakable))
        if res.breakable:
            res.tried = tried
            return res
        last = res
    return BreakabilityResult(False, None, last.cokernel if last else AbelianGroup(), None, tried)


@dataclass
class EdgeProduct:
    is_edge: bool
    product_trivial: bool
    induced: hom.InducedMap

    def to_json(self):
        return {"is_edge": self.is_edge, "product_trivial": self.product_trivial,
                "induced": self.induced.to_json()}


def edge_product_criterion(K: SimplicialComplex, v: int, w: int, n: int,
                           coeff: Coefficient) -> EdgeProduct:
    """For a breakable pair {v, w}: is it an edge, and is (m_{I,J})_* trivial
    on H_n for I = {v, w}, J = the other vertices?  The two answers coincide;
    a disagreement raises ``RuntimeError``.
    """
    if K.m < 3:
        raise ValueError("need a vertex outside {v, w}")
    if not pair_breakable(K, v, w, n, coeff):
        raise HypothesisNotMet(f"({v}, {w}) does not break H_{n} over {coeff}")
    I = [v, w]
    J = [u for u in K.vertices if u not in I]
    f = hom.product_map(K, I, J)
    im = hom.induced_map(f, n, coeff)
    res = EdgeProduct(K.is_edge(v, w), im.is_zero, im)
    if res.is_edge != res.product_trivial:
        raise RuntimeError(f"edge/product equivalence violated for ({v}, {w})")
    return res


def unhit_is_genuine(K: SimplicialComplex, n: int, res: BreakabilityResult) -> bool:
    """Re-check a breakability witness on raw chain lattices."""
    if not res.breakable or res.unhit_cycle is None:
        return False
    coeff = res.witness_coefficient
    cc = hom.chain_complex(K)
    faces = cc.basis(n)
    idx = {f: i for i, f in enumerate(faces)}
    vec = [0] * len(faces)
    for f, c in res.unhit_cycle:
        vec[idx[tuple(f)]] = c
    bd = cc.boundary(n)
    img = bd.dot(np.array(vec, dtype=object)) if bd.shape[0] and bd.shape[1] else []
    N = coeff.modulus
    if any((x % N if N else x) for x in img):
        return False
    return not hom.in_deletion_image(K, n, coeff, vec)
