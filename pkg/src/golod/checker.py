"""Golodness decisions for complexes of dimension at most two.

* :func:`check_golod_integral_2dim` - chordal 1-skeleton, and every full
  subcomplex with vertex-breakable H_2 (over some finitely generated abelian
  group) is 1-neighborly.
* :func:`check_golod_field` - the same with breakability over one field.
* :func:`product_scan` - direct check that every product map m_{I1,I2} is
  zero in cohomology over a field (a complete test up to dimension 3).
* :func:`check_golod_ring` - searches for a non-edge pair whose product is
  non-zero over Z/n.

Every negative verdict carries a witness that :func:`verify_witness`
re-checks with the exact homology engine.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import homology as hom
from .breakability import (BreakabilityResult, coefficient_schedule, edge_product_criterion,
                           pair_breakable, unhit_is_genuine, vertex_breakable,
                           vertex_breakable_any)
from .chordal import is_chordal, is_induced_cycle
from .complex import SimplicialComplex, full_subcomplex, is_k_neighborly, missing_pairs
from .fieldhom import FieldChains, splittings, subsets
from .homology import ZZ, Coefficient, Zmod

GOLOD = "Golod"
NOT_GOLOD = "NotGolod"
UNDETERMINED = "Undetermined"


class DimensionTooHigh(ValueError):
    pass


# witnesses -----------------------------------------------------------------

@dataclass
class NonChordalCycle:
    cycle: tuple[int, ...]
    kind: str = "NonChordalCycle"

    def to_json(self, K=None):
        d = {"kind": self.kind, "cycle": list(self.cycle)}
        if K is not None and K.names:
            d["names"] = [K.name(v) for v in self.cycle]
        return d


@dataclass
class BreakableNotNeighborly:
    subset: tuple[int, ...]
    pair: tuple[int, int]
    breakability: BreakabilityResult
    kind: str = "BreakableNotNeighborly"

    @property
    def coefficient(self) -> Coefficient:
        return self.breakability.witness_coefficient

    def to_json(self, K=None):
        d = {"kind": self.kind, "subset": list(self.subset), "pair": list(self.pair),
             "coefficient": self.coefficient.to_json(),
             "breakability": self.breakability.to_json()}
        if K is not None and K.names:
            d["subset_names"] = [K.name(v) for v in self.subset]
            d["pair_names"] = [K.name(v) for v in self.pair]
        return d


@dataclass
class NonvanishingProduct:
    left: tuple[int, ...]
    right: tuple[int, ...]
    degree: int  # degree of H~ of K_{left u right} the product lands in
    factors: list  # (i, j) with H~^i(K_left) (x) H~^j(K_right) -> H~^degree
    coefficient: Coefficient
    kind: str = "NonvanishingProduct"

    def to_json(self, K=None):
        d = {"kind": self.kind, "left": list(self.left), "right": list(self.right),
             "degree": self.degree, "factors": [list(f) for f in self.factors],
             "coefficient": self.coefficient.to_json()}
        if K is not None and K.names:
            d["left_names"] = [K.name(v) for v in self.left]
            d["right_names"] = [K.name(v) for v in self.right]
        return d


@dataclass
class GolodReport:
    verdict: str
    scope: str
    witness: object = None
    notes: list = field(default_factory=list)
    examined: int = 0  # subsets or pairs actually tested

    @property
    def golod(self) -> bool:
        return self.verdict == GOLOD

    def to_json(self, K=None):
        return {"verdict": self.verdict, "scope": self.scope,
                "witness": self.witness.to_json(K) if self.witness is not None else None,
                "notes": list(self.notes), "examined": self.examined}


def _require_dim(K, top):
    if K.dim > top:
        raise DimensionTooHigh(f"complex has dimension {K.dim}; this check needs <= {top}")


def _chordality_witness(K):
    res = is_chordal(K)
    if res.chordal:
        return None
    return NonChordalCycle(res.cycle)


def _candidate(K: SimplicialComplex, I: tuple) -> bool:
    """Conservative prunes: a breakable non-neighborly K_I needs |I| >= 4,
    a 2-face and a missing edge."""
    if len(I) < 4:
        return False
    S = set(I)
    if not any(len(f) == 3 and S.issuperset(f) for f in K.faces(2)):
        return False
    return any((u, v) not in K.edges for u in I for v in I if u < v)


def _first_missing(KI: SimplicialComplex, I: tuple) -> tuple[int, int]:
    a, b = missing_pairs(KI)[0]
    return (I[a - 1], I[b - 1])


def _integral_worker(args):
    K, I = args
    KI = full_subcomplex(K, I)
    # H_2 of a 2-complex vanishes for every A iff H_2(Z) = 0 and H_1(Z) is free
    h2 = hom.homology(KI, 2, ZZ).group
    h1 = hom.homology(KI, 1, ZZ).group
    if h2.is_trivial and not h1.torsion:
        return None
    res = vertex_breakable_any(KI, 2)
    return res if res.breakable else None


def _jobs(jobs):
    if jobs is None:
        jobs = int(os.environ.get("GOLOD_JOBS", "1") or 1)
    return max(1, jobs)


def _scan_subsets(K, worker, jobs):
    """First (lexicographic) subset where ``worker`` returns a result."""
    cands = [I for I in subsets(K.m, 4) if _candidate(K, I)]
    jobs = _jobs(jobs)
    if jobs == 1:
        for k, I in enumerate(cands):
            r = worker((K, I))
            if r is not None:
                return I, r, k + 1
        return None, None, len(cands)
    with ProcessPoolExecutor(jobs) as ex:
        results = list(ex.map(worker, [(K, I) for I in cands], chunksize=8))
    # completion order is irrelevant: pick the lexicographically first hit and
    # count as the serial scan would
    for k, (I, r) in enumerate(zip(cands, results)):
        if r is not None:
            return I, r, k + 1
    return None, None, len(cands)


def check_golod_integral_2dim(K: SimplicialComplex, jobs: int | None = None) -> GolodReport:
    """Conditions for Golodness over every ring, for dim K <= 2."""
    _require_dim(K, 2)
    scope = "integral (all rings)"
    w = _chordality_witness(K)
    if w:
        return GolodReport(NOT_GOLOD, scope, w, ["1-skeleton is not chordal"])
    I, res, examined = _scan_subsets(K, _integral_worker, jobs)
    if I is None:
        return GolodReport(GOLOD, scope, None,
                           ["1-skeleton chordal; every full subcomplex with vertex-breakable "
                            "H_2 is 1-neighborly"], examined)
    KI = full_subcomplex(K, I)
    w = BreakableNotNeighborly(I, _first_missing(KI, I), res)
    return GolodReport(NOT_GOLOD, scope, w,
                       [f"K_I breaks H_2 over {res.witness_coefficient} but misses an edge"],
                       examined)


def _field_coeff(field: Coefficient) -> Coefficient:
    if not field.is_field:
        raise ValueError(f"{field} is not a field")
    return field


def check_golod_field(K: SimplicialComplex, field: Coefficient) -> GolodReport:
    """Golodness over one field, for dim K <= 2."""
    _require_dim(K, 2)
    field = _field_coeff(field)
    scope = f"field {field}"
    w = _chordality_witness(K)
    if w:
        return GolodReport(NOT_GOLOD, scope, w, ["1-skeleton is not chordal"])
    fc = FieldChains(K, field.characteristic)
    examined = 0
    for I in subsets(K.m, 4):
        if not _candidate(K, I):
            continue
        examined += 1
        if fc.breakable(frozenset(I), 2):
            KI = full_subcomplex(K, I)
            res = vertex_breakable(KI, 2, field)
            if not res.breakable:
                raise RuntimeError(f"field shortcut and exact route disagree on {I}")
            w = BreakableNotNeighborly(I, _first_missing(KI, I), res)
            return GolodReport(NOT_GOLOD, scope, w,
                               [f"K_I breaks H_2 over {field} but misses an edge"], examined)
    return GolodReport(GOLOD, scope, None,
                       ["1-skeleton chordal; no non-neighborly full subcomplex breaks H_2"],
                       examined)


def product_scan(K: SimplicialComplex, field: Coefficient) -> GolodReport:
    """Check that every m_{I1,I2}^* vanishes over ``field`` (dim K <= 3)."""
    _require_dim(K, 3)
    field = _field_coeff(field)
    scope = f"field {field} (products only)"
    fc = FieldChains(K, field.characteristic)
    examined = 0
    order = sorted(subsets(K.m, 2), key=lambda I: (len(I), I))
    for I in order:
        bI = fc.betti(frozenset(I))
        if not bI:
            continue
        for I1, I2 in splittings(I):
            b1, b2 = fc.betti(frozenset(I1)), fc.betti(frozenset(I2))
            if not b1 or not b2:
                continue
            for k in sorted(bI):
                factors = [(i, k - 1 - i) for i in sorted(b1) if (k - 1 - i) in b2]
                if not factors:
                    continue
                examined += 1
                if fc.product_nonzero(frozenset(I1), frozenset(I2), k):
                    w = NonvanishingProduct(I1, I2, k, factors, field)
                    return GolodReport(NOT_GOLOD, scope, w,
                                       ["a product in Tor is non-zero"], examined)
    notes = ["all products m_{I1,I2}^* vanish"]
    if K.dim == 3:
        notes.append("dimension 3: products-only criterion")
    return GolodReport(GOLOD, scope, None, notes, examined)


def check_golod_ring(K: SimplicialComplex, n: int, jobs: int | None = None) -> GolodReport:
    """Look for a non-vanishing product over Z/n through breakable non-edges.

    If none is found the verdict falls back to the integral conditions:
    Golod when they hold, undetermined otherwise.
    """
    _require_dim(K, 2)
    coeff = Zmod(n)
    scope = f"ring {coeff}"
    w = _chordality_witness(K)
    if w:
        return GolodReport(NOT_GOLOD, scope, w, ["1-skeleton is not chordal"])
    examined = 0
    for I in subsets(K.m, 4):
        if not _candidate(K, I):
            continue
        KI = full_subcomplex(K, I)
        if hom.homology(KI, 2, coeff).is_zero:
            continue
        examined += 1
        for a, b in missing_pairs(KI):
            if not pair_breakable(KI, a, b, 2, coeff):
                continue
            ep = edge_product_criterion(KI, a, b, 2, coeff)
            pair = (I[a - 1], I[b - 1])
            rest = tuple(v for v in I if v not in pair)
            w = NonvanishingProduct(pair, rest, 2, [(0, 1)], coeff)
            return GolodReport(NOT_GOLOD, scope, w,
                               [f"pair {pair} breaks H_2(K_I; {coeff}) and is not an edge, so "
                                f"(m_I,J)_* != 0 (induced matrix {ep.induced.matrix.tolist()})"],
                               examined)
    integral = check_golod_integral_2dim(K, jobs)
    if integral.golod:
        return GolodReport(GOLOD, scope, None,
                           ["no product obstruction; integral conditions hold"], examined)
    return GolodReport(UNDETERMINED, scope, None,
                       ["no product obstruction over this ring, but the integral conditions "
                        f"fail ({integral.witness.kind})"], examined)


# Hochster ------------------------------------------------------------------

@dataclass
class BettiTable:
    """beta_{i,I} = dim H~^{i-|I|-1}(K_I; k), non-zero entries only."""

    field: Coefficient
    entries: dict  # (i, I) -> rank

    def aggregated(self) -> dict:
        out: dict = {}
        for (i, I), r in self.entries.items():
            out[(i, len(I))] = out.get((i, len(I)), 0) + r
        return dict(sorted(out.items()))

    def total(self) -> dict:
        out: dict = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return dict(sorted(out.items()))

    def to_json(self):
        return {"field": str(self.field),
                "entries": [{"i": i, "subset": list(I), "rank": r}
                            for (i, I), r in sorted(self.entries.items())],
                "aggregated": [{"i": i, "size": j, "rank": r}
                               for (i, j), r in self.aggregated().items()]}


def bigraded_betti(K: SimplicialComplex, field: Coefficient) -> BettiTable:
    field = _field_coeff(field)
    fc = FieldChains(K, field.characteristic)
    entries = {}
    for I in subsets(K.m):
        for d, r in fc.betti(frozenset(I)).items():
            entries[(d + len(I) + 1, I)] = r
    return BettiTable(field, dict(sorted(entries.items())))


# witness re-verification ---------------------------------------------------

def verify_witness(K: SimplicialComplex, witness) -> bool:
    """Re-check a witness object (or its JSON form) with the exact engine."""
    if isinstance(witness, dict):
        witness = witness_from_json(witness)
    if isinstance(witness, NonChordalCycle):
        return is_induced_cycle(K.adjacency(), witness.cycle)
    if isinstance(witness, BreakableNotNeighborly):
        I = witness.subset
        KI = full_subcomplex(K, I)
        a, b = witness.pair
        if a not in I or b not in I or K.is_edge(a, b):
            return False
        res = vertex_breakable(KI, 2, witness.coefficient)
        return res.breakable and unhit_is_genuine(KI, 2, res)
    if isinstance(witness, NonvanishingProduct):
        f = hom.product_map(K, witness.left, witness.right)
        c = witness.coefficient
        if c.is_field:
            im = hom.induced_map(f, witness.degree, c, cohomology_side=True)
        else:
            im = hom.induced_map(f, witness.degree, c)
        return not im.is_zero
    raise TypeError(f"unknown witness {witness!r}")


def witness_from_json(d: dict):
    kind = d["kind"]
    if kind == "NonChordalCycle":
        return NonChordalCycle(tuple(d["cycle"]))
    if kind == "BreakableNotNeighborly":
        c = Coefficient.from_json(d["coefficient"])
        br = BreakabilityResult(True, c, None, None)
        return BreakableNotNeighborly(tuple(d["subset"]), tuple(d["pair"]), br)
    if kind == "NonvanishingProduct":
        return NonvanishingProduct(tuple(d["left"]), tuple(d["right"]), d["degree"],
                                   [tuple(f) for f in d.get("factors", [])],
                                   Coefficient.from_json(d["coefficient"]))
    raise ValueError(f"unknown witness kind {kind!r}")


__all__ = [
    "GOLOD", "NOT_GOLOD", "UNDETERMINED", "DimensionTooHigh", "GolodReport", "BettiTable",
    "NonChordalCycle", "BreakableNotNeighborly", "NonvanishingProduct",
    "check_golod_integral_2dim", "check_golod_field", "check_golod_ring", "product_scan",
    "bigraded_betti", "verify_witness", "witness_from_json", "coefficient_schedule",
]
