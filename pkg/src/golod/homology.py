"""Simplicial (co)homology over Z, Q, GF(p) and Z/n, and induced maps.

Everything is computed from integer boundary matrices.  A ``Z/n`` cycle is
an integer chain whose boundary vanishes mod n; the groups are quotients of
integer lattices (see :class:`golod.linalg.LatticeQuotient`), so ``Z/4`` is
never treated as if it were a field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import linalg
from .complex import (EmptySubset, SimplicialComplex, full_subcomplex, join,
                      vertex_deletion)
from .linalg import AbelianGroup, LatticeQuotient, int_matrix, matmul, zeros


@dataclass(frozen=True)
class Coefficient:
    """Coefficient ring: ``Z``, ``Q``, ``F`` (prime field) or ``Zn`` (cyclic ring)."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F", "Zn"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "F" and not linalg.is_prime(self.n):
            raise ValueError(f"GF({self.n}): modulus must be prime")
        if self.kind == "Zn" and self.n < 2:
            raise ValueError(f"Z/{self.n}: modulus must be at least 2")

    @property
    def modulus(self) -> int:
        """The n of Z/n the lattices are taken modulo (0 for Z and Q)."""
        return self.n if self.kind in ("F", "Zn") else 0

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "F")

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __str__(self):
        return {"Z": "Z", "Q": "Q", "F": f"GF({self.n})", "Zn": f"Z/{self.n}"}[self.kind]

    def to_json(self):
        return {"kind": self.kind, "n": self.n, "text": str(self)}

    @classmethod
    def from_json(cls, d):
        return cls(d["kind"], d.get("n", 0))


ZZ = Coefficient("Z")
QQ = Coefficient("Q")


def GF(p: int) -> Coefficient:
    return Coefficient("F", p)


def Zmod(n: int) -> Coefficient:
    return Coefficient("Zn", n)


def parse_coefficient(text: str) -> Coefficient:
    """``int``, ``rat``, ``f:p`` / ``p`` (prime field) or ``mod:n``."""
    t = text.strip().lower()
    if t in ("int", "z", "integral"):
        return ZZ
    if t in ("rat", "q"):
        return QQ
    if t.startswith("f:") or t.startswith("field:"):
        t = t.split(":", 1)[1]
        if t in ("rat", "q"):
            return QQ
        return GF(int(t))
    if t.startswith("mod:") or t.startswith("ring:"):
        return Zmod(int(t.split(":", 1)[1]))
    if t.isdigit():
        return GF(int(t))
    raise ValueError(f"cannot parse coefficient {text!r}")


# chain complexes ----------------------------------------------------------

@dataclass(eq=False)
class ChainComplex:
    """Ordered face bases per degree and integer boundary matrices."""

    complex: SimplicialComplex
    reduced: bool
    bases: Mapping[int, list]
    _mats: dict = field(default_factory=dict, repr=False)

    def basis(self, d: int) -> list:
        return self.bases.get(d, [])

    def index(self, d: int) -> dict:
        return {f: i for i, f in enumerate(self.basis(d))}

    def boundary(self, d: int) -> np.ndarray:
        """Matrix of the boundary from degree d to degree d - 1 (read-only)."""
        if d not in self._mats:
            src, dst = self.basis(d), self.index(d - 1)
            B = zeros(len(dst), len(src))
            if src and dst:
                for j, f in enumerate(src):
                    for i in range(len(f)):
                        B[dst[f[:i] + f[i + 1:]], j] = -1 if i % 2 else 1
            self._mats[d] = B
        return self._mats[d]

    @property
    def top(self) -> int:
        return max(self.bases) if self.bases else -1


@lru_cache(maxsize=2048)
def chain_complex(K: SimplicialComplex, reduced: bool = True) -> ChainComplex:
    """Simplicial chains of K, memoized per complex; treat the result as read-only."""
    bases = {d: K.faces(d) for d in range(0, K.dim + 1)}
    if reduced:
        bases[-1] = [()]
    return ChainComplex(K, reduced, bases)


# homology -----------------------------------------------------------------

@dataclass
class HomologyResult:
    """(Co)homology in one degree.

    ``group`` is the invariant-factor description (for a field every factor
    equals the characteristic, or the group is free over Q); ``generators``
    are integer chains, one per non-trivial cyclic summand, listed in the
    order of ``orders``.  Over Q only the free summands are kept.
    """

    coeff: Coefficient
    degree: int
    cohomology: bool
    group: AbelianGroup
    faces: list
    orders: tuple[int, ...]
    generators: np.ndarray
    _quotient: LatticeQuotient = field(repr=False)
    _keep: tuple[int, ...] = field(repr=False)

    @property
    def dimension(self) -> int:
        """Dimension over a field coefficient (number of summands otherwise)."""
        return len(self.orders)

    @property
    def is_zero(self) -> bool:
        return not self.orders

    def coordinates(self, chains) -> np.ndarray:
        """Coordinates of cycle(s) in the summands of ``generators``."""
        C = self._quotient.coordinates(chains)
        return C[list(self._keep), :] if C.shape[0] else C

    def representatives(self):
        """(face, coefficient) lists per generator, plus reduction mod n."""
        n = self.coeff.modulus
        out = []
        for j in range(self.generators.shape[1]):
            col = self.generators[:, j]
            lift = [(list(f), int(c)) for f, c in zip(self.faces, col) if c]
            mod = [(list(f), int(c) % n) for f, c in zip(self.faces, col) if n and c % n]
            out.append({"order": self.orders[j], "integer_lift": lift,
                        "mod_n": mod if n else None})
        return out

    def __str__(self):
        if self.coeff.kind == "Q":
            return f"dim {self.dimension}"
        if self.coeff.kind == "F":
            return f"dim {self.dimension}"
        return str(self.group)

    def to_json(self):
        d = {"degree": self.degree, "coefficient": str(self.coeff),
             "cohomology": self.cohomology, "text": str(self),
             "group": self.group.to_json()}
        if self.coeff.is_field:
            d["dimension"] = self.dimension
        return d


def _homology_from(out_map: np.ndarray, in_map: np.ndarray, c: int, coeff: Coefficient,
                   degree: int, cohom: bool, faces) -> HomologyResult:
    n = coeff.modulus
    cycles = linalg.kernel_lattice(out_map, n)
    rel = in_map
    if n:
        rel = linalg.hstack([rel, n * linalg.identity(c)], c)
    Q = LatticeQuotient(cycles, rel)
    orders = Q.orders
    if coeff.kind == "Q":
        keep = tuple(i for i, d in enumerate(orders) if d == 0)
    else:
        keep = tuple(range(len(orders)))
    kept_orders = tuple(orders[i] for i in keep)
    gens = Q.generators[:, list(keep)] if keep else zeros(c, 0)
    if coeff.kind == "Q":
        group = AbelianGroup(len(keep))
    else:
        group = Q.group
    return HomologyResult(coeff, degree, cohom, group, faces, kept_orders, gens, Q, keep)


def homology(K: SimplicialComplex, n: int, coeff: Coefficient = ZZ,
             reduced: bool = True) -> HomologyResult:
    """Reduced (by default) simplicial homology H_n(K; coeff)."""
    cc = chain_complex(K, reduced)
    faces = cc.basis(n)
    c = len(faces)
    out_map = cc.boundary(n) if n - 1 in cc.bases else zeros(0, c)
    in_map = cc.boundary(n + 1) if n + 1 in cc.bases else zeros(c, 0)
    return _homology_from(out_map, in_map, c, coeff, n, False, faces)


def cohomology(K: SimplicialComplex, n: int, coeff: Coefficient = ZZ,
               reduced: bool = True) -> HomologyResult:
    """Reduced cohomology: homology of the transposed boundary matrices."""
    cc = chain_complex(K, reduced)
    faces = cc.basis(n)
    c = len(faces)
    out_map = cc.boundary(n + 1).T.copy() if n + 1 in cc.bases else zeros(0, c)
    in_map = cc.boundary(n).T.copy() if n - 1 in cc.bases else zeros(c, 0)
    return _homology_from(out_map, in_map, c, coeff, n, True, faces)


def betti_numbers(K: SimplicialComplex, coeff: Coefficient = QQ, reduced: bool = True):
    lo = -1 if reduced else 0
    return {d: homology(K, d, coeff, reduced).dimension for d in range(lo, K.dim + 1)}


# simplicial maps ----------------------------------------------------------

class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex map source -> target, or the constant map (``collapse``)."""

    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[int, int] | None = None
    collapse: bool = False

    def __post_init__(self):
        if self.collapse:
            return
        vm = self.vertex_map or {}
        for v in self.source.vertices:
            if v not in vm:
                raise NotSimplicial(f"vertex {v} has no image")
        for f in self.source.facets:
            img = tuple(sorted({vm[v] for v in f}))
            if img not in self.target.face_set:
                raise NotSimplicial(f"face {f} maps to non-face {img}")

    def __call__(self, face):
        if self.collapse:
            return None
        return tuple(sorted({self.vertex_map[v] for v in face}))

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if self.collapse or other.collapse:
            return SimplicialMap(other.source, self.target, collapse=True)
        vm = {v: self.vertex_map[other.vertex_map[v]] for v in other.source.vertices}
        return SimplicialMap(other.source, self.target, vm)


def identity_map(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, {v: v for v in K.vertices})


def inclusion_map(sub: SimplicialComplex, K: SimplicialComplex) -> SimplicialMap:
    """Inclusion of a full subcomplex, using its label metadata."""
    pos = {lab: i + 1 for i, lab in enumerate(K.labels)}
    return SimplicialMap(sub, K, {v: pos[lab] for v, lab in zip(sub.vertices, sub.labels)})


def _perm_sign(seq) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def chain_map(f: SimplicialMap, d: int, reduced: bool = True) -> np.ndarray:
    """Matrix of f_# on d-chains (rows: target faces, columns: source faces)."""
    src = chain_complex(f.source, reduced).basis(d)
    dst = chain_complex(f.target, reduced).index(d)
    F = zeros(len(dst), len(src))
    if f.collapse:
        return F
    for j, face in enumerate(src):
        img = [f.vertex_map[v] for v in face]
        if len(set(img)) < len(img):
            continue
        key = tuple(sorted(img))
        F[dst[key], j] = _perm_sign(img)
    return F


@dataclass
class InducedMap:
    """Matrix of a map between (co)homology groups in generator coordinates."""

    matrix: np.ndarray
    domain: HomologyResult
    codomain: HomologyResult

    @property
    def is_zero(self) -> bool:
        return not any(self.matrix.flat)

    def to_json(self):
        return {"matrix": [[int(x) for x in row] for row in self.matrix],
                "domain": self.domain.to_json(), "codomain": self.codomain.to_json()}


def induced_map(f: SimplicialMap, n: int, coeff: Coefficient = ZZ,
                cohomology_side: bool = False) -> InducedMap:
    """f_* on H_n (or f^* on H^n when ``cohomology_side``)."""
    F = chain_map(f, n)
    if cohomology_side:
        dom, cod = cohomology(f.target, n, coeff), cohomology(f.source, n, coeff)
        F = F.T.copy()
    else:
        dom, cod = homology(f.source, n, coeff), homology(f.target, n, coeff)
    images = matmul(F, dom.generators)
    M = cod.coordinates(images) if images.shape[1] else zeros(len(cod.orders), 0)
    return InducedMap(M, dom, cod)


def product_map(K: SimplicialComplex, I, J) -> SimplicialMap:
    """m_{I,J}: K_{I u J} -> K_I * K_J, sigma -> (sigma n I) u (sigma n J)."""
    I, J = sorted(set(I)), sorted(set(J))
    if not I or not J:
        raise EmptySubset("product map needs non-empty I and J")
    src = full_subcomplex(K, sorted(set(I) | set(J)))
    tgt = join(full_subcomplex(K, I), full_subcomplex(K, J))
    if set(I) & set(J):
        return SimplicialMap(src, tgt, collapse=True)
    pos_i = {v: k + 1 for k, v in enumerate(I)}
    pos_j = {v: len(I) + k + 1 for k, v in enumerate(J)}
    vm = {}
    for v, lab in zip(src.vertices, src.labels):
        vm[v] = pos_i[lab] if lab in pos_i else pos_j[lab]
    return SimplicialMap(src, tgt, vm)


# joint deletion map -------------------------------------------------------

@dataclass
class JointDeletion:
    """The map from the direct sum of H_n(dl_K(v)) to H_n(K)."""

    matrix: np.ndarray  # codomain summand coordinates x stacked domain generators
    blocks: list  # (vertex, number of columns)
    codomain: HomologyResult
    surjective: bool
    cokernel: AbelianGroup
    unhit: np.ndarray | None  # integer chain whose class is not in the image

    def to_json(self):
        return {"surjective": self.surjective, "cokernel": self.cokernel.to_json(),
                "codomain": self.codomain.to_json()}


def joint_deletion_map(K: SimplicialComplex, n: int, coeff: Coefficient = ZZ,
                       vertices=None) -> JointDeletion:
    """Sum of the maps induced by the inclusions dl_K(v) -> K.

    ``vertices`` restricts the sum (all of [m] by default).
    """
    if K.m < 2:
        raise ValueError("joint deletion map needs at least two vertices")
    vs = list(vertices) if vertices is not None else list(K.vertices)
    target = homology(K, n, coeff)
    cols, blocks = [], []
    for v in vs:
        dl = vertex_deletion(K, v)
        im = induced_map(inclusion_map(dl, K), n, coeff)
        cols.append(im.matrix)
        blocks.append((v, im.matrix.shape[1]))
    k = len(target.orders)
    M = linalg.hstack(cols, k)
    if coeff.kind == "Q":
        r = linalg.rank(M) if M.size else 0
        surjective = r == k
        cok = AbelianGroup(k - r)
        vec, _ = linalg.cokernel_generator(M, [0] * k)
    else:
        vec, cok = linalg.cokernel_generator(M, list(target.orders))
        surjective = vec is None
    unhit = None
    if vec is not None:
        unhit = matmul(target.generators, int_matrix([[int(x)] for x in vec], (k, 1)))[:, 0]
        if coeff.modulus:
            unhit = np.array([int(x) % coeff.modulus for x in unhit], dtype=object)
    return JointDeletion(M, blocks, target, surjective, cok, unhit)


def in_deletion_image(K: SimplicialComplex, n: int, coeff: Coefficient, chain,
                      vertices=None) -> bool:
    """Independent re-check: is the class of ``chain`` a sum of classes
    supported away from single vertices?  Works on raw chain lattices."""
    cc = chain_complex(K)
    faces = cc.basis(n)
    c = len(faces)
    N = coeff.modulus
    out_map = cc.boundary(n) if n - 1 in cc.bases else zeros(0, c)
    gens = [cc.boundary(n + 1) if n + 1 in cc.bases else zeros(c, 0)]
    if N:
        gens.append(N * linalg.identity(c))
    vs = list(vertices) if vertices is not None else list(K.vertices)
    for v in vs:
        cols = [j for j, f in enumerate(faces) if v not in f]
        sub = out_map[:, cols] if cols else zeros(out_map.shape[0], 0)
        ker = linalg.kernel_lattice(sub, N)
        emb = zeros(c, ker.shape[1])
        for i, j in enumerate(cols):
            emb[j, :] = ker[i, :]
        gens.append(emb)
    G = linalg.hstack(gens, c)
    x = int_matrix([[int(v)] for v in chain], (c, 1))
    if coeff.kind == "Q":
        return linalg.rank(linalg.hstack([G, x], c)) == linalg.rank(G)
    basis = linalg.image_basis(G)
    try:
        linalg.solve_in_basis(basis, x)
        return True
    except linalg.NotInLattice:
        return False
