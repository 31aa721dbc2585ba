"""Finite simplicial complexes on the vertex set [m] = {1, ..., m}.

Faces are stored as strictly increasing tuples of vertex labels; the empty
tuple is the empty simplex.  Complexes are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

Simplex = tuple  # strictly increasing tuple of positive ints


class ComplexError(ValueError):
    pass


class GhostVertex(ComplexError):
    def __init__(self, v):
        super().__init__(f"vertex {v} appears in no facet")
        self.vertex = v


class OutOfRange(ComplexError):
    pass


class EmptySubset(ComplexError):
    pass


def simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(set(int(v) for v in vertices)))
    return s


def _maximal(faces: Iterable[Simplex]) -> tuple[Simplex, ...]:
    by_size = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    out = []
    for f in by_size:
        fs = frozenset(f)
        if any(fs <= k for k in kept):
            continue
        kept.append(fs)
        out.append(f)
    return tuple(sorted(out))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``labels[i-1]`` is the label vertex ``i`` had in the complex this one was
    cut out of (identity by default), and ``names`` optionally carries display
    names such as ``"A"``.  Neither takes part in equality.  ``relative``
    complexes (links) may leave vertices of [m] uncovered.
    """

    m: int
    facets: tuple[Simplex, ...]
    labels: tuple[int, ...] = field(default=())
    names: tuple[str, ...] | None = None
    relative: bool = False

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.m + 1)))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.facets == other.facets

    def __hash__(self):
        return hash((self.m, self.facets))

    def __repr__(self):
        fs = " ".join("".join(map(str, f)) if self.m < 10 else "-".join(map(str, f))
                      for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{fs}])"

    @cached_property
    def face_set(self) -> frozenset:
        out = {()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    @cached_property
    def _faces_by_dim(self) -> dict[int, list[Simplex]]:
        out: dict[int, list[Simplex]] = {}
        for f in self.face_set:
            out.setdefault(len(f) - 1, []).append(f)
        for d in out:
            out[d].sort()
        return out

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.m + 1))

    def name(self, v: int) -> str:
        if self.names:
            return self.names[v - 1]
        return str(self.labels[v - 1])

    def faces(self, d: int) -> list[Simplex]:
        """All d-faces in lexicographic order; d = -1 gives the empty simplex."""
        return list(self._faces_by_dim.get(d, []))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._faces_by_dim.get(d, [])) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(self._faces_by_dim.get(1, []))

    def is_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def original(self, vs: Iterable[int]) -> tuple[int, ...]:
        """Translate vertices of this complex to labels of the ambient one."""
        return tuple(self.labels[v - 1] for v in vs)


def build_from_facets(m: int, facets: Iterable[Iterable[int]], names=None,
                      labels=None, relative=False) -> SimplicialComplex:
    """Canonicalize a facet list into a complex on [m].

    Raises ``OutOfRange`` for labels outside [m] and ``GhostVertex`` for
    vertices covered by no facet (unless ``relative``).
    """
    if m < 0:
        raise OutOfRange(f"negative vertex count {m}")
    fs = [simplex(f) for f in facets]
    for f in fs:
        for v in f:
            if v < 1 or v > m:
                raise OutOfRange(f"vertex {v} not in [1, {m}]")
    fs = [f for f in fs if f]
    if not relative:
        covered = set().union(*fs) if fs else set()
        for v in range(1, m + 1):
            if v not in covered:
                raise GhostVertex(v)
    if names is not None:
        names = tuple(names)
        if len(names) != m:
            raise ComplexError(f"expected {m} vertex names, got {len(names)}")
    return SimplicialComplex(m, _maximal(fs), tuple(labels or ()), names, relative)


def faces(K: SimplicialComplex, d: int) -> list[Simplex]:
    return K.faces(d)


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> SimplicialComplex:
    """K_I, relabeled onto 1..|I| in increasing order of I."""
    I = sorted(set(I))
    if not I:
        raise EmptySubset("full subcomplex needs a non-empty vertex subset")
    for v in I:
        if v < 1 or v > K.m:
            raise OutOfRange(f"vertex {v} not in [1, {K.m}]")
    pos = {v: i + 1 for i, v in enumerate(I)}
    Iset = set(I)
    new_faces = []
    for f in K.facets:
        g = [pos[v] for v in f if v in Iset]
        if g:
            new_faces.append(g)
    # vertices of I are faces of K, so the restricted facets cover I
    names = tuple(K.names[v - 1] for v in I) if K.names else None
    return build_from_facets(len(I), new_faces, names=names,
                             labels=K.original(I), relative=K.relative)


def vertex_deletion(K: SimplicialComplex, v: int) -> SimplicialComplex:
    if v < 1 or v > K.m:
        raise OutOfRange(f"vertex {v} not in [1, {K.m}]")
    if K.m < 2:
        raise OutOfRange("vertex deletion needs at least two vertices")
    return full_subcomplex(K, [u for u in K.vertices if u != v])


def link(K: SimplicialComplex, u: int) -> SimplicialComplex:
    """Link of u, kept on the original labels and flagged ``relative``."""
    if u < 1 or u > K.m:
        raise OutOfRange(f"vertex {u} not in [1, {K.m}]")
    fs = [tuple(v for v in f if v != u) for f in K.facets if u in f]
    return build_from_facets(K.m, fs, names=K.names, labels=K.labels, relative=True)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L with L's vertices shifted to m_K + [m_L]."""
    off = K.m
    kf = K.facets or ((),)
    lf = L.facets or ((),)
    fs = [f + tuple(v + off for v in g) for f in kf for g in lf]
    names = None
    if K.names or L.names:
        names = tuple(K.name(v) for v in K.vertices) + tuple(L.name(v) for v in L.vertices)
    return build_from_facets(K.m + L.m, fs, names=names,
                             labels=K.labels + L.labels, relative=K.relative or L.relative)


def wedge(K: SimplicialComplex, L: SimplicialComplex, v: int, w: int) -> SimplicialComplex:
    """Glue vertex w of L to vertex v of K."""
    if not (1 <= v <= K.m and 1 <= w <= L.m):
        raise OutOfRange("wedge point out of range")
    relabel = {}
    nxt = K.m + 1
    for u in L.vertices:
        if u == w:
            relabel[u] = v
        else:
            relabel[u] = nxt
            nxt += 1
    fs = list(K.facets) + [[relabel[u] for u in g] for g in L.facets]
    return build_from_facets(nxt - 1, fs)


def relabel(K: SimplicialComplex, perm: dict[int, int] | Sequence[int]) -> SimplicialComplex:
    """Apply a bijection of [m]; a sequence maps vertex i to perm[i-1]."""
    if not isinstance(perm, dict):
        perm = {i + 1: p for i, p in enumerate(perm)}
    if sorted(perm.values()) != list(K.vertices):
        raise ComplexError("relabeling must be a permutation of [m]")
    names = None
    if K.names:
        inv = {b: a for a, b in perm.items()}
        names = tuple(K.names[inv[i] - 1] for i in K.vertices)
    return build_from_facets(K.m, [[perm[v] for v in f] for f in K.facets], names=names)


def skeleton(K: SimplicialComplex, d: int) -> SimplicialComplex:
    fs = [f for k in range(0, d + 1) for f in K.faces(k)]
    return build_from_facets(K.m, fs, names=K.names, labels=K.labels, relative=K.relative)


def minimal_nonfaces(K: SimplicialComplex) -> list[Simplex]:
    out = []
    for sigma in K.face_set:
        top = sigma[-1] if sigma else 0
        for v in range(top + 1, K.m + 1):
            tau = sigma + (v,)
            if tau in K.face_set:
                continue
            if all(tau[:i] + tau[i + 1:] in K.face_set for i in range(len(tau))):
                out.append(tau)
    return sorted(out)


def is_k_neighborly(K: SimplicialComplex, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    return all(c in K.face_set for c in combinations(K.vertices, k + 1))


def missing_pairs(K: SimplicialComplex) -> list[tuple[int, int]]:
    return [p for p in combinations(K.vertices, 2) if p not in K.edges]


def is_isomorphic(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """Brute force over vertex permutations; meant for small fixtures."""
    if K.m != L.m or K.f_vector() != L.f_vector():
        return False
    target = set(L.facets)
    for p in permutations(range(1, K.m + 1)):
        if all(tuple(sorted(p[v - 1] for v in f)) in target for f in K.facets):
            return True
    return False


def is_closed_surface(K: SimplicialComplex) -> bool:
    """Every edge lies in exactly two triangles and every vertex link is a cycle."""
    if K.dim != 2 or any(len(f) != 3 for f in K.facets):
        return False
    count: dict = {}
    for f in K.facets:
        for e in combinations(f, 2):
            count[e] = count.get(e, 0) + 1
    if any(c != 2 for c in count.values()):
        return False
    for v in K.vertices:
        lk = link(K, v)
        adj: dict[int, list[int]] = {}
        for a, b in lk.facets:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if any(len(n) != 2 for n in adj.values()):
            return False
        start = next(iter(adj))
        seen, prev, cur = {start}, None, start
        while True:
            nxt = [u for u in adj[cur] if u != prev][0]
            if nxt == start:
                break
            seen.add(nxt)
            prev, cur = cur, nxt
        if len(seen) != len(adj):
            return False
    return True
