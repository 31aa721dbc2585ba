"""Named complexes: standard fixtures plus the Moebius band, RP^2_6 and the
triangulated Moore space S^1 u_4 e^2 used to separate field and ring Golodness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .complex import SimplicialComplex, build_from_facets, wedge as _wedge

# hexagon with antipodal boundary identification, minus the open triangle DEF
K1_FACETS = ["ACE", "ABE", "BDE", "BCD", "ACD", "ADF", "CEF", "ABF", "BCF"]
K1_NAMES = "ABCDEF"
# gluing correspondence of the RP^2 copy: its (P, Q, R) go to (D, E, F)
K2_RELABEL = {"A": "P", "B": "Q", "C": "R", "D": "d", "E": "e", "F": "f"}
MOORE_NAMES = "ABCDEFdef"


def _named(names: str, facets) -> SimplicialComplex:
    idx = {c: i + 1 for i, c in enumerate(names)}
    return build_from_facets(len(names), [[idx[c] for c in f] for f in facets],
                             names=tuple(names))


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on n + 1 vertices."""
    return build_from_facets(n + 1, [range(1, n + 2)])


def boundary_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex (n + 1 vertices)."""
    if n < 1:
        raise ValueError("boundary_simplex needs n >= 1")
    vs = range(1, n + 2)
    return build_from_facets(n + 1, combinations(vs, n))


def cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_from_facets(m, [(i, i % m + 1) for i in range(1, m + 1)])


def path(m: int) -> SimplicialComplex:
    if m < 1:
        raise ValueError("a path needs at least one vertex")
    if m == 1:
        return build_from_facets(1, [(1,)])
    return build_from_facets(m, [(i, i + 1) for i in range(1, m)])


def points(m: int) -> SimplicialComplex:
    return build_from_facets(m, [(i,) for i in range(1, m + 1)])


def wedge(K, L, v=1, w=1) -> SimplicialComplex:
    return _wedge(K, L, v, w)


def k1_moebius() -> SimplicialComplex:
    return _named(K1_NAMES, K1_FACETS)


def k2_rp2() -> SimplicialComplex:
    """Minimal 6-vertex RP^2: K1 relabeled onto P Q R d e f, plus the triangle def."""
    facets = ["".join(K2_RELABEL[c] for c in f) for f in K1_FACETS] + ["def"]
    return _named("PQRdef", facets)


def moore_M() -> SimplicialComplex:
    """K1 and K2 glued along the triangles DEF and PQR (19 facets, 9 vertices)."""
    glue = {"P": "D", "Q": "E", "R": "F", "d": "d", "e": "e", "f": "f"}
    k2 = ["".join(glue[K2_RELABEL[c]] for c in f) for f in K1_FACETS] + ["def"]
    return _named(MOORE_NAMES, K1_FACETS + k2)


def torus_9() -> SimplicialComplex:
    """3 x 3 grid torus: 9 vertices, 18 triangles, not 1-neighborly."""
    def v(i, j):
        return 3 * (i % 3) + (j % 3) + 1
    fs = []
    for i in range(3):
        for j in range(3):
            fs.append((v(i, j), v(i + 1, j), v(i + 1, j + 1)))
            fs.append((v(i, j), v(i, j + 1), v(i + 1, j + 1)))
    return build_from_facets(9, fs)


def torus_7() -> SimplicialComplex:
    """Moebius-Csaszar torus: 7 vertices, every pair an edge."""
    fs = []
    for i in range(7):
        fs.append((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))
        fs.append((i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))
    return build_from_facets(7, fs)


@dataclass(frozen=True)
class NamedComplex:
    """A fixture with the invariants it is expected to have.

    ``expected`` maps a key such as ``"H1(Z)"`` or ``"golod:integral"`` to
    ``(value, provenance)``.
    """

    name: str
    build: Callable[[], SimplicialComplex]
    description: str
    expected: dict = field(default_factory=dict)

    @property
    def complex(self) -> SimplicialComplex:
        return self.build()


CORPUS: dict[str, NamedComplex] = {}


def _reg(name, build, description, **expected):
    CORPUS[name] = NamedComplex(name, build, description, expected)


_reg("bd3", lambda: boundary_simplex(3), "boundary of the 3-simplex (2-sphere)",
     H2_Z=("Z", "trivial"), neighborly1=(True, "trivial"),
     golod_integral=("Golod", "1-neighborly"), breakable_Z=(True, "closed manifold"))
_reg("simplex2", lambda: simplex(2), "full 2-simplex",
     H2_Z=("0", "trivial"), neighborly1=(True, "trivial"))
_reg("c4", lambda: cycle(4), "4-cycle",
     H1_Z=("Z", "circle"), chordal=(False, "trivial"), golod_integral=("NotGolod", "non-chordal"))
_reg("path3", lambda: path(3), "path 1-2-3", chordal=(True, "trivial"),
     golod_field=("Golod", "chordal graph"))
_reg("two_points", lambda: points(2), "two disjoint points",
     H0_Z=("Z", "trivial"))
_reg("wedge2bd3", lambda: wedge(boundary_simplex(3), boundary_simplex(3)),
     "wedge of two boundaries of 3-simplices",
     H2_Z=("Z^2", "Mayer-Vietoris"), neighborly1=(False, "two tetrahedra"),
     golod_integral=("Golod", "Z_K a wedge of spheres"), breakable_any=(False, "schedule {Z}"))
_reg("k1_moebius", k1_moebius, "Moebius band: antipodal hexagon minus the open triangle DEF",
     H1_Z=("Z", "|K1| ~ S^1"), H2_Z=("0", "|K1| ~ S^1"), euler=(0, "6 - 15 + 9"))
_reg("k2_rp2", k2_rp2, "minimal 6-vertex real projective plane",
     H1_Z=("Z/2", "|K2| ~ RP^2"), H2_Z=("0", "RP^2"), neighborly1=(True, "15 edges"),
     euler=(1, "6 - 15 + 10"), golod_integral=("Golod", "surface, 1-neighborly"))
_reg("moore_M", moore_M, "K1 and K2 glued along DEF = PQR: a triangulated Moore space S^1 u_4 e^2",
     H1_Z=("Z/4", "Moore space"), H2_Z=("0", "Moore space"), H2_Z4=("Z/4", "UCT"),
     neighborly1=(False, "A,d not adjacent"), chordal=(True, "two K6 glued on a triangle"),
     golod_integral=("NotGolod", "breakable over Z/4, not 1-neighborly"),
     golod_field=("Golod", "every field"))
_reg("torus_7", torus_7, "7-vertex torus",
     H1_Z=("Z^2", "torus"), H2_Z=("Z", "torus"), neighborly1=(True, "21 edges"),
     golod_integral=("Golod", "surface, 1-neighborly"))
_reg("torus_9", torus_9, "9-vertex grid torus",
     H1_Z=("Z^2", "torus"), H2_Z=("Z", "torus"), neighborly1=(False, "27 of 36 edges"),
     golod_integral=("NotGolod", "surface, not 1-neighborly"))


def get(name: str) -> SimplicialComplex:
    try:
        return CORPUS[name].complex
    except KeyError:
        raise KeyError(f"unknown corpus complex {name!r}; known: {', '.join(CORPUS)}") from None
