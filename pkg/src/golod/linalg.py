"""Exact integer linear algebra.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so shapes
with zero rows or columns behave and no entry ever overflows.  Homology with
``Z/n`` coefficients is reduced to integer lattices containing ``n Z^c``;
nothing here eliminates over a ring that is not a field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np


def int_matrix(rows, shape=None) -> np.ndarray:
    """Build an exact integer matrix; ``shape`` is needed for empty inputs."""
    if isinstance(rows, np.ndarray) and rows.dtype == object and shape is None:
        return rows
    rows = [[int(x) for x in r] for r in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    A = np.zeros(shape, dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            A[i, j] = x
    return A


def zeros(r: int, c: int) -> np.ndarray:
    A = np.empty((r, c), dtype=object)
    A.fill(0)
    return A


def identity(n: int) -> np.ndarray:
    A = zeros(n, n)
    for i in range(n):
        A[i, i] = 1
    return A


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    return A.dot(B)


def hstack(mats: Sequence[np.ndarray], rows: int) -> np.ndarray:
    mats = [M for M in mats if M.shape[1]]
    if not mats:
        return zeros(rows, 0)
    return np.concatenate(mats, axis=1)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum Z/t_i with t_1 | t_2 | ..."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of integers >= 2")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_factors(cls, factors: Sequence[int], free_rank: int = 0) -> "AbelianGroup":
        """Normalize arbitrary cyclic orders (0 meaning Z) to invariant factors."""
        free = free_rank + sum(1 for f in factors if f == 0)
        primes: dict[int, list[int]] = {}
        for f in factors:
            f = abs(f)
            if f <= 1:
                continue
            for p, e in _factorize(f).items():
                primes.setdefault(p, []).append(p ** e)
        k = max((len(v) for v in primes.values()), default=0)
        inv = [1] * k
        for p, pw in primes.items():
            pw.sort(reverse=True)
            for i, q in enumerate(pw):
                inv[k - 1 - i] *= q
        return cls(free, tuple(inv))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def exponent(self) -> int:
        return self.torsion[-1] if self.torsion else 1

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and _factorize(n) == {n: 1}


@dataclass(frozen=True)
class SmithForm:
    """U @ A @ V == D with unimodular U, V and d_1 | d_2 | ... | d_r > 0."""

    U: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray
    diagonal: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def D(self) -> np.ndarray:
        D = zeros(*self.shape)
        for i, d in enumerate(self.diagonal):
            D[i, i] = d
        return D


def smith_normal_form(A) -> SmithForm:
    """Smith normal form by smallest-pivot elimination.

    Transformations and their inverses are tracked so that callers can move
    between the original coordinates and the diagonal ones.
    """
    A = int_matrix(A)
    r, c = A.shape
    M = [list(row) for row in A]
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    Ui = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]
    Vi = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_add(i, j, q):  # row_i += q row_j
        if not q:
            return
        Mi, Mj = M[i], M[j]
        for k in range(c):
            if Mj[k]:
                Mi[k] += q * Mj[k]
        Ur, Uj = U[i], U[j]
        for k in range(r):
            if Uj[k]:
                Ur[k] += q * Uj[k]
        for row in Ui:
            if row[i]:
                row[j] -= q * row[i]

    def row_swap(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def row_neg(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]
        for row in Ui:
            row[i] = -row[i]

    def col_add(i, j, q):  # col_i += q col_j
        if not q:
            return
        for row in M:
            if row[j]:
                row[i] += q * row[j]
        for row in V:
            if row[j]:
                row[i] += q * row[j]
        Vj, Vr = Vi[j], Vi[i]
        for k in range(c):
            if Vr[k]:
                Vj[k] -= q * Vr[k]

    def col_swap(i, j):
        if i != j:
            for row in M:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    diag = []
    t = 0
    while t < min(r, c):
        best = None
        for i in range(t, r):
            row = M[i]
            for j in range(t, c):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, r):
                if M[i][t]:
                    row_add(i, t, -(M[i][t] // p))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if M[t][j]:
                    col_add(j, t, -(M[t][j] // p))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t to the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t + 1, r) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t + 1, c) if M[t][j]]
                _, i, j = min(cand)
                row_swap(t, i)
                col_swap(t, j)
                continue
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if M[t][t] < 0:
            row_neg(t)
        diag.append(M[t][t])
        t += 1

    return SmithForm(int_matrix(U, (r, r)), int_matrix(V, (c, c)),
                     int_matrix(Ui, (r, r)), int_matrix(Vi, (c, c)),
                     tuple(diag), (r, c))


def cokernel(A) -> AbelianGroup:
    """Z^rows / im(A) in invariant-factor form."""
    A = int_matrix(A)
    snf = smith_normal_form(A)
    return AbelianGroup(A.shape[0] - snf.rank, tuple(d for d in snf.diagonal if d != 1))


def rank(A) -> int:
    """Rank over Q."""
    return smith_normal_form(A).rank


def is_surjective_mod(A, n: int) -> bool:
    """Whether (Z/n)^cols -> (Z/n)^rows is onto; n = 0 means over Z."""
    A = int_matrix(A)
    rows = A.shape[0]
    if n:
        A = hstack([A, n * identity(rows)], rows)
    return cokernel(A).is_trivial


# lattices -----------------------------------------------------------------

def image_basis(G) -> np.ndarray:
    """Columns forming a Z-basis of the column lattice of G."""
    G = int_matrix(G)
    snf = smith_normal_form(G)
    B = zeros(G.shape[0], snf.rank)
    for i, d in enumerate(snf.diagonal):
        B[:, i] = snf.U_inv[:, i] * d
    return B


def kernel_lattice(A, n: int = 0) -> np.ndarray:
    """Generators of {x in Z^cols : A x = 0 mod n} (n = 0: exact kernel).

    For n > 0 the lattice contains n Z^cols; the columns returned generate it
    (not necessarily a basis).
    """
    A = int_matrix(A)
    r, c = A.shape
    snf = smith_normal_form(A)
    cols = []
    for i in range(c):
        v = snf.V[:, i]
        if i < snf.rank:
            if n == 0:
                continue
            v = v * (n // gcd(snf.diagonal[i], n))
        cols.append(v)
    K = zeros(c, len(cols))
    for j, v in enumerate(cols):
        K[:, j] = v
    if n:
        K = hstack([K, n * identity(c)], c)
    return K


class NotInLattice(ArithmeticError):
    pass


def solve_in_basis(B: np.ndarray, X: np.ndarray, snf: SmithForm | None = None) -> np.ndarray:
    """Integer Y with B @ Y == X for a basis matrix B (full column rank)."""
    snf = snf or smith_normal_form(B)
    k = B.shape[1]
    UX = matmul(snf.U, X)
    Y = zeros(k, X.shape[1])
    for i in range(k):
        d = snf.diagonal[i]
        for j in range(X.shape[1]):
            q, rem = divmod(UX[i, j], d)
            if rem:
                raise NotInLattice("vector is not in the lattice")
            Y[i, j] = q
    for i in range(k, UX.shape[0]):
        if any(UX[i, j] for j in range(X.shape[1])):
            raise NotInLattice("vector is not in the span")
    return matmul(snf.V, Y)


class LatticeQuotient:
    """Presentation of L2 / L1 for lattices L1 <= L2 <= Z^c.

    ``group`` gives the invariant factors; ``generators`` are vectors of L2
    whose classes generate the non-trivial cyclic summands, in order, and
    ``coordinates`` expresses any vector of L2 in those summands.
    """

    def __init__(self, big, small):
        big, small = int_matrix(big), int_matrix(small)
        self.ambient = big.shape[0]
        self.basis = image_basis(big)
        self._bsnf = smith_normal_form(self.basis)
        k = self.basis.shape[1]
        rel = solve_in_basis(self.basis, small, self._bsnf) if small.shape[1] else zeros(k, 0)
        snf = smith_normal_form(rel)
        self._U = snf.U
        orders = []
        idx = []
        for i in range(k):
            d = snf.diagonal[i] if i < snf.rank else 0
            if d != 1:
                idx.append(i)
                orders.append(d)
        self._idx = idx
        # torsion summands first (increasing), free summands last
        self.orders = tuple(orders)
        self.group = AbelianGroup(orders.count(0), tuple(d for d in orders if d))
        gens = zeros(self.ambient, len(idx))
        for j, i in enumerate(idx):
            gens[:, j] = matmul(self.basis, snf.U_inv[:, i:i + 1])[:, 0]
        self.generators = gens

    def coordinates(self, X) -> np.ndarray:
        """Summand coordinates of the columns of X (entries reduced mod orders)."""
        X = np.asarray(X, dtype=object)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        Y = solve_in_basis(self.basis, X, self._bsnf)
        Z = matmul(self._U, Y)
        out = zeros(len(self._idx), X.shape[1])
        for j, i in enumerate(self._idx):
            d = self.orders[j]
            for col in range(X.shape[1]):
                out[j, col] = Z[i, col] % d if d else Z[i, col]
        return out

    def contains(self, x) -> bool:
        """Whether vector x (in L2) is zero in the quotient."""
        return not any(self.coordinates(x)[:, 0])


def cokernel_generator(A, moduli: Sequence[int]):
    """A vector of Z^rows not in im(A) + diag(moduli), or None if onto."""
    A = int_matrix(A)
    rows = A.shape[0]
    extra = zeros(rows, rows)
    for i, d in enumerate(moduli):
        extra[i, i] = d
    X = hstack([A, extra], rows)
    snf = smith_normal_form(X)
    for i in range(rows):
        d = snf.diagonal[i] if i < snf.rank else 0
        if d != 1:
            return snf.U_inv[:, i].copy(), AbelianGroup.from_factors(
                [snf.diagonal[j] if j < snf.rank else 0 for j in range(rows)])
    return None, AbelianGroup()


# field arithmetic ---------------------------------------------------------

def _to_field(x, p):
    return x % p if p else Fraction(x)


def row_echelon(A, p: int = 0):
    """Reduced row echelon form over GF(p) (p = 0: over Q).

    Returns (rows, pivot_columns) with rows as lists of field elements.
    """
    A = int_matrix(A)
    r, c = A.shape
    M = [[_to_field(A[i, j], p) for j in range(c)] for i in range(r)]
    pivots = []
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = pow(M[row][col], -1, p) if p else 1 / M[row][col]
        M[row] = [(x * inv) % p if p else x * inv for x in M[row]]
        for i in range(r):
            if i != row and M[i][col]:
                f = M[i][col]
                Mr = M[row]
                if p:
                    M[i] = [(a - f * b) % p for a, b in zip(M[i], Mr)]
                else:
                    M[i] = [a - f * b for a, b in zip(M[i], Mr)]
        pivots.append(col)
        row += 1
        if row == r:
            break
    return M[:row], pivots


def field_rank(A, p: int = 0) -> int:
    A = int_matrix(A)
    if not A.size:
        return 0
    return len(row_echelon(A, p)[1])


def field_nullspace(A, p: int = 0) -> np.ndarray:
    """Integer columns spanning ker A over GF(p) or Q (cleared denominators)."""
    A = int_matrix(A)
    c = A.shape[1]
    rows, pivots = row_echelon(A, p) if A.shape[0] else ([], [])
    free = [j for j in range(c) if j not in set(pivots)]
    N = zeros(c, len(free))
    for k, f in enumerate(free):
        v = [0] * c
        v[f] = 1 if p else Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = (-row[f]) % p if p else -row[f]
        if not p:
            den = 1
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
            v = [int(x * den) for x in v]
        for i in range(c):
            N[i, k] = int(v[i])
    return N
