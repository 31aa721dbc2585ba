from itertools import combinations, product
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from golod.linalg import (AbelianGroup, LatticeQuotient, NotInLattice, cokernel,
                          cokernel_generator, field_nullspace, field_rank, image_basis,
                          int_matrix, is_surjective_mod, kernel_lattice, matmul, rank,
                          smith_normal_form, solve_in_basis)

from conftest import int_matrices


def _mat(rows, shape):
    return int_matrix(rows, shape)


def _determinantal_factors(rows, shape):
    """Invariant factors as ratios of gcds of k x k minors."""
    r, c = shape
    M = sympy.Matrix(r, c, [x for row in rows for x in row]) if r and c else None
    d_prev, out = 1, []
    for k in range(1, min(r, c) + 1):
        g = 0
        for ri in combinations(range(r), k):
            for ci in combinations(range(c), k):
                g = gcd(g, int(M.extract(list(ri), list(ci)).det()))
        if g == 0:
            break
        out.append(g // d_prev)
        d_prev = g
    return out


@given(int_matrices())
def test_snf_reconstructs(data):
    rows, shape = data
    A = _mat(rows, shape)
    s = smith_normal_form(A)
    assert (matmul(matmul(s.U, A), s.V) == s.D).all()
    r, c = shape
    assert (matmul(s.U, s.U_inv) == np.eye(r, dtype=int).astype(object)).all()
    assert (matmul(s.V, s.V_inv) == np.eye(c, dtype=int).astype(object)).all()
    d = s.diagonal
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@given(int_matrices(max_rows=4, max_cols=4, bound=9))
def test_snf_matches_determinantal_divisors(data):
    rows, shape = data
    assert list(smith_normal_form(_mat(rows, shape)).diagonal) == _determinantal_factors(rows, shape)


@given(int_matrices(max_rows=6, max_cols=7, bound=30))
def test_snf_matches_sympy(data):
    rows, shape = data
    r, c = shape
    if not (r and c):
        return
    M = sympy.Matrix(rows)
    expected = [abs(int(x)) for x in invariant_factors(M, domain=sympy.ZZ) if x != 0]
    assert list(smith_normal_form(_mat(rows, shape)).diagonal) == expected


@given(int_matrices(), st.randoms(use_true_random=False))
def test_snf_permutation_invariant(data, rnd):
    rows, shape = data
    A = _mat(rows, shape)
    pr = list(range(shape[0]))
    pc = list(range(shape[1]))
    rnd.shuffle(pr)
    rnd.shuffle(pc)
    B = A[pr, :][:, pc] if A.size else A
    assert smith_normal_form(A).diagonal == smith_normal_form(B).diagonal


def test_snf_small_example():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == ()
    assert cokernel([[2, 4], [6, 8]]) == AbelianGroup(0, (2, 4))


def test_abelian_group():
    assert AbelianGroup.from_factors([2, 3]) == AbelianGroup(0, (6,))
    g = AbelianGroup.from_factors([4, 2, 0, 1])
    assert g == AbelianGroup(1, (2, 4))
    assert str(g) == "Z + Z/2 + Z/4"
    assert str(AbelianGroup()) == "0"
    assert g.order() is None
    assert AbelianGroup(0, (2, 4)).order() == 8
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))


@given(int_matrices(max_rows=4, max_cols=4), st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_counts_invariant_factors(data, p):
    rows, shape = data
    A = _mat(rows, shape)
    d = smith_normal_form(A).diagonal
    assert field_rank(A, p) == sum(1 for x in d if x % p)
    assert field_rank(A, 0) == rank(A) == (sympy.Matrix(rows).rank() if all(shape) else 0)


@given(int_matrices(max_rows=4, max_cols=5), st.sampled_from([0, 2, 3, 5]))
def test_field_nullspace(data, p):
    rows, shape = data
    A = _mat(rows, shape)
    N = field_nullspace(A, p)
    assert N.shape == (shape[1], shape[1] - field_rank(A, p))
    prod = matmul(A, N)
    assert all((x % p if p else x) == 0 for x in prod.flat)
    assert field_rank(N.T, p) == N.shape[1]


@given(int_matrices(max_rows=2, max_cols=3, bound=6), st.sampled_from([2, 3, 4, 6]))
def test_surjective_mod_brute_force(data, n):
    rows, shape = data
    r, c = shape
    A = _mat(rows, shape)
    images = set()
    for x in product(range(n), repeat=c):
        images.add(tuple(sum(A[i, j] * x[j] for j in range(c)) % n for i in range(r)))
    assert is_surjective_mod(A, n) == (len(images) == n ** r)


@given(int_matrices(max_rows=3, max_cols=4, bound=20), st.sampled_from([6, 12, 30, 36]))
def test_crt_surjectivity(data, n):
    rows, shape = data
    A = _mat(rows, shape)
    parts = [p ** e for p, e in sympy.factorint(n).items()]
    assert is_surjective_mod(A, n) == all(is_surjective_mod(A, q) for q in parts)


@given(int_matrices(max_rows=2, max_cols=3, bound=6), st.sampled_from([0, 2, 4, 6]))
def test_kernel_lattice(data, n):
    rows, shape = data
    A = _mat(rows, shape)
    Kl = kernel_lattice(A, n)
    for x in matmul(A, Kl).flat:
        assert (x % n if n else x) == 0
    if n:
        B = image_basis(Kl)
        for x in product(range(n), repeat=shape[1]):
            ok = all(sum(A[i, j] * x[j] for j in range(shape[1])) % n == 0 for i in range(shape[0]))
            if ok:
                solve_in_basis(B, _mat([[v] for v in x], (shape[1], 1)))


def test_solve_in_basis_rejects_outsiders():
    B = _mat([[2, 0], [0, 3]], (2, 2))
    assert list(solve_in_basis(B, _mat([[4], [9]], (2, 1))).flat) == [2, 3]
    with pytest.raises(NotInLattice):
        solve_in_basis(B, _mat([[1], [0]], (2, 1)))


@given(int_matrices(max_rows=4, max_cols=4))
def test_lattice_quotient_of_identity_is_cokernel(data):
    rows, shape = data
    A = _mat(rows, shape)
    r = shape[0]
    Q = LatticeQuotient(np.eye(r, dtype=int).astype(object), A)
    assert Q.group == cokernel(A)
    # image vectors vanish in the quotient
    for j in range(shape[1]):
        assert Q.contains(A[:, j])
    for j, d in enumerate(Q.orders):
        g = Q.generators[:, j]
        coords = Q.coordinates(g)[:, 0]
        assert coords[j] == 1 and sum(1 for x in coords if x) == 1


@given(int_matrices(max_rows=4, max_cols=4), st.sampled_from([0, 2, 4, 9]))
def test_cokernel_generator(data, n):
    rows, shape = data
    A = _mat(rows, shape)
    r = shape[0]
    vec, grp = cokernel_generator(A, [n] * r)
    assert (vec is None) == is_surjective_mod(A, n)
    if vec is not None:
        big = np.eye(r, dtype=int).astype(object)
        small = np.concatenate([A, n * big], axis=1) if n else A
        assert not LatticeQuotient(big, small).contains(vec)
