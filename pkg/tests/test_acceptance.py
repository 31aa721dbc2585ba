"""Acceptance criteria 1-7.  Every check is exact; each test prints one
PASS/FAIL line to the terminal whatever the capture mode.
"""

from __future__ import annotations

import random
import time
from math import gcd

import pytest

from golod import corpus
from golod.checker import (GOLOD, NOT_GOLOD, BreakableNotNeighborly, NonChordalCycle,
                           NonvanishingProduct, bigraded_betti, check_golod_field,
                           check_golod_integral_2dim, check_golod_ring, product_scan,
                           verify_witness)
from golod.breakability import vertex_breakable
from golod.complex import full_subcomplex, is_k_neighborly, vertex_deletion
from golod.homology import (GF, QQ, ZZ, SimplicialMap, Zmod, chain_complex, homology,
                            inclusion_map, induced_map)
from golod.linalg import AbelianGroup, int_matrix, is_surjective_mod, matmul, smith_normal_form
from golod.sweep import two_complexes

from conftest import random_complex

FIELDS = [QQ, GF(2), GF(3)]


@pytest.fixture()
def say(request):
    tr = request.config.pluginmanager.get_plugin("terminalreporter")

    def emit(n, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
        if tr is not None:
            tr.write_line("")
            tr.write_line(line)
        else:
            print(line)
        assert ok, line
    return emit


def test_criterion_1_moore_separation(say):
    t0 = time.perf_counter()
    M = corpus.moore_M()
    fields = {str(k): check_golod_field(M, k).verdict for k in FIELDS}
    integral = check_golod_integral_2dim(M)
    ring = check_golod_ring(M, 4)
    elapsed = time.perf_counter() - t0
    w = integral.witness
    rw = ring.witness
    ok = (all(v == GOLOD for v in fields.values())
          and integral.verdict == NOT_GOLOD
          and isinstance(w, BreakableNotNeighborly)
          and w.coefficient == Zmod(4)
          and not M.is_edge(*w.pair)
          and verify_witness(M, w)
          and ring.verdict == NOT_GOLOD
          and isinstance(rw, NonvanishingProduct)
          and rw.coefficient == Zmod(4)
          and not M.is_edge(*rw.left)
          and verify_witness(M, rw)
          and elapsed < 60)
    pair = "{" + ",".join(M.name(v) for v in w.pair) + "}"
    say(1, ok, f"fields {fields}; integral {integral.verdict} via {pair} over "
               f"{w.coefficient}; ring Z/4 {ring.verdict}; {elapsed:.1f}s")


def test_criterion_2_homology_oracle(say):
    M = corpus.moore_M()
    h1 = homology(M, 1, ZZ).group
    h2 = homology(M, 2, ZZ).group
    h2_4 = homology(M, 2, Zmod(4)).group
    dels = [homology(vertex_deletion(M, v), 2, Zmod(4)).group for v in M.vertices]
    ok = (h1 == AbelianGroup(0, (4,)) and h2.is_trivial and h2_4 == AbelianGroup(0, (4,))
          and all(g.is_trivial or g == AbelianGroup(0, (2,)) for g in dels))
    say(2, ok, f"H1={h1}, H2={h2}, H2(Z/4)={h2_4}, deletions {sorted({str(g) for g in dels})}")


def test_criterion_3_examples(say):
    W = corpus.wedge(corpus.boundary_simplex(3), corpus.boundary_simplex(3))
    S = corpus.boundary_simplex(3)
    C = corpus.cycle(4)
    wedge = check_golod_integral_2dim(W).verdict
    rp2 = check_golod_integral_2dim(corpus.k2_rp2()).verdict
    c4 = check_golod_integral_2dim(C)
    s_break = vertex_breakable(S, 2, ZZ).breakable
    s_golod = check_golod_integral_2dim(S).verdict
    ok = (wedge == GOLOD and rp2 == GOLOD and c4.verdict == NOT_GOLOD
          and isinstance(c4.witness, NonChordalCycle) and verify_witness(C, c4.witness)
          and s_break and s_golod == GOLOD and is_k_neighborly(S, 1))
    say(3, ok, f"wedge {wedge}, RP2_6 {rp2}, C4 {c4.verdict} cycle "
               f"{getattr(c4.witness, 'cycle', None)}, bd3 breakable={s_break} {s_golod}")


def test_criterion_4_surfaces(say):
    rows = []
    ok = True
    for name in ("k2_rp2", "torus_7", "torus_9"):
        K = corpus.get(name)
        golod = check_golod_integral_2dim(K).golod
        neighborly = is_k_neighborly(K, 1)
        ok &= golod == neighborly
        rows.append(f"{name} golod={golod} neighborly={neighborly}")
    say(4, ok, "; ".join(rows))


def test_criterion_5_cross_oracle(say):
    t0 = time.perf_counter()
    n = 0
    bad = []
    verdicts = {GOLOD: 0, NOT_GOLOD: 0}
    for K in two_complexes(6, cap=100_000):
        n += 1
        for k in FIELDS:
            a = check_golod_field(K, k).verdict
            b = product_scan(K, k).verdict
            verdicts[a] += 1
            if a != b:
                bad.append((K, str(k), a, b))
    elapsed = time.perf_counter() - t0
    ok = not bad and n <= 100_000 and elapsed < 1800
    say(5, ok, f"{n} complexes x {len(FIELDS)} fields, {len(bad)} disagreements, "
               f"verdict counts {verdicts}, {elapsed:.0f}s")


def test_criterion_6_hochster(say):
    c4 = bigraded_betti(corpus.cycle(4), QQ).entries
    s = bigraded_betti(corpus.boundary_simplex(3), QQ).entries
    pts = bigraded_betti(corpus.points(2), QQ).entries
    ok = (c4 == {(3, (1, 3)): 1, (3, (2, 4)): 1, (6, (1, 2, 3, 4)): 1}
          and s == {(7, (1, 2, 3, 4)): 1} and pts == {(3, (1, 2)): 1})
    say(6, ok, f"C4 {c4}; bd3 {s}; two points {pts}")


# criterion 7 --------------------------------------------------------------

def _uct_ok(K):
    for n in range(0, K.dim + 1):
        hn = homology(K, n, ZZ).group
        hl = homology(K, n - 1, ZZ).group
        for q in (2, 3, 4):
            want = q ** hn.free_rank
            for t in hn.torsion + hl.torsion:
                want *= gcd(t, q)
            if homology(K, n, Zmod(q)).group.order() != want:
                return False
    return True


def _euler_ok(K):
    for k in (QQ, GF(2)):
        if sum((-1) ** n * homology(K, n, k).dimension
               for n in range(-1, K.dim + 1)) != K.euler_characteristic() - 1:
            return False
    return True


def _boundary_ok(K):
    cc = chain_complex(K)
    for d in range(0, K.dim + 1):
        A, B = cc.boundary(d), cc.boundary(d + 1)
        if A.size and B.size and any(matmul(A, B).flat):
            return False
    return True


def _snf_ok(A):
    s = smith_normal_form(A)
    d = s.diagonal
    return ((matmul(matmul(s.U, A), s.V) == s.D).all()
            and all(b % a == 0 for a, b in zip(d, d[1:])))


def _functor_ok(K, rng):
    if K.m < 3:
        return True
    J = sorted(rng.sample(K.vertices, rng.randint(2, K.m)))
    I = sorted(rng.sample(J, rng.randint(1, len(J))))
    KJ, KI = full_subcomplex(K, J), full_subcomplex(K, I)
    f = SimplicialMap(KI, KJ, {v: J.index(lab) + 1 for v, lab in zip(KI.vertices, KI.labels)})
    g, h = inclusion_map(KJ, K), inclusion_map(KI, K)
    for coeff in (ZZ, Zmod(4)):
        for n in range(0, K.dim + 1):
            prod = matmul(induced_map(g, n, coeff).matrix, induced_map(f, n, coeff).matrix)
            C = induced_map(h, n, coeff)
            for i, o in enumerate(C.codomain.orders):
                for j in range(C.matrix.shape[1]):
                    diff = prod[i, j] - C.matrix[i, j]
                    if (diff % o if o else diff) != 0:
                        return False
    return True


def _crt_ok(rng):
    r, c = rng.randint(1, 3), rng.randint(0, 4)
    A = int_matrix([[rng.randint(-12, 12) for _ in range(c)] for _ in range(r)], (r, c))
    if not _snf_ok(A):
        return False
    return is_surjective_mod(A, 12) == (is_surjective_mod(A, 4) and is_surjective_mod(A, 3))


def test_criterion_7_properties(say):
    rng = random.Random(7)
    instances = [c.complex for c in corpus.CORPUS.values()]
    instances += [random_complex(rng) for _ in range(1000)]
    failures = {"boundary": 0, "uct": 0, "euler": 0, "snf": 0, "functor": 0, "crt": 0}
    for K in instances:
        failures["boundary"] += not _boundary_ok(K)
        failures["euler"] += not _euler_ok(K)
        failures["uct"] += not _uct_ok(K)
        failures["functor"] += not _functor_ok(K, rng)
        cc = chain_complex(K)
        failures["snf"] += not all(_snf_ok(cc.boundary(d)) for d in range(0, K.dim + 1))
        failures["crt"] += not _crt_ok(rng)
    ok = not any(failures.values())
    say(7, ok, f"{len(instances)} instances, failures {failures}")
