import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hfw.groupring import (BlockComplex, GroupRingElement, Laurent, MultivariateUnsupported, NotNilpotent,
                           PairingNotIdentityLike, SparseMatrix, cancellation_reduce, certify_nonvanishing,
                           d_squared_check, f2_rank, gr_add, gr_is_unit, gr_mul, homology_univariate,
                           snf_laurent, verify_snf)

from helpers import naive_f2_rank, random_filtered_complex

E = GroupRingElement


def t(*exps):
    return E((e,) for e in exps)


exponent = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
element = st.lists(exponent, max_size=5).map(E)


def test_characteristic_two():
    one_plus = E([(0,), (1,)])
    assert one_plus * one_plus == t(0, 2)
    assert gr_is_unit(t(1)) and not gr_is_unit(one_plus)
    assert gr_add(one_plus, one_plus) == E()
    assert gr_mul(t(1), t(-1)) == t(0)
    assert t(3).inverse() == t(-3)


@settings(max_examples=1000, deadline=None)
@given(element, element, element)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + E() == a


@settings(max_examples=500, deadline=None)
@given(element, element)
def test_augmentation_is_multiplicative(a, b):
    assert (a * b).augment() == (a.augment() * b.augment()) % 2
    assert (a + b).augment() == (a.augment() + b.augment()) % 2


def test_augmentation_values():
    assert t(0, 1).augment() == 0
    assert t(5).augment() == 1


def random_sparse(rng, n, m, rank=1, density=0.4, width=2):
    entries = {}
    for i in range(n):
        for j in range(m):
            if rng.random() < density:
                entries[(i, j)] = E(tuple(rng.randint(-width, width) for _ in range(rank))
                                    for _ in range(rng.randint(1, 3)))
    return SparseMatrix(n, m, entries, rank)


def test_matrix_product_matches_naive():
    rng = random.Random(3)
    for _ in range(50):
        a = random_sparse(rng, 4, 3)
        b = random_sparse(rng, 3, 5)
        prod = a @ b
        for i in range(4):
            for j in range(5):
                naive = E()
                for k in range(3):
                    naive = naive + a.get(i, k) * b.get(k, j)
                assert prod.get(i, j) == naive


def test_d_squared():
    assert d_squared_check(SparseMatrix(3, 3, {}, 1))
    assert d_squared_check(SparseMatrix(2, 2, {(1, 0): t(0, 1)}, 1))
    assert not d_squared_check(SparseMatrix(2, 2, {(1, 0): t(0), (0, 1): t(0)}, 1))


def test_matrix_json_round_trip():
    rng = random.Random(5)
    m = random_sparse(rng, 4, 4, rank=2)
    back = SparseMatrix.from_json(m.to_json())
    assert back.entries == m.entries and back.nrows == 4


def test_f2_rank_matches_naive():
    rng = np.random.default_rng(1)
    for _ in range(100):
        a = rng.integers(0, 2, size=(rng.integers(1, 12), rng.integers(1, 12)))
        assert f2_rank(a) == naive_f2_rank(a.tolist())


def oracle_dimension(d):
    return d.shape[0] - 2 * naive_f2_rank(d.tolist())


def test_reduction_oracle_200_complexes():
    mismatches = 0
    for seed in range(200):
        d, A, B, levels = random_filtered_complex(seed)
        assert not ((d @ d) % 2).any()
        n = d.shape[0]
        H = [g for g in range(n) if g not in set(A) | set(B)]
        Hk, reduced = cancellation_reduce(BlockComplex(SparseMatrix.from_f2(d), A, B, H, levels))
        red = reduced.augment()
        assert not ((red.astype(int) @ red) % 2).any()
        if oracle_dimension(d) != len(Hk) - 2 * naive_f2_rank(red.tolist()):
            mismatches += 1
    assert mismatches == 0


def test_empty_reduction():
    d = SparseMatrix(2, 2, {(1, 0): t(0)}, 1)
    H, reduced = cancellation_reduce(BlockComplex(d, [0], [1], []))
    assert H == [] and reduced.nrows == 0


def test_pairing_must_be_unit():
    d = SparseMatrix(2, 2, {(1, 0): t(0, 1)}, 1)
    with pytest.raises(PairingNotIdentityLike):
        cancellation_reduce(BlockComplex(d, [0], [1], []))


def test_pairing_must_be_nilpotent_off_diagonal():
    # a1 -> b1, a2 -> b2 plus crossing arrows a1 -> b2, a2 -> b1 in both directions
    entries = {(2, 0): t(0), (3, 1): t(0), (3, 0): t(0), (2, 1): t(0)}
    d = SparseMatrix(4, 4, entries, 1)
    with pytest.raises((NotNilpotent, PairingNotIdentityLike)):
        cancellation_reduce(BlockComplex(d, [0, 1], [2, 3], []))


def test_snf_examples():
    res = snf_laurent(SparseMatrix(1, 1, {(0, 0): t(0, 1)}, 1))
    assert res.factors == [Laurent.from_exponents([0, 1])]
    res = snf_laurent(SparseMatrix(2, 2, {(0, 0): t(3), (1, 1): t(0)}, 1))
    assert res.factors == [Laurent.from_exponents([0])] * 2


def test_snf_certificates_100_random():
    rng = random.Random(11)
    failures = 0
    for _ in range(100):
        m = random_sparse(rng, 5, 5, rank=1, density=0.5, width=2)
        res = snf_laurent(m)
        if not verify_snf(m, res):
            failures += 1
    assert failures == 0


def test_snf_rejects_two_variables():
    with pytest.raises(MultivariateUnsupported):
        snf_laurent(SparseMatrix(1, 1, {(0, 0): E([(1, 1)])}, 2))


def test_univariate_homology_examples():
    h = homology_univariate(SparseMatrix(3, 3, {}, 1))
    assert h.free_rank == 3
    h = homology_univariate(SparseMatrix(2, 2, {(1, 0): t(0, 1)}, 1))
    assert h.free_rank == 0 and h.f2_dimension == 1 and h.nonzero
    assert h.describe() == "F2[t,t^-1]/(1 + t)"
    h = homology_univariate(SparseMatrix(2, 2, {(1, 0): t(4)}, 1))
    assert not h.nonzero and h.f2_dimension == 0


def test_certificate_examples():
    assert certify_nonvanishing(SparseMatrix(2, 2, {(1, 0): t(0, 1)}, 1))
    assert not certify_nonvanishing(SparseMatrix(2, 2, {(1, 0): t(0)}, 1))
    assert certify_nonvanishing(SparseMatrix(3, 3, {}, 1))
    # nonzero torsion invisible to the augmentation: 1 + t + t^2 augments to 1
    d = SparseMatrix(2, 2, {(1, 0): t(0, 1, 2)}, 1)
    assert homology_univariate(d).nonzero and not certify_nonvanishing(d)


def random_univariate_complex(rng):
    """P D0 P^-1 with unit-diagonal lower-triangular P over F2[t, 1/t]."""
    n = rng.randint(2, 7)
    order = list(range(n))
    rng.shuffle(order)
    entries = {}
    k = 0
    while k + 1 < n and rng.random() < 0.7:
        a, b = order[k], order[k + 1]
        entries[(b, a)] = E((rng.randint(-2, 2),) for _ in range(rng.randint(1, 3))) or t(0)
        k += 2
    D0 = SparseMatrix(n, n, entries, 1)
    N = SparseMatrix(n, n, {(i, j): t(rng.randint(-2, 2)) for i in range(n) for j in range(i)
                            if rng.random() < 0.3}, 1)
    P = SparseMatrix.identity(n, 1) + N
    Pinv = SparseMatrix.identity(n, 1)
    power = SparseMatrix.identity(n, 1)
    for _ in range(n):
        power = power @ N
        Pinv = Pinv + power
    return P @ D0 @ Pinv


def test_certificate_is_sound_on_100_random():
    rng = random.Random(7)
    for _ in range(100):
        d = random_univariate_complex(rng)
        assert d_squared_check(d)
        if certify_nonvanishing(d):
            assert homology_univariate(d).nonzero
