import random
from fractions import Fraction as F

import pytest

from integrable_lab.graded import GradedOperator, SparseMatrix, commutator_vanishes, matrix_dump
from integrable_lab.partitions import partition_basis


def random_sparse(dim, rng, fill=0.4):
    m = SparseMatrix(dim)
    for r in range(dim):
        for c in range(dim):
            if rng.random() < fill:
                m.set_entry(r, c, F(rng.randint(-5, 5), rng.randint(1, 7)))
    return m


def random_graded(dim, rng, max_deg=3):
    return GradedOperator(dim, {k: random_sparse(dim, rng) for k in range(max_deg + 1)},
                          max_degree=max_deg)


def test_identity_compose():
    rng = random.Random(0)
    B = random_graded(4, rng)
    I = GradedOperator.identity(4)
    assert I.compose(B, 6) == B
    assert B.compose(I, 6) == B


def test_reparameterize_trivial():
    rng = random.Random(1)
    A = random_graded(3, rng)
    assert A.reparameterize(F(1)) == A


def test_compose_is_convolution():
    rng = random.Random(2)
    A = random_graded(3, rng, 2)
    B = random_graded(3, rng, 2)
    C = A.compose(B, 4)
    for k in range(5):
        acc = SparseMatrix(3)
        for i in range(k + 1):
            acc = acc.add(A.block(i).mul(B.block(k - i)))
        assert C.block(k) == acc


def test_compose_truncates_explicitly():
    rng = random.Random(3)
    A = random_graded(3, rng, 3)
    B = random_graded(3, rng, 3)
    C = A.compose(B, 2)
    assert C.max_degree == 2
    assert all(k <= 2 for k in C.degrees())


def test_associativity_random_triples():
    rng = random.Random(4)
    for _ in range(5):
        A = random_graded(3, rng, 2)
        B = random_graded(3, rng, 2)
        C = random_graded(3, rng, 2)
        assert A.compose(B, 6).compose(C, 6) == A.compose(B.compose(C, 6), 6)


def test_bar_adjoint_diagonal_trivial_norm():
    d = SparseMatrix(3)
    for i in range(3):
        d.set_entry(i, i, F(i + 1, 2))
    A = GradedOperator(3, {0: d})
    assert A.bar_adjoint([F(1)] * 3) == A


def test_bar_adjoint_involution():
    rng = random.Random(5)
    A = random_graded(4, rng, 2)
    norms = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4)]
    assert A.bar_adjoint(norms).bar_adjoint(norms) == A


def test_bar_adjoint_rejects_zero_norm():
    A = GradedOperator.identity(2)
    with pytest.raises(ValueError):
        A.bar_adjoint([F(1), F(0)])


def test_reflect():
    rng = random.Random(6)
    A = random_graded(3, rng, 2)
    R = A.reflect(2)
    assert R.block(0) == A.block(2)
    assert R.block(2) == A.block(0)


def test_eval_matches_blocks():
    rng = random.Random(7)
    A = random_graded(3, rng, 2)
    z = F(3, 5)
    M = A.eval_at(z)
    expect = A.block(0).add(A.block(1).scale(z)).add(A.block(2).scale(z * z))
    assert M == expect


def test_apply_vector_and_row():
    rng = random.Random(8)
    m = random_sparse(4, rng)
    vec = {0: F(1), 2: F(-1, 3)}
    out = m.apply(vec)
    for r in range(4):
        expect = m.entry(r, 0) * vec[0] + m.entry(r, 2) * vec[2]
        assert out.get(r, F(0)) == expect
    cov = {1: F(2), 3: F(1, 2)}
    row = m.apply_row(cov)
    for c in range(4):
        expect = cov[1] * m.entry(1, c) + cov[3] * m.entry(3, c)
        assert row.get(c, F(0)) == expect


def test_commutator_vanishes_on_powers():
    rng = random.Random(9)
    m = random_sparse(3, rng)
    A = GradedOperator(3, {0: m, 1: m.mul(m)})
    B = GradedOperator(3, {0: m.mul(m).mul(m)})
    assert commutator_vanishes(A, B)


def test_shift_and_scale():
    rng = random.Random(10)
    A = random_graded(3, rng, 1)
    S = A.shift(2)
    assert S.block(2) == A.block(0)
    assert S.block(3) == A.block(1)
    assert A.scale(F(2)).block(1) == A.block(1).scale(F(2))


def test_dump_schema():
    basis = partition_basis(2)
    A = GradedOperator.identity(len(basis))
    d = matrix_dump(A, basis, "id")
    assert d["basis"] == ["[]", "[1]", "[2]", "[1,1]"]
    assert all(set(e) == {"degree", "row", "col", "value"} for e in d["entries"])
    assert all(e["value"] == "1" for e in d["entries"])
