import random
from fractions import Fraction as F

import pytest

from integrable_lab.graded import GradedOperator, SparseMatrix, commutator_vanishes
from integrable_lab.lattice import (
    build_lax,
    build_sixvertex_r,
    chain_basis,
    folded_toda_transfer,
    free_window_basis,
    hermitian_reflect_check,
    open_A_via_monodromy,
    open_hamiltonian,
    open_transfer,
    periodic_hamiltonian,
    periodic_transfer,
    qboson_monodromy,
    rll_check_qboson,
    single_site_basis,
    sixvertex_weights,
    spin_periodic_transfer_cleared,
    toda_gauge_check,
    toda_lax,
    toda_open_A,
    toda_shift_op,
    toda_x_op,
    translation_op,
)
from integrable_lab.partitions import (
    occupation_basis,
    occupation_to_partition,
    partition_basis,
    state_norm,
    weight,
)
from integrable_lab.vertex_ops import build_gamma


T_SAMPLE = F(2, 7)
X_SAMPLE = F(3, 5)


def printed_lambda2(t, x):
    """The 3x3 transfer matrix as printed, basis order reversed vs ours."""
    return {
        0: {(0, 0): F(1), (1, 1): F(1), (2, 2): F(1)},
        1: {(0, 1): (1 - t), (1, 0): (1 - t**2) * x, (1, 2): (1 - t**2), (2, 1): (1 - t) * x},
        2: {(0, 0): x, (1, 1): x, (2, 2): x},
    }


def as_entry_dict(op):
    return {d: {(r, c): v for r, c, v in op.block(d).entries()} for d in op.degrees()}


def reversed_display(entries, dim):
    return {d: {(dim - 1 - r, dim - 1 - c): v for (r, c), v in m.items()}
            for d, m in entries.items()}


def test_periodic_transfer_matches_printed_matrix():
    lam = periodic_transfer(2, 2, X_SAMPLE, T_SAMPLE)
    got = reversed_display(as_entry_dict(lam), 3)
    expect = printed_lambda2(T_SAMPLE, X_SAMPLE)
    assert got == expect


def test_periodic_degree_zero_identity():
    for (N, n) in [(2, 2), (3, 2), (4, 3)]:
        lam = periodic_transfer(N, n, X_SAMPLE, T_SAMPLE)
        assert lam.block(0) == SparseMatrix.identity(len(occupation_basis(N, n)))


def test_periodic_degree_one_is_hamiltonian():
    for (N, n) in [(2, 2), (3, 2), (3, 3)]:
        lam = periodic_transfer(N, n, X_SAMPLE, T_SAMPLE)
        H = periodic_hamiltonian(N, n, X_SAMPLE, T_SAMPLE)
        assert lam.block(1) == H


def test_translation_commutes_and_cycles():
    for (N, n) in [(2, 2), (3, 2), (3, 3)]:
        lam = periodic_transfer(N, n, X_SAMPLE, T_SAMPLE)
        T = translation_op(N, n, X_SAMPLE)
        for d in lam.degrees():
            assert T.mul(lam.block(d)) == lam.block(d).mul(T)
        P = SparseMatrix.identity(len(occupation_basis(N, n)))
        for _ in range(N):
            P = T.mul(P)
        assert P == SparseMatrix.identity(P.dim).scale(X_SAMPLE**n)


def test_commuting_family():
    rng = random.Random(17)
    for (N, n) in [(2, 2), (3, 3), (4, 2)]:
        t = F(rng.randint(2, 8), 11)
        x = F(rng.randint(2, 8), 9)
        lam1 = periodic_transfer(N, n, x, t)
        assert commutator_vanishes(lam1, lam1)


def test_hermitian_reflected_form():
    # N^-1 Lam_k(1/x)^T N = (1/x) Lam_{N-k}(x)
    for (N, n) in [(2, 2), (3, 2), (3, 3)]:
        basis = occupation_basis(N, n)
        norms = [state_norm(occupation_to_partition(m), T_SAMPLE) for m in basis.states]
        ok = hermitian_reflect_check(
            lambda xv: periodic_transfer(N, n, xv, T_SAMPLE),
            norms, N, X_SAMPLE, lambda xv: 1 / xv)
        assert ok


def test_rll_qboson():
    ok, failures = rll_check_qboson(F(3), F(5), T_SAMPLE, cap=5)
    assert ok, failures[:3]


def test_rll_degenerate_t1():
    ok, _ = rll_check_qboson(F(3), F(5), F(1), cap=4)
    assert ok


def test_sixvertex_weight_example():
    w = sixvertex_weights(F(1), F(1, 2), F(1, 3))
    assert w["a"] == F(1) * F(1, 3) - F(1, 2) == F(-1, 6)
    r = build_sixvertex_r(F(1), F(1, 2), F(1, 3))
    assert r[((0, 0), (0, 0))] == F(-1, 6)


def test_spin_lax_reduces_to_qboson():
    basis = single_site_basis(4)
    qb = build_lax("qboson", basis, {"t": T_SAMPLE})
    sp = build_lax("spin_s", basis, {"t": T_SAMPLE, "s": F(0)})
    for i in range(2):
        for j in range(2):
            assert qb[i][j] == sp[i][j]


def test_open_transfer_matches_gamma_restriction():
    # finite-size consistency: the projected product equals the half vertex
    # operator restricted to lam_1 <= N, for both directions
    D, N = 7, 3
    basis = partition_basis(D, max_part=N)
    A = open_transfer(basis, N, T_SAMPLE, direction="right")
    gm = build_gamma("L", "-", basis, T_SAMPLE)
    for d in range(N + 1):
        assert A.block(d) == gm.block(d), d
    Ab = open_transfer(basis, N, T_SAMPLE, direction="left")
    gp = build_gamma("L", "+", basis, T_SAMPLE)
    for d in range(N + 1):
        assert Ab.block(d) == gp.block(d), d


def test_open_transfer_z1_is_open_hamiltonian():
    D, N = 6, 3
    basis = partition_basis(D, max_part=N)
    A = open_transfer(basis, N, T_SAMPLE)
    assert A.block(1) == open_hamiltonian(basis, N, T_SAMPLE)


def test_monodromy_route_equals_run_expansion():
    # (A_N, Abar_N) from the 2x2 monodromy with a trivial first site agree
    # with the projected-run construction on the common weight window
    N, D, headroom = 2, 5, 4
    big = partition_basis(D + headroom, max_part=N)
    small = partition_basis(D, max_part=N)
    A_m, Abar_m = open_A_via_monodromy(big, N, T_SAMPLE)
    A_r = open_transfer(big, N, T_SAMPLE, direction="right")
    Abar_r = open_transfer(big, N, T_SAMPLE, direction="left")
    keep = [big.index[s] for s in small.states]
    for d in range(N + 1):
        for i in keep:
            for j in keep:
                assert A_m.block(d).entry(i, j) == A_r.block(d).entry(i, j)
                assert Abar_m.block(d).entry(i, j) == Abar_r.block(d).entry(i, j)


def test_monodromy_small_blocks():
    basis = chain_basis(2, 3)
    T = qboson_monodromy(basis, 2, T_SAMPLE)
    # degree-0 block of T_11 is the identity
    assert T[0][0].block(0) == SparseMatrix.identity(len(basis))


def test_toda_lax_entries():
    w = free_window_basis(2, -2, 2)
    L = toda_lax("toda", w, 1, T_SAMPLE)
    # (2,1) entry: -z X_1 x_1^{-1}: on state (0, 0) gives -t^0 |1,0>
    src = w.index[(0, 0)]
    tgt = w.index[(1, 0)]
    assert L[1][0].block(1).entry(tgt, src) == -1
    # (1,2) entry is the diagonal x_1
    assert L[0][1].block(0).entry(src, src) == T_SAMPLE**0
    st = w.index[(2, -1)]
    assert L[0][1].block(0).entry(st, st) == T_SAMPLE**2


def test_toda_gauge_relations():
    for N in (2, 3):
        ok, report = toda_gauge_check(N, T_SAMPLE, window_top=N + 2)
        assert ok, report


def test_toda_open_A_matches_run_expansion():
    N, max_len = 2, 6
    basis = partition_basis(8, max_part=N, max_length=max_len + N)
    A_run = open_transfer(basis, N, T_SAMPLE, direction="right")
    A_toda = toda_open_A(N, T_SAMPLE, max_len, basis)
    # compare on sources with length headroom
    for d in range(N + 1):
        for j, lam in enumerate(basis.states):
            if len(lam) > max_len:
                continue
            for i in range(len(basis)):
                assert A_toda.block(d).entry(i, j) == A_run.block(d).entry(i, j), (d, lam)


def test_folded_toda_transfer_equals_qboson():
    for (N, n) in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        lam = periodic_transfer(N, n, X_SAMPLE, T_SAMPLE)
        folded = folded_toda_transfer(N, n, X_SAMPLE, T_SAMPLE)
        assert lam == folded, (N, n)


def test_spin_transfer_reduces_at_s0():
    for (N, M) in [(2, 2), (3, 2)]:
        lam = periodic_transfer(N, M, X_SAMPLE, T_SAMPLE)
        sp = spin_periodic_transfer_cleared(N, M, X_SAMPLE, T_SAMPLE, F(0))
        assert lam == sp


def test_window_ops():
    w = free_window_basis(2, -1, 1)
    X1 = toda_shift_op(w, [1], +1)
    x2 = toda_x_op(w, 2, T_SAMPLE)
    # x X = t X x on coordinate 1
    x1 = toda_x_op(w, 1, T_SAMPLE)
    assert x1.mul(X1) == X1.mul(x1).scale(T_SAMPLE)
    assert x2.mul(X1) == X1.mul(x2)


def test_build_rmatrix_dispatch():
    from integrable_lab.lattice import build_rmatrix, rll_check

    r = build_rmatrix("sixvertex", F(1), F(1, 2), F(1, 3))
    assert r[((0, 0), (0, 0))] == F(-1, 6)
    rq = build_rmatrix("toda_q", F(3, 4), F(5, 3), T_SAMPLE, cap=3)
    # the (2,2) auxiliary entry is -1 (times the identity on the spin space)
    assert rq[1][1].entry(0, 0) == -1 and rq[1][1].entry(2, 2) == -1
    assert rq[0][1].entry(2, 2) == T_SAMPLE**2
    ok, _ = rll_check("qboson", {"u": F(3), "v": F(5), "t": T_SAMPLE}, cap=4)
    assert ok
    ok, _ = rll_check("toda_intertwine",
                      {"z": F(3, 4), "u": F(5, 3), "t": T_SAMPLE}, cap=5)
    assert ok
    with pytest.raises(ValueError):
        rll_check("qboson", {"u": F(3), "v": F(5), "t": T_SAMPLE}, cap=2)


def test_build_lax_toda_dispatch():
    from integrable_lab.lattice import build_lax, toda_lax

    w = free_window_basis(2, -2, 2)
    via_dispatch = build_lax("toda", w, {"t": T_SAMPLE, "site": 1})
    direct = toda_lax("toda", w, 1, T_SAMPLE)
    for i in range(2):
        for j in range(2):
            assert via_dispatch[i][j] == direct[i][j]


def test_toda_open_Abar_matches_run_expansion():
    from integrable_lab.lattice import toda_open_Abar

    N, max_len = 2, 6
    basis = partition_basis(8, max_part=N, max_length=max_len + N)
    Ab_run = open_transfer(basis, N, T_SAMPLE, direction="left")
    Ab_toda = toda_open_Abar(N, T_SAMPLE, max_len, basis)
    for d in range(N + 1):
        for j, lam in enumerate(basis.states):
            if len(lam) > max_len:
                continue
            for i in range(len(basis)):
                assert Ab_toda.block(d).entry(i, j) == Ab_run.block(d).entry(i, j), (d, lam)


def test_enumerate_basis_dispatcher():
    from integrable_lab.partitions import enumerate_basis

    b = enumerate_basis({"kind": "partitions", "max_weight": 2})
    assert b.states == [(), (1,), (2,), (1, 1)]
    b2 = enumerate_basis({"kind": "occupations", "N": 2, "n": 2})
    assert b2.states == [(2, 0), (1, 1), (0, 2)]
    b3 = enumerate_basis({"kind": "windows", "K": 1, "M": 2})
    assert b3.shift == 1
    with pytest.raises(ValueError):
        enumerate_basis({"kind": "everything"})
