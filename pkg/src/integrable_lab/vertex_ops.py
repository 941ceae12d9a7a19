"""Half vertex operators on weight-truncated partition bases.

Two families act on the semi-infinite chain: the L family moves bosons
horizontally (matrix elements psi/phi on horizontal strips), the R
family moves the conjugate spins (psi'/phi' on vertical strips).
Lowering operators (sign -) raise the weight by their degree; raising
operators (sign +) lower it, with powers of 1/z stored as a positive
grading.

Truncation discipline: an identity of graded degree d is asserted only
on matrix elements whose intermediate states provably stay inside the
basis (the interior-window rule).  Raising operators never leak, so
their products are exact everywhere; lowering operators leak at the top
and get the window restriction.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import GradedOperator, SparseMatrix
from .hall_littlewood import (
    elementary_e_coeffs,
    complete_q_coeffs,
    hl_P,
    hl_Q,
    pieri_phi,
    pieri_phi_prime,
    pieri_psi,
    pieri_psi_prime,
    skew_Q_omega,
)
from .partitions import (
    Basis,
    horizontal_strips_above,
    state_norm,
    vertical_strips_above,
    weight,
)
from .scalars import ONE, ZERO, as_scalar, tfact


class VertexOp:
    """A graded half vertex operator bound to its basis."""

    def __init__(self, family: str, sign: str, basis: Basis, t, op: GradedOperator):
        self.family = family
        self.sign = sign
        self.basis = basis
        self.t = as_scalar(t)
        self.op = op
        cap = max((weight(s) for s in basis), default=0)
        self.weight_cap = cap

    def block(self, k: int) -> SparseMatrix:
        return self.op.block(k)

    def safe_degree(self, source_weight: int) -> int:
        """Largest graded degree whose action from this weight stays in basis."""
        if self.sign == "-":
            return self.weight_cap - source_weight
        return source_weight

    def __repr__(self):
        return f"VertexOp(Gamma_{{{self.family},{self.sign}}}, dim={len(self.basis)})"


def build_gamma(family: str, sign: str, basis: Basis, t) -> VertexOp:
    """Construct Gamma_{family,sign} on a weight-capped partition basis.

    Degree-k blocks: lowering operators connect |mu> -> |lam| = |mu|+k
    with weights psi (L) or phi' (R); raising operators connect
    |lam> -> |mu| = |lam|-k with weights phi (L) or psi' (R).
    """
    if family not in ("L", "R") or sign not in ("+", "-"):
        raise ValueError("family must be L|R and sign +|-")
    t = as_scalar(t)
    dim = len(basis)
    cap = max((weight(s) for s in basis), default=0)
    blocks = {}

    def add(k, row, col, val):
        if val == 0:
            return
        blocks.setdefault(k, SparseMatrix(dim)).add_to(row, col, val)

    for j, mu in enumerate(basis.states):
        room = cap - weight(mu)
        if family == "L":
            ups = horizontal_strips_above(mu, room)
            coeff = pieri_psi if sign == "-" else pieri_phi
        else:
            ups = vertical_strips_above(mu, room)
            coeff = pieri_phi_prime if sign == "-" else pieri_psi_prime
        for lam in ups:
            if lam not in basis.index:
                continue
            k = weight(lam) - weight(mu)
            i = basis.index[lam]
            if sign == "-":
                add(k, i, j, coeff(lam, mu, t))
            else:
                # raising: matrix element (mu <- lam)
                add(k, j, i, coeff(lam, mu, t))
    op = GradedOperator(dim, blocks, max_degree=cap)
    return VertexOp(family, sign, basis, t, op)


# ---------------------------------------------------------------------------
# commutation factors

def commutation_series(fam_plus: str, fam_minus: str, t, max_r: int):
    """Coefficients K_r of the scalar factor in Gamma_+(u) Gamma_-(v) reordering.

    LL: (1 - t w)/(1 - w) -> K_r = (1-t) for r >= 1
    mixed: 1 + w           -> K_1 = 1, else 0
    RR: prod_k 1/(1 - t^k w) type expansion -> K_r = 1/r!_t
    with w = v/u tracked by the bigrading.
    """
    t = as_scalar(t)
    out = [ONE]
    for r in range(1, max_r + 1):
        if fam_plus == fam_minus == "L":
            out.append(ONE - t)
        elif fam_plus == fam_minus == "R":
            out.append(ONE / tfact(r, t))
        else:
            out.append(ONE if r == 1 else ZERO)
    return out


def gamma_commutation_check(fam_plus: str, fam_minus: str, basis: Basis, t,
                            max_degree: int):
    """Bigraded check of Gamma_+(u) Gamma_-(v) = K(v/u) Gamma_-(v) Gamma_+(u).

    Compares blocks A_a B_b against sum_r K_r B_{b-r} A_{a-r} for all
    a + b <= max_degree, on matrix elements whose source weight keeps the
    lowering intermediate inside the basis.  Returns (ok, report).
    """
    t = as_scalar(t)
    plus = build_gamma(fam_plus, "+", basis, t)
    minus = build_gamma(fam_minus, "-", basis, t)
    K = commutation_series(fam_plus, fam_minus, t, max_degree)
    cap = plus.weight_cap
    report = []
    ok = True
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            lhs = plus.block(a).mul(minus.block(b))
            rhs = SparseMatrix(len(basis))
            for r in range(min(a, b) + 1):
                if K[r] == 0:
                    continue
                rhs = rhs.add(minus.block(b - r).mul(plus.block(a - r)).scale(K[r]))
            bad = []
            for j, mu in enumerate(basis.states):
                if weight(mu) + b > cap:
                    continue  # intermediate would leak; outside the window
                for i in range(len(basis)):
                    if lhs.entry(i, j) != rhs.entry(i, j):
                        bad.append((i, j))
            good = not bad
            ok = ok and good
            report.append({"bidegree": (a, b), "ok": good, "bad_elements": bad[:5]})
    return ok, report


def pair_commutation_check(family: str, sign: str, basis: Basis, t, max_degree: int):
    """[Gamma_s(z), Gamma_s(z')] = 0: all block pairs commute on the window."""
    vop = build_gamma(family, sign, basis, t)
    cap = vop.weight_cap
    ok = True
    for a in range(max_degree + 1):
        for b in range(max_degree + 1):
            lhs = vop.block(a).mul(vop.block(b))
            rhs = vop.block(b).mul(vop.block(a))
            for j, mu in enumerate(basis.states):
                if sign == "-" and weight(mu) + max(a, b) > cap:
                    continue
                for i in range(len(basis)):
                    if lhs.entry(i, j) != rhs.entry(i, j):
                        ok = False
    return ok


# ---------------------------------------------------------------------------
# eigenstates

def build_eigenstate(kind: str, values, basis: Basis, t) -> dict:
    """|L,V> has components P_lam(V); |R,V> has components Q^omega_{lam'}(V)."""
    t = as_scalar(t)
    values = [as_scalar(v) for v in values]
    vec = {}
    for j, lam in enumerate(basis.states):
        if kind == "L":
            c = hl_P(lam, values, t)
        elif kind == "R":
            c = skew_Q_omega(lam, (), values, t)
        else:
            raise ValueError("state kind must be L|R")
        if c != 0:
            vec[j] = c
    return vec


def build_eigencovector(values, basis: Basis, t) -> dict:
    """<U| dual components Q_lam(U) (on the normalized dual basis)."""
    t = as_scalar(t)
    values = [as_scalar(v) for v in values]
    cov = {}
    for j, lam in enumerate(basis.states):
        c = hl_Q(lam, values, t)
        if c != 0:
            cov[j] = c
    return cov


def gamma_eigen_check(vop: VertexOp, state_kind: str, values, max_degree: int,
                      out_kind=None):
    """Check Gamma_+ |state> = (series) |out state> degree by degree.

    Eigenvalue series: Omega_t(z V) for Gamma_{L,+} on |L,V>; the
    elementary-symmetric series prod(1 + v/z) for Gamma_{L,+} on |R,V>
    and for Gamma_{R,+} on |L,V> (the latter lands on |R,V>).
    Components are compared on weights <= cap - 0 (raising never leaks,
    but the source components above the cap are absent, so the window
    restricts target weights to cap - degree).
    """
    if vop.sign != "+":
        raise ValueError("eigen checks are for raising operators")
    t = vop.t
    basis = vop.basis
    values = [as_scalar(v) for v in values]
    state = build_eigenstate(state_kind, values, basis, t)
    out_state = state if out_kind is None else build_eigenstate(out_kind, values, basis, t)
    if vop.family == "L" and state_kind == "L":
        series = complete_q_coeffs(values, t, max_degree)
    else:
        series = elementary_e_coeffs(values, max_degree)
    cap = vop.weight_cap
    report = []
    ok = True
    for r in range(max_degree + 1):
        lhs = vop.block(r).apply(state)
        bad = []
        for j, lam in enumerate(basis.states):
            if weight(lam) + r > cap:
                continue  # source component was truncated away
            want = series[r] * out_state.get(j, ZERO)
            if lhs.get(j, ZERO) != want:
                bad.append(j)
        good = not bad
        ok = ok and good
        report.append({"degree": r, "ok": good, "bad_components": bad[:5]})
    return ok, report


def covector_pieri_check(values, basis: Basis, t, max_degree: int):
    """<U| Gamma_{L,-} degree-r block = q_r(U) <U| on the interior window."""
    t = as_scalar(t)
    minus = build_gamma("L", "-", basis, t)
    cov = build_eigencovector(values, basis, t)
    series = complete_q_coeffs(values, t, max_degree)
    cap = minus.weight_cap
    ok = True
    report = []
    for r in range(max_degree + 1):
        row = minus.block(r).apply_row(cov)
        bad = []
        for j, mu in enumerate(basis.states):
            if weight(mu) + r > cap:
                continue
            if row.get(j, ZERO) != series[r] * cov.get(j, ZERO):
                bad.append(j)
        ok = ok and not bad
        report.append({"degree": r, "ok": not bad, "bad_components": bad[:5]})
    return ok, report


def skew_Q_via_ops(lam, mu, values, basis: Basis, t) -> Fraction:
    """Q_{lam/mu} as the (mu, lam) entry of the product of raising operators.

    `values` are alphabet values in the same convention as hl_Q (the
    graded 1/z powers of each operator are evaluated at the value).
    Raising products never leak, so this is exact whenever lam is in the
    basis.
    """
    t = as_scalar(t)
    plus = build_gamma("L", "+", basis, t)
    dim = len(basis)
    prod = SparseMatrix.identity(dim)
    for u in values:
        prod = prod.mul(plus.op.eval_at(as_scalar(u)))
    return prod.entry(basis.index[tuple(mu)], basis.index[tuple(lam)])


def adjoint_pair_check(family: str, basis: Basis, t) -> bool:
    """Gamma_+ block entry (mu,lam) = Gamma_- entry (lam,mu) * norm(lam)/norm(mu)."""
    t = as_scalar(t)
    plus = build_gamma(family, "+", basis, t)
    minus = build_gamma(family, "-", basis, t)
    norms = [state_norm(s, t) for s in basis.states]
    for k in range(plus.weight_cap + 1):
        mp = plus.block(k)
        mm = minus.block(k)
        for r, c, v in mp.entries():
            if v != mm.entry(c, r) * norms[c] / norms[r]:
                return False
        for r, c, v in mm.entries():
            if mp.entry(c, r) != v * norms[r] / norms[c]:
                return False
    return True
