"""Semi-infinite chain scalar products and the Gaudin determinant.

The scalar product of two Bethe wave functions on the half line is a
convergent sum over weakly increasing position vectors; it equals

    t^{n(n-1)/2} / (1-t)^n * det[1/((1-u_k v_l)(1-t u_k v_l))] / det[1/(1-t u_k v_l)]

independently of the spin.  The truncated sum comes with a rigorous
geometric tail bound (parameter draws are constrained so the dominant
ratio stays below 1/2).  The Hecke-symmetrizer reduction of the same
kernel is checked as an exact operator identity expanded into shift
terms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .bethe import bethe_amplitude, bethe_vector, xi
from .scalars import ONE, ZERO, as_scalar, tbinom, tfact


def spin_state_norm(mu, t, s) -> Fraction:
    """<mu|mu>_s = prod over sites j >= 0 of (t)_{m_j} / (s^2)_{m_j}.

    mu is a weakly decreasing tuple of nonnegative positions; zeros
    occupy site 0 and do count.
    """
    t, s = as_scalar(t), as_scalar(s)
    from .scalars import tpoch

    norm = ONE
    for v in set(mu):
        m = sum(1 for p in mu if p == v)
        norm *= tfact(m, t) / tpoch(s * s, m, t)
    return norm


def _det(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sign = ONE if j % 2 == 0 else -ONE
        total += sign * rows[0][j] * _det(minor)
    return total


def gaudin_det(n: int, U, V, t) -> Fraction:
    """The determinant form of the half-line scalar product, exact."""
    U = [as_scalar(u) for u in U]
    V = [as_scalar(v) for v in V]
    t = as_scalar(t)
    if len(U) != n or len(V) != n:
        raise ValueError("alphabet sizes must equal n")
    for u in U:
        for v in V:
            if u * v == 1 or t * u * v == 1:
                raise ValueError("singular evaluation point")
    if n == 0:
        return ONE
    D = [[ONE / ((1 - U[k] * V[l]) * (1 - t * U[k] * V[l])) for l in range(n)]
         for k in range(n)]
    d = [[ONE / (1 - t * U[k] * V[l]) for l in range(n)] for k in range(n)]
    pref = t ** (n * (n - 1) // 2) / (1 - t) ** n
    return pref * _det(D) / _det(d)


def _abs(x: Fraction) -> Fraction:
    return x if x >= 0 else -x


def _tail_geometric(n: int, rho: Fraction, K: int) -> Fraction:
    """sum_{w > K} (w+1)^{n-1} rho^w, exactly, for n <= 3."""
    if not 0 <= rho < 1:
        raise ValueError("tail ratio must be in [0, 1)")
    if n <= 1:
        full = ONE / (1 - rho)
        partial = sum(rho ** w for w in range(K + 1))
    elif n == 2:
        full = ONE / (1 - rho) ** 2
        partial = sum((w + 1) * rho ** w for w in range(K + 1))
    else:
        full = (1 + rho) / (1 - rho) ** 3
        partial = sum(Fraction((w + 1) ** 2) * rho ** w for w in range(K + 1))
    return full - partial


def gaudin_sum(n: int, U, V, t, s, truncation: int):
    """Truncated half-line scalar product with a rigorous tail bound.

    Sums R^s_mu(U) R^s_mu(V) / <mu|mu>_s over all position multisets with
    largest part <= truncation, the ansatz vectors carrying the
    1/prod(1+s u) normalization.  Returns (value, tail_bound), both exact
    rationals; raises on divergent parameter draws.
    """
    if n > 3:
        raise ValueError("desk scale: n <= 3")
    U = [as_scalar(u) for u in U]
    V = [as_scalar(v) for v in V]
    t, s = as_scalar(t), as_scalar(s)
    if n == 0:
        return ONE, ZERO
    M_U = max(_abs(xi(u, s)) for u in U)
    M_V = max(_abs(xi(v, s)) for v in V)
    rho = M_U * M_V
    if rho >= 1:
        raise ValueError("divergent draw: dominant ratio >= 1")
    total = ZERO
    for mu_inc in combinations_with_replacement(range(truncation + 1), n):
        mu = tuple(sorted(mu_inc, reverse=True))
        total += bethe_vector(mu, U, t, s, normalized=True) * \
            bethe_vector(mu, V, t, s, normalized=True) / spin_state_norm(mu, t, s)
    # |R_mu| <= prefactor * sum_P |B(P)| * maxxi^{|mu|}
    from .scalars import tpoch

    def bound_R(alo):
        pref = ONE
        for a in alo:
            pref /= _abs(1 + s * a)
        amp = ZERO
        for P in permutations(alo):
            amp += _abs(bethe_amplitude(list(P), t))
        return pref * amp

    norm_floor = min(_abs(tfact(m, t) / tpoch(s * s, m, t)) ** n
                     for m in range(1, n + 1))
    if norm_floor == 0:
        raise ValueError("degenerate spin norm")
    const = bound_R(U) * bound_R(V) / norm_floor
    tail = const * _tail_geometric(n, rho, truncation)
    return total, tail


# ---------------------------------------------------------------------------
# Hecke symmetrizer reduction

def omega_t_product(U, V, t) -> Fraction:
    """prod_{k,l} (1 - t u_k v_l)/(1 - u_k v_l)."""
    t = as_scalar(t)
    out = ONE
    for u in U:
        for v in V:
            w = as_scalar(u) * as_scalar(v)
            out *= (1 - t * w) / (1 - w)
    return out


def hecke_symmetrize(fn, U, t) -> Fraction:
    """f cup = (1-t)^n / n!_t * sum_P P[f * prod (u_i - t u_j)/(u_i - u_j)]."""
    U = [as_scalar(u) for u in U]
    t = as_scalar(t)
    n = len(U)
    total = ZERO
    for P in permutations(U):
        total += fn(list(P)) * bethe_amplitude(list(P), t)
    return (1 - t) ** n / tfact(n, t) * total


def lascoux_reduction_check(n: int, U, V, t) -> bool:
    """Exact shift-operator reduction of the kernel to the Gaudin ratio.

    Expands the word prod_k (1 - t^k tau) into 2^n shift terms acting on
    the t-deformed pair kernel, symmetrizes, and compares with the
    t^{n(n-1)/2} (1-t)^n det-ratio.  tau cycles the variables with the
    wrapped one killed at q = 0; on the symmetric kernel this amounts to
    zeroing the last j variables (the forward-cycle reading fails the
    identity, so the backward one is the intended normalization).
    """
    if n > 3:
        raise ValueError("desk scale: n <= 3")
    U = [as_scalar(u) for u in U]
    V = [as_scalar(v) for v in V]
    t = as_scalar(t)
    if len(set(U)) != len(U):
        raise ValueError("coincident values rejected")

    def shifted_kernel(us, j):
        # tau^j: the last j variables are sent to zero
        return omega_t_product(us[: n - j], V, t)

    def g(us):
        acc = ZERO
        for j in range(n + 1):
            coeff = t ** (j * (j + 1) // 2) * tbinom(n, j, t)
            acc += (-ONE) ** j * coeff * shifted_kernel(us, j)
        return acc

    lhs = hecke_symmetrize(g, U, t)
    D = [[ONE / ((1 - U[k] * V[l]) * (1 - t * U[k] * V[l])) for l in range(n)]
         for k in range(n)]
    d = [[ONE / (1 - t * U[k] * V[l]) for l in range(n)] for k in range(n)]
    rhs = t ** (n * (n - 1) // 2) * (1 - t) ** n * _det(D) / _det(d)
    return lhs == rhs
