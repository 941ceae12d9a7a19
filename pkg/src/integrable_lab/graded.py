"""Sparse exact matrices and z-graded operator families.

A GradedOperator is a finite family of sparse matrices A_k, standing for
the polynomial operator A(z) = sum_k z^k A_k on a fixed basis.  Absent
degrees are zero.  Composition is the Cauchy convolution of blocks and
always takes an explicit truncation degree; silently exceeding it is a
bug class this module refuses to host.

Sparse storage is per-column (col -> {row: Fraction}); transfer matrices
are interlacing-sparse so zero entries are never stored.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, as_scalar


class SparseMatrix:
    """Square sparse matrix over Fractions, stored as per-column row maps."""

    def __init__(self, dim: int, cols=None):
        self.dim = dim
        self.cols = {} if cols is None else cols

    @classmethod
    def identity(cls, dim: int) -> "SparseMatrix":
        return cls(dim, {j: {j: ONE} for j in range(dim)})

    def copy(self) -> "SparseMatrix":
        return SparseMatrix(self.dim, {c: dict(col) for c, col in self.cols.items()})

    def entry(self, row: int, col: int) -> Fraction:
        return self.cols.get(col, {}).get(row, ZERO)

    def add_to(self, row: int, col: int, value) -> None:
        value = as_scalar(value)
        if value == 0:
            return
        col_map = self.cols.setdefault(col, {})
        new = col_map.get(row, ZERO) + value
        if new == 0:
            col_map.pop(row, None)
            if not col_map:
                self.cols.pop(col, None)
        else:
            col_map[row] = new

    def set_entry(self, row: int, col: int, value) -> None:
        value = as_scalar(value)
        col_map = self.cols.setdefault(col, {})
        if value == 0:
            col_map.pop(row, None)
            if not col_map:
                self.cols.pop(col, None)
        else:
            col_map[row] = value

    def is_zero(self) -> bool:
        return all(not col for col in self.cols.values())

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def entries(self):
        for c, col in self.cols.items():
            for r, v in col.items():
                yield r, c, v

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        """Matrix product self @ other (other acts first on kets)."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = SparseMatrix(self.dim)
        for c, col in other.cols.items():
            acc = {}
            for k, vb in col.items():
                for r, va in self.cols.get(k, {}).items():
                    acc[r] = acc.get(r, ZERO) + va * vb
            acc = {r: v for r, v in acc.items() if v != 0}
            if acc:
                out.cols[c] = acc
        return out

    def add(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = self.copy()
        for c, col in other.cols.items():
            for r, v in col.items():
                out.add_to(r, c, v)
        return out

    def scale(self, factor) -> "SparseMatrix":
        factor = as_scalar(factor)
        if factor == 0:
            return SparseMatrix(self.dim)
        return SparseMatrix(self.dim, {c: {r: v * factor for r, v in col.items()}
                                       for c, col in self.cols.items()})

    def transpose(self) -> "SparseMatrix":
        out = SparseMatrix(self.dim)
        for r, c, v in self.entries():
            out.set_entry(c, r, v)
        return out

    def conjugate_by_norm(self, norms) -> "SparseMatrix":
        """N^-1 A^T N for a diagonal N given as a list of nonzero Fractions."""
        if len(norms) != self.dim:
            raise ValueError("norm vector length mismatch")
        norms = [as_scalar(v) for v in norms]
        if any(v == 0 for v in norms):
            raise ValueError("zero norm entry")
        out = SparseMatrix(self.dim)
        for r, c, v in self.entries():
            # (N^-1 A^T N)[c, r] = A[r, c] * norm_r / norm_c
            out.set_entry(c, r, v * norms[r] / norms[c])
        return out

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse vector {index: Fraction}."""
        out = {}
        for j, coeff in vec.items():
            for r, v in self.cols.get(j, {}).items():
                out[r] = out.get(r, ZERO) + v * coeff
        return {r: v for r, v in out.items() if v != 0}

    def apply_row(self, covec: dict) -> dict:
        """Apply a sparse covector on the left: (covec . A)."""
        out = {}
        for c, col in self.cols.items():
            acc = ZERO
            for r, v in col.items():
                if r in covec:
                    acc += covec[r] * v
            if acc != 0:
                out[c] = acc
        return out

    def commutes_with(self, other: "SparseMatrix") -> bool:
        return self.mul(other) == other.mul(self)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix) or self.dim != other.dim:
            return NotImplemented
        return {c: col for c, col in self.cols.items() if col} == \
               {c: col for c, col in other.cols.items() if col}

    __hash__ = None  # mutable

    def __repr__(self):
        return f"SparseMatrix(dim={self.dim}, nnz={self.nnz()})"


class GradedOperator:
    """Finite z-graded family of sparse matrices on a common basis."""

    def __init__(self, dim: int, blocks=None, max_degree=None):
        self.dim = dim
        self.blocks = {}
        if blocks:
            for k, m in blocks.items():
                if k < 0:
                    raise ValueError("negative degree")
                if m.dim != dim:
                    raise ValueError("dimension mismatch")
                if not m.is_zero():
                    self.blocks[k] = m
        self.max_degree = max_degree if max_degree is not None else \
            (max(self.blocks) if self.blocks else 0)

    @classmethod
    def identity(cls, dim: int) -> "GradedOperator":
        return cls(dim, {0: SparseMatrix.identity(dim)}, max_degree=0)

    @classmethod
    def zero(cls, dim: int) -> "GradedOperator":
        return cls(dim, {}, max_degree=0)

    def block(self, k: int) -> SparseMatrix:
        return self.blocks.get(k, SparseMatrix(self.dim))

    def degrees(self):
        return sorted(self.blocks)

    def compose(self, other: "GradedOperator", max_degree: int) -> "GradedOperator":
        """Cauchy product truncated at max_degree (explicit, always)."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = {}
        for i, a in self.blocks.items():
            for j, b in other.blocks.items():
                k = i + j
                if k > max_degree:
                    continue
                prod = a.mul(b)
                if k in out:
                    out[k] = out[k].add(prod)
                else:
                    out[k] = prod
        return GradedOperator(self.dim, out, max_degree=max_degree)

    def add(self, other: "GradedOperator") -> "GradedOperator":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = {k: m.copy() for k, m in self.blocks.items()}
        for k, m in other.blocks.items():
            out[k] = out[k].add(m) if k in out else m
        return GradedOperator(self.dim, out,
                              max_degree=max(self.max_degree, other.max_degree))

    def scale(self, factor) -> "GradedOperator":
        return GradedOperator(self.dim, {k: m.scale(factor) for k, m in self.blocks.items()},
                              max_degree=self.max_degree)

    def reparameterize(self, c) -> "GradedOperator":
        """z -> c z: degree-k block picks up c^k."""
        c = as_scalar(c)
        return GradedOperator(self.dim, {k: m.scale(c ** k) for k, m in self.blocks.items()},
                              max_degree=self.max_degree)

    def shift(self, k0: int) -> "GradedOperator":
        """Multiply by z^k0: degree k -> k + k0."""
        if k0 < 0:
            raise ValueError("negative shift")
        return GradedOperator(self.dim, {k + k0: m for k, m in self.blocks.items()},
                              max_degree=self.max_degree + k0)

    def eval_at(self, z) -> SparseMatrix:
        z = as_scalar(z)
        out = SparseMatrix(self.dim)
        for k, m in self.blocks.items():
            out = out.add(m.scale(z ** k))
        return out

    def bar_adjoint(self, norms) -> "GradedOperator":
        """Blockwise N^-1 A_k^T N.

        Degree reindexing under z -> 1/z is left to the caller (compare
        against the operator rebuilt at bar-substituted parameters,
        reflected with `reflect` where the identity says so).
        """
        return GradedOperator(self.dim,
                              {k: m.conjugate_by_norm(norms) for k, m in self.blocks.items()},
                              max_degree=self.max_degree)

    def reflect(self, top: int) -> "GradedOperator":
        """Degree reflection k -> top - k (for z -> 1/z comparisons)."""
        out = {}
        for k, m in self.blocks.items():
            if top - k < 0:
                raise ValueError("reflection would produce a negative degree")
            out[top - k] = m
        return GradedOperator(self.dim, out, max_degree=top)

    def apply(self, vec: dict) -> dict:
        """Apply to a graded vector {degree: {index: Fraction}} or plain {index: Fraction}."""
        if vec and isinstance(next(iter(vec.values())), dict):
            out = {}
            for k, m in self.blocks.items():
                for d, comp in vec.items():
                    res = m.apply(comp)
                    if res:
                        tgt = out.setdefault(k + d, {})
                        for i, v in res.items():
                            tgt[i] = tgt.get(i, ZERO) + v
            return {d: {i: v for i, v in comp.items() if v != 0}
                    for d, comp in out.items() if comp}
        out = {}
        for k, m in self.blocks.items():
            res = m.apply(vec)
            if res:
                out[k] = res
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedOperator) or self.dim != other.dim:
            return NotImplemented
        keys = set(self.blocks) | set(other.blocks)
        return all(self.block(k) == other.block(k) for k in keys)

    __hash__ = None  # mutable

    def __repr__(self):
        return f"GradedOperator(dim={self.dim}, degrees={self.degrees()})"


def commutator_vanishes(A: GradedOperator, B: GradedOperator) -> bool:
    """[A(z1), B(z2)] = 0 identically: every cross block pair commutes."""
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    for i, a in A.blocks.items():
        for j, b in B.blocks.items():
            if a.mul(b) != b.mul(a):
                return False
    return True


def matrix_dump(op: GradedOperator, basis, name: str, metadata=None) -> dict:
    """JSON-ready dump: basis labels plus (degree, row, col, "p/q") entries."""
    from .scalars import format_scalar

    entries = []
    for k in op.degrees():
        for r, c, v in sorted(op.block(k).entries(), key=lambda e: (e[0], e[1])):
            entries.append({"degree": k, "row": r, "col": c, "value": format_scalar(v)})
    dump = {
        "name": name,
        "basis": basis.labels(),
        "orientation": "rows are targets, columns are sources",
        "entries": entries,
    }
    if metadata:
        dump["metadata"] = metadata
    return dump
