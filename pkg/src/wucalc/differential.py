"""Exterior derivative, Dirac operator and Hodge Laplacian on interaction bases.

The derivative of a form F on k-tuples is
    dF(x_1, ..., x_k) = sum_j (-1)^(dim x_1 + ... + dim x_(j-1)) F(..., dx_j, ...)
where dx_j runs over the signed boundary faces of part j. Face tuples that
drop out of the basis (the parts lose their common point) are omitted; a
tuple between two basis tuples is itself in the basis, which is why the
restricted d still squares to zero.

Matrices map grade-p coordinates to grade-(p+1) coordinates, so d_p has
shape (n_(p+1), n_p), kernels are cocycles and d^2 = 0 reads d_(p+1) d_p = 0.
"""

from __future__ import annotations

from .basis import InteractionBasis
from .exact import SparseIntMatrix


def boundary_chain(s):
    """Signed codimension-1 faces of a simplex: term m is (s minus its m-th
    smallest vertex, (-1)^m). Vertices have an empty boundary."""
    if len(s) <= 1:
        return []
    return [(s[:m] + s[m + 1:], 1 if m % 2 == 0 else -1) for m in range(len(s))]


class GradedIntMatrix:
    """The family {d_p} of derivative blocks for one interaction basis."""

    def __init__(self, basis: InteractionBasis, blocks):
        self.basis = basis
        self.blocks = blocks
        self.grade_sizes = basis.grade_sizes()

    def d_block(self, p) -> SparseIntMatrix:
        if 0 <= p < len(self.blocks):
            return self.blocks[p]
        nrows = self.grade_sizes[p + 1] if 0 <= p + 1 < len(self.grade_sizes) else 0
        ncols = self.grade_sizes[p] if 0 <= p < len(self.grade_sizes) else 0
        return SparseIntMatrix(nrows, ncols)

    def __repr__(self):
        shapes = [(b.nrows, b.ncols) for b in self.blocks]
        return f"GradedIntMatrix(blocks={shapes})"


def interaction_derivative(b: InteractionBasis) -> GradedIntMatrix:
    systems = b.systems
    k = b.k
    blocks = []
    for p in range(b.n_grades - 1):
        lower = b.grades[p]
        upper = b.grades[p + 1]
        col_of = {t: i for i, t in enumerate(lower)}
        m = SparseIntMatrix(len(upper), len(lower))
        for row, t in enumerate(upper):
            pre = 0
            for j in range(k):
                sys = systems[j]
                part = t[j]
                sign_j = 1 if pre % 2 == 0 else -1
                for face, fsign in sys.cell_boundary(part):
                    ft = t[:j] + (face,) + t[j + 1:]
                    col = col_of.get(ft)
                    if col is not None:
                        m.add(row, col, sign_j * fsign)
                pre += sys.cell_dim(part)
        blocks.append(m)
    return GradedIntMatrix(b, blocks)


def verify_d_squared(d: GradedIntMatrix) -> bool:
    for p in range(len(d.blocks) - 1):
        if not d.blocks[p + 1].matmul(d.blocks[p]).is_zero():
            return False
    return True


class DiracLaplacian:
    """D = d + d^T on the full graded space and the blocks of L = D^2."""

    def __init__(self, derivative: GradedIntMatrix):
        self.derivative = derivative
        self.basis = derivative.basis
        self.grade_sizes = derivative.grade_sizes
        self.offsets = []
        off = 0
        for n in self.grade_sizes:
            self.offsets.append(off)
            off += n
        self.size = off
        self.dirac = SparseIntMatrix(off, off)
        for p, blk in enumerate(derivative.blocks):
            ro, co = self.offsets[p + 1], self.offsets[p]
            for i, row in blk.rows.items():
                for j, v in row.items():
                    self.dirac.add(ro + i, co + j, v)
                    self.dirac.add(co + j, ro + i, v)
        self.laplacian_blocks = []
        for p in range(len(self.grade_sizes)):
            dp = derivative.d_block(p)
            lp = dp.transpose().matmul(dp)
            if p > 0:
                dprev = derivative.d_block(p - 1)
                lp = lp.add_matrix(dprev.matmul(dprev.transpose()))
            self.laplacian_blocks.append(lp)

    def grade_of(self, coordinate) -> int:
        for p in range(len(self.grade_sizes) - 1, -1, -1):
            if coordinate >= self.offsets[p]:
                return p
        raise IndexError("coordinate out of range")

    def grading(self):
        """Grade label per coordinate of the full space."""
        out = []
        for p, n in enumerate(self.grade_sizes):
            out.extend([p] * n)
        return out

    def __repr__(self):
        return (f"DiracLaplacian(size={self.size}, "
                f"blocks={[b.nrows for b in self.laplacian_blocks]})")


def dirac_and_laplacian(d: GradedIntMatrix) -> DiracLaplacian:
    if not verify_d_squared(d):
        raise ArithmeticError("d^2 != 0: derivative blocks are inconsistent")
    return DiracLaplacian(d)


def laplacian_is_block_diagonal(dl: DiracLaplacian) -> bool:
    """Cross-check that D^2 has no entries between different grades and that
    its diagonal blocks equal the assembled L_p."""
    sq = dl.dirac.matmul(dl.dirac)
    grading = dl.grading()
    for i, row in sq.rows.items():
        for j in row:
            if grading[i] != grading[j]:
                return False
    for p, lp in enumerate(dl.laplacian_blocks):
        off = dl.offsets[p]
        n = dl.grade_sizes[p]
        for i in range(n):
            srow = sq.rows.get(off + i, {})
            expect = {j - off: v for j, v in srow.items()
                      if off <= j < off + n}
            if expect != lp.rows.get(i, {}):
                return False
    return True


def export_sparse_text(d: GradedIntMatrix) -> str:
    """One line per non-zero: 'p row col value' for every derivative block."""
    lines = []
    for p, blk in enumerate(d.blocks):
        for i, j, v in blk.triples():
            lines.append(f"{p} {i} {j} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def export_dense_csv(m: SparseIntMatrix) -> str:
    rows = m.to_dense()
    return "\n".join(",".join(str(v) for v in row) for row in rows) + "\n"
