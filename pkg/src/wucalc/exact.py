"""Exact integer and rational linear algebra.

Everything in this module runs on arbitrary-precision integers or Fractions,
so ranks, determinants, kernels and characteristic polynomials come out
exact. Floating point is never used here; the numeric side of the package
lives in dynamics.py.

Two elimination strategies coexist on purpose:

* rank() works on a sparse dict-of-rows copy, prefers unit pivots (smallest
  magnitude first) and rescales rows by their gcd. Rescaling is harmless for
  rank and keeps entries tiny on the very sparse derivative blocks.
* det_bareiss() is the classic fraction-free elimination without any row
  scaling, because the determinant value itself is the result.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SparseIntMatrix:
    """Integer matrix stored as a dict of sparse rows {row: {col: value}}."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def from_triples(cls, nrows, ncols, triples):
        m = cls(nrows, ncols)
        for i, j, v in triples:
            m.add(i, j, v)
        return m

    @classmethod
    def from_dense(cls, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        m = cls(nrows, ncols)
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                if v:
                    m.rows.setdefault(i, {})[j] = int(v)
        return m

    def add(self, i, j, v):
        if v == 0:
            return
        row = self.rows.setdefault(i, {})
        w = row.get(j, 0) + v
        if w:
            row[j] = w
        else:
            del row[j]
            if not row:
                del self.rows[i]

    def get(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def triples(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    def transpose(self):
        t = SparseIntMatrix(self.ncols, self.nrows)
        for i, row in self.rows.items():
            for j, v in row.items():
                t.rows.setdefault(j, {})[i] = v
        return t

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matmul")
        out = SparseIntMatrix(self.nrows, other.ncols)
        brows = other.rows
        for i, row in self.rows.items():
            acc: dict = {}
            for j, v in row.items():
                brow = brows.get(j)
                if not brow:
                    continue
                for k, w in brow.items():
                    acc[k] = acc.get(k, 0) + v * w
            acc = {k: w for k, w in acc.items() if w}
            if acc:
                out.rows[i] = acc
        return out

    def add_matrix(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        out = SparseIntMatrix(self.nrows, self.ncols,
                              {i: dict(r) for i, r in self.rows.items()})
        for i, row in other.rows.items():
            for j, v in row.items():
                out.add(i, j, v)
        return out

    def scale(self, c: int) -> "SparseIntMatrix":
        if c == 0:
            return SparseIntMatrix(self.nrows, self.ncols)
        return SparseIntMatrix(
            self.nrows, self.ncols,
            {i: {j: c * v for j, v in r.items()} for i, r in self.rows.items()})

    def trace(self):
        return sum(row.get(i, 0) for i, row in self.rows.items())

    def to_dense(self):
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                dense[i][j] = v
        return dense

    def __eq__(self, other):
        return (isinstance(other, SparseIntMatrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __repr__(self):
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _row_gcd_normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for j in row:
            row[j] //= g


def rank(m: SparseIntMatrix) -> int:
    """Exact rank over the rationals by sparse integer elimination.

    Columns are processed in ascending order; the pivot in a column is the
    entry of smallest magnitude (unit entries first), ties broken by row
    sparsity and then row index, which keeps the elimination deterministic.
    """
    rows = {i: dict(r) for i, r in m.rows.items()}
    colrows: dict = {}
    for i, r in rows.items():
        for j in r:
            colrows.setdefault(j, set()).add(i)

    rk = 0
    for c in sorted(colrows):
        cand = colrows.get(c)
        if not cand:
            continue
        piv = min(cand, key=lambda i: (abs(rows[i][c]) != 1,
                                       abs(rows[i][c]), len(rows[i]), i))
        prow = rows.pop(piv)
        for j in prow:
            colrows[j].discard(piv)
        p = prow[c]
        for r in sorted(cand):
            if r not in rows or c not in rows[r]:
                continue
            row = rows[r]
            v = row[c]
            if v % p == 0:
                alpha, beta = 1, -(v // p)
            else:
                g = gcd(p, v)
                alpha, beta = p // g, -(v // g)
            if alpha != 1:
                for j in row:
                    row[j] *= alpha
            for j, w in prow.items():
                nv = row.get(j, 0) + beta * w
                if nv:
                    if j not in row:
                        colrows.setdefault(j, set()).add(r)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    colrows[j].discard(r)
            if row:
                _row_gcd_normalize(row)
            else:
                del rows[r]
        rk += 1
        if not rows:
            break
    return rk


def nullity(m: SparseIntMatrix) -> int:
    return m.ncols - rank(m)


def det_bareiss(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free Bareiss elimination: the pivot is the smallest-magnitude
    non-zero entry of the current column (ties by row index), rows are
    swapped with sign bookkeeping, and every 2x2 update is divided by the
    previous pivot, which is an exact integer division.
    """
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        best = None
        for i in range(k, n):
            v = a[i][k]
            if v and (best is None or abs(v) < best):
                best = abs(v)
                piv = i
                if best == 1:
                    break
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            if aik:
                for j in range(k + 1, n):
                    ai[j] = (ai[j] * pk - aik * rowk[j]) // prev
                ai[k] = 0
            elif pk != prev:
                for j in range(k + 1, n):
                    ai[j] = (ai[j] * pk) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


def _primitive(vec):
    """Scale a Fraction vector to a primitive integer vector, first sign > 0."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def kernel_basis(m: SparseIntMatrix):
    """Exact kernel of an integer matrix, as primitive integer vectors.

    Gauss-Jordan over Fractions; one basis vector per free column, ordered
    by ascending free-column index, so the result is deterministic.
    """
    ncols = m.ncols
    dense = []
    for i in sorted(m.rows):
        dense.append([Fraction(m.rows[i].get(j, 0)) for j in range(ncols)])
    pivots = []  # (row, col)
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(dense)):
            if dense[i][c]:
                sel = i
                break
        if sel is None:
            continue
        dense[r], dense[sel] = dense[sel], dense[r]
        pv = dense[r][c]
        if pv != 1:
            dense[r] = [x / pv for x in dense[r]]
        for i in range(len(dense)):
            if i != r and dense[i][c]:
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        pivots.append((r, c))
        r += 1
        if r == len(dense):
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for rr, cc in pivots:
            vec[cc] = -dense[rr][f]
        basis.append(_primitive(vec))
    return basis


def charpoly(dense) -> list:
    """Characteristic polynomial det(x*I - A) as integer coefficients.

    Returns [1, c1, ..., cn] for x^n + c1*x^(n-1) + ... + cn, computed by
    the Faddeev-LeVerrier recursion over exact rationals. Raises if the
    input was integral but the result is not (that would be a bug).
    """
    n = len(dense)
    a = [[Fraction(x) for x in row] for row in dense]
    coeffs = [Fraction(1)]
    mk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
          for i in range(n)]
    am = a
    for k in range(1, n + 1):
        if k > 1:
            am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
                  for i in range(n)]
        ck = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(ck)
        if k < n:
            mk = [[am[i][j] + (ck if i == j else 0) for j in range(n)]
                  for i in range(n)]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial not integral")
        out.append(int(c))
    return out


def identity(n: int) -> SparseIntMatrix:
    return SparseIntMatrix(n, n, {i: {i: 1} for i in range(n)})
