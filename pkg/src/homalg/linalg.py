"""Exact sparse linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` scalars.  Matrices are
stored sparsely as a dict of rows, each row a dict ``{column: value}`` holding
only nonzero entries.  Elimination is fraction-free: rows are scaled to
integer vectors and combined with gcd-reduced integer multipliers, so no
rational arithmetic happens inside the hot loop.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    pass


class NotAComplex(ValueError):
    """Raised when two maps that should compose to zero do not."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SparseMatrix:
    """Immutable sparse matrix with rational entries.

    ``rows`` maps a row index to a ``{col: Fraction}`` dict; absent rows are
    zero.  Treat instances as values: nothing mutates them after __init__.
    """

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        if rows:
            for i, row in rows.items():
                if not 0 <= i < nrows:
                    raise IndexError(f"row {i} out of range for {nrows} rows")
                r = {}
                for j, v in row.items():
                    if not 0 <= j < ncols:
                        raise IndexError(f"column {j} out of range for {ncols} columns")
                    if v:
                        r[j] = _frac(v)
                if r:
                    clean[i] = r
        self._rows = clean

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        rows = defaultdict(dict)
        for (i, j), v in entries.items():
            rows[i][j] = v
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]):
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {i: {j: v for j, v in enumerate(row) if v}
                                  for i, row in enumerate(data)})

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self):
        return {(i, j): v for i, row in self._rows.items() for j, v in row.items()}

    def row(self, i) -> dict:
        return dict(self._rows.get(i, {}))

    def rows(self):
        """Iterate ``(index, row_dict)`` over nonzero rows in index order."""
        for i in sorted(self._rows):
            yield i, self._rows[i]

    @property
    def nnz(self):
        return sum(len(r) for r in self._rows.values())

    def is_zero(self):
        return not self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows.get(i, {}).get(j, Fraction(0))

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in self._rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def transpose(self):
        t = defaultdict(dict)
        for i, row in self._rows.items():
            for j, v in row.items():
                t[j][i] = v
        return SparseMatrix(self.ncols, self.nrows, t)

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, SparseMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            out = {}
            orows = other._rows
            for i, row in self._rows.items():
                acc = defaultdict(Fraction)
                for k, v in row.items():
                    ok = orows.get(k)
                    if ok:
                        for j, w in ok.items():
                            acc[j] += v * w
                out[i] = acc
            return SparseMatrix(self.nrows, other.ncols, out)
        vec = list(other)
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        res = [Fraction(0)] * self.nrows
        for i, row in self._rows.items():
            res[i] = sum((v * vec[j] for j, v in row.items()), Fraction(0))
        return res

    def __mul__(self, c):
        c = _frac(c)
        return SparseMatrix(self.nrows, self.ncols,
                            {i: {j: v * c for j, v in r.items()} for i, r in self._rows.items()})

    __rmul__ = __mul__

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        out = defaultdict(lambda: defaultdict(Fraction))
        for src in (self._rows, other._rows):
            for i, row in src.items():
                for j, v in row.items():
                    out[i][j] += v
        return SparseMatrix(self.nrows, self.ncols, out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.shape == other.shape
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


# ---------------------------------------------------------------------------
# fraction-free elimination core


def _integer_row(row) -> dict:
    """Scale a rational row dict to a primitive integer row with the same span."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    if den == 1:
        out = {j: int(v) for j, v in row.items() if v}
    else:
        out = {j: int(v * den) for j, v in row.items() if v}
    g = gcd(*out.values()) if out else 1
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


def _echelon(rows: Iterable[dict], order=None, reduced=False):
    """Row echelon form of a list of integer row dicts.

    ``order`` is the column sequence in which pivots are sought; columns not
    listed are never pivoted on (they stay as free coordinates).  Within a
    column the pivot is the entry of smallest bit length, ties going to the
    lowest row index.

    Returns a list of ``(pivot_column, row)`` pairs in pivot order, rows being
    primitive integer dicts.  With ``reduced=True`` every pivot column is
    cleared from all other pivot rows.
    """
    live = {}
    colidx = defaultdict(set)
    for i, r in enumerate(rows):
        if r:
            live[i] = r
            for c in r:
                colidx[c].add(i)
    if order is None:
        order = sorted(colidx)

    pivots = []
    for c in order:
        cand = colidx.get(c)
        if not cand:
            continue
        p = min(cand, key=lambda i: (abs(live[i][c]).bit_length(), i))
        prow = live.pop(p)
        for cc in prow:
            colidx[cc].discard(p)
        pc = prow[c]
        for i in list(colidx[c]):
            r = live[i]
            rc = r[c]
            g = gcd(pc, rc)
            a, b = pc // g, rc // g
            if a != 1:
                if a == -1:
                    for k in r:
                        r[k] = -r[k]
                else:
                    for k in r:
                        r[k] *= a
            for k, v in prow.items():
                nv = r.get(k, 0) - b * v
                if nv:
                    if k not in r:
                        colidx[k].add(i)
                    r[k] = nv
                elif k in r:
                    del r[k]
                    colidx[k].discard(i)
            if r:
                g = gcd(*r.values())
                if g > 1:
                    for k in r:
                        r[k] //= g
            else:
                del live[i]
        pivots.append((c, prow))

    if reduced:
        _back_substitute(pivots)
    return pivots


def _back_substitute(pivots):
    # clear each pivot column from the earlier pivot rows, last pivot first
    for idx in range(len(pivots) - 1, -1, -1):
        c, prow = pivots[idx]
        pc = prow[c]
        for jdx in range(idx):
            r = pivots[jdx][1]
            rc = r.get(c)
            if not rc:
                continue
            g = gcd(pc, rc)
            a, b = pc // g, rc // g
            if a != 1:
                for k in r:
                    r[k] *= a
            for k, v in prow.items():
                nv = r.get(k, 0) - b * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            g = gcd(*r.values())
            if g > 1:
                for k in r:
                    r[k] //= g


def _as_int_rows(m):
    if isinstance(m, SparseMatrix):
        return [_integer_row(r) for _, r in m.rows()]
    return [_integer_row(r) for r in m]


def rref(m: SparseMatrix, order=None):
    """Reduced row echelon form as ``[(pivot_col, {col: Fraction})]`` with unit pivots."""
    out = []
    for c, r in _echelon(_as_int_rows(m), order=order, reduced=True):
        pc = r[c]
        out.append((c, {k: Fraction(v, pc) for k, v in r.items()}))
    return out


def rank(m) -> int:
    """Exact rank over Q.  Accepts a SparseMatrix or an iterable of row dicts."""
    return len(_echelon(_as_int_rows(m)))


def row_space_basis(rows) -> list:
    """Echelon basis (list of integer row dicts) of the span of ``rows``."""
    return [r for _, r in _echelon(_as_int_rows(rows))]


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of Q^n given by a list of linearly independent basis vectors.

    Vectors are stored as dense tuples of Fractions.  The constructor does not
    re-check independence; use :meth:`span` to build from arbitrary vectors.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis=()):
        self.ambient_dim = ambient_dim
        vecs = []
        for v in basis:
            if isinstance(v, dict):
                dense = [Fraction(0)] * ambient_dim
                for j, x in v.items():
                    dense[j] = _frac(x)
                v = dense
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"basis vector of length {len(v)} in ambient dimension {ambient_dim}")
            vecs.append(tuple(_frac(x) for x in v))
        self.basis = tuple(vecs)

    @classmethod
    def span(cls, ambient_dim, vectors):
        """Subspace spanned by arbitrary (possibly dependent) vectors."""
        rows = []
        for v in vectors:
            if not isinstance(v, dict):
                v = {j: x for j, x in enumerate(v) if x}
            rows.append(v)
        basis = []
        for _, r in _echelon(_as_int_rows(rows)):
            basis.append({j: Fraction(x) for j, x in r.items()})
        return cls(ambient_dim, basis)

    @classmethod
    def full(cls, n):
        return cls(n, [{i: 1} for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def sparse_basis(self):
        return [{j: x for j, x in enumerate(v) if x} for v in self.basis]

    def as_matrix(self) -> SparseMatrix:
        """Basis vectors as the rows of a matrix."""
        return SparseMatrix(self.dim, self.ambient_dim, dict(enumerate(self.sparse_basis())))

    def __contains__(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        vec = {j: x for j, x in enumerate(v) if x}
        if not vec:
            return True
        return rank(self.sparse_basis() + [vec]) == self.dim

    def contains_subspace(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return rank(self.sparse_basis() + other.sparse_basis()) == self.dim

    def __add__(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.ambient_dim, self.sparse_basis() + other.sparse_basis())

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.ambient_dim == self.ambient_dim
                and other.dim == self.dim and self.contains_subspace(other))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Basis of the right kernel {v : m v = 0}, one vector per free column."""
    piv = rref(m)
    pivot_cols = {c for c, _ in piv}
    basis = []
    for f in range(m.ncols):
        if f in pivot_cols:
            continue
        v = {f: Fraction(1)}
        for c, r in piv:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(v)
    return Subspace(m.ncols, basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"cannot intersect subspaces of Q^{a.ambient_dim} and Q^{b.ambient_dim}")
    if not a.dim or not b.dim:
        return Subspace(a.ambient_dim)
    # (x, y) with x.A = y.B  <=>  [A; -B]^T (x, y) = 0
    ka = a.dim
    cols = defaultdict(dict)
    for i, v in enumerate(a.sparse_basis()):
        for j, x in v.items():
            cols[j][i] = x
    for i, v in enumerate(b.sparse_basis()):
        for j, x in v.items():
            cols[j][ka + i] = -x
    stacked = SparseMatrix(a.ambient_dim, ka + b.dim, cols)
    vecs = []
    abasis = a.basis
    for xy in kernel_basis(stacked).basis:
        w = [Fraction(0)] * a.ambient_dim
        for i in range(ka):
            c = xy[i]
            if c:
                for j, x in enumerate(abasis[i]):
                    if x:
                        w[j] += c * x
        vecs.append(w)
    return Subspace.span(a.ambient_dim, vecs)


def homology_dim(d_in: SparseMatrix, d_out: SparseMatrix, check=True) -> int:
    """dim ker(d_out) - rank(d_in) for a composable pair ``d_out . d_in = 0``.

    ``d_in`` maps into the space ``d_out`` maps out of, so
    ``d_in.nrows == d_out.ncols`` (matrices act on column vectors).
    """
    if d_in.nrows != d_out.ncols:
        raise DimensionMismatch(
            f"d_in has target dimension {d_in.nrows}, d_out has source dimension {d_out.ncols}")
    if check and not (d_out @ d_in).is_zero():
        raise NotAComplex("d_out . d_in is not zero")
    return d_out.ncols - rank(d_out) - rank(d_in)
