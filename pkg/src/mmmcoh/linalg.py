"""Exact sparse linear algebra over the rationals.

Everything downstream — Hilbert functions, kernels of contraction maps,
Koszul homology — reduces to ranks, kernels and solves of sparse matrices
with ``fractions.Fraction`` entries.  This module is the single place where
elimination happens, and it never touches floating point: a rank computed
here is the rank, not an estimate.

Representation: a matrix keeps a dict ``(row, col) -> Fraction`` holding the
nonzero entries only; a vector keeps ``index -> Fraction``.  Both types are
treated as immutable after construction.

Reduction strategy: rows are eliminated column-by-column from the left so
that the reduced row echelon form (and hence every kernel basis) is the
canonical one; within a column the pivot row is chosen by sparsity to limit
fill-in.  Rank-only queries skip the back-substitution pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Q = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_q(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


class VectorQ:
    """A sparse rational vector of fixed dimension.

    >>> v = VectorQ(3, {0: 1, 2: Fraction(-1, 2)})
    >>> v.to_list()
    [Fraction(1, 1), Fraction(0, 1), Fraction(-1, 2)]
    >>> (v + v)[2]
    Fraction(-1, 1)
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Optional[Mapping[int, Fraction]] = None):
        if dim < 0:
            raise ValueError("dimension must be >= 0")
        self.dim = dim
        clean: Dict[int, Fraction] = {}
        if entries:
            for i, x in entries.items():
                if not 0 <= i < dim:
                    raise IndexError(f"index {i} out of range for dim {dim}")
                x = _as_q(x)
                if x:
                    clean[i] = x
        self.entries = clean

    @classmethod
    def from_list(cls, values: Sequence) -> "VectorQ":
        return cls(len(values), {i: _as_q(x) for i, x in enumerate(values) if x})

    @classmethod
    def unit(cls, dim: int, i: int) -> "VectorQ":
        return cls(dim, {i: _ONE})

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return self.entries.get(i, _ZERO)

    def __add__(self, other: "VectorQ") -> "VectorQ":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.entries)
        for i, x in other.entries.items():
            s = out.get(i, _ZERO) + x
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        v = VectorQ.__new__(VectorQ)
        v.dim, v.entries = self.dim, out
        return v

    def __sub__(self, other: "VectorQ") -> "VectorQ":
        return self + (-other)

    def __neg__(self) -> "VectorQ":
        v = VectorQ.__new__(VectorQ)
        v.dim = self.dim
        v.entries = {i: -x for i, x in self.entries.items()}
        return v

    def scale(self, c) -> "VectorQ":
        c = _as_q(c)
        v = VectorQ.__new__(VectorQ)
        v.dim = self.dim
        v.entries = {i: c * x for i, x in self.entries.items()} if c else {}
        return v

    __rmul__ = scale

    def dot(self, other: "VectorQ") -> Fraction:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        small, big = self.entries, other.entries
        if len(small) > len(big):
            small, big = big, small
        return sum((x * big[i] for i, x in small.items() if i in big), _ZERO)

    def is_zero(self) -> bool:
        return not self.entries

    def to_list(self) -> List[Fraction]:
        return [self.entries.get(i, _ZERO) for i in range(self.dim)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorQ)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def __repr__(self):
        return f"VectorQ({self.dim}, {dict(sorted(self.entries.items()))!r})"


class SparseMatrix:
    """A sparse rational matrix; ``entries[(r, c)]`` holds the nonzeros."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[Tuple[int, int], Fraction]] = None,
    ):
        if rows < 0 or cols < 0:
            raise ValueError("shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean: Dict[Tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), x in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r},{c}) outside {rows}x{cols}")
                x = _as_q(x)
                if x:
                    clean[(r, c)] = x
        self.entries = clean

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, x in enumerate(row):
                if x:
                    entries[(r, c)] = _as_q(x)
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[VectorQ], rows: Optional[int] = None) -> "SparseMatrix":
        if rows is None:
            if not columns:
                raise ValueError("need explicit row count for empty column list")
            rows = columns[0].dim
        entries = {}
        for c, v in enumerate(columns):
            if v.dim != rows:
                raise ValueError("column dimension mismatch")
            for r, x in v.entries.items():
                entries[(r, c)] = x
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): _ONE for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), _ZERO)

    def column(self, c: int) -> VectorQ:
        if not 0 <= c < self.cols:
            raise IndexError(c)
        v = VectorQ.__new__(VectorQ)
        v.dim = self.rows
        v.entries = {r: x for (r, cc), x in self.entries.items() if cc == c}
        return v

    def columns(self) -> List[VectorQ]:
        cols: List[Dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (r, c), x in self.entries.items():
            cols[c][r] = x
        out = []
        for d in cols:
            v = VectorQ.__new__(VectorQ)
            v.dim, v.entries = self.rows, d
            out.append(v)
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(c, r): x for (r, c), x in self.entries.items()}
        )

    def apply(self, v: VectorQ) -> VectorQ:
        """Matrix-vector product (column convention)."""
        if v.dim != self.cols:
            raise ValueError("dimension mismatch")
        out: Dict[int, Fraction] = {}
        rows_by_col = self._rows_by_col()
        for c, x in v.entries.items():
            for r, a in rows_by_col.get(c, ()):
                s = out.get(r, _ZERO) + a * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        w = VectorQ.__new__(VectorQ)
        w.dim, w.entries = self.rows, out
        return w

    def _rows_by_col(self):
        by_col: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (r, c), x in self.entries.items():
            by_col.setdefault(c, []).append((r, x))
        return by_col

    def __matmul__(self, other):
        if isinstance(other, VectorQ):
            return self.apply(other)
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        left_by_col = self._rows_by_col()
        out: Dict[Tuple[int, int], Fraction] = {}
        for (k, c), x in other.entries.items():
            for r, a in left_by_col.get(k, ()):
                key = (r, c)
                s = out.get(key, _ZERO) + a * x
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        m = SparseMatrix.__new__(SparseMatrix)
        m.rows, m.cols, m.entries = self.rows, other.cols, out
        return m

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for key, x in other.entries.items():
            s = out.get(key, _ZERO) + x
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        m = SparseMatrix.__new__(SparseMatrix)
        m.rows, m.cols, m.entries = self.rows, self.cols, out
        return m

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __neg__(self) -> "SparseMatrix":
        m = SparseMatrix.__new__(SparseMatrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = {k: -x for k, x in self.entries.items()}
        return m

    def scale(self, c) -> "SparseMatrix":
        c = _as_q(c)
        m = SparseMatrix.__new__(SparseMatrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = {k: c * x for k, x in self.entries.items()} if c else {}
        return m

    def augment(self, other: "SparseMatrix") -> "SparseMatrix":
        """[self | other], side by side."""
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        entries = dict(self.entries)
        for (r, c), x in other.entries.items():
            entries[(r, c + self.cols)] = x
        return SparseMatrix(self.rows, self.cols + other.cols, entries)

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_lists(self) -> List[List[Fraction]]:
        return [
            [self.entries.get((r, c), _ZERO) for c in range(self.cols)]
            for r in range(self.rows)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


# ---------------------------------------------------------------------------
# elimination


def _row_dicts(m: SparseMatrix) -> List[Dict[int, Fraction]]:
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(m.rows)]
    for (r, c), x in m.entries.items():
        rows[r][c] = x
    return [r for r in rows if r]


def _sub_scaled(row: Dict[int, Fraction], piv: Dict[int, Fraction], f: Fraction):
    # row - f*piv, in place on a copy-free dict
    for c, x in piv.items():
        s = row.get(c, _ZERO) - f * x
        if s:
            row[c] = s
        else:
            row.pop(c, None)


def _forward(rows: List[Dict[int, Fraction]], width: int, pivot_limit: Optional[int] = None):
    """Forward elimination with normalized pivots.

    Columns are taken in increasing order (so the pivot-column set is
    canonical); among candidate rows the sparsest wins.  Returns
    ``(pivot_cols, echelon_rows)`` with each echelon row scaled to a leading
    1 and the pivot column eliminated from all later rows.
    """
    limit = width if pivot_limit is None else pivot_limit
    work = [r for r in rows if r]
    pivots: List[int] = []
    echelon: List[Dict[int, Fraction]] = []
    for col in range(limit):
        best = -1
        best_len = None
        for idx, row in enumerate(work):
            if col in row:
                n = len(row)
                if best_len is None or n < best_len:
                    best, best_len = idx, n
        if best < 0:
            continue
        piv = work.pop(best)
        inv = _ONE / piv[col]
        if inv != 1:
            piv = {c: inv * x for c, x in piv.items()}
        nxt = []
        for row in work:
            f = row.get(col)
            if f:
                _sub_scaled(row, piv, f)
            if row:
                nxt.append(row)
        work = nxt
        pivots.append(col)
        echelon.append(piv)
        if not work:
            break
    return pivots, echelon


def _back_substitute(pivots: List[int], echelon: List[Dict[int, Fraction]]):
    # clear each pivot column from the rows above it -> canonical RREF
    for k in range(len(echelon) - 1, -1, -1):
        col = pivots[k]
        piv = echelon[k]
        for j in range(k):
            f = echelon[j].get(col)
            if f:
                _sub_scaled(echelon[j], piv, f)


def rref(m: SparseMatrix, pivot_limit: Optional[int] = None):
    """Canonical reduced row echelon form.

    Returns ``(pivot_cols, rows)`` where rows are dicts ``col -> Fraction``.
    The result is unique (independent of pivoting choices), which is what
    makes kernel bases deterministic.
    """
    pivots, echelon = _forward(_row_dicts(m), m.cols, pivot_limit)
    _back_substitute(pivots, echelon)
    return pivots, echelon


def rank(m: SparseMatrix) -> int:
    """Rank over Q, by exact Gaussian elimination."""
    pivots, _ = _forward(_row_dicts(m), m.cols)
    return len(pivots)


def kernel_basis(m: SparseMatrix) -> List[VectorQ]:
    """Basis of the right null space ``{v : m v = 0}``.

    One basis vector per free column, in increasing column order; each has a
    1 in its free coordinate and 0 in the other free coordinates (the
    canonical RREF construction), so the basis is deterministic.
    """
    return _kernel_with_free_columns(m)[0]


def _kernel_with_free_columns(m: SparseMatrix):
    pivots, echelon = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        entries = {f: _ONE}
        for k, col in enumerate(pivots):
            x = echelon[k].get(f)
            if x:
                entries[col] = -x
        v = VectorQ.__new__(VectorQ)
        v.dim, v.entries = m.cols, entries
        basis.append(v)
    return basis, free


def column_space_basis(m: SparseMatrix) -> List[VectorQ]:
    """The pivot columns of ``m`` (a basis of the image, deterministic)."""
    pivots, _ = _forward(_row_dicts(m), m.cols)
    return [m.column(c) for c in pivots]


def solve(m: SparseMatrix, b: VectorQ) -> Optional[VectorQ]:
    """One exact solution of ``m x = b``, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if b.dim != m.rows:
        raise ValueError("right-hand side dimension mismatch")
    sols = solve_many(m, [b])
    return sols[0]

def solve_many(m: SparseMatrix, bs: Sequence[VectorQ]) -> List[Optional[VectorQ]]:
    """Solve ``m x = b`` for several right-hand sides with one elimination.

    The candidate read off the pivot rows is verified by an exact
    multiplication, which doubles as the consistency test (a candidate from
    an inconsistent system fails it).
    """
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(m.rows)]
    for (r, c), x in m.entries.items():
        rows[r][c] = x
    n = m.cols
    for j, b in enumerate(bs):
        if b.dim != m.rows:
            raise ValueError("right-hand side dimension mismatch")
        for r, x in b.entries.items():
            rows[r][n + j] = x
    pivots, echelon = _forward([r for r in rows if r], n + len(bs), pivot_limit=n)
    _back_substitute(pivots, echelon)
    out: List[Optional[VectorQ]] = []
    for j in range(len(bs)):
        col = n + j
        entries: Dict[int, Fraction] = {}
        for k, pcol in enumerate(pivots):
            x = echelon[k].get(col)
            if x:
                entries[pcol] = x
        v = VectorQ(n, entries)
        out.append(v if m.apply(v) == bs[j] else None)
    return out
