"""Exact integer and rational linear algebra.

Everything is arbitrary precision: integers are Python ints, rationals are
`fractions.Fraction`. No floating point enters anywhere in the package.
Values are immutable after construction and safe to share between threads;
all operations are pure functions.

Canonical forms used throughout:

* integer lattice bases are returned in row Hermite normal form (positive
  pivots, entries above a pivot reduced into ``[0, pivot)``), so equal
  lattices have identical bases;
* primitive vectors are obtained by dividing by the positive gcd, which
  preserves direction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import SingularMatrix

__all__ = [
    "LatticeVector",
    "QMatrix",
    "determinant",
    "invert",
    "kernel_basis",
    "smith_normal_form",
    "row_hnf",
    "rank_of_rows",
    "lattices_equal",
    "solve_square",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LatticeVector:
    """An immutable integer vector of fixed length."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        ent = tuple(entries)
        for e in ent:
            if not isinstance(e, int):
                raise TypeError(f"lattice vector entries must be int, got {e!r}")
        object.__setattr__(self, "_entries", ent)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("LatticeVector is immutable")

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, LatticeVector):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LatticeVector", self._entries))

    def __repr__(self) -> str:
        return f"LatticeVector({list(self._entries)})"

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_len(other)
        return LatticeVector(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_len(other)
        return LatticeVector(a - b for a, b in zip(self._entries, other._entries))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-a for a in self._entries)

    def __rmul__(self, c: int) -> "LatticeVector":
        if not isinstance(c, int):
            return NotImplemented
        return LatticeVector(c * a for a in self._entries)

    __mul__ = __rmul__

    def _check_len(self, other: "LatticeVector") -> None:
        if len(self) != len(other):
            raise ValueError("length mismatch")

    def dot(self, other: "LatticeVector | Sequence[int]") -> int:
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return sum(a * b for a, b in zip(self._entries, other))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self._entries)

    def content(self) -> int:
        """The (nonnegative) gcd of the entries; 0 for the zero vector."""
        return math.gcd(*self._entries) if self._entries else 0

    @property
    def is_primitive(self) -> bool:
        return self.is_zero or self.content() == 1

    def primitive(self) -> "LatticeVector":
        """Divide by the positive gcd. Direction is preserved."""
        g = self.content()
        if g <= 1:
            return self
        return LatticeVector(a // g for a in self._entries)

    def sign_normalized(self) -> "LatticeVector":
        """Flip the sign, if needed, so the first nonzero entry is positive."""
        for a in self._entries:
            if a != 0:
                return self if a > 0 else -self
        return self

    def to_json(self) -> list[int]:
        return list(self._entries)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"matrix entries must be int, Fraction or string, got {x!r}")


class QMatrix:
    """An immutable matrix of exact rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        if rs:
            width = len(rs[0])
            for row in rs:
                if len(row) != width:
                    raise ValueError("ragged matrix")
        object.__setattr__(self, "_rows", rs)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable]) -> "QMatrix":
        cols = [tuple(_as_fraction(x) for x in c) for c in columns]
        if not cols:
            return cls([])
        height = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(height)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def row_list(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other) -> bool:
        if isinstance(other, QMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QMatrix", self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"QMatrix[{body}]"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_shape(other)
        return QMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_shape(other)
        return QMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        return QMatrix(
            [sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols]
            for row in self._rows
        )

    def _check_shape(self, other: "QMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def scaled(self, c) -> "QMatrix":
        c = _as_fraction(c)
        return QMatrix([c * x for x in row] for row in self._rows)

    def transpose(self) -> "QMatrix":
        return QMatrix(
            [self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)
        )

    @property
    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self._rows for x in row)

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def mul_vector(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        vv = [_as_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vv)), _ZERO) for row in self._rows)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integer:
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self._rows]

    def to_json(self) -> list[list[str]]:
        """Entries as decimal strings ("p/q" for non-integers): exact, no floats."""
        return [[str(x) for x in row] for row in self._rows]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "QMatrix":
        return cls(data)


def _clear_row_denominators(m: QMatrix) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; return (int rows, multipliers)."""
    out = []
    mults = []
    for row in m.row_list():
        l = 1
        for x in row:
            l = l * x.denominator // math.gcd(l, x.denominator)
        out.append([int(x * l) for x in row])
        mults.append(l)
    return out, mults


def _bareiss_forward(rows: list[list[int]]) -> tuple[list[list[int]], int, list[int]]:
    """Fraction-free forward elimination (Bareiss).

    Returns (reduced rows, sign from row swaps, pivot column per step). The
    leading square block becomes upper triangular; entries stay integral
    because each two-by-two determinant update divides exactly by the
    previous pivot.
    """
    m = [row[:] for row in rows]
    n = len(m)
    width = len(m[0]) if m else 0
    sign = 1
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r >= n:
            break
        pr = next((i for i in range(r, n) if m[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
            sign = -sign
        for i in range(r + 1, n):
            for j in range(c + 1, width):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
    return m, sign, pivots


def determinant(m: QMatrix) -> Fraction:
    """Exact determinant of a square matrix (fraction-free Bareiss)."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return _ONE
    rows, mults = _clear_row_denominators(m)
    red, sign, pivots = _bareiss_forward(rows)
    if len(pivots) < n:
        return _ZERO
    det_int = sign * red[n - 1][n - 1]
    denom = 1
    for l in mults:
        denom *= l
    return Fraction(det_int, denom)


def invert(m: QMatrix) -> QMatrix:
    """Exact inverse; raises SingularMatrix when det = 0."""
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return QMatrix([])
    rows, mults = _clear_row_denominators(m)
    aug = [rows[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red, _sign, pivots = _bareiss_forward(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    # Back-substitute each right-hand column through the triangular block.
    inv_cols: list[list[Fraction]] = []
    for k in range(n):
        x = [_ZERO] * n
        for i in range(n - 1, -1, -1):
            s = Fraction(red[i][n + k])
            for j in range(i + 1, n):
                s -= red[i][j] * x[j]
            x[i] = s / red[i][i]
        inv_cols.append(x)
    # m = diag(1/mults) @ int_rows, so m^{-1} = int_rows^{-1} @ diag(mults).
    return QMatrix(
        [inv_cols[j][i] * mults[j] for j in range(n)] for i in range(n)
    )


def solve_square(m: QMatrix, rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve m x = rhs for square nonsingular m, exactly."""
    if not m.is_square:
        raise ValueError("system matrix must be square")
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length mismatch")
    inv = invert(m)
    return inv.mul_vector(list(rhs))


def row_hnf(rows: Iterable[Sequence[int]]) -> tuple[LatticeVector, ...]:
    """Canonical row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive; entries above each pivot are
    reduced into ``[0, pivot)``. Two row sets span the same lattice iff their
    HNFs are identical.
    """
    work = [list(int(x) for x in r) for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return ()
    width = len(work[0])
    for r in work:
        if len(r) != width:
            raise ValueError("ragged rows")
    top = 0
    for col in range(width):
        while True:
            nz = [i for i in range(top, len(work)) if work[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(work[i][col]))
            work[top], work[i0] = work[i0], work[top]
            done = True
            p = work[top][col]
            for i in range(top + 1, len(work)):
                if work[i][col] != 0:
                    q = work[i][col] // p
                    work[i] = [a - q * b for a, b in zip(work[i], work[top])]
                    if work[i][col] != 0:
                        done = False
            if done:
                break
        else:  # pragma: no cover
            pass
        if top < len(work) and work[top][col] != 0:
            if work[top][col] < 0:
                work[top] = [-a for a in work[top]]
            p = work[top][col]
            for i in range(top):
                q = work[i][col] // p  # floor division: entries land in [0, p)
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[top])]
            top += 1
            if top == len(work):
                break
    return tuple(LatticeVector(r) for r in work[:top])


def rank_of_rows(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer row collection."""
    return len(row_hnf(rows))


def lattices_equal(rows_a: Iterable[Sequence[int]], rows_b: Iterable[Sequence[int]]) -> bool:
    """Whether two integer row sets span the same lattice (identical HNFs)."""
    return row_hnf(rows_a) == row_hnf(rows_b)


def smith_normal_form(m: QMatrix) -> tuple[QMatrix, QMatrix, QMatrix]:
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U m V = D, U and V unimodular, and D diagonal
    with nonnegative entries satisfying d_i | d_{i+1}.
    """
    if not m.is_integer:
        raise ValueError("Smith normal form requires an integer matrix")
    d = m.to_int_rows()
    nr = len(d)
    nc = len(d[0]) if d else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j, on d and u
        d[i] = [a - q * b for a, b in zip(d[i], d[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j, on d and v
        for r in range(nr):
            d[r][i] -= q * d[r][j]
        for r in range(nc):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(nr):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(nc):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    k = 0
    while k < min(nr, nc):
        # Locate a minimal nonzero entry in the trailing block.
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != k:
                swap_rows(k, i)
            if j != k:
                swap_cols(k, j)
            dirty = False
            for i in range(k + 1, nr):
                if d[i][k] != 0:
                    row_op(i, k, d[i][k] // d[k][k])
                    if d[i][k] != 0:
                        dirty = True
            for j in range(k + 1, nc):
                if d[k][j] != 0:
                    col_op(j, k, d[k][j] // d[k][k])
                    if d[k][j] != 0:
                        dirty = True
            if dirty:
                best = None
                for i in range(k, nr):
                    for j in range(k, nc):
                        if d[i][j] != 0 and (
                            best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])
                        ):
                            best = (i, j)
                continue
            # Pivot must divide the whole trailing block for the divisor chain.
            offender = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if d[i][j] % d[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(k, offender, -1)  # fold the offending row into the pivot row
            best = (k, k)
        if d[k][k] < 0:
            d[k] = [-a for a in d[k]]
            u[k] = [-a for a in u[k]]
        k += 1
    return QMatrix(u), QMatrix(d), QMatrix(v)


def kernel_basis(m: QMatrix) -> list[LatticeVector]:
    """Basis of the integer kernel lattice {v : m v = 0}, in row HNF."""
    rows, _mults = _clear_row_denominators(m)
    if not rows:
        return []
    _u, d, v = smith_normal_form(QMatrix(rows))
    nc = d.cols
    nr = d.rows
    gens = []
    for j in range(nc):
        diag = d.entry(j, j) if j < nr else _ZERO
        if diag == 0:
            gens.append([int(v.entry(i, j)) for i in range(nc)])
    return list(row_hnf(gens))
