"""Exact dense linear algebra over prime fields GF(p).

Matrices are immutable. Row reduction uses deterministic pivoting (first
nonzero entry in column order) so every derived basis is canonical.
For p == 2 rows are stored as bit masks (python ints); for other primes
rows are tuples of residues. All public operations accept either layout.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(%d)" % p)
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class FieldElement:
    """Residue in [0, p) with mod-p arithmetic."""

    value: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("characteristic must be prime, got %d" % self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FieldElement") -> None:
        if self.p != other.p:
            raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.value + other.value, self.p)

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.value - other.value, self.p)

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.value * other.value, self.p)

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inv(self) -> "FieldElement":
        return FieldElement(inv_mod(self.value, self.p), self.p)


class Matrix:
    """Dense matrix over GF(p); entries are plain ints in [0, p)."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, nrows, ncols, rows):
        # rows: tuple of int bit masks when p == 2, else tuple of tuples
        self.p = p
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    # -- construction ------------------------------------------------

    @staticmethod
    def from_rows(p: int, data) -> "Matrix":
        data = [list(r) for r in data]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        if p == 2:
            rows = tuple(_pack(r) for r in data)
        else:
            rows = tuple(tuple(x % p for x in r) for r in data)
        return Matrix(p, nrows, ncols, rows)

    @staticmethod
    def zero(p: int, nrows: int, ncols: int) -> "Matrix":
        if p == 2:
            return Matrix(p, nrows, ncols, (0,) * nrows)
        return Matrix(p, nrows, ncols, ((0,) * ncols,) * nrows)

    @staticmethod
    def identity(p: int, n: int) -> "Matrix":
        if p == 2:
            return Matrix(p, n, n, tuple(1 << i for i in range(n)))
        return Matrix(p, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def from_columns(p: int, cols, nrows: int) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            return Matrix.zero(p, nrows, 0)
        if nrows == 0:
            return Matrix(p, 0, len(cols), ())
        data = [[c[i] for c in cols] for i in range(nrows)]
        return Matrix.from_rows(p, data)

    # -- access ------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if self.p == 2:
            return (self.rows[i] >> j) & 1
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        if self.p == 2:
            return _unpack(self.rows[i], self.ncols)
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(self.entry(i, j) for i in range(self.nrows))

    def entries(self) -> tuple:
        return tuple(self.row(i) for i in range(self.nrows))

    def key(self) -> bytes:
        out = bytearray()
        for i in range(self.nrows):
            out.extend(self.row(i))
        return bytes(out)

    def is_zero(self) -> bool:
        if self.p == 2:
            return all(r == 0 for r in self.rows)
        return all(all(x == 0 for x in r) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.p == other.p
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.p, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return "Matrix(GF(%d), %dx%d)" % (self.p, self.nrows, self.ncols)

    # -- arithmetic ----------------------------------------------------

    def add(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        if self.p == 2:
            return Matrix(2, self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))
        p = self.p
        return Matrix(
            p, self.nrows, self.ncols,
            tuple(tuple((a + b) % p for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def sub(self, other: "Matrix") -> "Matrix":
        if self.p == 2:
            return self.add(other)
        p = self.p
        self._shape_check(other)
        return Matrix(
            p, self.nrows, self.ncols,
            tuple(tuple((a - b) % p for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def neg(self) -> "Matrix":
        if self.p == 2:
            return self
        p = self.p
        return Matrix(p, self.nrows, self.ncols, tuple(tuple((-a) % p for a in r) for r in self.rows))

    def scale(self, c: int) -> "Matrix":
        c %= self.p
        if self.p == 2:
            return self if c else Matrix.zero(2, self.nrows, self.ncols)
        p = self.p
        return Matrix(p, self.nrows, self.ncols, tuple(tuple((c * a) % p for a in r) for r in self.rows))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d * %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols))
        if self.p != other.p:
            raise ValueError("mixed characteristics")
        if self.p == 2:
            orows = other.rows
            out = []
            for m in self.rows:
                acc = 0
                while m:
                    low = m & -m
                    acc ^= orows[low.bit_length() - 1]
                    m ^= low
                out.append(acc)
            return Matrix(2, self.nrows, other.ncols, tuple(out))
        p = self.p
        ocols = other.ncols
        out = []
        for r in self.rows:
            row = [0] * ocols
            for k, a in enumerate(r):
                if a:
                    orow = other.rows[k]
                    for j in range(ocols):
                        row[j] += a * orow[j]
            out.append(tuple(x % p for x in row))
        return Matrix(p, self.nrows, ocols, tuple(out))

    def mul_vec(self, v) -> tuple:
        return tuple(self.mul(Matrix.from_columns(self.p, [v], self.ncols)).col(0))

    def transpose(self) -> "Matrix":
        if self.p == 2:
            rows = []
            for j in range(self.ncols):
                m = 0
                for i in range(self.nrows):
                    if (self.rows[i] >> j) & 1:
                        m |= 1 << i
                rows.append(m)
            return Matrix(2, self.ncols, self.nrows, tuple(rows))
        return Matrix(self.p, self.ncols, self.nrows, tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)))

    def _shape_check(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols or self.p != other.p:
            raise ValueError("shape/field mismatch")

    def rank(self) -> int:
        return rref(self)[1]


def _pack(values) -> int:
    m = 0
    for j, x in enumerate(values):
        if x % 2:
            m |= 1 << j
    return m


def _unpack(mask: int, n: int) -> tuple:
    return tuple((mask >> j) & 1 for j in range(n))


def hstack(mats: list) -> Matrix:
    mats = [m for m in mats if m.ncols >= 0]
    p = mats[0].p
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("row count mismatch")
    if p == 2:
        rows = []
        for i in range(nrows):
            acc = 0
            off = 0
            for m in mats:
                acc |= m.rows[i] << off
                off += m.ncols
            rows.append(acc)
        return Matrix(2, nrows, sum(m.ncols for m in mats), tuple(rows))
    rows = []
    for i in range(nrows):
        row = []
        for m in mats:
            row.extend(m.rows[i])
        rows.append(tuple(row))
    return Matrix(p, nrows, sum(m.ncols for m in mats), tuple(rows))


def vstack(mats: list) -> Matrix:
    p = mats[0].p
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("column count mismatch")
    rows = []
    for m in mats:
        rows.extend(m.rows)
    return Matrix(p, sum(m.nrows for m in mats), ncols, tuple(rows))


def block_diag(p: int, mats: list) -> Matrix:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    out = Matrix.zero(p, nr, nc)
    rows = list(out.rows) if p == 2 else [list(r) for r in out.rows]
    ro = co = 0
    for m in mats:
        for i in range(m.nrows):
            if p == 2:
                rows[ro + i] |= m.rows[i] << co
            else:
                for j in range(m.ncols):
                    rows[ro + i][co + j] = m.rows[i][j]
        ro += m.nrows
        co += m.ncols
    if p == 2:
        return Matrix(2, nr, nc, tuple(rows))
    return Matrix(p, nr, nc, tuple(tuple(r) for r in rows))


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form with its rank.

    Pivots are the first nonzero entry in column order, giving a unique
    canonical form.
    """
    p = m.p
    if p == 2:
        rows = list(m.rows)
        pivots = []
        r = 0
        for c in range(m.ncols):
            bit = 1 << c
            pivot = -1
            for i in range(r, m.nrows):
                if rows[i] & bit:
                    pivot = i
                    break
            if pivot < 0:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            pr = rows[r]
            for i in range(m.nrows):
                if i != r and rows[i] & bit:
                    rows[i] ^= pr
            pivots.append(c)
            r += 1
            if r == m.nrows:
                break
        return Matrix(2, m.nrows, m.ncols, tuple(rows)), len(pivots)
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        pivot = -1
        for i in range(r, m.nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = inv_mod(rows[r][c], p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return Matrix(p, m.nrows, m.ncols, tuple(tuple(r) for r in rows)), len(pivots)


def _pivot_cols(red: Matrix, rank: int) -> list:
    if red.p == 2:
        return [(red.rows[r] & -red.rows[r]).bit_length() - 1 for r in range(rank)]
    pivots = []
    for r in range(rank):
        for j in range(red.ncols):
            if red.entry(r, j):
                pivots.append(j)
                break
    return pivots


def kernel_basis(m: Matrix) -> list:
    """Canonical basis of {v : m v = 0}, as column vectors (tuples)."""
    red, rank = rref(m)
    pivots = _pivot_cols(red, rank)
    pivot_set = set(pivots)
    p = m.p
    basis = []
    if p == 2:
        rows = red.rows
        for free in range(m.ncols):
            if free in pivot_set:
                continue
            v = [0] * m.ncols
            v[free] = 1
            for r, pc in enumerate(pivots):
                v[pc] = (rows[r] >> free) & 1
            basis.append(tuple(v))
        return basis
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [0] * m.ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red.entry(r, free)) % p
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b) -> tuple | None:
    """Some x with m x = b, free variables set to 0; None if inconsistent."""
    X = solve_matrix(m, Matrix.from_columns(m.p, [tuple(b)], m.nrows))
    return None if X is None else X.col(0)


def solve_matrix(A: Matrix, B: Matrix) -> Matrix | None:
    """X with A X = B (free variables zero), or None if inconsistent."""
    if A.nrows != B.nrows:
        raise ValueError("shape mismatch")
    aug = hstack([A, B])
    red, rank = rref(aug)
    pivots = _pivot_cols(red, rank)
    for pc in pivots:
        if pc >= A.ncols:
            return None
    p = A.p
    cols = []
    for j in range(B.ncols):
        x = [0] * A.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.entry(r, A.ncols + j)
        cols.append(tuple(x))
    return Matrix.from_columns(p, cols, A.ncols)


def column_space_basis(m: Matrix) -> Matrix:
    """Canonical basis of the column space, returned as matrix columns."""
    red, rank = rref(m.transpose())
    rows = [red.row(i) for i in range(rank)]
    return Matrix.from_rows(m.p, rows).transpose() if rows else Matrix.zero(m.p, m.nrows, 0)


def quotient_maps(sub: Matrix) -> tuple:
    """Projection/lift pair for k^n -> k^n / colspace(sub).

    Returns (proj, lift) with proj of shape q x n, lift of shape n x q,
    proj . lift = I and ker(proj) = colspace(sub).
    """
    p = sub.p
    n = sub.nrows
    basis = column_space_basis(sub)
    r = basis.ncols
    red, rank = rref(basis.transpose())
    pivots = set(_pivot_cols(red, rank))
    free = [j for j in range(n) if j not in pivots]
    # rows: subspace basis then unit vectors on free coordinates
    rows = [red.row(i) for i in range(rank)]
    for j in free:
        e = [0] * n
        e[j] = 1
        rows.append(tuple(e))
    M = Matrix.from_rows(p, rows) if rows else Matrix.zero(p, 0, n)
    # coords(x) = (M^T)^{-1} x; quotient coordinates are the trailing block
    inv = solve_matrix(M.transpose(), Matrix.identity(p, n))
    if inv is None:
        raise ValueError("degenerate subspace basis")
    proj_rows = [inv.row(i) for i in range(r, n)]
    proj = Matrix.from_rows(p, proj_rows) if proj_rows else Matrix.zero(p, 0, n)
    lift_cols = []
    for j in free:
        e = [0] * n
        e[j] = 1
        lift_cols.append(tuple(e))
    lift = Matrix.from_columns(p, lift_cols, n) if lift_cols else Matrix.zero(p, n, 0)
    return proj, lift
