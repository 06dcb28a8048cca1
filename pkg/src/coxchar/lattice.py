"""Exact integer linear algebra: Smith normal form and lattice quotients.

Everything runs on Python's arbitrary-precision integers; there is no
floating point anywhere in this module.  Matrices are immutable and
row-major.  The central construction is ``quotient``, which presents a
finite quotient of ZZ^r by a full-rank sublattice as a finite abelian
group in invariant-factor form together with an explicit projection map
(and a section), the engine behind every lattice quotient in the package
(center of the group, torsion points of tori, character groups).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix (tuple of row tuples)."""

    data: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            ncols = len(data[0])
            if any(len(row) != ncols for row in data):
                raise ValueError("ragged rows")
        return cls(data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = tuple(zip(*other.data)) if other.data else ()
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.data
            )
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.data))) if self.data else self

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * x for x in row) for row in self.data))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of non-square matrix")
        if n == 0:
            return 1
        a = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntMatrix":
        """Exact inverse of a matrix with determinant +-1."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of non-square matrix")
        a = [[Fraction(x) for x in row] for row in self.data]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                    inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
        out = []
        for row in inv:
            if any(x.denominator != 1 for x in row):
                raise ValueError("matrix is not unimodular")
            out.append(tuple(int(x) for x in row))
        return IntMatrix(tuple(out))


def _swap_rows(a: list[list[int]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _row_sub(a: list[list[int]], i: int, t: int, q: int) -> None:
    a[i] = [x - q * y for x, y in zip(a[i], a[t])]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _col_sub(a: list[list[int]], j: int, t: int, q: int) -> None:
    for row in a:
        row[j] -= q * row[t]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ m @ V == D, U and V unimodular.

    D is diagonal with nonnegative entries satisfying d1 | d2 | ... ;
    trailing zeros indicate rank deficiency.  Deterministic: the pivot is
    always the nonzero entry of minimal absolute value (ties broken by
    position), so repeated runs give identical transforms.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.data]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    for t in range(min(nrows, ncols)):
        while True:
            # pivot: minimal |entry| over the trailing submatrix
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != t:
                _swap_rows(a, t, bi)
                _swap_rows(u, t, bi)
            if bj != t:
                _swap_cols(a, t, bj)
                _swap_cols(v, t, bj)

            clean = True
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    if q:
                        _row_sub(a, i, t, q)
                        _row_sub(u, i, t, q)
                    if a[i][t] != 0:
                        clean = False
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    if q:
                        _col_sub(a, j, t, q)
                        _col_sub(v, j, t, q)
                    if a[t][j] != 0:
                        clean = False
            if not clean:
                continue  # a strictly smaller pivot now exists; redo
            # pivot must divide the rest of the submatrix for the chain
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                _row_sub(a, t, offender, -1)  # add offending row, re-reduce
                _row_sub(u, t, offender, -1)
                continue
            break
        if all(a[i][j] == 0 for i in range(t, nrows) for j in range(t, ncols)):
            break

    for t in range(min(nrows, ncols)):
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    diag = [a[t][t] for t in range(min(nrows, ncols))]
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise AssertionError("SNF: zero before nonzero on diagonal")
        if x != 0 and y % x != 0:
            raise AssertionError("SNF: divisibility chain broken")

    return (
        IntMatrix.from_rows(u),
        IntMatrix.from_rows(a),
        IntMatrix.from_rows(v),
    )


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A quotient ZZ^rank / L in invariant-factor form, with maps.

    ``invariant_factors`` lists the d_i >= 2 with d1 | d2 | ... ; trivial
    factors are dropped.  ``project`` sends an ambient integer vector to
    its residue tuple; its kernel is exactly L.  ``section`` picks an
    ambient representative for a residue tuple.
    """

    ambient_rank: int
    invariant_factors: tuple[int, ...]
    _kept: tuple[tuple[int, int], ...]  # (row index in U, modulus)
    _u: IntMatrix
    _u_inv: IntMatrix

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        """Largest element order (last invariant factor, or 1)."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        w = self._u.apply(v)
        return tuple(w[i] % d for i, d in self._kept)

    def section(self, residues: Sequence[int]) -> tuple[int, ...]:
        """An ambient vector mapping onto the given residue tuple."""
        if len(residues) != len(self._kept):
            raise ValueError("residue tuple length mismatch")
        full = [0] * self.ambient_rank
        for (i, d), r in zip(self._kept, residues):
            full[i] = r % d
        return self._u_inv.apply(full)

    def element_order(self, residues: Sequence[int]) -> int:
        from math import gcd, lcm

        if len(residues) != len(self._kept):
            raise ValueError("residue tuple length mismatch")
        return lcm(1, *(d // gcd(d, r) for (_, d), r in zip(self._kept, residues)))


def quotient(ambient_rank: int, sublattice_basis: IntMatrix) -> FiniteAbelianGroup:
    """Present ZZ^ambient_rank modulo the column span of the basis.

    Raises ValueError when the columns span a sublattice of infinite
    index (rank-deficient basis).
    """
    if sublattice_basis.rows != ambient_rank:
        raise ValueError(
            f"basis has {sublattice_basis.rows} rows, ambient rank is {ambient_rank}"
        )
    u, d, _ = smith_normal_form(sublattice_basis)
    diag = [d[i][i] for i in range(min(d.rows, d.cols))]
    diag += [0] * (ambient_rank - len(diag))
    if any(x == 0 for x in diag):
        raise ValueError("sublattice has infinite index (rank-deficient basis)")
    kept = tuple((i, di) for i, di in enumerate(diag) if di >= 2)
    return FiniteAbelianGroup(
        ambient_rank=ambient_rank,
        invariant_factors=tuple(di for _, di in kept),
        _kept=kept,
        _u=u,
        _u_inv=u.inverse_unimodular(),
    )
