"""Exact rational dense linear algebra.

Matrices are immutable, entries are `fractions.Fraction` (always in lowest
terms with positive denominator), and all indexing in the public API is
1-based to match interval notation [i, j].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, IndexRangeError, MatrixParseError

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "rat",
    "parse_rational",
    "format_rational",
    "check_index_set",
    "minor",
    "det",
    "mat_mul",
    "rank",
    "parse_matrix",
    "serialize_matrix",
]

# Cofactor expansion below this order, fraction-free Bareiss from it on.
_BAREISS_THRESHOLD = 5


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce ints, 'p/q' strings or Fractions to an exact Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise MatrixParseError(f"cannot interpret {value!r} as a rational")


def parse_rational(token: str) -> Fraction:
    """Parse 'p' or 'p/q' with q > 0; reject anything else (no floats)."""
    text = token.strip()
    num, slash, den = text.partition("/")
    try:
        if not slash:
            return Fraction(int(num))
        value = Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"malformed rational token {token!r}") from exc
    if int(den) <= 0:
        raise MatrixParseError(f"denominator must be positive in {token!r}")
    return value


def format_rational(value: Fraction) -> str:
    """Canonical text form: 'p' when the denominator is 1, else 'p/q'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of Rationals, stored row-major as nested tuples."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise DimensionError("ragged rows in matrix")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int | str | Fraction]]) -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(rat(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return RationalMatrix(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise IndexRangeError(f"entry ({i},{j}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[i - 1][j - 1]

    def with_entry(self, i: int, j: int, value: int | str | Fraction) -> "RationalMatrix":
        """Copy of the matrix with one entry replaced (matrices stay immutable)."""
        self.entry(i, j)
        new_rows = [list(row) for row in self.rows]
        new_rows[i - 1][j - 1] = rat(value)
        return RationalMatrix(tuple(tuple(row) for row in new_rows))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)))

    def submatrix(self, I: Sequence[int], J: Sequence[int]) -> "RationalMatrix":
        check_index_set(I, self.n_rows)
        check_index_set(J, self.n_cols)
        return RationalMatrix(
            tuple(tuple(self.rows[i - 1][j - 1] for j in J) for i in I)
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_rational(x) for x in row) for row in self.rows
        )
        return f"RationalMatrix[{body}]"


def check_index_set(indices: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a 1-based, nonempty, strictly increasing index set within [1, n]."""
    idx = tuple(indices)
    if not idx:
        raise IndexRangeError("index set must be nonempty")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise IndexRangeError(f"index set {idx} is not strictly increasing")
    if idx[0] < 1 or idx[-1] > n:
        raise IndexRangeError(f"index set {idx} outside [1, {n}]")
    return idx


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product."""
    if a.n_cols != b.n_rows:
        raise DimensionError(f"inner dimensions {a.n_cols} and {b.n_rows} differ")
    bt = tuple(zip(*b.rows))
    return RationalMatrix(
        tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
            for row in a.rows
        )
    )


def _det_cofactor(rows: list[list[Fraction]]) -> Fraction:
    m = len(rows)
    if m == 1:
        return rows[0][0]
    if m == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if m == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = Fraction(0)
    sign = 1
    for j in range(m):
        if rows[0][j]:
            sub = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += sign * rows[0][j] * _det_cofactor(sub)
        sign = -sign
    return total


def _det_bareiss(rows: list[list[Fraction]]) -> Fraction:
    # Clear denominators row by row so Bareiss runs on integers.
    m = len(rows)
    scale = Fraction(1)
    grid: list[list[int]] = []
    for row in rows:
        lcm = 1
        for x in row:
            d = x.denominator
            if d != 1:
                from math import gcd

                lcm = lcm // gcd(lcm, d) * d
        scale *= lcm
        grid.append([int(x * lcm) for x in row])
    sign = 1
    prev = 1
    for k in range(m - 1):
        if grid[k][k] == 0:
            for r in range(k + 1, m):
                if grid[r][k] != 0:
                    grid[k], grid[r] = grid[r], grid[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = grid[k][k]
        for r in range(k + 1, m):
            for c in range(k + 1, m):
                grid[r][c] = (grid[r][c] * pivot - grid[r][k] * grid[k][c]) // prev
            grid[r][k] = 0
        prev = pivot
    return Fraction(sign * grid[m - 1][m - 1], 1) / scale


def minor(M: RationalMatrix, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Exact minor |M_{I,J}| over 1-based index sets with |I| = |J|."""
    rows_idx = check_index_set(I, M.n_rows)
    cols_idx = check_index_set(J, M.n_cols)
    if len(rows_idx) != len(cols_idx):
        raise DimensionError(f"minor needs |I| = |J|, got {len(rows_idx)} and {len(cols_idx)}")
    sub = [[M.rows[i - 1][j - 1] for j in cols_idx] for i in rows_idx]
    if len(sub) < _BAREISS_THRESHOLD:
        return _det_cofactor(sub)
    return _det_bareiss(sub)


def det(M: RationalMatrix) -> Fraction:
    if not M.is_square:
        raise DimensionError("determinant of a non-square matrix")
    n = M.n_rows
    return minor(M, range(1, n + 1), range(1, n + 1))


def rank(M: RationalMatrix) -> int:
    """Exact rank by fraction Gaussian elimination."""
    grid = [list(row) for row in M.rows]
    n_rows, n_cols = len(grid), len(grid[0])
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if grid[i][c]), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pivot = grid[r][c]
        for i in range(r + 1, n_rows):
            if grid[i][c]:
                f = grid[i][c] / pivot
                for j in range(c, n_cols):
                    grid[i][j] -= f * grid[r][j]
        r += 1
        if r == n_rows:
            break
    return r


def parse_matrix(text: str) -> RationalMatrix:
    """Parse the JSON matrix document {"n": int, "entries": [[str, ...], ...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise MatrixParseError('matrix document needs keys "n" and "entries"')
    n = doc["n"]
    entries = doc["entries"]
    if not isinstance(n, int) or n < 1:
        raise MatrixParseError('"n" must be a positive integer')
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixParseError(f'"entries" must be a list of {n} rows')
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise MatrixParseError("ragged rows in matrix document")
        rows.append(tuple(parse_rational(x) if isinstance(x, str) else rat(x) for x in row))
    return RationalMatrix(tuple(rows))


def serialize_matrix(M: RationalMatrix) -> str:
    """Serialize to the canonical JSON document; inverse of parse_matrix."""
    if not M.is_square:
        raise DimensionError("matrix documents are square")
    doc = {
        "n": M.n_rows,
        "entries": [[format_rational(x) for x in row] for row in M.rows],
    }
    return json.dumps(doc, separators=(", ", ": "))
