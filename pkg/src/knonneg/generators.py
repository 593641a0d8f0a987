"""Generator matrices and their exact minor theory.

Builds Chevalley generators e_i/f_i, diagonal generators h_i, and the two
irreducible families: K (tridiagonal, invertible, determinant < 0) and T
(pentadiagonal upper unitriangular), together with generalized continuants,
subtracting continued fractions, the irreducibility characterizations, and
closed forms for all solid minors of K and T.

Two closed forms are transcribed with corrected indices (the shifted-minor
product ends at a_{n-2}, and the trailing principal minors use the interior
block [2, i-2] with the a-product starting at a_{i-1}); both corrections are
pinned to direct exact minors by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Sequence

from .errors import (
    ArityError,
    DimensionError,
    DomainError,
    IndexRangeError,
    ShapeError,
    ZeroDenominatorError,
)
from .exact import Rational, RationalMatrix, minor, rat

__all__ = [
    "chevalley",
    "jacobi_h",
    "GeneratorParams",
    "k_generator",
    "t_generator",
    "continuant",
    "continued_fraction",
    "is_tridiagonal_irreducible",
    "is_pentadiagonal_irreducible",
    "k_minor_closed_form",
    "t_minor_closed_form",
    "left_e",
    "left_f",
    "right_e",
    "right_f",
    "scale_row",
    "scale_col",
]


def chevalley(n: int, kind: str, i: int, param: int | str | Fraction) -> RationalMatrix:
    """e_i(a) (identity plus a at (i, i+1)) or its transpose f_i(a)."""
    if kind not in ("e", "f"):
        raise DomainError(f"kind must be 'e' or 'f', got {kind!r}")
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"{kind}_{i} undefined for size {n}")
    a = rat(param)
    if a <= 0:
        raise DomainError(f"Chevalley parameter must be positive, got {a}")
    M = RationalMatrix.identity(n)
    if kind == "e":
        return M.with_entry(i, i + 1, a)
    return M.with_entry(i + 1, i, a)


def jacobi_h(n: int, i: int, param: int | str | Fraction) -> RationalMatrix:
    """Diagonal elementary Jacobi matrix with param at (i, i)."""
    if not 1 <= i <= n:
        raise IndexRangeError(f"h_{i} undefined for size {n}")
    c = rat(param)
    if c <= 0:
        raise DomainError(f"diagonal parameter must be positive, got {c}")
    return RationalMatrix.identity(n).with_entry(i, i, c)


# In-place-style row/column operations (returning new matrices); these accept
# arbitrary rational amounts and back evaluation, peeling and factorization.

def left_e(M: RationalMatrix, i: int, t: Fraction) -> RationalMatrix:
    """e_i(t) . M : add t copies of row i+1 to row i."""
    rows = list(M.rows)
    rows[i - 1] = tuple(x + t * y for x, y in zip(rows[i - 1], rows[i]))
    return RationalMatrix(tuple(rows))


def left_f(M: RationalMatrix, i: int, t: Fraction) -> RationalMatrix:
    """f_i(t) . M : add t copies of row i to row i+1."""
    rows = list(M.rows)
    rows[i] = tuple(x + t * y for x, y in zip(rows[i], rows[i - 1]))
    return RationalMatrix(tuple(rows))


def right_e(M: RationalMatrix, i: int, t: Fraction) -> RationalMatrix:
    """M . e_i(t) : add t copies of column i to column i+1."""
    rows = [list(row) for row in M.rows]
    for row in rows:
        row[i] += t * row[i - 1]
    return RationalMatrix(tuple(tuple(row) for row in rows))


def right_f(M: RationalMatrix, i: int, t: Fraction) -> RationalMatrix:
    """M . f_i(t) : add t copies of column i+1 to column i."""
    rows = [list(row) for row in M.rows]
    for row in rows:
        row[i - 1] += t * row[i]
    return RationalMatrix(tuple(tuple(row) for row in rows))


def scale_row(M: RationalMatrix, i: int, c: Fraction) -> RationalMatrix:
    rows = list(M.rows)
    rows[i - 1] = tuple(c * x for x in rows[i - 1])
    return RationalMatrix(tuple(rows))


def scale_col(M: RationalMatrix, j: int, c: Fraction) -> RationalMatrix:
    rows = [list(row) for row in M.rows]
    for row in rows:
        row[j - 1] *= c
    return RationalMatrix(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class GeneratorParams:
    """Parameter vectors (a, b) for the K or T family of size n."""

    family: str
    n: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.family not in ("K", "T"):
            raise DomainError(f"family must be 'K' or 'T', got {self.family!r}")
        want_a = self.n - 2 if self.family == "K" else self.n - 3
        want_b = self.n - 1 if self.family == "K" else self.n - 2
        min_n = 3 if self.family == "K" else 4
        if self.n < min_n:
            raise ArityError(f"{self.family} requires n >= {min_n}")
        if len(self.a) != want_a or len(self.b) != want_b:
            raise ArityError(
                f"{self.family} at n={self.n} needs |a|={want_a}, |b|={want_b}; "
                f"got {len(self.a)}, {len(self.b)}"
            )
        if any(x <= 0 for x in self.a) or any(x <= 0 for x in self.b):
            raise DomainError("generator parameters must be strictly positive")

    @staticmethod
    def for_k(n: int, a: Sequence, b: Sequence) -> "GeneratorParams":
        return GeneratorParams("K", n, tuple(rat(x) for x in a), tuple(rat(x) for x in b))

    @staticmethod
    def for_t(n: int, a: Sequence, b: Sequence) -> "GeneratorParams":
        return GeneratorParams("T", n, tuple(rat(x) for x in a), tuple(rat(x) for x in b))

    @property
    def band(self) -> int:
        """Size of the tridiagonal core: n for K, n-1 for the K inside T."""
        return self.n if self.family == "K" else self.n - 1

    @cached_property
    def X(self) -> Fraction:
        # X = sum_k (b_1...b_{k-1})(a_{k+1}...a_{m-2}) over k = 1..m-2, m = band
        m = self.band
        total = Fraction(0)
        for k in range(1, m - 1):
            total += prod(self.b[l - 2] for l in range(2, k + 1)) * prod(
                self.a[l - 1] for l in range(k + 1, m - 1)
            )
        return Fraction(total)

    @cached_property
    def Y(self) -> Fraction:
        return Fraction(prod(self.b[: self.band - 2], start=Fraction(1)))

    def as_k(self) -> "GeneratorParams":
        """The K-family parameters of size n-1 embedded in a T generator."""
        if self.family == "K":
            return self
        return GeneratorParams("K", self.n - 1, self.a, self.b)


def _k_bands(p: GeneratorParams) -> tuple[list[Fraction], list[Fraction]]:
    """Main diagonal and superdiagonal of K(a, b) at size m = p.band."""
    m = p.band
    a, b = p.a, p.b
    diag = [a[0]]
    diag += [a[i - 1] + b[i - 2] for i in range(2, m - 1)]
    diag += [b[m - 3], b[m - 2] * p.X]
    sup = [a[i - 1] * b[i - 1] for i in range(1, m - 1)]
    sup.append(b[m - 2] * p.Y)
    return diag, sup


def k_generator(p: GeneratorParams) -> RationalMatrix:
    """The tridiagonal K(a, b) with unit subdiagonal."""
    if p.family != "K":
        raise ArityError("k_generator needs K-family parameters")
    n = p.n
    diag, sup = _k_bands(p)
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for i in range(1, n + 1):
        row = [zero] * n
        row[i - 1] = diag[i - 1]
        if i < n:
            row[i] = sup[i - 1]
        if i > 1:
            row[i - 2] = one
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows))


def t_generator(p: GeneratorParams) -> RationalMatrix:
    """The pentadiagonal unitriangular T(a, b); its [1,n-1] x [2,n] block is K(a, b)."""
    if p.family != "T":
        raise ArityError("t_generator needs T-family parameters")
    n = p.n
    diag, sup = _k_bands(p)  # bands of the embedded K of size n-1
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for i in range(1, n + 1):
        row = [zero] * n
        row[i - 1] = one
        if i <= n - 1:
            row[i] = diag[i - 1]
        if i <= n - 2:
            row[i + 1] = sup[i - 1]
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows))


def continuant(
    a: Sequence, b: Sequence, i: int, r: int
) -> Fraction:
    """Generalized continuant C_i(r) with C_i(0) = 1, C_i(1) = a_i.

    Equals the solid principal minor |M_{[i, i+r-1], [i, i+r-1]}| of the
    tridiagonal matrix with unit subdiagonal, diagonal a and superdiagonal b.
    """
    if r < 0:
        raise IndexRangeError("continuant order must be nonnegative")
    av = [rat(x) for x in a]
    bv = [rat(x) for x in b]
    if r >= 1 and (i < 1 or i + r - 1 > len(av)):
        raise IndexRangeError(f"need diagonal entries a_{i}..a_{i + r - 1}")
    if r >= 2 and i + r - 2 > len(bv):
        raise IndexRangeError(f"need superdiagonal entries b_{i}..b_{i + r - 2}")
    prev, cur = Fraction(1), Fraction(1) if r == 0 else av[i - 1]
    for s in range(2, r + 1):
        prev, cur = cur, av[i + s - 2] * cur - bv[i + s - 3] * prev
    return cur if r >= 1 else Fraction(1)


def continued_fraction(a: Sequence, b: Sequence) -> Fraction:
    """Evaluate the subtracting continued fraction [a_0; a_1..a_m; b_1..b_m]."""
    av = [rat(x) for x in a]
    bv = [rat(x) for x in b]
    if not av:
        raise ArityError("continued fraction needs at least one partial quotient")
    if len(bv) != len(av) - 1:
        raise ArityError(f"need {len(av) - 1} weights for {len(av)} partial quotients")
    value = av[-1]
    for k in range(len(av) - 2, -1, -1):
        if value == 0:
            raise ZeroDenominatorError(
                f"zero denominator at depth {k + 1}; a shorter continuant vanishes"
            )
        value = av[k] - bv[k] / value
    return value


def _band_irreducible(diag: Sequence[Fraction], sup: Sequence[Fraction]) -> bool:
    """Shared criterion on a unit-subdiagonal tridiagonal band of size m.

    All superdiagonal entries positive, every continuant of order <= m-2
    positive, and both order-(m-1) principal minors zero.
    """
    m = len(diag)
    if any(x <= 0 for x in sup):
        return False
    for order in range(1, m - 1):
        for start in range(1, m - order + 2):
            if continuant(diag, sup, start, order) <= 0:
                return False
    return (
        continuant(diag, sup, 1, m - 1) == 0
        and continuant(diag, sup, 2, m - 1) == 0
    )


def is_tridiagonal_irreducible(M: RationalMatrix) -> bool:
    """Characterization of K-shaped matrices among tridiagonal ones.

    Requires (and errors otherwise): square of size >= 3, tridiagonal, unit
    subdiagonal, nonzero diagonal and superdiagonal.  Returns True iff M is
    invertible, (n-1)-nonnegative and (n-1)-irreducible.
    """
    if not M.is_square or M.n_rows < 3:
        raise ShapeError("need a square matrix of size >= 3")
    n = M.n_rows
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = M.entry(i, j)
            if abs(i - j) > 1 and v != 0:
                raise ShapeError(f"entry ({i},{j}) outside the tridiagonal band is nonzero")
            if i - j == 1 and v != 1:
                raise ShapeError(f"subdiagonal entry ({i},{j}) is {v}, expected 1")
            if (i == j or j - i == 1) and v == 0:
                raise ShapeError(f"band entry ({i},{j}) must be nonzero")
    diag = [M.entry(i, i) for i in range(1, n + 1)]
    sup = [M.entry(i, i + 1) for i in range(1, n)]
    return _band_irreducible(diag, sup)


def is_pentadiagonal_irreducible(M: RationalMatrix) -> bool:
    """Characterization of T-shaped matrices among pentadiagonal unitriangular ones."""
    if not M.is_square or M.n_rows < 4:
        raise ShapeError("need a square matrix of size >= 4")
    n = M.n_rows
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = M.entry(i, j)
            if i == j and v != 1:
                raise ShapeError("matrix is not unitriangular")
            if i > j and v != 0:
                raise ShapeError("matrix is not upper triangular")
            if j - i > 2 and v != 0:
                raise ShapeError(f"entry ({i},{j}) outside the pentadiagonal band is nonzero")
            if j - i in (1, 2) and v == 0:
                raise ShapeError(f"band entry ({i},{j}) must be nonzero")
    diag = [M.entry(i, i + 1) for i in range(1, n)]
    sup = [M.entry(i, i + 2) for i in range(1, n - 1)]
    return _band_irreducible(diag, sup)


def _as_interval(indices: Sequence[int]) -> tuple[int, int]:
    idx = tuple(indices)
    if any(b != a + 1 for a, b in zip(idx, idx[1:])):
        raise DomainError(f"index set {idx} is not an interval; not covered by closed forms")
    return idx[0], idx[-1]


def _k_principal_head(p: GeneratorParams, i: int, j: int) -> Fraction:
    """|K_{[i,j],[i,j]}| for j < m, with the conventions b_0 = 0, a_{m-1} = 0."""
    m = p.band
    if j < i:
        return Fraction(1)
    total = Fraction(0)
    for k in range(i - 1, j + 1):
        term = Fraction(1)
        for l in range(i, k + 1):       # b_{l-1}
            if l - 1 == 0:
                term = Fraction(0)
                break
            term *= p.b[l - 2]
        if term:
            for l in range(k + 1, j + 1):  # a_l, with a_{m-1} treated as 0
                if l >= m - 1:
                    term = Fraction(0)
                    break
                term *= p.a[l - 1]
        total += term
    return total


def k_minor_closed_form(p: GeneratorParams, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Closed-form solid minor |K(a,b)_{I,J}|; errors on non-solid index sets."""
    if p.family != "K":
        raise ArityError("k_minor_closed_form needs K-family parameters")
    m = p.band
    i1, j1 = _as_interval(I)
    i2, j2 = _as_interval(J)
    if j1 - i1 != j2 - i2:
        raise DimensionError("minor needs |I| = |J|")
    if j1 > m or j2 > m or i1 < 1 or i2 < 1:
        raise IndexRangeError(f"index sets outside [1, {m}]")
    offset = i2 - i1
    if abs(offset) >= 2:
        return Fraction(0)
    if offset == -1:
        return Fraction(1)
    if offset == 1:
        if j2 <= m - 1:
            return Fraction(prod(p.a[k - 1] * p.b[k - 1] for k in range(i1, j1 + 1)))
        head = prod(p.a[k - 1] * p.b[k - 1] for k in range(i1, m - 1))
        return head * p.b[m - 2] * p.Y
    # principal minors
    if j1 < m:
        return _k_principal_head(p, i1, j1)
    if i1 == 1:
        return -prod(p.a) * prod(p.b)
    if i1 == 2:
        return Fraction(0)
    bs = prod(p.b[k - 2] for k in range(i1, m + 1))
    as_ = prod(p.a[k - 1] for k in range(i1 - 1, m - 1))
    return bs * as_ * _k_principal_head(p, 2, i1 - 2)


def t_minor_closed_form(p: GeneratorParams, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Closed-form solid minor of T(a, b), reduced to the embedded K block."""
    if p.family != "T":
        raise ArityError("t_minor_closed_form needs T-family parameters")
    n = p.n
    i1, j1 = _as_interval(I)
    i2, j2 = _as_interval(J)
    if j1 - i1 != j2 - i2:
        raise DimensionError("minor needs |I| = |J|")
    if j1 > n or j2 > n:
        raise IndexRangeError(f"index sets outside [1, {n}]")
    # strip row n (unit last row) and column 1 (unit first column)
    while True:
        if j1 == n:
            if j2 != n:
                return Fraction(0)
            j1, j2 = j1 - 1, j2 - 1
            if j1 < i1:
                return Fraction(1)
            continue
        if i2 == 1:
            if i1 != 1:
                return Fraction(0)
            i1, i2 = i1 + 1, i2 + 1
            if j1 < i1:
                return Fraction(1)
            continue
        break
    return k_minor_closed_form(
        p.as_k(), range(i1, j1 + 1), range(i2 - 1, j2)
    )


def k_det(p: GeneratorParams) -> Rational:
    """det K(a, b) = -a_1...a_{n-2} b_1...b_{n-1}."""
    return -prod(p.a) * prod(p.b)


def check_k_closed_forms(p: GeneratorParams) -> None:
    """Assert every solid closed form equals the direct minor (test helper)."""
    M = k_generator(p)
    m = p.n
    for size in range(1, m + 1):
        for i1 in range(1, m - size + 2):
            for i2 in range(1, m - size + 2):
                I = range(i1, i1 + size)
                J = range(i2, i2 + size)
                direct = minor(M, I, J)
                closed = k_minor_closed_form(p, I, J)
                if direct != closed:
                    raise AssertionError(
                        f"K closed form mismatch at I={tuple(I)}, J={tuple(J)}: "
                        f"{closed} != {direct}"
                    )
