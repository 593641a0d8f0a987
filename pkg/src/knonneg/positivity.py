"""k-nonnegativity and k-positivity predicates.

The full test enumerates all minors of order <= k in a deterministic order
(increasing order, then lexicographic in (I, J)) so failure witnesses are
reproducible.  The fast test checks column-solid minors only, which suffices
for invertible matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .errors import DimensionError, IndexRangeError, SingularMatrixError
from .exact import RationalMatrix, det, minor

__all__ = [
    "MinorWitness",
    "KNonnegativityResult",
    "is_k_nonnegative",
    "is_k_nonnegative_fast",
    "is_k_positive",
    "ZeroPatternViolation",
    "zero_pattern_violations",
]


@dataclass(frozen=True)
class MinorWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class KNonnegativityResult:
    ok: bool
    witness: MinorWitness | None

    def __bool__(self) -> bool:
        return self.ok


def _check_square_k(M: RationalMatrix, k: int) -> int:
    if not M.is_square:
        raise DimensionError("k-nonnegativity is defined for square matrices")
    n = M.n_rows
    if not 1 <= k <= n:
        raise IndexRangeError(f"k = {k} outside [1, {n}]")
    return n


def _minors(M: RationalMatrix, k: int) -> Iterator[MinorWitness]:
    n = M.n_rows
    for order in range(1, k + 1):
        for rows in combinations(range(1, n + 1), order):
            for cols in combinations(range(1, n + 1), order):
                yield MinorWitness(rows, cols, minor(M, rows, cols))


def _column_solid_minors(M: RationalMatrix, k: int) -> Iterator[MinorWitness]:
    n = M.n_rows
    for order in range(1, k + 1):
        for rows in combinations(range(1, n + 1), order):
            for start in range(1, n - order + 2):
                cols = tuple(range(start, start + order))
                yield MinorWitness(rows, cols, minor(M, rows, cols))


def is_k_nonnegative(M: RationalMatrix, k: int) -> KNonnegativityResult:
    """True iff every minor of order <= k is >= 0; first violation as witness."""
    _check_square_k(M, k)
    for w in _minors(M, k):
        if w.value < 0:
            return KNonnegativityResult(False, w)
    return KNonnegativityResult(True, None)


def is_k_nonnegative_fast(M: RationalMatrix, k: int) -> KNonnegativityResult:
    """Column-solid test; valid for invertible matrices only (checked)."""
    _check_square_k(M, k)
    if det(M) == 0:
        raise SingularMatrixError("the column-solid test assumes an invertible matrix")
    for w in _column_solid_minors(M, k):
        if w.value < 0:
            return KNonnegativityResult(False, w)
    return KNonnegativityResult(True, None)


def is_k_positive(M: RationalMatrix, k: int) -> KNonnegativityResult:
    """True iff every minor of order <= k is > 0."""
    _check_square_k(M, k)
    for w in _minors(M, k):
        if w.value <= 0:
            return KNonnegativityResult(False, w)
    return KNonnegativityResult(True, None)


@dataclass(frozen=True)
class ZeroPatternViolation:
    rule: str                      # "diagonal-zero" | "ne-shadow" | "sw-shadow" | "diag-propagation"
    zero_at: tuple[int, int]
    offender: tuple[int, int] | None
    value: Fraction


def zero_pattern_violations(
    M: RationalMatrix, k: int, *, k_irreducible: bool = False
) -> list[ZeroPatternViolation]:
    """Zero-entry sanity scan for invertible k-nonnegative matrices.

    Checks the shadow conditions (a zero off-diagonal entry forces a full
    northeast or southwest cone of zeros, and the diagonal is nonzero) for
    k >= 2.  With ``k_irreducible`` and k > 2 also checks the diagonal
    propagation of zeros toward the corners.
    """
    n = _check_square_k(M, k)
    if k < 2:
        raise IndexRangeError("zero-pattern conditions apply for k >= 2")
    violations: list[ZeroPatternViolation] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if M.entry(i, j) != 0:
                continue
            if i == j:
                violations.append(ZeroPatternViolation("diagonal-zero", (i, j), None, Fraction(0)))
            elif i < j:
                for i2 in range(1, i + 1):
                    for j2 in range(j, n + 1):
                        v = M.entry(i2, j2)
                        if v != 0:
                            violations.append(
                                ZeroPatternViolation("ne-shadow", (i, j), (i2, j2), v)
                            )
            else:
                for i2 in range(i, n + 1):
                    for j2 in range(1, j + 1):
                        v = M.entry(i2, j2)
                        if v != 0:
                            violations.append(
                                ZeroPatternViolation("sw-shadow", (i, j), (i2, j2), v)
                            )
    if k_irreducible and k > 2:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if M.entry(i, j) != 0 or i == j:
                    continue
                if (i <= k or j <= k) and i > 1 and j > 1:
                    v = M.entry(i - 1, j - 1)
                    if v != 0:
                        violations.append(
                            ZeroPatternViolation("diag-propagation", (i, j), (i - 1, j - 1), v)
                        )
                if (i > n - k or j > n - k) and i < n and j < n:
                    v = M.entry(i + 1, j + 1)
                    if v != 0:
                        violations.append(
                            ZeroPatternViolation("diag-propagation", (i, j), (i + 1, j + 1), v)
                        )
    return violations
