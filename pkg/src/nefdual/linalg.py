"""Exact linear algebra over rational numbers.

Everything operates on lists of ``fractions.Fraction`` entries. No floating
point, no tolerances: every comparison is exact.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence


class SolveFailure(Enum):
    """Why a linear system lacks a unique solution."""

    INCONSISTENT = "Inconsistent"
    UNDERDETERMINED = "Underdetermined"


Inconsistent = SolveFailure.INCONSISTENT
Underdetermined = SolveFailure.UNDERDETERMINED


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form of a copy of ``rows``.

    Returns ``(matrix, pivot_columns)``.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Canonical basis of ``{x : rows @ x = 0}``.

    One primitive integer vector per free column of the reduced form,
    ordered by free column index.
    """
    if not rows:
        return [
            tuple(Fraction(1 if j == i else 0) for j in range(ncols))
            for i in range(ncols)
        ]
    mat, pivots = rref(rows, ncols)
    basis = []
    for fcol in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -mat[r][fcol]
        basis.append(primitivize(vec)[0])
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve ``rows @ x = rhs`` exactly.

    Returns the unique solution as a tuple of Fractions, or one of the
    ``SolveFailure`` values. Failure kinds are return values, not errors.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [list(row) + [Fraction(b)] for row, b in zip(rows, rhs)]
    mat, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return Inconsistent
    if len(pivots) < ncols:
        return Underdetermined
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = mat[r][ncols]
    return tuple(sol)


def primitivize(vec: Sequence[Fraction]):
    """Scale a nonzero rational vector to primitive integer coordinates.

    Returns ``(prim, scale)`` with ``scale > 0`` and ``prim = scale * vec``,
    where ``prim`` has integer entries with no common factor.
    """
    fracs = [Fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        raise ValueError("cannot primitivize the zero vector")
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    prim = tuple(Fraction(v // g) for v in ints)
    return prim, Fraction(denom_lcm, g)
