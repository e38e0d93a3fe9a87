"""Brute-force oracle for the obstruction counts, by exact linear algebra.

Independently of the closed weight formula, the obstruction dimension of a
block is the rank gap between two systems of point-vanishing conditions on
degree-m binary forms.  Chart r contributes vanishing to order
codim_reg(t, r) at the point [r+1 : r-n] of the projective line; the points
for r = -1..n are pairwise distinct.  Writing rank_all for the stacked
system over all charts and rank_ends for the system of the two boundary
charts r in {-1, n}:

    oracle dimension = rank_all - rank_ends

since the regular part of the block has dimension (m+1) - rank_ends and the
unobstructed subspace has dimension (m+1) - rank_all.  Ranks come from
fraction-free (Bareiss) elimination over the integers and are computed,
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoblocks import TripleIndex, codim_reg, parity_holds


@dataclass(frozen=True)
class VanishingCondition:
    """Vanishing to the given order at the point [a : b] of the line."""

    point: tuple[int, int]
    multiplicity: int

    def __post_init__(self) -> None:
        if self.point == (0, 0):
            raise ValueError("degenerate point (0, 0)")
        if self.multiplicity < 0:
            raise ValueError("multiplicity must be >= 0")


def vanishing_rows(cond: VanishingCondition, m: int) -> list[list[int]]:
    """Linear conditions on the m+1 coefficients of P = sum p_l X^(m-l) Y^l.

    Row t is the t-th derivative of P along a fixed direction transversal to
    [a : b], evaluated at (a, b), for t = 0..multiplicity-1.  Any row set
    with the same row space is acceptable; only the rank matters.
    """
    if cond.multiplicity < 1:
        raise ValueError("need multiplicity >= 1")
    a, b = cond.point
    rows: list[list[int]] = []
    for t in range(cond.multiplicity):
        row = [0] * (m + 1)
        for l in range(m + 1):
            if b != 0:
                # direction (1, 0): d^t/dX^t of X^(m-l) Y^l at (a, b)
                e = m - l
                if t > e:
                    continue
                falling = 1
                for s in range(t):
                    falling *= e - s
                row[l] = falling * a ** (e - t) * b**l
            else:
                # point [1 : 0]; use direction (0, 1) instead
                if t > l:
                    continue
                falling = 1
                for s in range(t):
                    falling *= l - s
                row[l] = falling * a ** (m - l) * b ** (l - t)
        rows.append(row)
    return rows


def rank(rows: list[list[int]], ncols: int) -> int:
    """Rank by fraction-free Gaussian elimination (Bareiss).

    Entries stay integral: every intermediate entry is a minor of the input
    matrix, so the division by the previous pivot is exact.
    """
    matrix = [list(row) for row in rows if any(row)]
    nrows = len(matrix)
    pivot_row = 0
    prev_pivot = 1
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        pivot = None
        for r in range(pivot_row, nrows):
            if matrix[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        lead = matrix[pivot_row][col]
        row_p = matrix[pivot_row]
        for r in range(pivot_row + 1, nrows):
            # the update must touch every row below the pivot, including rows
            # with a zero in the pivot column, or later divisions go inexact
            entry = matrix[r][col]
            row_r = matrix[r]
            for c in range(col + 1, ncols):
                quotient, remainder = divmod(lead * row_r[c] - entry * row_p[c], prev_pivot)
                if remainder:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                row_r[c] = quotient
            row_r[col] = 0
        prev_pivot = lead
        pivot_row += 1
    return pivot_row


def conditions_for_triple(t: TripleIndex) -> list[VanishingCondition]:
    """One condition per chart r = -1..n: order codim_reg(t, r) at [r+1 : r-n]."""
    return [
        VanishingCondition((r + 1, r - t.n), codim_reg(t, r))
        for r in range(-1, t.n + 1)
    ]


def _stacked_rows(conds: list[VanishingCondition], m: int) -> list[list[int]]:
    rows: list[list[int]] = []
    for cond in conds:
        if cond.multiplicity > 0:
            rows.extend(vanishing_rows(cond, m))
    return rows


def hsum_oracle_triple(t: TripleIndex) -> int:
    """Obstruction dimension of one block, from two exact rank computations."""
    conds = conditions_for_triple(t)
    if all(c.multiplicity == 0 for c in conds):
        return 0
    m = t.m
    ends = [conds[0], conds[-1]]  # boundary charts r = -1 and r = n
    rank_all = rank(_stacked_rows(conds, m), m + 1)
    rank_ends = rank(_stacked_rows(ends, m), m + 1)
    return rank_all - rank_ends


def general_position_check(t: TripleIndex) -> bool:
    """True iff the stacked conditions are independent up to the ambient cap.

    The stacked rank must equal min(m+1, total multiplicity): every
    intersection of the chart subspaces has the expected codimension.
    """
    conds = conditions_for_triple(t)
    total = sum(c.multiplicity for c in conds)
    if total == 0:
        return True
    stacked = rank(_stacked_rows(conds, t.m), t.m + 1)
    return stacked == min(t.m + 1, total)


def hsum_oracle(n: int, m: int) -> int:
    """Brute-force obstruction count: blockwise rank gaps, summed.

    Scans the block range 0 <= i <= n*m - 1; blocks beyond it extend
    holomorphically and contribute nothing (the formula-side enumeration
    covers a superset, so a discrepancy there would surface as a mismatch).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    total = 0
    for i in range(n * m):
        bound = (i + m) // (n + 1)
        for khat in range(-bound, bound + 1):
            if parity_holds(n, khat, i, m):
                total += hsum_oracle_triple(TripleIndex(n, khat, i, m))
    return total
