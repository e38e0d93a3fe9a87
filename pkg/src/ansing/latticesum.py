"""The obstruction count hsum(n, m) as a weighted lattice sum.

A degree-m symmetric differential on the punctured resolution of an A_n
singularity decomposes into graded pieces indexed by lattice points
(x1, x2) = (i, khat).  The weight of a point is the dimension of the
obstruction space for its piece to extend across the exceptional chain, and
hsum(n, m) is the total weight over the parity-valid points of a polygon
P_n(m).

The polygon is stored through its upper-half inequalities

    -x1 <= 0,   -x2 <= 0,   x1 - (n-1) x2 <= m,   -x1 + (n+1) x2 <= m+2

and extended to x2 < 0 by the reflection x2 -> -x2 (the weight is an even
function of x2).  Points off the polygon or failing parity get weight 0, so
the weight is a total function and summation never needs a membership guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .monoblocks import TripleIndex, codim_reg, dim_vreg, parity_holds

LatticePoint = tuple[int, int]


@dataclass(frozen=True)
class Polygon:
    """P_n(m), as upper-half half-planes a*x1 + b*x2 <= c."""

    n: int
    m: int
    half_planes: tuple[tuple[int, int, int], ...]

    def contains(self, point: LatticePoint) -> bool:
        x1, x2 = point
        x2 = abs(x2)
        return all(a * x1 + b * x2 <= c for a, b, c in self.half_planes)


def polygon(n: int, m: int) -> Polygon:
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    planes = (
        (-1, 0, 0),
        (0, -1, 0),
        (1, -(n - 1), m),
        (-1, n + 1, m + 2),
    )
    return Polygon(n, m, planes)


def weight(n: int, m: int, point: LatticePoint) -> int:
    """Obstruction dimension h_{n,m}(x1, x2); 0 off-polygon or off-parity.

    min of: the total pole codimension over the interior charts r = 0..n-1,
    and the dimension cap m+1 minus the two boundary-chart codimensions.
    All halves below are exact because parity makes the numerators even.
    """
    x1, x2 = point
    if (x1 + (n + 1) * x2 - m) % 2 != 0:
        return 0
    x2 = abs(x2)
    outer_lo = m - x1 - (n + 1) * x2
    outer_hi = m - x1 + (n + 1) * x2
    cap = m + 1 - max(0, outer_lo // 2) - max(0, outer_hi // 2)
    if cap <= 0:
        return 0
    total = 0
    for r in range(n):
        term = m - x1 + (2 * r - n + 1) * x2
        if term > 0:
            total += term // 2
            if total >= cap:
                return cap
    return total


def lattice_points(poly: Polygon) -> Iterator[LatticePoint]:
    """All integer points of the full (reflected) polygon.

    Deterministic row-major order: increasing x2, then increasing x1.
    """
    n, m = poly.n, poly.m
    for x2 in range(-(m + 1), m + 2):
        a = abs(x2)
        x1_lo = max(0, (n + 1) * a - m - 2)
        x1_hi = m + (n - 1) * a
        for x1 in range(x1_lo, x1_hi + 1):
            yield (x1, x2)


@lru_cache(maxsize=None)
def hsum(n: int, m: int) -> int:
    """Total obstruction count: sum of weights over parity-valid points."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    total = 0
    for x2 in range(-(m + 1), m + 2):
        a = abs(x2)
        x1_lo = max(0, (n + 1) * a - m - 2)
        x1_hi = m + (n - 1) * a
        if x1_hi < x1_lo:
            continue
        # first x1 >= x1_lo with x1 + (n+1) x2 == m (mod 2)
        start = x1_lo + ((m + (n + 1) * x2 - x1_lo) % 2)
        for x1 in range(start, x1_hi + 1, 2):
            total += weight(n, m, (x1, x2))
    return total


def hsum_triple(t: TripleIndex) -> int:
    """Per-block obstruction dimension, from the chart codimension counts.

    Agrees with weight(n, m, (i, khat)); the two code paths are compared in
    the tests as a definitional consistency check.
    """
    cap = dim_vreg(t)
    if cap <= 0:
        return 0
    total = 0
    for r in range(t.n):
        total += codim_reg(t, r)
        if total >= cap:
            return cap
    return total


def admissible_triples(n: int, m: int, i_max: int | None = None) -> Iterator[TripleIndex]:
    """Parity-valid triples with |khat| <= (i+m)/(n+1) and 0 <= i <= i_max.

    The default scan bound (n+1)m + n is a safe superset of the support of
    the weight; triples beyond the polygon contribute zero.
    """
    if i_max is None:
        i_max = (n + 1) * m + n
    for i in range(i_max + 1):
        bound = (i + m) // (n + 1)
        for khat in range(-bound, bound + 1):
            if parity_holds(n, khat, i, m):
                yield TripleIndex(n, khat, i, m)


def hsum_via_triples(n: int, m: int) -> int:
    """hsum recomputed blockwise over admissible triples."""
    return sum(hsum_triple(t) for t in admissible_triples(n, m))
