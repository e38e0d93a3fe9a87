"""Local singularity invariants: chi_orb, mu, h1 and the cubic rate h1_omega.

The localized first cohomology of degree-m symmetric differentials at an A_n
point decomposes exactly as

    h1(n, m) = mu(n, m) - chi_orb(n, m) - hsum(n, m)

where chi_orb is the orbifold Euler characteristic polynomial built from the
local Chern numbers (c1^2 = 0 and c2 = n(n+2)/(n+1) for type A_n, with
s2 = c1^2 - c2), and mu averages trace-over-determinant of the symmetric
powers of the defining cyclic representation diag(eps, eps^n).  mu is
computed entirely inside Q(zeta_{n+1}) with exact inversion; the group
average is Galois-stable, so a nonzero non-constant coordinate in the result
signals an arithmetic bug and raises.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import CycloElement
from .latticesum import hsum


class NonRationalError(ArithmeticError):
    """A cyclotomic value that must be rational has nonzero zeta-coordinates."""


@dataclass(frozen=True)
class ChernLocal:
    """Local Chern numbers of an A_n point on the resolution."""

    n: int
    c1sq: Fraction
    c2: Fraction
    s2: Fraction


def chern_local(n: int) -> ChernLocal:
    if n < 1:
        raise ValueError("need n >= 1")
    # c2 = e(exceptional chain) - 1/|group| = (n+1) - 1/(n+1)
    c2 = Fraction(n * (n + 2), n + 1)
    return ChernLocal(n=n, c1sq=Fraction(0), c2=c2, s2=-c2)


def chi_orb(n: int, m: int) -> Fraction:
    """Orbifold Euler characteristic polynomial evaluated at degree m."""
    if m < 0:
        raise ValueError("need m >= 0")
    ch = chern_local(n)
    return (
        ch.s2 / 6 * m**3
        - ch.c2 / 2 * m**2
        - (ch.c1sq + 3 * ch.c2) / 12 * m
        + (ch.c1sq + ch.c2) / 12
    )


@functools.lru_cache(maxsize=None)
def _denominator_inverses(n: int) -> tuple[CycloElement, ...]:
    """Inverses of det(Id - g) = (1 - zeta^j)(1 - zeta^jn) for j = 1..n."""
    order = n + 1
    one = CycloElement.one(order)
    inverses = []
    for j in range(1, n + 1):
        det = (one - CycloElement.zeta_pow(order, j)) * (
            one - CycloElement.zeta_pow(order, j * n)
        )
        inverses.append(det.inverse())
    return tuple(inverses)


@functools.lru_cache(maxsize=None)
def mu(n: int, m: int) -> Fraction:
    """Group average of trace/determinant over the nontrivial elements.

    The trace of the m-th symmetric power of diag(eps^j, eps^jn) is
    sum over q = 0..m of eps^(j(m-q) + jnq); exponents are accumulated as
    counts per residue so the trace costs O(m + n).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    order = n + 1
    inverses = _denominator_inverses(n)
    total = CycloElement.zero(order)
    for j in range(1, n + 1):
        counts = [0] * order
        exponent = (j * m) % order
        step = (j * (n - 1)) % order
        for _ in range(m + 1):
            counts[exponent] += 1
            exponent = (exponent + step) % order
        trace = CycloElement._from_poly(order, counts)
        total = total + trace * inverses[j - 1]
    value = total * Fraction(1, order)
    if not value.is_rational():
        raise NonRationalError(
            f"mu({n}, {m}) has nonzero cyclotomic coordinates: {value.coeffs}"
        )
    return value.rational_part()


def h1(n: int, m: int) -> Fraction:
    """Localized first cohomology dimension; a nonnegative integer in fact."""
    return mu(n, m) - chi_orb(n, m) - hsum(n, m)


def h1_omega(n: int) -> Fraction:
    """Cubic growth rate of h1(n, m), in closed form."""
    if n < 1:
        raise ValueError("need n >= 1")
    basel = sum((Fraction(1, k * k) for k in range(1, n + 1)), Fraction(0))
    poly = Fraction(
        n**5 + 19 * n**4 + 83 * n**3 + 137 * n**2 + 80 * n,
        6 * (n + 1) ** 2 * (n + 2) ** 2,
    )
    return poly - Fraction(4, 3) * basel


def h1_omega_float(n: int) -> float:
    basel = 0.0
    for k in range(n, 0, -1):
        basel += 1.0 / (k * k)
    poly = (n**5 + 19 * n**4 + 83 * n**3 + 137 * n**2 + 80 * n) / (
        6 * (n + 1) ** 2 * (n + 2) ** 2
    )
    return poly - (4.0 / 3.0) * basel


def h1_omega_limit_report(n_max: int, threshold: Fraction | int = 10) -> dict:
    """Strict growth of h1_omega up to n_max, plus the linear leading behavior.

    The closed formula grows like n/6, so h1_omega eventually exceeds any
    threshold; the report records where the given one is first passed and
    samples 6*h1_omega(n)/n at large n in float.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    increasing = True
    first_exceeds = None
    basel = Fraction(0)
    previous = None
    for n in range(1, n_max + 1):
        basel += Fraction(1, n * n)
        value = Fraction(
            n**5 + 19 * n**4 + 83 * n**3 + 137 * n**2 + 80 * n,
            6 * (n + 1) ** 2 * (n + 2) ** 2,
        ) - Fraction(4, 3) * basel
        if previous is not None and not value > previous:
            increasing = False
        if first_exceeds is None and value > threshold:
            first_exceeds = n
        previous = value
    ratio_samples = [
        {"n": n, "ratio": 6 * h1_omega_float(n) / n} for n in (1000, 10000)
    ]
    return {
        "n_max": n_max,
        "strictly_increasing": increasing,
        "threshold": Fraction(threshold),
        "first_n_exceeding_threshold": first_exceeds,
        "leading_ratio_samples": ratio_samples,
    }


def invariant_record(n: int, m: int) -> dict:
    """The standard JSON-able record for one (n, m)."""
    return {
        "n": n,
        "m": m,
        "mu": mu(n, m),
        "chi_orb": chi_orb(n, m),
        "hsum": hsum(n, m),
        "h1": h1(n, m),
    }
