"""Naive reference evaluators for tests.

Nothing in the library imports this module.  It uses only the Cartan matrix
and the coroot list of a datum, and recomputes everything else the slow way.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Sequence, Tuple

from .errors import WeylGroupTooLarge
from .laurent import LaurentPolynomial, exact_div
from .rootdata import RootDatum, Weight

WEYL_CAP = 100_000


def _two_rho_check(datum: RootDatum) -> List[int]:
    """Coefficients c with <x, 2 rho^v> = sum x_i c_i, from A c = (2, ..., 2)."""
    A = [[Fraction(x) for x in row] for row in datum.cartan_matrix]
    n = len(A)
    aug = [A[i] + [Fraction(2)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = [aug[i][n] / aug[i][i] for i in range(n)]
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def _alternating_sums(datum: RootDatum, lam: Weight) -> Tuple[Dict[int, int], Dict[int, int]]:
    A = datum.cartan_matrix
    n = len(A)
    c = _two_rho_check(datum)
    rho = tuple([1] * n)
    shifted = tuple(x + 1 for x in lam.coords)
    # W acts simply transitively on the orbit of rho; BFS depth is the length
    seen = {rho: (shifted, 1)}
    frontier = [rho]
    while frontier:
        nxt = []
        for r in frontier:
            v, sign = seen[r]
            for i in range(n):
                r2 = tuple(r[j] - r[i] * A[i][j] for j in range(n))
                if r2 not in seen:
                    v2 = tuple(v[j] - v[i] * A[i][j] for j in range(n))
                    seen[r2] = (v2, -sign)
                    nxt.append(r2)
                    if len(seen) > WEYL_CAP:
                        raise WeylGroupTooLarge(f"|W| exceeds {WEYL_CAP}")
        frontier = nxt
    num: Dict[int, int] = {}
    den: Dict[int, int] = {}
    for r, (v, sign) in seen.items():
        e_num = sum(a * b for a, b in zip(v, c))
        e_den = sum(a * b for a, b in zip(r, c))
        num[e_num] = num.get(e_num, 0) + sign
        den[e_den] = den.get(e_den, 0) + sign
    return num, den


def weyl_sum_character(datum: RootDatum, lam: Weight) -> LaurentPolynomial:
    """Principal restriction as a quotient of two alternating sums over W."""
    num, den = _alternating_sums(datum, lam)
    return exact_div(LaurentPolynomial.from_terms(num), LaurentPolynomial.from_terms(den))


def _vanishing(coroots: Sequence[Sequence[int]], x: Sequence[int], m: int) -> int:
    return sum(1 for a in coroots if sum(p * q for p, q in zip(a, x)) % m == 0)


def exhaustive_min_centralizer(datum: RootDatum, m: int) -> int:
    """Smallest dual-side centralizer dimension over all elements of order dividing m.

    Every such torus element is x/m for an integral weight x, and only x mod m
    matters, so the box 1 <= x_i <= m covers all of them.
    """
    if m < 1:
        raise ValueError("m must be positive")
    n = datum.rank
    coroots = datum.positive_coroots
    # <x, a^v> for a^v = sum c_i alpha_i^v is sum c_i x_i
    best = None
    for x in cartesian(range(1, m + 1), repeat=n):
        dim = n + 2 * _vanishing(coroots, x, m)
        if best is None or dim < best:
            best = dim
    return best
