"""Finite integer sets with equal difference multisets.

For type A the principal restriction of lam is determined by the multiset
X - X where X lists the coordinates of lam + rho in the standard basis, so
collisions between inequivalent sets give distinct weights with equal
restrictions.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from .laurent import LaurentPolynomial
from .rootdata import Weight


@dataclass(frozen=True)
class IntegerSet:
    """Distinct integers, stored strictly decreasing."""

    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"repeated elements in {self.elements}")
        object.__setattr__(self, "elements", tuple(sorted(self.elements, reverse=True)))

    @classmethod
    def of(cls, xs: Iterable[int]) -> "IntegerSet":
        return cls(tuple(xs))

    def __len__(self) -> int:
        return len(self.elements)

    def translate(self, b: int) -> "IntegerSet":
        return IntegerSet(tuple(x + b for x in self.elements))

    def reflect(self, a: int = 0) -> "IntegerSet":
        return IntegerSet(tuple(a - x for x in self.elements))

    def canonical(self) -> "IntegerSet":
        """Representative with minimum 0, lexicographically smaller of X and max - X."""
        lo = min(self.elements)
        hi = max(self.elements)
        a = tuple(sorted(x - lo for x in self.elements))
        b = tuple(sorted(hi - x for x in self.elements))
        return IntegerSet(min(a, b))

    def generating_polynomial(self) -> LaurentPolynomial:
        """f_X(z) = sum of z^x over x in X."""
        return LaurentPolynomial.from_terms({x: 1 for x in self.elements})


def difference_multiset(X: IntegerSet) -> Counter:
    """All n^2 differences a - b, with multiplicity."""
    return Counter(a - b for a in X.elements for b in X.elements)


def difference_polynomial(X: IntegerSet) -> LaurentPolynomial:
    """f_X(z) f_X(1/z), whose coefficients are the difference multiplicities."""
    f = X.generating_polynomial()
    return f * f.reflected()


def equivalent(X: IntegerSet, Y: IntegerSet) -> bool:
    """True iff Y = X + b or Y = a - X."""
    if len(X) != len(Y):
        raise ValueError("sets of different sizes")
    return X.canonical() == Y.canonical()


def _key(elems: Tuple[int, ...]) -> Tuple[int, ...]:
    # positive differences determine the multiset (0 occurs n times, negatives mirror)
    return tuple(sorted(b - a for a, b in combinations(elems, 2)))


def search_collisions(n: int, bound: int) -> List[Tuple[IntegerSet, IntegerSet]]:
    """Inequivalent pairs of n-subsets of [0, bound] with equal difference multisets.

    Sets are taken in canonical form, so each equivalence class is visited once.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    buckets: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
    for top in range(n - 1, bound + 1):
        for mid in combinations(range(1, top), n - 2):
            elems = (0,) + mid + (top,)
            mirror = tuple(sorted(top - x for x in elems))
            if mirror < elems:
                continue
            buckets[_key(elems)].append(elems)
    out: List[Tuple[IntegerSet, IntegerSet]] = []
    for key in sorted(buckets):
        group = buckets[key]
        for a, b in combinations(sorted(group), 2):
            X, Y = IntegerSet(a), IntegerSet(b)
            assert difference_multiset(X) == difference_multiset(Y)
            assert not equivalent(X, Y)
            out.append((X, Y))
    return out


def sumset_construction(A: IntegerSet, B: IntegerSet) -> Optional[Tuple[IntegerSet, IntegerSet]]:
    """(A + B, A - B) when both are sets without repetition, else None."""
    plus = [a + b for a in A.elements for b in B.elements]
    minus = [a - b for a in A.elements for b in B.elements]
    if len(set(plus)) != len(plus) or len(set(minus)) != len(minus):
        return None
    X, Y = IntegerSet(tuple(plus)), IntegerSet(tuple(minus))
    assert difference_multiset(X) == difference_multiset(Y)
    return X, Y


def weight_from_set(X: IntegerSet) -> Weight:
    """The type A_{n-1} weight lam with lam + rho given by the decreasing entries of X."""
    xs = X.elements
    return Weight(tuple(xs[i] - xs[i + 1] - 1 for i in range(len(xs) - 1)))


def set_from_weight(lam: Weight) -> IntegerSet:
    """Inverse of weight_from_set, normalised to have minimum 0."""
    xs = [0]
    for c in reversed(lam.coords):
        xs.append(xs[-1] + c + 1)
    return IntegerSet(tuple(xs))
