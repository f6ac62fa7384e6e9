"""Integer Laurent polynomials and exact evaluation at roots of unity."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import NotDivisible, NotRational


class LaurentPolynomial:
    """sum_k coeffs[k] z^(offset + k), stored densely and trimmed.

    The zero polynomial has ``offset == 0`` and no coefficients.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int, coeffs: Iterable[int]) -> None:
        cs = list(coeffs)
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.offset, self.coeffs = 0, ()
        else:
            self.offset, self.coeffs = offset + lo, tuple(cs[lo:hi])

    # construction helpers

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(0, ())

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentPolynomial":
        return cls(exp, (c,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "LaurentPolynomial":
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] += c
        return cls(lo, cs)

    @classmethod
    def one_minus(cls, k: int, sign: int = -1) -> "LaurentPolynomial":
        """1 - z^k (or 1 + z^k with ``sign=1``), k >= 1."""
        cs = [0] * (k + 1)
        cs[0] = 1
        cs[k] += sign
        return cls(0, cs)

    # queries

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return self.offset

    @property
    def high(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def terms(self) -> Dict[int, int]:
        return {self.offset + k: c for k, c in enumerate(self.coeffs) if c}

    def coefficient(self, exp: int) -> int:
        k = exp - self.offset
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_palindromic(self) -> bool:
        """p(z) == p(1/z)."""
        return self.is_zero() or (self.low == -self.high and self.coeffs == self.coeffs[::-1])

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    # arithmetic

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.offset, [-c for c in self.coeffs])

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        cs = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            cs[self.offset - lo + k] += c
        for k, c in enumerate(other.coeffs):
            cs[other.offset - lo + k] += c
        return LaurentPolynomial(lo, cs)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.offset, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return LaurentPolynomial.zero()
        a, b = self.coeffs, other.coeffs
        # sparse outer loop: factors here are mostly binomials
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPolynomial(self.offset + other.offset, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return LaurentPolynomial(self.offset + k, self.coeffs)

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """p(z^k) for k >= 1."""
        return LaurentPolynomial.from_terms({e * k: c for e, c in self.terms().items()})

    def reflected(self) -> "LaurentPolynomial":
        """p(1/z)."""
        return LaurentPolynomial(-self.high, self.coeffs[::-1]) if self.coeffs else self

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.render()})"

    def render(self) -> str:
        """Ascending text form, e.g. ``1*z^-2 + 1*z^0 + 1*z^2``."""
        if self.is_zero():
            return "0"
        parts = [f"{c}*z^{e}" for e, c in sorted(self.terms().items())]
        return " + ".join(parts).replace("+ -", "- ")


def mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def product(factors: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(1)
    for f in factors:
        out = out * f
    return out


def exact_div(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient num/den, raising NotDivisible unless it is an exact Laurent polynomial."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return num
    d = den.coeffs
    lead = d[-1]
    rem = list(num.coeffs)
    nq = len(rem) - len(d) + 1
    if nq <= 0:
        raise NotDivisible("numerator has smaller span than denominator")
    q = [0] * nq
    ld = len(d)
    for k in range(nq - 1, -1, -1):
        c = rem[k + ld - 1]
        if c == 0:
            continue
        if c % lead:
            raise NotDivisible("non-integral quotient coefficient")
        t = c // lead
        q[k] = t
        for j, dj in enumerate(d):
            if dj:
                rem[k + j] -= t * dj
    if any(rem):
        raise NotDivisible("nonzero remainder")
    return LaurentPolynomial(num.offset - den.offset, q)


# -- cyclotomic integers ------------------------------------------------------

def _poly_divmod_monic(a: List[int], b: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Ascending-coefficient division by a monic polynomial."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return q, a[:db]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, r = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            assert not any(r)
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicInteger:
    """Element of Z[x]/Phi_n(x), i.e. of Z[zeta_n], in the power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int]) -> None:
        phi = cyclotomic_polynomial(order)
        _, r = _poly_divmod_monic(list(coeffs), phi)
        deg = len(phi) - 1
        r = list(r) + [0] * (deg - len(r))
        self.order = order
        self.coeffs: Tuple[int, ...] = tuple(r[:deg])

    def _check(self, other: "CyclotomicInteger") -> None:
        if self.order != other.order:
            raise ValueError("cyclotomic orders differ")

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check(other)
        return CyclotomicInteger(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check(other)
        out = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CyclotomicInteger(self.order, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInteger({self.order}, {list(self.coeffs)})"

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])


def root_of_unity(n: int, k: int = 1) -> CyclotomicInteger:
    """zeta_n^k."""
    cs = [0] * n
    cs[k % n] = 1
    return CyclotomicInteger(n, cs)


def eval_at_root(p: LaurentPolynomial, n: int) -> CyclotomicInteger:
    """p(zeta_n) with zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = [0] * n
    for k, c in enumerate(p.coeffs):
        if c:
            acc[(p.offset + k) % n] += c
    return CyclotomicInteger(n, acc)


def as_integer(c: CyclotomicInteger) -> int:
    if not c.is_rational():
        raise NotRational(f"{c!r} is not a rational integer")
    return c.coeffs[0] if c.coeffs else 0
