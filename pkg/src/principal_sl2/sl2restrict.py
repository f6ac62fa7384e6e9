"""Characters restricted to the principal SL2.

The restriction of the irreducible representation of highest weight lam to
the diagonal torus of the principal SL2 is

    z^(-<lam, 2 rho^v>) prod_{a>0} (1 - z^(2<lam+rho, a^v>)) / (1 - z^(2<rho, a^v>))

which is computed here with exact integer Laurent arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import NotACharacter, NotDominant
from .laurent import LaurentPolynomial, exact_div, product
from .rootdata import RootDatum, Weight


def _check_dominant(lam: Weight, datum: RootDatum) -> None:
    if len(lam.coords) != datum.rank:
        raise ValueError(f"weight has {len(lam.coords)} coordinates, rank is {datum.rank}")
    if not lam.is_dominant():
        raise NotDominant(f"{lam.coords} is not dominant")


def _binomial_ratio(num_exps: Iterable[int], den_exps: Iterable[int], shift: int) -> LaurentPolynomial:
    """z^shift * prod(1 - z^a) / prod(1 - z^b), cancelling equal factors first."""
    num = Counter(num_exps)
    den = Counter(den_exps)
    common = num & den
    num -= common
    den -= common
    top = product(LaurentPolynomial.one_minus(a) for a in sorted(num.elements()))
    bottom = product(LaurentPolynomial.one_minus(b) for b in sorted(den.elements()))
    return exact_div(top, bottom).shift(shift)


def principal_character(datum: RootDatum, lam: Weight) -> LaurentPolynomial:
    """Theta_lam(z) as an integer Laurent polynomial."""
    _check_dominant(lam, datum)
    shifted = tuple(c + 1 for c in lam.coords)
    a = datum.pairings(shifted)
    b = datum.coheights
    shift = sum(a) - sum(b)  # <lam, 2 rho^v>
    theta = _binomial_ratio((2 * x for x in a), (2 * x for x in b), -shift)
    assert theta.is_palindromic(), "principal character must be palindromic"
    return theta


def dimension(datum: RootDatum, lam: Weight) -> int:
    """Weyl dimension formula."""
    _check_dominant(lam, datum)
    shifted = tuple(c + 1 for c in lam.coords)
    num = 1
    den = 1
    for x, y in zip(datum.pairings(shifted), datum.coheights):
        num *= x
        den *= y
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class Sl2Decomposition:
    """Multiplicities of SL2 irreducibles, keyed by their dimension."""

    multiplicities: Dict[int, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(d * k for d, k in self.multiplicities.items())

    @property
    def string_count(self) -> int:
        return sum(self.multiplicities.values())

    def to_laurent(self) -> LaurentPolynomial:
        out = LaurentPolynomial.zero()
        for d, k in self.multiplicities.items():
            out = out + sl2_string(d) * k
        return out


def sl2_string(dim: int) -> LaurentPolynomial:
    """Character z^-(d-1) + z^-(d-3) + ... + z^(d-1) of the d-dimensional irreducible."""
    top = dim - 1
    return LaurentPolynomial.from_terms({e: 1 for e in range(-top, top + 1, 2)})


def decompose_sl2(p: LaurentPolynomial) -> Sl2Decomposition:
    """Peel SL2 strings off from the top exponent down."""
    if not p.is_palindromic():
        raise NotACharacter("not palindromic")
    terms = p.terms()
    mult: Dict[int, int] = {}
    # the string of highest exponent e only touches e, e-2, ..., -e
    for e in sorted((e for e in terms if e >= 0), reverse=True):
        c = terms.get(e, 0)
        if c < 0:
            raise NotACharacter(f"negative residual coefficient at z^{e}")
        if c == 0:
            continue
        mult[e + 1] = c
        for f in range(-e, e + 1, 2):
            terms[f] = terms.get(f, 0) - c
    if any(terms.values()):
        raise NotACharacter("residual after peeling")
    return Sl2Decomposition(dict(sorted(mult.items())))


def highest_root_weight(datum: RootDatum) -> Weight:
    return Weight(datum.root_to_weight(datum.highest_root))


# Closed forms of the adjoint restriction: (shift, numerator factors, denominator factors)
# where a positive factor k stands for (1 - z^k) and a negative one for (1 + z^|k|).
def _adjoint_row(family: str, n: int) -> Tuple[int, List[int], List[int]]:
    if family == "A":
        return -2 * n, [2 * n, 2 * n + 4], [2, 2]
    if family in "BC":
        return -(4 * n - 2), [4 * n, 4 * n + 2], [2, 4]
    if family == "D":
        return -(4 * n - 6), [2 * n, -(2 * n - 4), 4 * n - 2], [2, 4]
    return {
        ("E", 6): (-22, [16, 18, 26], [2, 6, 8]),
        ("E", 7): (-34, [24, 28, 38], [2, 8, 12]),
        ("E", 8): (-58, [40, 48, 62], [2, 12, 20]),
        ("F", 4): (-22, [16, 24, 26], [2, 8, 12]),
        ("G", 2): (-10, [14, 16], [2, 8]),
    }[(family, n)]


def _factor(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.one_minus(k) if k > 0 else LaurentPolynomial.one_minus(-k, sign=1)


def adjoint_factorized(datum: RootDatum) -> LaurentPolynomial:
    """The adjoint restriction from its closed-form product."""
    ct = datum.cartan_type
    shift, top, bottom = _adjoint_row(ct.family, ct.rank)
    num = product(_factor(k) for k in top)
    den = product(_factor(k) for k in bottom)
    return exact_div(num, den).shift(shift)


def restriction_fingerprint(datum: RootDatum, lam: Weight) -> bytes:
    """Canonical byte encoding of Theta_lam, for collision detection."""
    theta = principal_character(datum, lam)
    body = ",".join(str(c) for c in theta.coeffs)
    return f"{theta.offset}:{body}".encode("ascii")
