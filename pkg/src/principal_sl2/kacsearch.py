"""Finite-order conjugacy classes and their centralizers.

Exceptional (and general) types go through Kac coordinates on the extended
Dynkin diagram.  Classical groups go through eigenvalue multiplicity
patterns in the standard representation, which is how one actually reasons
about GL, Sp and SO.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidOrder
from .rootdata import CartanType, DynkinType, RootDatum, build, dynkin_type_of

# -- Kac coordinates ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class KacVector:
    s: Tuple[int, ...]
    m: int

    def validate(self, marks: Sequence[int]) -> None:
        if len(self.s) != len(marks):
            raise ValueError(f"expected {len(marks)} coordinates")
        if any(x < 0 for x in self.s):
            raise ValueError("Kac coordinates are nonnegative")
        if sum(a * x for a, x in zip(marks, self.s)) != self.m:
            raise ValueError(f"{self.s} does not satisfy sum a_i s_i = {self.m}")
        if math.gcd(*self.s) != 1:
            raise ValueError(f"{self.s} is not primitive")


@dataclass(frozen=True)
class CentralizerDescriptor:
    simple_indices: Tuple[int, ...]
    dynkin_type: DynkinType
    root_count: int
    dimension: int


def _datum(ct: CartanType | str) -> RootDatum:
    return build(ct if isinstance(ct, CartanType) else CartanType.parse(ct))


def enumerate_kac(ct: CartanType | str, m: int) -> List[KacVector]:
    """All primitive (s_0..s_l) >= 0 with sum a_i s_i = m, lexicographically."""
    if m < 1:
        raise ValueError("m must be positive")
    marks = _datum(ct).marks
    out: List[KacVector] = []
    cur: List[int] = []

    def rec(i: int, left: int) -> None:
        if i == len(marks):
            if left == 0 and math.gcd(*cur) == 1:
                out.append(KacVector(tuple(cur), m))
            return
        for x in range(left // marks[i] + 1):
            cur.append(x)
            rec(i + 1, left - x * marks[i])
            cur.pop()

    rec(0, m)
    return out


def centralizer_of(ct: CartanType | str, s: KacVector) -> CentralizerDescriptor:
    """Centralizer of the torsion element with Kac coordinates s."""
    datum = _datum(ct)
    s.validate(datum.marks)
    zero = tuple(i for i, x in enumerate(s.s) if x == 0)
    # roots a = sum c_i alpha_i with sum c_i s_i = 0 mod m, counted in the ambient system
    tail = s.s[1:]
    count = 2 * sum(1 for r in datum.positive_roots
                    if sum(c * x for c, x in zip(r, tail)) % s.m == 0)
    vectors = [datum.extended_vectors[i] for i in zero]
    dyn = dynkin_type_of(datum, vectors)
    if dyn.root_count != count:  # pragma: no cover - extended diagram wiring check
        raise AssertionError(f"type {dyn} has {dyn.root_count} roots, closure has {count}")
    return CentralizerDescriptor(zero, dyn, count, datum.rank + count)


def _act(perm: Sequence[int], s: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[perm[i]] = x
    return tuple(out)


@lru_cache(maxsize=None)
def omega_group(ct: CartanType) -> Tuple[Tuple[int, ...], ...]:
    """All permutations in the group generated by the Omega generators."""
    gens = _datum(ct).omega_generators
    n = ct.rank + 1
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = tuple(h[g[i]] for i in range(n))
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(group))


def omega_orbit(ct: CartanType | str, s: KacVector) -> List[KacVector]:
    ct = ct if isinstance(ct, CartanType) else CartanType.parse(ct)
    return sorted({KacVector(_act(g, s.s), s.m) for g in omega_group(ct)})


def omega_orbits(ct: CartanType | str, vectors: Sequence[KacVector]) -> List[List[KacVector]]:
    """Partition of the given vectors into Omega-orbits (orbits restricted to the input)."""
    given = set(vectors)
    seen: set = set()
    out: List[List[KacVector]] = []
    for v in sorted(given):
        if v in seen:
            continue
        orb = [u for u in omega_orbit(ct, v) if u in given]
        seen.update(orb)
        out.append(orb)
    return out


def minimal_centralizers(ct: CartanType | str, m: int) -> List[Tuple[KacVector, CentralizerDescriptor]]:
    """One representative per Omega-orbit among classes of order m with smallest centralizer."""
    vecs = enumerate_kac(ct, m)
    descs = {v: centralizer_of(ct, v) for v in vecs}
    best = min(d.root_count for d in descs.values())
    minimal = [v for v in vecs if descs[v].root_count == best]
    return [(orb[0], descs[orb[0]]) for orb in omega_orbits(ct, minimal)]


def principal_kac_vector(ct: CartanType | str, m: int) -> KacVector:
    """Kac coordinates of the class of rho^v(exp(2 pi i/m)) in the adjoint group.

    The point with all simple-root values 1/m is moved into the fundamental
    alcove by simple and affine reflections; coordinates are scaled by m.
    """
    datum = _datum(ct)
    A = datum.cartan_matrix
    n = datum.rank
    marks = datum.marks[1:]
    theta_co = datum.positive_coroots[datum.highest_root_index]
    theta_pair = [sum(theta_co[k] * A[j][k] for k in range(n)) for j in range(n)]
    t = [1] * n
    while True:
        neg = next((i for i in range(n) if t[i] < 0), None)
        if neg is not None:
            c = t[neg]
            t = [t[j] - c * A[j][neg] for j in range(n)]
            continue
        top = sum(a * x for a, x in zip(marks, t))
        if top > m:
            t = [t[j] - (top - m) * theta_pair[j] for j in range(n)]
            continue
        break
    s = (m - sum(a * x for a, x in zip(marks, t)),) + tuple(t)
    g = math.gcd(*s)
    return KacVector(tuple(x // g for x in s), m // g)


def kostant_regular_unique(ct: CartanType | str) -> bool:
    """At m = h, the all-ones vector is the only class with a torus as centralizer.

    A torus centralizer means no root vanishes, i.e. every s_i > 0 including s_0.
    """
    datum = _datum(ct)
    h = datum.coxeter_number
    regular = [v for v in enumerate_kac(ct, h) if all(x > 0 for x in v.s)]
    ok = [v.s for v in regular] == [(1,) * (datum.rank + 1)]
    if not ok:
        raise AssertionError(f"regular classes at h: {[v.s for v in regular]}")
    return True


# -- classical groups --------------------------------------------------------

FAMILIES = ("gl", "sp", "so-odd", "so-even")


def group_dimension(kind: str, k: int) -> int:
    if kind == "GL":
        return k * k
    if kind == "SO":
        return k * (k - 1) // 2
    if kind == "Sp":
        return (k // 2) * (k + 1)
    raise ValueError(kind)


def dual_factor(kind: str, k: int) -> Tuple[str, int]:
    if kind == "SO" and k % 2 == 1:
        return ("Sp", k - 1)
    if kind == "Sp":
        return ("SO", k + 1)
    return (kind, k)


def _clean(factors: Sequence[Tuple[str, int]]) -> Tuple[Tuple[str, int], ...]:
    """Drop trivial factors and sort."""
    keep = [(kd, k) for kd, k in factors
            if not (k == 0 or (kd == "SO" and k == 1))]
    return tuple(sorted(keep, key=lambda f: (f[0], -f[1])))


def render_factors(factors: Sequence[Tuple[str, int]]) -> str:
    if not factors:
        return "1"
    counts: Dict[Tuple[str, int], int] = {}
    for f in factors:
        counts[f] = counts.get(f, 0) + 1
    return " x ".join(f"{kd}{k}" + (f"^{c}" if c > 1 else "") for (kd, k), c in counts.items())


@dataclass(frozen=True)
class ClassicalClass:
    """An order-d class in a classical group via the eigenvalues of its standard representation.

    Eigenvalue exp(2 pi i k / modulus) has multiplicity ``multiplicities[k]``.
    """

    family: str
    n: int
    d: int
    modulus: int
    multiplicities: Tuple[int, ...]
    centralizer: Tuple[Tuple[str, int], ...]
    dimension: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "dimension",
                           sum(group_dimension(kd, k) for kd, k in self.centralizer))

    @property
    def ambient_dimension(self) -> int:
        return sum(self.multiplicities)


def ambient(family: str, n: int) -> int:
    return {"gl": n, "sp": 2 * n, "so-odd": 2 * n + 1, "so-even": 2 * n + 2}[family]


def coxeter_number(family: str, n: int) -> int:
    return n if family == "gl" else 2 * n


def _modulus(family: str, d: int) -> int:
    return 2 * d if family in ("sp", "so-even") else d


def _special(family: str, N: int) -> Tuple[int, ...]:
    """Self-paired residues (eigenvalues +-1) for the families with a pairing."""
    if family == "gl":
        return ()
    return (0, N // 2) if N % 2 == 0 else (0,)


def _centralizer(family: str, N: int, mult: Sequence[int]) -> Tuple[Tuple[str, int], ...]:
    if family == "gl":
        return _clean([("GL", k) for k in mult])
    special = _special(family, N)
    kind = "Sp" if family == "sp" else "SO"
    out = [(kind, mult[k]) for k in special]
    for k in range(1, (N + 1) // 2):
        if k not in special:
            out.append(("GL", mult[k]))
    return _clean(out)


def _adjoint_order(family: str, N: int, mult: Sequence[int]) -> int:
    """Order of the element modulo the centre (scalars for GL, +-1 otherwise)."""
    support = [k for k, c in enumerate(mult) if c]
    for j in range(1, N + 1):
        vals = {(k * j) % N for k in support}
        if family == "gl":
            # x^j scalar iff all eigenvalue ratios are killed
            if len(vals) == 1:
                return j
        elif family == "so-odd":
            if vals == {0}:
                return j
        else:
            if len(vals) == 1 and next(iter(vals)) in (0, N // 2):
                return j
    raise AssertionError("unreachable")


def _equivalents(family: str, N: int, mult: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Patterns describing the same class in the adjoint group."""
    if family == "gl":
        return [mult[-r:] + mult[:-r] if r else mult for r in range(N)]
    if family in ("sp", "so-even"):
        half = N // 2
        return [mult, mult[half:] + mult[:half]]
    return [mult]


def canonical_pattern(family: str, N: int, mult: Sequence[int]) -> Tuple[int, ...]:
    return min(_equivalents(family, N, tuple(mult)))


def _slots(family: str, N: int) -> List[Tuple[List[int], int, Callable[[int], int], Callable[[int], bool]]]:
    """(residues, dims per unit, cost of multiplicity, admissible multiplicity)."""
    if family == "gl":
        return [([k], 1, lambda c: c * c, lambda c: True) for k in range(N)]
    special = _special(family, N)
    out = []
    for k in special:
        if family == "sp":
            out.append(([k], 1, lambda c: group_dimension("Sp", c), lambda c: c % 2 == 0))
        elif family == "so-odd" and k == 0:
            out.append(([k], 1, lambda c: group_dimension("SO", c), lambda c: c % 2 == 1))
        else:
            out.append(([k], 1, lambda c: group_dimension("SO", c), lambda c: c % 2 == 0))
    for k in range(1, (N + 1) // 2):
        if k not in special:
            out.append(([k, N - k], 2, lambda c: c * c, lambda c: True))
    return out


def _search(family: str, N: int, total: int, parity: Optional[int]) -> Tuple[int, List[Tuple[int, ...]]]:
    """All minimal-cost admissible patterns, with residues restricted to the given parity."""
    slots = [s for s in _slots(family, N) if parity is None or s[0][0] % 2 == parity]
    L = len(slots)
    INF = float("inf")
    # suffix[i][r]: least cost of filling r dimensions using slots i..L-1
    suffix = [[INF] * (total + 1) for _ in range(L + 1)]
    suffix[L][0] = 0
    for i in range(L - 1, -1, -1):
        _, step, cost, ok = slots[i]
        for r in range(total + 1):
            best = INF
            for c in range(r // step + 1):
                if ok(c) and suffix[i + 1][r - c * step] + cost(c) < best:
                    best = suffix[i + 1][r - c * step] + cost(c)
            suffix[i][r] = best
    found: List[Tuple[int, Tuple[int, ...]]] = []
    bound = [INF]
    choice = [0] * L

    def rec(i: int, left: int, acc: int) -> None:
        if acc + suffix[i][left] > bound[0]:
            return
        if i == L:
            if left:
                return
            mult = [0] * N
            for (res, _, _, _), c in zip(slots, choice):
                for k in res:
                    mult[k] = c
            if _adjoint_order(family, N, mult) != N // (2 if family in ("sp", "so-even") else 1):
                return
            if acc < bound[0]:
                bound[0] = acc
                found.clear()
            found.append((acc, tuple(mult)))
            return
        _, step, cost, ok = slots[i]
        for c in range(left // step + 1):
            if ok(c):
                choice[i] = c
                rec(i + 1, left - c * step, acc + cost(c))
        choice[i] = 0

    rec(0, total, 0)
    return (bound[0], [p for _, p in found]) if found else (INF, [])


def _check_family(family: str, n: int, d: int) -> None:
    if family not in FAMILIES:
        raise InvalidOrder(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1 or d < 1:
        raise InvalidOrder("n and d must be positive")


def classical_minimal_centralizers(family: str, n: int, d: int) -> List[ClassicalClass]:
    """Classes of exact order d in the adjoint group with smallest centralizer.

    ``n`` indexes the group as GL_n, Sp_2n, SO_2n+1 or SO_2n+2.
    """
    _check_family(family, n, d)
    N = _modulus(family, d)
    total = ambient(family, n)
    if family in ("sp", "so-even"):
        # x^d = 1 (even residues) or x^d = -1 (odd residues)
        results = [_search(family, N, total, p) for p in (0, 1)]
    else:
        results = [_search(family, N, total, None)]
    best = min(r[0] for r in results)
    if best == float("inf"):
        raise InvalidOrder(f"no element of order {d} in the adjoint group of {family} n={n}")
    classes = sorted({canonical_pattern(family, N, p) for r in results if r[0] == best for p in r[1]})
    return [ClassicalClass(family, n, d, N, p, _centralizer(family, N, p)) for p in classes]


def principal_pattern(family: str, n: int, d: int) -> Tuple[int, ...]:
    """Eigenvalue pattern of the principal element C_d in the standard representation."""
    _check_family(family, n, d)
    N = _modulus(family, d)
    mult = [0] * N
    if family == "gl":
        for i in range(n):
            mult[i % N] += 1
    elif family == "sp":
        for k in range(1, n + 1):
            mult[(2 * k - 1) % N] += 1
            mult[-(2 * k - 1) % N] += 1
    elif family == "so-odd":
        for j in range(-n, n + 1):
            mult[j % N] += 1
    else:
        for j in range(-n, n + 1):
            mult[(2 * j) % N] += 1
        mult[0] += 1
    return tuple(mult)


_DUAL_FAMILY = {"gl": "gl", "sp": "so-odd", "so-odd": "sp", "so-even": "so-even"}


def centralizer_of_principal(family: str, n: int, d: int) -> ClassicalClass:
    """The group G(d) for a classical group G.

    G(d) is dual to the centralizer of C_d in the dual group; the returned
    multiplicities are those of C_d in the dual group's standard
    representation and ``centralizer`` lists the factors of G(d).
    """
    _check_family(family, n, d)
    if coxeter_number(family, n) % d:
        raise InvalidOrder(f"d={d} does not divide the Coxeter number {coxeter_number(family, n)}")
    dual = _DUAL_FAMILY[family]
    N = _modulus(dual, d)
    pattern = principal_pattern(dual, n, d)
    zc = _centralizer(dual, N, pattern)
    factors = _clean([dual_factor(kd, k) for kd, k in zc])
    return ClassicalClass(family, n, d, N, pattern, factors)


def principal_class(family: str, n: int, d: int) -> ClassicalClass:
    """C_d as a class of the group itself (not the dual)."""
    _check_family(family, n, d)
    N = _modulus(family, d)
    pattern = principal_pattern(family, n, d)
    return ClassicalClass(family, n, d, N, canonical_pattern(family, N, pattern),
                          _centralizer(family, N, pattern))


# -- Levi and orthogonal-pair comparisons used in the classical proofs --------

def levi_minima(kind: str, N: int) -> List[int]:
    """The k minimising dim of GL_k x H_{N-k} inside the rank-N group.

    kind 'sp': GL_k x Sp_{2(N-k)} in Sp_2N; 'so-odd': GL_k x SO_{2(N-k)+1} in
    SO_{2N+1}; 'so-even': GL_k x SO_{2(N-k)} in SO_2N.  k runs over 1..N.
    """
    def dim(k: int) -> int:
        r = N - k
        if kind == "sp":
            return k * k + group_dimension("Sp", 2 * r)
        if kind == "so-odd":
            return k * k + group_dimension("SO", 2 * r + 1)
        return k * k + group_dimension("SO", 2 * r)

    vals = {k: dim(k) for k in range(1, N + 1)}
    best = min(vals.values())
    return [k for k, v in vals.items() if v == best]


def orthogonal_pair_minima(N: int, even_second: bool = False) -> List[int]:
    """The a minimising dim SO_a x SO_{N-a} (optionally with N-a even), 0 <= a <= N."""
    vals = {a: group_dimension("SO", a) + group_dimension("SO", N - a)
            for a in range(N + 1) if not even_second or (N - a) % 2 == 0}
    best = min(vals.values())
    return [a for a, v in vals.items() if v == best]
