"""Root data of the simple types, Weyl group actions and orbit machinery.

Conventions (Bourbaki numbering throughout):

* roots are integer vectors in simple-root coordinates,
* coroots are integer vectors in simple-coroot coordinates,
* weights are integer vectors in fundamental-weight coordinates, so that
  the pairing of a weight with the simple coroot j is its j-th coordinate.

``cartan_matrix[i][j]`` is the pairing of the simple root i with the simple
coroot j.  Row i is therefore the simple root i written in the
fundamental-weight basis.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidType, NotClosed, WeylGroupTooLarge

Vector = Tuple[int, ...]

DEFAULT_ORBIT_CAP = 3_000_000

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise InvalidType(f"rank must be an integer, got {rank!r}")
        if fam in _MIN_RANK:
            if rank < _MIN_RANK[fam]:
                raise InvalidType(f"type {fam} needs rank >= {_MIN_RANK[fam]}, got {rank}")
        elif fam in _EXCEPTIONAL_RANKS:
            if rank not in _EXCEPTIONAL_RANKS[fam]:
                raise InvalidType(f"no simple type {fam}{rank}")
        else:
            raise InvalidType(f"unknown family {fam!r}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def weyl_order(self) -> int:
        n = self.rank
        fam = self.family
        if fam == "A":
            return math.factorial(n + 1)
        if fam in "BC":
            return 2**n * math.factorial(n)
        if fam == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 2): 12}[(fam, n)]


def _gram(ct: CartanType) -> List[List[int]]:
    """Symmetric Gram matrix of the simple roots, short roots of length^2 2."""
    n, fam = ct.rank, ct.family
    g = [[0] * n for _ in range(n)]

    def edge(i: int, j: int, val: int) -> None:
        g[i - 1][j - 1] = g[j - 1][i - 1] = val

    if fam == "A":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -1)
    elif fam == "B":
        for i in range(1, n):
            g[i - 1][i - 1] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -2)
    elif fam == "C":
        for i in range(1, n):
            g[i - 1][i - 1] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 1, n, -2)
    elif fam == "D":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 2, n, -1)
    elif fam == "E":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        edge(1, 3, -1)
        edge(2, 4, -1)
        for i in range(3, n):
            edge(i, i + 1, -1)
    elif fam == "F":
        for i, d in enumerate((4, 4, 2, 2)):
            g[i][i] = d
        edge(1, 2, -2)
        edge(2, 3, -2)
        edge(3, 4, -1)
    else:  # G2, alpha_1 short
        g[0][0], g[1][1] = 2, 6
        edge(1, 2, -3)
    return g


def _omega_generators(ct: CartanType) -> Tuple[Vector, ...]:
    """Permutations of the extended-diagram vertices 0..l generating Omega.

    ``p[i]`` is the image of vertex i.
    """
    n, fam = ct.rank, ct.family
    ident = list(range(n + 1))
    if fam == "A":
        return (tuple((i + 1) % (n + 1) for i in range(n + 1)),)
    if fam == "B":
        p = ident[:]
        p[0], p[1] = 1, 0
        return (tuple(p),)
    if fam == "C":
        return (tuple(n - i for i in range(n + 1)),)
    if fam == "D":
        tau = ident[:]
        tau[0], tau[1], tau[n - 1], tau[n] = 1, 0, n, n - 1
        flip = ident[:]
        for i in range(2, n - 1):
            flip[i] = n - i
        if n % 2 == 0:
            flip[0], flip[n], flip[1], flip[n - 1] = n, 0, n - 1, 1
            return (tuple(tau), tuple(flip))
        # n odd: Omega is cyclic of order 4, generated by a rotation whose
        # square is tau
        flip[0], flip[n - 1], flip[1], flip[n] = n - 1, 1, n, 0
        return (tuple(flip),)
    if (fam, n) == ("E", 6):
        p = ident[:]
        for a, b in ((0, 1), (1, 6), (6, 0), (2, 3), (3, 5), (5, 2)):
            p[a] = b
        return (tuple(p),)
    if (fam, n) == ("E", 7):
        p = ident[:]
        for a, b in ((0, 7), (1, 6), (3, 5)):
            p[a], p[b] = b, a
        return (tuple(p),)
    return ()


_DUAL_FAMILY = {"B": "C", "C": "B"}


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: int) -> "Weight":
        return cls(tuple(coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __len__(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def pair_simple(self, j: int) -> int:
        return self.coords[j]


@dataclass(frozen=True)
class WeylElement:
    """w = s_{word[0]} s_{word[1]} ... ; applied right to left."""

    word: Tuple[int, ...] = ()

    @property
    def det(self) -> int:
        return -1 if len(self.word) % 2 else 1

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word)

    def apply(self, datum: "RootDatum", w: Weight) -> Weight:
        return Weight(datum.apply_word(self.word, w.coords))


@dataclass(frozen=True, order=True)
class DynkinType:
    """Multiset of simple components, each a (family, rank) pair."""

    components: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def from_components(cls, comps: Iterable[Tuple[str, int]]) -> "DynkinType":
        return cls(tuple(sorted(comps, key=lambda c: (-c[1], c[0]))))

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Read strings like ``2A2+A1`` or ``A1+C3``; ``none`` is the empty type."""
        text = text.replace(" ", "")
        if text in ("", "none", "0"):
            return cls(())
        comps: List[Tuple[str, int]] = []
        for part in text.split("+"):
            m = re.fullmatch(r"(\d*)([A-G])_?(\d+)", part)
            if not m:
                raise ValueError(f"bad Dynkin component {part!r}")
            mult = int(m.group(1) or 1)
            comps.extend([(m.group(2), int(m.group(3)))] * mult)
        return cls.from_components(comps)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def root_count(self) -> int:
        """Number of roots (both signs)."""
        return sum(_positive_root_count(f, r) for f, r in self.components) * 2

    def __str__(self) -> str:
        if not self.components:
            return "none"
        out, seen = [], []
        for c in self.components:
            if c not in seen:
                seen.append(c)
        for c in seen:
            k = self.components.count(c)
            out.append(f"{k if k > 1 else ''}{c[0]}{c[1]}")
        return "+".join(out)


def _positive_root_count(fam: str, r: int) -> int:
    if fam == "A":
        return r * (r + 1) // 2
    if fam in "BC":
        return r * r
    if fam == "D":
        return r * (r - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(fam, r)]


@dataclass(frozen=True)
class SubsystemDescriptor:
    """A root subsystem given by a set of positive-root indices of a datum."""

    indices: Tuple[int, ...]
    simple: Tuple[int, ...]
    two_rho: Vector  # sum of the selected positive roots, simple-root coordinates
    dynkin: DynkinType

    @property
    def size(self) -> int:
        return len(self.indices)


class RootDatum:
    """Root datum of a simple type; immutable after construction."""

    def __init__(self, cartan_type: CartanType, gram: Sequence[Sequence[int]],
                 positive_roots: Sequence[Vector], positive_coroots: Sequence[Vector],
                 omega_generators: Tuple[Vector, ...], is_dual: bool = False) -> None:
        self.cartan_type = cartan_type
        self.rank = len(gram)
        self.gram: Tuple[Vector, ...] = tuple(tuple(r) for r in gram)
        n = self.rank
        self.cartan_matrix: Tuple[Vector, ...] = tuple(
            tuple(2 * self.gram[i][j] // self.gram[j][j] for j in range(n)) for i in range(n))
        self.positive_roots: Tuple[Vector, ...] = tuple(tuple(r) for r in positive_roots)
        self.positive_coroots: Tuple[Vector, ...] = tuple(tuple(r) for r in positive_coroots)
        self.heights: Tuple[int, ...] = tuple(sum(r) for r in self.positive_roots)
        self.coheights: Tuple[int, ...] = tuple(sum(r) for r in self.positive_coroots)
        top = max(range(len(self.heights)), key=self.heights.__getitem__)
        self.highest_root_index = top
        self.marks: Vector = (1,) + self.positive_roots[top]
        self.coxeter_number = self.heights[top] + 1
        self.omega_generators = omega_generators
        self.is_dual = is_dual
        self._root_index: Dict[Vector, int] = {r: k for k, r in enumerate(self.positive_roots)}

    def __repr__(self) -> str:
        tag = "dual " if self.is_dual else ""
        return f"<RootDatum {tag}{self.cartan_type}>"

    # -- basic data -------------------------------------------------------

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    @property
    def weyl_order(self) -> int:
        return self.cartan_type.weyl_order

    @cached_property
    def two_rho_dual(self) -> Vector:
        """Sum of the positive coroots in simple-coroot coordinates."""
        return tuple(sum(c[j] for c in self.positive_coroots) for j in range(self.rank))

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[self.highest_root_index]

    def root_index(self, vec: Sequence[int]) -> Optional[int]:
        return self._root_index.get(tuple(vec))

    def norm2(self, root: Sequence[int]) -> int:
        g = self.gram
        n = self.rank
        return sum(root[i] * g[i][j] * root[j] for i in range(n) for j in range(n))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        n = self.rank
        return sum(a[i] * g[i][j] * b[j] for i in range(n) for j in range(n))

    # -- pairings and actions --------------------------------------------

    def pairing(self, w: Weight | Sequence[int], k: int) -> int:
        """<w, alpha_k^vee> for the k-th positive coroot."""
        coords = w.coords if isinstance(w, Weight) else w
        return sum(a * b for a, b in zip(coords, self.positive_coroots[k]))

    def pairings(self, coords: Sequence[int]) -> List[int]:
        return [sum(a * b for a, b in zip(coords, c)) for c in self.positive_coroots]

    def root_to_weight(self, root: Sequence[int]) -> Vector:
        A, n = self.cartan_matrix, self.rank
        return tuple(sum(root[i] * A[i][j] for i in range(n)) for j in range(n))

    def weight_to_root(self, coords: Sequence[int]) -> Tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        return _solve_left(self.cartan_matrix, coords)

    @cached_property
    def _scaled_inverse(self) -> Tuple[int, Tuple[Vector, ...]]:
        """(D, B) with B = D * A^-1 integral, so root coordinates are coords . B / D."""
        rows = [_solve_left(self.cartan_matrix, e) for e in
                (tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank))]
        D = math.lcm(*(x.denominator for r in rows for x in r))
        return D, tuple(tuple(int(x * D) for x in r) for r in rows)

    def in_root_lattice(self, coords: Sequence[int], scale: int = 1) -> bool:
        """True iff the weight lies in scale times the root lattice."""
        D, B = self._scaled_inverse
        n = self.rank
        return all(sum(coords[i] * B[i][j] for i in range(n)) % (D * scale) == 0 for j in range(n))

    def root_pair_coroot(self, root: Sequence[int], k: int) -> int:
        """<beta, alpha_k^vee> for beta in simple-root coordinates."""
        return self.pairing(self.root_to_weight(root), k)

    def reflect(self, coords: Sequence[int], i: int) -> Vector:
        c = coords[i]
        if c == 0:
            return tuple(coords)
        row = self.cartan_matrix[i]
        return tuple(x - c * a for x, a in zip(coords, row))

    def apply_word(self, word: Sequence[int], coords: Sequence[int]) -> Vector:
        out = tuple(coords)
        for i in reversed(word):
            out = self.reflect(out, i)
        return out

    def reflect_root(self, root: Sequence[int], i: int) -> Vector:
        A, n = self.cartan_matrix, self.rank
        c = sum(root[j] * A[j][i] for j in range(n))
        out = list(root)
        out[i] -= c
        return tuple(out)

    def apply_word_to_root(self, word: Sequence[int], root: Sequence[int]) -> Vector:
        out = tuple(root)
        for i in reversed(word):
            out = self.reflect_root(out, i)
        return out

    def signed_root_index(self, root: Sequence[int]) -> Tuple[int, int]:
        """(index, sign) of a root given in simple-root coordinates."""
        k = self._root_index.get(tuple(root))
        if k is not None:
            return k, 1
        k = self._root_index.get(tuple(-x for x in root))
        if k is None:
            raise ValueError(f"{tuple(root)} is not a root")
        return k, -1

    def word_from_image_of_rho(self, image: Sequence[int]) -> WeylElement:
        """The element w with w(rho) = image, as a reduced word."""
        word: List[int] = []
        cur = tuple(image)
        while True:
            for i, c in enumerate(cur):
                if c < 0:
                    cur = self.reflect(cur, i)
                    word.append(i)
                    break
            else:
                break
        if cur != (1,) * self.rank:
            raise ValueError(f"{tuple(image)} is not in the orbit of rho")
        return WeylElement(tuple(word))

    # -- extended diagram ------------------------------------------------

    @cached_property
    def extended_vectors(self) -> Tuple[Vector, ...]:
        """alpha_0 = -theta followed by the simple roots, simple-root coordinates."""
        n = self.rank
        simple = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        return (tuple(-x for x in self.highest_root),) + simple

    @cached_property
    def extended_cartan(self) -> Tuple[Vector, ...]:
        vs = self.extended_vectors
        return tuple(tuple(2 * self.inner(a, b) // self.norm2(b) for b in vs) for a in vs)

    # -- duality ---------------------------------------------------------

    def dual(self) -> "RootDatum":
        """Datum with roots and coroots exchanged, index-wise."""
        n = self.rank
        d = [self.gram[i][i] for i in range(n)]
        frac = [[Fraction(4 * self.gram[i][j], d[i] * d[j]) for j in range(n)] for i in range(n)]
        # rescale so that short roots of the dual have length^2 2 again
        scale = 2 / min(frac[i][i] for i in range(n))
        g = [[int(x * scale) for x in row] for row in frac]
        fam = _DUAL_FAMILY.get(self.cartan_type.family, self.cartan_type.family)
        ct = CartanType(fam, n)
        gens = _omega_generators(ct) if fam in "ABCDE" else ()
        return RootDatum(ct, g, self.positive_coroots, self.positive_roots, gens,
                         is_dual=not self.is_dual)


def _solve_left(A: Sequence[Sequence[int]], b: Sequence[int]) -> Tuple[Fraction, ...]:
    """Solve x A = b exactly (x a row vector)."""
    n = len(A)
    # transpose so that A^T x^T = b^T
    M = [[Fraction(A[j][i]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(M[i][n] for i in range(n))


def _generate_positive_roots(cartan: Sequence[Sequence[int]]) -> List[Vector]:
    """Positive roots by root strings, in order of increasing height."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: List[Vector] = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt: List[Vector] = []
        for beta in layer:
            for i in range(n):
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                # p = how far beta - k alpha_i stays a root (or zero at beta = alpha_i)
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda r: tuple(-x for x in r))
        roots.extend(nxt)
        layer = nxt
    return roots


@lru_cache(maxsize=None)
def build(ct: CartanType | str) -> RootDatum:
    """Root datum of a simple type."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    g = _gram(ct)
    n = ct.rank
    cartan = [[2 * g[i][j] // g[j][j] for j in range(n)] for i in range(n)]
    roots = _generate_positive_roots(cartan)
    coroots = []
    for r in roots:
        nr = sum(r[i] * g[i][j] * r[j] for i in range(n) for j in range(n))
        cv = []
        for i in range(n):
            num = r[i] * g[i][i]
            if num % nr:
                raise AssertionError("non-integral coroot coefficient")
            cv.append(num // nr)
        coroots.append(tuple(cv))
    return RootDatum(ct, g, roots, coroots, _omega_generators(ct))


def dual(datum: RootDatum) -> RootDatum:
    return datum.dual()


def pairing(datum: RootDatum, w: Weight, coroot_index: int) -> int:
    return datum.pairing(w, coroot_index)


def reflect(datum: RootDatum, w: Weight, i: int) -> Weight:
    return Weight(datum.reflect(w.coords, i))


def apply(datum: RootDatum, elem: WeylElement, w: Weight) -> Weight:
    return elem.apply(datum, w)


# -- orbits -----------------------------------------------------------------

def _check_cap(datum: RootDatum, cap: int) -> None:
    if datum.weyl_order > cap:
        raise WeylGroupTooLarge(
            f"|W({datum.cartan_type})| = {datum.weyl_order} exceeds the orbit cap {cap}")


def _reduce(coords: Iterable[int], m: int) -> Vector:
    return tuple(c % m for c in coords)


def _orbit_mod_parents(datum: RootDatum, start: Vector, m: int,
                       target: Optional[Vector] = None) -> Tuple[Dict[Vector, Tuple[Optional[Vector], int]], bool]:
    """BFS over the orbit of ``start`` mod m; stops early once ``target`` is reached."""
    A, n = datum.cartan_matrix, datum.rank
    start = _reduce(start, m)
    parent: Dict[Vector, Tuple[Optional[Vector], int]] = {start: (None, -1)}
    if target is not None and start == target:
        return parent, True
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(n):
            c = x[i]
            if c == 0:
                continue
            row = A[i]
            y = tuple((a - c * b) % m for a, b in zip(x, row))
            if y not in parent:
                parent[y] = (x, i)
                if target is not None and y == target:
                    return parent, True
                queue.append(y)
    return parent, False


def _word_to(parent: Dict[Vector, Tuple[Optional[Vector], int]], x: Vector) -> WeylElement:
    word: List[int] = []
    while True:
        prev, i = parent[x]
        if prev is None:
            break
        word.append(i)
        x = prev
    # the last step taken is the leftmost letter
    return WeylElement(tuple(word))


def weyl_orbit_mod(datum: RootDatum, w: Weight, m: int,
                   cap: int = DEFAULT_ORBIT_CAP) -> Dict[Vector, WeylElement]:
    """Orbit of w mod m under W, each point with one witness element."""
    if m < 1:
        raise ValueError("m must be positive")
    _check_cap(datum, cap)
    parent, _ = _orbit_mod_parents(datum, tuple(w.coords), m)
    return {x: _word_to(parent, x) for x in parent}


def find_in_orbit_mod(datum: RootDatum, w: Weight, m: int, target: Sequence[int],
                      cap: int = DEFAULT_ORBIT_CAP) -> Optional[WeylElement]:
    """Some u in W with u(w) = target mod m, or None."""
    _check_cap(datum, cap)
    tgt = _reduce(target, m)
    parent, found = _orbit_mod_parents(datum, tuple(w.coords), m, tgt)
    return _word_to(parent, tgt) if found else None


def weyl_orbit(datum: RootDatum, w: Weight, cap: int = DEFAULT_ORBIT_CAP) -> Dict[Vector, WeylElement]:
    """Exact orbit of a weight with witnesses."""
    _check_cap(datum, cap)
    n = datum.rank
    start = tuple(w.coords)
    parent: Dict[Vector, Tuple[Optional[Vector], int]] = {start: (None, -1)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(n):
            if x[i] == 0:
                continue
            y = datum.reflect(x, i)
            if y not in parent:
                parent[y] = (x, i)
                queue.append(y)
    return {x: _word_to(parent, x) for x in parent}


def weyl_group_elements(datum: RootDatum, cap: int = 100_000) -> List[WeylElement]:
    """All of W as reduced words, via the regular orbit of rho."""
    _check_cap(datum, cap)
    orbit = weyl_orbit(datum, datum.rho, cap)
    return [datum.word_from_image_of_rho(x) for x in orbit]


# -- subsystems ---------------------------------------------------------------

def dynkin_type_of(datum: RootDatum, vectors: Sequence[Sequence[int]]) -> DynkinType:
    """Dynkin type of the root system with the given simple roots (simple-root coordinates)."""
    k = len(vectors)
    if k == 0:
        return DynkinType(())
    ip = [[datum.inner(a, b) for b in vectors] for a in vectors]
    norms = [ip[i][i] for i in range(k)]
    # bond multiplicity = <a,b^v><b,a^v>
    bond = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and ip[i][j] != 0:
                bond[i][j] = (4 * ip[i][j] * ip[i][j]) // (norms[i] * norms[j])
    seen = [False] * k
    comps: List[Tuple[str, int]] = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(k):
                if bond[v][u] and not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(_classify_component(comp, bond, norms))
    return DynkinType.from_components(comps)


def _classify_component(comp: List[int], bond: List[List[int]], norms: List[int]) -> Tuple[str, int]:
    r = len(comp)
    if r == 1:
        return ("A", 1)
    edges = [(a, b, bond[a][b]) for i, a in enumerate(comp) for b in comp[i + 1:] if bond[a][b]]
    if len(edges) != r - 1:
        raise ValueError("component is not a tree; not a finite root system")
    mults = [e[2] for e in edges]
    if 3 in mults:
        return ("G", 2)
    if 2 in mults:
        if r == 2:
            return ("B", 2)
        if r == 4:
            a, b, _ = next(e for e in edges if e[2] == 2)
            deg = {v: sum(1 for e in edges if v in e[:2]) for v in comp}
            if deg[a] == 2 and deg[b] == 2:
                return ("F", 4)
        short = min(norms[v] for v in comp)
        n_short = sum(1 for v in comp if norms[v] == short)
        return ("B", r) if n_short == 1 else ("C", r)
    deg = {v: sum(1 for e in edges if v in e[:2]) for v in comp}
    branch = [v for v in comp if deg[v] == 3]
    if not branch:
        return ("A", r)
    center = branch[0]
    arms = []
    for start in comp:
        if bond[center][start]:
            length, prev, cur = 1, center, start
            while True:
                nxt = [u for u in comp if bond[cur][u] and u != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", r)
    return ("E", r)


def subsystem(datum: RootDatum, selected: Iterable[int]) -> SubsystemDescriptor:
    """Simple roots, half-sum and Dynkin type of a closed set of positive roots."""
    idx = tuple(sorted(set(selected)))
    roots = datum.positive_roots
    chosen = set(idx)
    for a in idx:
        ra = roots[a]
        for b in idx:
            if b < a:
                continue
            s = tuple(x + y for x, y in zip(ra, roots[b]))
            k = datum.root_index(s)
            if k is not None and k not in chosen:
                raise NotClosed(f"roots {a} and {b} are selected but their sum {k} is not")
    decomposable = set()
    for ai, a in enumerate(idx):
        for b in idx[ai:]:
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            k = datum.root_index(s)
            if k is not None:
                decomposable.add(k)
    simple = tuple(i for i in idx if i not in decomposable)
    n = datum.rank
    two_rho = tuple(sum(roots[i][j] for i in idx) for j in range(n))
    dyn = dynkin_type_of(datum, [roots[i] for i in simple])
    if dyn.root_count != 2 * len(idx):
        raise NotClosed(f"selection of {len(idx)} roots does not form a root system ({dyn})")
    return SubsystemDescriptor(idx, simple, two_rho, dyn)


EXPONENTS: Dict[Tuple[str, Optional[int]], Tuple[int, ...]] = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


def exponents(ct: CartanType) -> Tuple[int, ...]:
    n = ct.rank
    if ct.family == "A":
        return tuple(range(1, n + 1))
    if ct.family in "BC":
        return tuple(range(1, 2 * n, 2))
    if ct.family == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    return EXPONENTS[(ct.family, n)]
