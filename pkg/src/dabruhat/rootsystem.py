"""Simply-laced finite root systems and their Weyl groups.

Roots live in simple-root coordinates and weights in fundamental-weight
coordinates, both as plain ``tuple[int, ...]``.  With the simply-laced
normalisation <alpha, alpha> = 2 every pairing we need is integer matrix
arithmetic:

* root/root:    <nu, gamma> = nu^T A gamma
* weight/root:  <mu, nu>    = sum(mu_i nu_i)

where ``A`` is the (symmetric) Cartan matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import DomainError, SystemMismatchError

Vec = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _dynkin_edges(type_label: str, rank: int) -> list[tuple[int, int]]:
    # 0-based node labels, Bourbaki numbering
    if type_label == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if type_label == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if type_label == "E":
        edges = [(0, 2), (2, 3), (1, 3)]
        edges += [(i, i + 1) for i in range(3, rank - 1)]
        return edges
    raise DomainError(f"unsupported type {type_label!r}")


def _validate(type_label: str, rank: int) -> None:
    ok = (
        (type_label == "A" and rank >= 1)
        or (type_label == "D" and rank >= 4)
        or (type_label == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise DomainError(
            f"({type_label}, {rank}) is not a simply-laced Dynkin type; "
            "use A_n (n>=1), D_n (n>=4) or E_6, E_7, E_8"
        )


def cartan_matrix(type_label: str, rank: int) -> Matrix:
    _validate(type_label, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _dynkin_edges(type_label, rank):
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


def _matvec(m: Matrix, v: Vec) -> Vec:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def root_sign(v: Vec) -> int:
    """+1 / -1 by the first nonzero coordinate, 0 for the zero vector."""
    for c in v:
        if c:
            return 1 if c > 0 else -1
    return 0


def vneg(v: Vec) -> Vec:
    return tuple(-c for c in v)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(k: int, v: Vec) -> Vec:
    return tuple(k * c for c in v)


def dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True, eq=False)
class FiniteRootSystem:
    """An irreducible simply-laced root system of type A, D or E.

    Built by :func:`build_root_system`; everything is derived from the
    Cartan matrix.  Instances are cached, so two systems of the same type
    are the same object.
    """

    type_label: str
    rank: int
    cartan: Matrix
    positive_roots: tuple[Vec, ...]
    theta: Vec
    two_rho_fin: Vec
    coxeter_number: int
    _positive_set: frozenset = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteRootSystem):
            return NotImplemented
        return (self.type_label, self.rank) == (other.type_label, other.rank)

    def __hash__(self) -> int:
        return hash((self.type_label, self.rank))

    def __repr__(self) -> str:
        return f"FiniteRootSystem({self.type_label}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @cached_property
    def roots(self) -> tuple[Vec, ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(vneg(v) for v in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Vec, ...]:
        return _identity(self.rank)

    @cached_property
    def _inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.cartan)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return tuple(tuple(row[n:]) for row in aug)

    # -- membership ---------------------------------------------------------

    def is_root(self, v: Vec) -> bool:
        return len(v) == self.rank and (v in self._positive_set or vneg(v) in self._positive_set)

    def is_positive(self, v: Vec) -> bool:
        return v in self._positive_set

    def check_root(self, v: Vec) -> Vec:
        v = tuple(int(c) for c in v)
        if len(v) != self.rank:
            raise SystemMismatchError(f"{v} has {len(v)} coordinates; {self.name} has rank {self.rank}")
        if not self.is_root(v):
            raise DomainError(f"{v} is not a root of {self.name}")
        return v

    def check_vector(self, v: Vec) -> Vec:
        v = tuple(int(c) for c in v)
        if len(v) != self.rank:
            raise SystemMismatchError(f"{v} has {len(v)} coordinates; {self.name} has rank {self.rank}")
        return v

    def height(self, v: Vec) -> int:
        return sum(v)

    # -- pairings and coordinate changes ------------------------------------

    def pairing(self, u: Vec, v: Vec) -> int:
        """<u, v> for u, v in the root lattice (simple-root coordinates)."""
        a = self.cartan
        return sum(u[i] * a[i][j] * v[j] for i in range(self.rank) if u[i] for j in range(self.rank) if v[j])

    def weight_pairing(self, mu: Vec, v: Vec) -> int:
        """<mu, v> for a weight mu (fundamental-weight coordinates) and v in Q."""
        return dot(mu, v)

    def root_to_weight(self, v: Vec) -> Vec:
        return _matvec(self.cartan, v)

    def weight_to_root(self, mu: Vec) -> Vec | None:
        """Simple-root coordinates of mu, or None if mu is not in Q."""
        coords = [sum(c * m for c, m in zip(row, mu)) for row in self._inverse_cartan]
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def reflect_root(self, nu: Vec, v: Vec) -> Vec:
        """s_nu(v) = v - <nu, v> nu."""
        k = self.pairing(nu, v)
        return tuple(b - k * a for a, b in zip(nu, v)) if k else v

    # -- Weyl group ---------------------------------------------------------

    @cached_property
    def identity(self) -> "FiniteWeylElement":
        m = _identity(self.rank)
        return FiniteWeylElement(self, m, m)

    def reflection(self, nu: Vec) -> "FiniteWeylElement":
        """The finite reflection s_nu as a matrix on simple-root coordinates."""
        nu = self.check_root(nu)
        anu = self.root_to_weight(nu)  # row vector v -> <nu, v>
        n = self.rank
        m = tuple(tuple(int(i == j) - nu[i] * anu[j] for j in range(n)) for i in range(n))
        return FiniteWeylElement(self, m, m)

    def simple_reflection(self, i: int) -> "FiniteWeylElement":
        if not 1 <= i <= self.rank:
            raise DomainError(f"s{i} is not a finite simple reflection of {self.name}")
        return self._simple_reflections[i - 1]

    @cached_property
    def _simple_reflections(self) -> tuple["FiniteWeylElement", ...]:
        return tuple(self.reflection(e) for e in self.simple_roots)

    def from_word(self, word) -> "FiniteWeylElement":
        w = self.identity
        for i in word:
            w = w * self.simple_reflection(i)
        return w


@dataclass(frozen=True, eq=False)
class FiniteWeylElement:
    """An element of W_fin, stored as its action on simple-root coordinates.

    The inverse matrix is carried along so inverses stay integral and cheap.
    """

    system: FiniteRootSystem = field(repr=False)
    matrix: Matrix
    inverse_matrix: Matrix = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        word = "".join(f"s{i}" for i in self.reduced_word()) or "id"
        return f"<W_fin {self.system.name} {word}>"

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        if other.system != self.system:
            raise SystemMismatchError("cannot multiply elements of different Weyl groups")
        return FiniteWeylElement(
            self.system,
            _matmul(self.matrix, other.matrix),
            _matmul(other.inverse_matrix, self.inverse_matrix),
        )

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(self.system, self.inverse_matrix, self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == self.system.identity.matrix

    def act_root(self, v: Vec) -> Vec:
        return _matvec(self.matrix, v)

    def act_weight(self, mu: Vec) -> Vec:
        # the contragredient action (M^-1)^T keeps <w mu, w v> = <mu, v>
        inv = self.inverse_matrix
        n = len(mu)
        return tuple(sum(inv[j][i] * mu[j] for j in range(n)) for i in range(n))

    def length(self) -> int:
        s = self.system
        return sum(1 for v in s.positive_roots if not s.is_positive(self.act_root(v)))

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically-first-from-the-right reduced word (1-based)."""
        word: list[int] = []
        w = self
        s = self.system
        while not w.is_identity():
            for i in range(1, s.rank + 1):
                if root_sign(w.act_root(s.simple_roots[i - 1])) < 0:
                    word.append(i)
                    w = w * s.simple_reflection(i)
                    break
        return tuple(reversed(word))


def finite_act(w: FiniteWeylElement, v: Vec, kind: str = "root") -> Vec:
    """Apply w to a root-lattice vector (``kind="root"``) or a weight."""
    if len(v) != w.system.rank:
        raise SystemMismatchError(f"{v} does not belong to {w.system.name}")
    if kind == "root":
        return w.act_root(v)
    if kind == "weight":
        return w.act_weight(v)
    raise ValueError(f"unknown kind {kind!r}")


def pairing_root_root(system: FiniteRootSystem, nu: Vec, gamma: Vec) -> int:
    return system.pairing(system.check_root(nu), system.check_root(gamma))


def pairing_weight_root(system: FiniteRootSystem, mu: Vec, nu: Vec) -> int:
    return system.weight_pairing(system.check_vector(mu), system.check_vector(nu))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> FiniteRootSystem:
    """Build the root system of type ``type_label``\\ ``rank`` by reflection closure.

    >>> build_root_system("A", 2).positive_roots
    ((1, 0), (0, 1), (1, 1))
    """
    type_label = str(type_label).upper()
    rank = int(rank)
    a = cartan_matrix(type_label, rank)

    def reflect(i: int, v: Vec) -> Vec:
        k = sum(a[i][j] * v[j] for j in range(rank))
        return tuple(c - k if idx == i else c for idx, c in enumerate(v))

    simple = _identity(rank)
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                u = reflect(i, v)
                if root_sign(u) > 0 and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    positive = tuple(sorted(seen, key=lambda v: (sum(v), v)))
    top = max(sum(v) for v in positive)
    (theta,) = [v for v in positive if sum(v) == top]
    two_rho = tuple(sum(col) for col in zip(*positive))
    return FiniteRootSystem(
        type_label=type_label,
        rank=rank,
        cartan=a,
        positive_roots=positive,
        theta=theta,
        two_rho_fin=two_rho,
        coxeter_number=sum(theta) + 1,
        _positive_set=frozenset(positive),
    )
