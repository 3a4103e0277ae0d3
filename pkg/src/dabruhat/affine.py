"""The affine Weyl group W_aff = Q x| W_fin acting on affine roots and on X.

An element Y^lam w is stored as ``(lam, w)`` with ``lam`` in simple-root
coordinates.  Affine weights mu + m delta + l Lambda_0 keep ``mu`` in
fundamental-weight coordinates.

Pairing conventions (everything else follows from these):

* <mu + m delta + l Lambda_0, nu + r delta> = <mu, nu> + l r
* <mu + m delta + l Lambda_0, 2 rho>          = <mu, 2 rho_fin> + 2 h m
* <nu + r delta, 2 rho>                       = 2 (ht(nu) + r h)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError, InternalError, OutsideTitsConeError, SystemMismatchError
from .rootsystem import (
    FiniteRootSystem,
    FiniteWeylElement,
    Vec,
    dot,
    root_sign,
    vadd,
    vneg,
    vscale,
    vsub,
)


class AffineRoot(NamedTuple):
    """nu + r delta."""

    nu: Vec
    r: int

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(vneg(self.nu), -self.r)

    def is_positive(self) -> bool:
        return self.r > 0 or (self.r == 0 and root_sign(self.nu) > 0)

    def height(self, system: FiniteRootSystem) -> int:
        return sum(self.nu) + self.r * system.coxeter_number


class AffineWeight(NamedTuple):
    """mu + m delta + l Lambda_0 with mu in fundamental-weight coordinates."""

    mu: Vec
    m: int
    l: int

    @property
    def level(self) -> int:
        return self.l

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(vneg(self.mu), -self.m, -self.l)

    def plus(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(vadd(self.mu, other.mu), self.m + other.m, self.l + other.l)

    def minus(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(vsub(self.mu, other.mu), self.m - other.m, self.l - other.l)


def affine_root_as_weight(system: FiniteRootSystem, root: AffineRoot, k: int = 1) -> AffineWeight:
    """k * (nu + r delta) viewed as a level-zero element of X."""
    return AffineWeight(vscale(k, system.root_to_weight(root.nu)), k * root.r, 0)


def weight_root_pairing(zeta: AffineWeight, root: AffineRoot) -> int:
    return dot(zeta.mu, root.nu) + zeta.l * root.r


def weight_2rho(system: FiniteRootSystem, zeta: AffineWeight) -> int:
    return dot(zeta.mu, system.two_rho_fin) + 2 * system.coxeter_number * zeta.m


def pairing_2rho(system: FiniteRootSystem, root: AffineRoot) -> int:
    """<alpha~, 2 rho> = 2 ht(alpha~)."""
    return 2 * root.height(system)


def simple_affine_root(system: FiniteRootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(vneg(system.theta), 1)
    return AffineRoot(system.simple_roots[i - 1], 0)


def weight_simple_pairings(system: FiniteRootSystem, zeta: AffineWeight) -> tuple[int, ...]:
    """(<zeta, alpha_0>, <zeta, alpha_1>, ..., <zeta, alpha_n>)."""
    return (zeta.l - dot(zeta.mu, system.theta),) + tuple(zeta.mu)


def is_dominant(system: FiniteRootSystem, zeta: AffineWeight) -> bool:
    return all(c >= 0 for c in weight_simple_pairings(system, zeta))


def is_regular_dominant(system: FiniteRootSystem, zeta: AffineWeight) -> bool:
    return all(c > 0 for c in weight_simple_pairings(system, zeta))


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    """Y^lam w in W_aff."""

    lam: Vec
    w: FiniteWeylElement

    @property
    def system(self) -> FiniteRootSystem:
        return self.w.system

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self.lam == other.lam and self.w == other.w

    def __hash__(self) -> int:
        return hash((self.lam, self.w))

    def __repr__(self) -> str:
        word = "".join(f"s{i}" for i in self.w.reduced_word())
        return f"Y[{','.join(map(str, self.lam))}]{word}"

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        if other.system != self.system:
            raise SystemMismatchError("elements of different affine Weyl groups")
        return AffineWeylElement(vadd(self.lam, self.w.act_root(other.lam)), self.w * other.w)

    def inverse(self) -> "AffineWeylElement":
        winv = self.w.inverse()
        return AffineWeylElement(vneg(winv.act_root(self.lam)), winv)

    def is_identity(self) -> bool:
        return not any(self.lam) and self.w.is_identity()

    # -- actions ------------------------------------------------------------

    def act_root(self, root: AffineRoot) -> AffineRoot:
        """Y^lam w (nu + r delta) = w nu + (r - <lam, w nu>) delta."""
        wnu = self.w.act_root(root.nu)
        return AffineRoot(wnu, root.r - self.system.pairing(self.lam, wnu))

    def act_weight(self, zeta: AffineWeight) -> AffineWeight:
        """Kac (6.5.2): w mu + l lam + (m - <w mu, lam> - l <lam,lam>/2) delta + l Lambda_0."""
        s = self.system
        wmu = self.w.act_weight(zeta.mu)
        norm = s.pairing(self.lam, self.lam)
        assert norm % 2 == 0
        new_mu = vadd(wmu, vscale(zeta.l, s.root_to_weight(self.lam)))
        new_m = zeta.m - dot(wmu, self.lam) - zeta.l * norm // 2
        return AffineWeight(new_mu, new_m, zeta.l)

    # -- length -------------------------------------------------------------

    def _inversion_ranges(self):
        s = self.system
        for nu in s.roots:
            wnu = self.w.act_root(nu)
            k = s.pairing(self.lam, wnu)
            r_min = 0 if s.is_positive(nu) else 1
            # w~(nu + r delta) = w nu + (r - k) delta < 0
            r_max = k - 1 if s.is_positive(wnu) else k
            if r_max >= r_min:
                yield nu, r_min, r_max

    def inversions(self) -> frozenset[AffineRoot]:
        """{alpha~ > 0 : self(alpha~) < 0}."""
        return frozenset(
            AffineRoot(nu, r) for nu, lo, hi in self._inversion_ranges() for r in range(lo, hi + 1)
        )

    def length(self) -> int:
        return sum(hi - lo + 1 for _, lo, hi in self._inversion_ranges())

    def has_right_descent(self, root: AffineRoot) -> bool:
        """True iff l(self s_root) < l(self), i.e. self(root) < 0 (root positive)."""
        return not self.act_root(root).is_positive()

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word over s_0..s_n (smallest right descent peeled first)."""
        s = self.system
        word: list[int] = []
        x = self
        for _ in range(self.length() + 1):
            if x.is_identity():
                return tuple(reversed(word))
            for i in range(s.rank + 1):
                if x.has_right_descent(simple_affine_root(s, i)):
                    word.append(i)
                    x = x * affine_simple_reflection(s, i)
                    break
        raise InternalError("reduced word search did not terminate")


def affine_identity(system: FiniteRootSystem) -> AffineWeylElement:
    return AffineWeylElement((0,) * system.rank, system.identity)


def translation(system: FiniteRootSystem, lam: Vec) -> AffineWeylElement:
    return AffineWeylElement(system.check_vector(lam), system.identity)


def affine_reflection(system: FiniteRootSystem, root: AffineRoot) -> AffineWeylElement:
    """s_{nu + r delta} = Y^{-r nu} s_nu."""
    return AffineWeylElement(vscale(-root.r, root.nu), system.reflection(root.nu))


def affine_simple_reflection(system: FiniteRootSystem, i: int) -> AffineWeylElement:
    if not 0 <= i <= system.rank:
        raise DomainError(f"s{i} is not a simple reflection of the affine {system.name}")
    return affine_reflection(system, simple_affine_root(system, i))


def affine_from_word(system: FiniteRootSystem, word) -> AffineWeylElement:
    x = affine_identity(system)
    for i in word:
        x = x * affine_simple_reflection(system, i)
    return x


def aff_act_on_affine_root(wt: AffineWeylElement, root: AffineRoot) -> AffineRoot:
    return wt.act_root(root)


def aff_act_on_weight(wt: AffineWeylElement, zeta: AffineWeight) -> AffineWeight:
    return wt.act_weight(zeta)


def inversions(wt: AffineWeylElement) -> frozenset[AffineRoot]:
    return wt.inversions()


def aff_length(wt: AffineWeylElement) -> int:
    return wt.length()


def aff_length_product_identity_check(x: AffineWeylElement, y: AffineWeylElement) -> bool:
    """l(xy) == l(x) + l(y) - 2 |Inv(x) & Inv(y^-1)|."""
    lhs = (x * y).length()
    rhs = x.length() + y.length() - 2 * len(x.inversions() & y.inverse().inversions())
    return lhs == rhs


# -- Tits cone and dominant representatives --------------------------------


def in_tits_cone(zeta: AffineWeight) -> bool:
    return zeta.l > 0 or (zeta.l == 0 and not any(zeta.mu))


def _reflect_weight_simple(system: FiniteRootSystem, zeta: AffineWeight, i: int, c: int) -> AffineWeight:
    # zeta - c alpha_i with c = <zeta, alpha_i>
    if i == 0:
        return AffineWeight(vadd(zeta.mu, vscale(c, system.root_to_weight(system.theta))), zeta.m - c, zeta.l)
    col = system.root_to_weight(system.simple_roots[i - 1])
    return AffineWeight(vsub(zeta.mu, vscale(c, col)), zeta.m, zeta.l)


def _count_negative_positive_roots(system: FiniteRootSystem, zeta: AffineWeight) -> int:
    # |{alpha~ > 0 : <zeta, alpha~> < 0}| = l(v~) for the minimal v~
    l = zeta.l
    total = 0
    for nu in system.roots:
        a = dot(zeta.mu, nu)
        r_min = 0 if system.is_positive(nu) else 1
        # a + l r < 0  <=>  r < -a / l
        r_max = (-a - 1) // l
        total += max(0, r_max - r_min + 1)
    return total


def dominantize(system: FiniteRootSystem, zeta: AffineWeight) -> tuple[AffineWeight, AffineWeylElement]:
    """Return ``(zeta_plus, v)`` with zeta_plus dominant and ``v zeta_plus == zeta``.

    ``v`` has minimal length.  Repeatedly reflects at the smallest index with
    a negative pairing.
    """
    if not in_tits_cone(zeta):
        raise OutsideTitsConeError(f"{zeta} lies outside the Tits cone")
    if zeta.l == 0:
        return zeta, affine_identity(system)
    cap = _count_negative_positive_roots(system, zeta)
    word: list[int] = []
    z = zeta
    while True:
        pairings = weight_simple_pairings(system, z)
        neg = next((i for i, c in enumerate(pairings) if c < 0), None)
        if neg is None:
            break
        if len(word) >= cap:
            raise InternalError(f"dominantize exceeded {cap} steps on {zeta}")
        z = _reflect_weight_simple(system, z, neg, pairings[neg])
        word.append(neg)
    return z, affine_from_word(system, word)


# -- quantum Bruhat graph ---------------------------------------------------


class EdgeKind(enum.Enum):
    BRUHAT = "bruhat"
    QUANTUM = "quantum"


@dataclass(frozen=True)
class QbgEdge:
    source: AffineWeylElement
    target: AffineWeylElement
    label: AffineRoot
    kind: EdgeKind = field(compare=True)


def qbg_edge(v: AffineWeylElement, root: AffineRoot) -> QbgEdge | None:
    """The QBG edge v s_root -> v, if there is one."""
    if not root.is_positive():
        raise DomainError(f"{root} is not a positive affine root")
    s = v.system
    source = v * affine_reflection(s, root)
    lv, ls = v.length(), source.length()
    if lv == ls + 1:
        return QbgEdge(source, v, root, EdgeKind.BRUHAT)
    if lv == ls - pairing_2rho(s, root) + 1:
        return QbgEdge(source, v, root, EdgeKind.QUANTUM)
    return None


def positive_affine_roots(system: FiniteRootSystem, max_r: int):
    """Positive affine roots nu + r delta with r <= max_r."""
    for r in range(0, max_r + 1):
        for nu in system.roots:
            if r > 0 or system.is_positive(nu):
                yield AffineRoot(nu, r)


def quantum_r_bound(system: FiniteRootSystem) -> int:
    # A quantum edge needs l(s_a) = 2 ht(a) - 1.  With l(s_{nu + r delta}) <=
    # 2 r (h-1) + 2 ht(theta) - 1 this forces r <= h - 1 - ht(nu) <= 2h - 2.
    return 2 * system.coxeter_number - 2


def upward_r_bound(system: FiniteRootSystem, length: int) -> int:
    # l(u s_a) = l(u) + 1 forces l(s_a) <= 2 l(u) + 1, while
    # l(s_{nu + r delta}) >= 2 r (h-1) - (2h - 3).
    h = system.coxeter_number
    return 1 + length // (h - 1)


def qbg_edges_into(v: AffineWeylElement) -> list[QbgEdge]:
    """Every QBG edge with target ``v`` (a finite set)."""
    s = v.system
    edges: dict[AffineRoot, QbgEdge] = {}
    for root in sorted(v.inversions()):
        e = qbg_edge(v, root)
        if e is not None:
            edges[root] = e
    for root in positive_affine_roots(s, quantum_r_bound(s)):
        if root in edges:
            continue
        e = qbg_edge(v, root)
        if e is not None and e.kind is EdgeKind.QUANTUM:
            edges[root] = e
    return list(edges.values())


def elements_up_to_length(system: FiniteRootSystem, max_len: int) -> list[AffineWeylElement]:
    """All of W_aff with length <= max_len, by breadth-first search over words."""
    seen = {affine_identity(system)}
    frontier = list(seen)
    gens = [affine_simple_reflection(system, i) for i in range(system.rank + 1)]
    for _ in range(max_len):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda x: (x.length(), x.reduced_word()))


def qbg_neighborhood(system: FiniteRootSystem, radius: int) -> tuple[list[AffineWeylElement], list[QbgEdge]]:
    """Vertices of length <= radius and the QBG edges between them."""
    verts = elements_up_to_length(system, radius)
    vset = set(verts)
    edges = [e for v in verts for e in qbg_edges_into(v) if e.source in vset]
    return verts, edges
