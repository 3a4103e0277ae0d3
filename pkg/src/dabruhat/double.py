"""Double affine roots and the semigroup W = T x| W_aff.

An element X^zeta w~ of the ambient group X x| W_aff is an
:class:`ExtendedElement`; :class:`SemigroupElement` additionally certifies
that zeta lies in the Tits cone.  The pi-coordinate of a double affine root
is a placeholder exactly parallel to delta and never contributes to the
root/root pairing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .affine import (
    AffineRoot,
    AffineWeight,
    AffineWeylElement,
    affine_identity,
    affine_reflection,
    affine_root_as_weight,
    dominantize,
    in_tits_cone,
    is_dominant,
    is_regular_dominant,
    weight_2rho,
    weight_root_pairing,
    weight_simple_pairings,
)
from .errors import (
    DomainError,
    InternalError,
    LevelZeroError,
    NotRegularError,
    OutsideTitsConeError,
    SystemMismatchError,
)
from .rootsystem import FiniteRootSystem, Vec, root_sign, vneg, vscale, vsub


class DoubleAffineRoot(NamedTuple):
    """nu + r delta + j pi."""

    nu: Vec
    r: int
    j: int

    @property
    def affine(self) -> AffineRoot:
        return AffineRoot(self.nu, self.r)

    def __neg__(self) -> "DoubleAffineRoot":
        return DoubleAffineRoot(vneg(self.nu), -self.r, -self.j)

    def is_positive(self) -> bool:
        return daff_is_positive(self)


def daff_root(affine: AffineRoot, j: int) -> DoubleAffineRoot:
    return DoubleAffineRoot(affine.nu, affine.r, j)


def daff_is_positive(alpha: DoubleAffineRoot) -> bool:
    if alpha.j > 0:
        return True
    if alpha.j < 0:
        return False
    return alpha.r > 0 or (alpha.r == 0 and root_sign(alpha.nu) > 0)


@dataclass(frozen=True, eq=False)
class ExtendedElement:
    """X^zeta w~ in X x| W_aff."""

    zeta: AffineWeight
    wt: AffineWeylElement

    @property
    def system(self) -> FiniteRootSystem:
        return self.wt.system

    @property
    def level(self) -> int:
        return self.zeta.l

    def _key(self):
        return (self.zeta, self.wt.lam, self.wt.w.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtendedElement):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        from .notation import format_element

        return f"<{format_element(self)}>"

    def __mul__(self, other: "ExtendedElement") -> "ExtendedElement":
        if not isinstance(other, ExtendedElement):
            return NotImplemented
        if other.system != self.system:
            raise SystemMismatchError("elements of different systems")
        zeta = self.zeta.plus(self.wt.act_weight(other.zeta))
        return ExtendedElement(zeta, self.wt * other.wt)

    def inverse(self) -> "ExtendedElement":
        winv = self.wt.inverse()
        return ExtendedElement(-winv.act_weight(self.zeta), winv)

    def act(self, alpha: DoubleAffineRoot) -> DoubleAffineRoot:
        """X^zeta w~ (a~ + j pi) = w~ a~ + (j - <zeta, w~ a~>) pi."""
        image = self.wt.act_root(alpha.affine)
        return DoubleAffineRoot(image.nu, image.r, alpha.j - weight_root_pairing(self.zeta, image))

    def as_semigroup(self) -> "SemigroupElement":
        return SemigroupElement(self.zeta, self.wt)


class SemigroupElement(ExtendedElement):
    """An element of W: construction checks that zeta is in the Tits cone."""

    def __init__(self, zeta: AffineWeight, wt: AffineWeylElement):
        if len(zeta.mu) != wt.system.rank:
            raise SystemMismatchError(f"weight {zeta} does not match {wt.system.name}")
        if not in_tits_cone(zeta):
            raise OutsideTitsConeError(
                f"X-weight {zeta} is outside the Tits cone (level {zeta.l})"
            )
        super().__init__(zeta, wt)

    def __mul__(self, other):
        prod = ExtendedElement.__mul__(self, other)
        if isinstance(other, SemigroupElement):
            return SemigroupElement(prod.zeta, prod.wt)
        return prod


def identity_element(system: FiniteRootSystem) -> SemigroupElement:
    return SemigroupElement(AffineWeight((0,) * system.rank, 0, 0), affine_identity(system))


def make_element(
    system: FiniteRootSystem,
    mu_root: Vec | None = None,
    m: int = 0,
    l: int = 0,
    lam: Vec | None = None,
    word=(),
    mu_weight: Vec | None = None,
) -> SemigroupElement:
    """Convenience constructor for X^{mu + m delta + l Lambda_0} Y^lam w.

    ``mu_root`` is given in simple-root coordinates, ``mu_weight`` in
    fundamental-weight coordinates (at most one of them).  ``word`` lists
    finite simple reflections.
    """
    n = system.rank
    if mu_root is not None and mu_weight is not None:
        raise ValueError("give mu in one coordinate system only")
    if mu_weight is not None:
        mu = system.check_vector(mu_weight)
    elif mu_root is not None:
        mu = system.root_to_weight(system.check_vector(mu_root))
    else:
        mu = (0,) * n
    lam = system.check_vector(lam) if lam is not None else (0,) * n
    return SemigroupElement(AffineWeight(mu, int(m), int(l)), AffineWeylElement(lam, system.from_word(word)))


# -- roots and reflections --------------------------------------------------


def daff_reflection(system: FiniteRootSystem, alpha: DoubleAffineRoot) -> ExtendedElement:
    """s_alpha = X^{-j a~} Y^{-r nu} s_nu."""
    system.check_root(alpha.nu)
    return ExtendedElement(affine_root_as_weight(system, alpha.affine, -alpha.j), affine_reflection(system, alpha.affine))


def daff_act_on_root(g: ExtendedElement, alpha: DoubleAffineRoot) -> DoubleAffineRoot:
    return g.act(alpha)


def daff_reflect_root(system: FiniteRootSystem, alpha: DoubleAffineRoot, beta: DoubleAffineRoot) -> DoubleAffineRoot:
    """s_alpha(beta) = beta - <nu, gamma> alpha."""
    k = system.pairing(alpha.nu, beta.nu)
    if not k:
        return beta
    return DoubleAffineRoot(vsub(beta.nu, vscale(k, alpha.nu)), beta.r - k * alpha.r, beta.j - k * alpha.j)


# -- length -----------------------------------------------------------------


class LengthBreakdown(NamedTuple):
    total: int
    big: int
    small: int


def daff_length(x: ExtendedElement) -> LengthBreakdown:
    """l(x) = <zeta_+, 2 rho> + #{Inv(w~^-1): <zeta, .> <= 0} - #{... > 0}."""
    s = x.system
    if not in_tits_cone(x.zeta):
        raise OutsideTitsConeError(f"length undefined: {x.zeta} outside the Tits cone")
    zplus, _ = dominantize(s, x.zeta)
    big = weight_2rho(s, zplus)
    small = 0
    for root in x.wt.inverse().inversions():
        small += 1 if weight_root_pairing(x.zeta, root) <= 0 else -1
    return LengthBreakdown(big + small, big, small)


def length(x: ExtendedElement) -> int:
    return daff_length(x).total


def daff_length_split(
    system: FiniteRootSystem, zeta_plus: AffineWeight, v: AffineWeylElement, wt: AffineWeylElement
) -> int:
    """l(X^{v zeta_+} w~) = <zeta_+, 2 rho> - l(w~^-1 v) + l(v), zeta_+ regular dominant."""
    if not is_regular_dominant(system, zeta_plus):
        raise NotRegularError(f"{zeta_plus} is not regular dominant")
    return weight_2rho(system, zeta_plus) - (wt.inverse() * v).length() + v.length()


class Decomposition(NamedTuple):
    zeta_plus: AffineWeight
    v: AffineWeylElement
    wt: AffineWeylElement
    regular: bool

    def simple_pairings(self, system: FiniteRootSystem) -> tuple[int, ...]:
        return weight_simple_pairings(system, self.zeta_plus)


def require_positive_level(x: ExtendedElement) -> None:
    if x.level <= 0:
        raise LevelZeroError(f"Bruhat operations need level > 0; got level {x.level}")


def decompose(x: ExtendedElement) -> Decomposition:
    """Write x = X^{v zeta_+} w~ with zeta_+ dominant and v minimal."""
    require_positive_level(x)
    s = x.system
    zplus, v = dominantize(s, x.zeta)
    assert is_dominant(s, zplus)
    return Decomposition(zplus, v, x.wt, is_regular_dominant(s, zplus))


def assemble(system: FiniteRootSystem, zeta_plus: AffineWeight, v: AffineWeylElement, wt: AffineWeylElement) -> SemigroupElement:
    """X^{v zeta_plus} w~."""
    return SemigroupElement(v.act_weight(zeta_plus), wt)


def apply_reflection_left(alpha: DoubleAffineRoot, x: ExtendedElement) -> SemigroupElement:
    """s_alpha x for x of positive level."""
    require_positive_level(x)
    s = x.system
    if not daff_is_positive(alpha):
        raise DomainError(f"{alpha} is not a positive double affine root")
    y = daff_reflection(s, alpha) * x
    if not in_tits_cone(y.zeta):
        raise InternalError(f"s_alpha x left the Tits cone: {y.zeta}")
    return SemigroupElement(y.zeta, y.wt)
