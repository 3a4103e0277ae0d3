"""Double affine Bruhat order: lower graphs, corners, covers and intervals.

Throughout, ``x = X^zeta' Y^lam w`` has level ``l > 0`` and, for a finite root
``nu``, ``c(r) = -<zeta', nu + r delta> = c0 - l r`` is the boundary value of
the lower graph.  A point ``(r, j)`` stands for ``nu + r delta + j pi``, and

    x^-1(nu + r delta + j pi) = w~^-1(nu + r delta) + (j - c(r)) pi,

so the sign of ``x^-1`` is decided by ``j - c(r)`` with the tiebreak
``w~^-1(nu + r delta) < 0``, i.e. ``r < t`` or ``r == t`` and ``w^-1 nu < 0``,
where ``t = -<lam, nu>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .affine import (
    AffineRoot,
    AffineWeight,
    AffineWeylElement,
    EdgeKind,
    affine_reflection,
    affine_root_as_weight,
    pairing_2rho,
    positive_affine_roots,
    qbg_edges_into,
    upward_r_bound,
    weight_simple_pairings,
)
from .double import (
    DoubleAffineRoot,
    ExtendedElement,
    SemigroupElement,
    apply_reflection_left,
    daff_is_positive,
    decompose,
    length,
    require_positive_level,
)
from .errors import (
    AffineLengthBoundError,
    CapExceededError,
    DomainError,
    InternalError,
    NotDownwardError,
    NotRegularError,
    NotUpwardError,
    WeightBoundError,
)
from .notation import format_element
from .rootsystem import Vec, dot, vneg

DEFAULT_CAP = 10**6


def _is_negative(alpha: DoubleAffineRoot) -> bool:
    return not daff_is_positive(alpha)


def _point_positive(nu_positive: bool, r: int, j: int) -> bool:
    return j > 0 or (j == 0 and (r > 0 or (r == 0 and nu_positive)))


# -- lower graphs -------------------------------------------------------------


@dataclass(frozen=True)
class LowerGraph:
    """Gamma_{x, nu} with its boundary data and shape tag.

    ``lower_edge`` is the inclusive r-range of members on ``j = 0`` (or None);
    the upper outer edge is the ray ``j = c(r)``, ``r <= upper_r_max``.
    """

    x: SemigroupElement = field(repr=False)
    nu: Vec
    c0: int
    level: int
    t: int
    winv_nu_negative: bool
    nu_positive: bool
    lower_edge: tuple[int, int] | None
    upper_r_max: int
    intersection_included: bool
    lower_tag: str
    upper_tag: str

    @property
    def shape(self) -> str:
        return f"{self.lower_tag}/{self.upper_tag}"

    @property
    def r_star(self) -> Fraction:
        """Where the boundary line meets j = 0."""
        return Fraction(self.c0, self.level)

    def boundary(self, r: int) -> int:
        return self.c0 - self.level * r

    def _tiebreak_negative(self, r: int) -> bool:
        return r < self.t or (r == self.t and self.winv_nu_negative)

    def contains(self, r: int, j: int) -> bool:
        c = self.boundary(r)
        if j < 0 or j > c:
            return False
        if j == 0 and not _point_positive(self.nu_positive, r, 0):
            return False
        return j < c or self._tiebreak_negative(r)

    def complement_contains(self, r: int, j: int) -> bool:
        """Positive points with x^-1 > 0 (the region carrying covers)."""
        if not _point_positive(self.nu_positive, r, j):
            return False
        c = self.boundary(r)
        return j > c or (j == c and not self._tiebreak_negative(r))

    def root(self, r: int, j: int) -> DoubleAffineRoot:
        return DoubleAffineRoot(self.nu, r, j)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def gamma_shape(x: ExtendedElement, nu: Vec) -> LowerGraph:
    """Boundary parameters and the L/U shape tags of Gamma_{x, nu}."""
    require_positive_level(x)
    s = x.system
    nu = s.check_root(nu)
    l = x.level
    c0 = -dot(x.zeta.mu, nu)
    t = -s.pairing(x.wt.lam, nu)
    winv_neg = not s.is_positive(x.wt.w.inverse().act_root(nu))
    nu_pos = s.is_positive(nu)

    def tiebreak(r: int) -> bool:
        return r < t or (r == t and winv_neg)

    star_integral = c0 % l == 0
    r_star = c0 // l
    inter = star_integral and _point_positive(nu_pos, r_star, 0) and tiebreak(r_star)

    lo = 0 if nu_pos else 1
    hi = r_star if inter else _ceil_div(c0, l) - 1
    lower_edge = (lo, hi) if hi >= lo else None

    left_in = lower_edge is not None and lower_edge[0] == 0
    if left_in and inter:
        lower_tag = "L4*" if r_star == 0 else "L4"
    elif left_in:
        lower_tag = "L2"
    elif inter:
        lower_tag = "L3"
    else:
        lower_tag = "L1" if lower_edge is not None else "L1*"

    if t * l < c0:
        upper_tag = "U2" if winv_neg else "U1"
    else:
        upper_tag = "U4" if inter else "U3"

    r_up = t if winv_neg else t - 1
    r_cap = r_star if inter else _ceil_div(c0, l) - 1
    return LowerGraph(
        x=x,
        nu=nu,
        c0=c0,
        level=l,
        t=t,
        winv_nu_negative=winv_neg,
        nu_positive=nu_pos,
        lower_edge=lower_edge,
        upper_r_max=min(r_up, r_cap),
        intersection_included=inter,
        lower_tag=lower_tag,
        upper_tag=upper_tag,
    )


def gamma_contains(x: ExtendedElement, nu: Vec, point: tuple[int, int]) -> bool:
    """(r, j) in Gamma_{x, nu}: nu + r delta + j pi > 0 and x^-1 of it < 0."""
    require_positive_level(x)
    x.system.check_root(nu)
    r, j = point
    alpha = DoubleAffineRoot(tuple(nu), r, j)
    return daff_is_positive(alpha) and _is_negative(x.inverse().act(alpha))


def rotate180(beta: DoubleAffineRoot, alpha: DoubleAffineRoot) -> DoubleAffineRoot:
    """Rotate (p, q) by 180 degrees about (r, j); equals -s_alpha(beta)."""
    if tuple(beta.nu) != tuple(alpha.nu):
        raise DomainError("rotation needs equal finite parts")
    return DoubleAffineRoot(alpha.nu, 2 * alpha.r - beta.r, 2 * alpha.j - beta.j)


def _rotation_partners(g: LowerGraph, r: int, j: int):
    # both (p, q) and (2r - p, 2j - q) in Gamma force 0 <= q <= 2j,
    # p <= (c0 - q) / l and 2r - p <= (c0 - 2j + q) / l
    l, c0 = g.level, g.c0
    for q in range(0, 2 * j + 1):
        p_hi = _floor_div(c0 - q, l)
        p_lo = _ceil_div(2 * j - q - c0 + 2 * l * r, l)
        for p in range(p_lo, p_hi + 1):
            if (p, q) != (r, j):
                yield p, q


def _is_corner_in(g: LowerGraph, r: int, j: int) -> bool:
    for p, q in _rotation_partners(g, r, j):
        if g.contains(p, q) and g.contains(2 * r - p, 2 * j - q):
            return False
    return True


def is_corner(x: ExtendedElement, alpha: DoubleAffineRoot) -> bool:
    g = gamma_shape(x, alpha.nu)
    if not g.contains(alpha.r, alpha.j):
        raise DomainError(f"{alpha} is not a point of the lower graph")
    return _is_corner_in(g, alpha.r, alpha.j)


def _walk(member, start: int, step: int, limit: int = 4) -> int | None:
    r = start
    for _ in range(limit):
        if member(r):
            return r
        r += step
    return None


def _corner_candidates(g: LowerGraph) -> list[tuple[int, int]]:
    # A corner lies on j = 0, 1, c(r) or c(r) - 1; on each of those lines the
    # members form an interval and only its finite ends can be corners.
    l, c0 = g.level, g.c0
    pts: list[tuple[int, int]] = []
    if g.lower_edge is not None:
        lo, hi = g.lower_edge
        pts += [(lo, 0), (hi, 0)]
    r1 = _walk(lambda r: g.contains(r, 1), _floor_div(c0 - 1, l), -1)
    if r1 is not None:
        pts.append((r1, 1))
    pts.append((g.upper_r_max, g.boundary(g.upper_r_max)))
    rc = _walk(lambda r: g.contains(r, g.boundary(r) - 1), _floor_div(c0 - 1, l), -1)
    if rc is not None:
        pts.append((rc, g.boundary(rc) - 1))
    return sorted(set(pts))


def corners(x: ExtendedElement, nu: Vec) -> list[DoubleAffineRoot]:
    """All corners of Gamma_{x, nu}, ordered by (j, r)."""
    g = gamma_shape(x, nu)
    found = [(r, j) for r, j in _corner_candidates(g) if g.contains(r, j) and _is_corner_in(g, r, j)]
    return [g.root(r, j) for r, j in sorted(found, key=lambda p: (p[1], p[0]))]


# -- length difference sets -------------------------------------------------


@dataclass(frozen=True)
class LengthDiffSet:
    x: SemigroupElement = field(repr=False)
    alpha: DoubleAffineRoot
    members: frozenset[DoubleAffineRoot]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CoverDiffSet:
    x: SemigroupElement = field(repr=False)
    beta: DoubleAffineRoot
    members: frozenset[DoubleAffineRoot]

    def __len__(self) -> int:
        return len(self.members)


def _check_downward(x: ExtendedElement, alpha: DoubleAffineRoot) -> None:
    require_positive_level(x)
    x.system.check_root(alpha.nu)
    if not daff_is_positive(alpha):
        raise DomainError(f"{alpha} is not a positive double affine root")
    if daff_is_positive(x.inverse().act(alpha)):
        raise NotDownwardError(f"x^-1({alpha}) > 0: s_alpha x is not below x")


def _ldset_members(x: ExtendedElement, alpha: DoubleAffineRoot, cap: int) -> set[DoubleAffineRoot]:
    # beta = gamma + p delta + q pi lies in L iff beta in Gamma_{x, gamma} and
    # -s_alpha(beta) = gamma' + (k r - p) delta + (k j - q) pi lies in
    # Gamma_{x, gamma'} with k = <nu, gamma> and gamma' = -gamma + k nu.
    s = x.system
    nu, r, j = alpha
    l = x.level
    members: set[DoubleAffineRoot] = set()
    visited = 0
    for gamma in s.roots:
        k = s.pairing(nu, gamma)
        if k == 0:
            continue
        g = gamma_shape(x, gamma)
        gp = gamma_shape(x, tuple(k * b - a for a, b in zip(gamma, nu)))
        for q in range(0, k * j + 1):
            p_hi = _floor_div(g.c0 - q, l)
            p_lo = _ceil_div(k * j - q - gp.c0 + l * k * r, l)
            span = p_hi - p_lo + 1
            if span <= 0:
                continue
            visited += span
            if visited > cap:
                raise CapExceededError(f"length-difference scan passed {cap} points at finite part {gamma}")
            for p in range(p_lo, p_hi + 1):
                if g.contains(p, q) and gp.contains(k * r - p, k * j - q):
                    members.add(DoubleAffineRoot(gamma, p, q))
    return members


def length_diff_set(x: ExtendedElement, alpha: DoubleAffineRoot, cap: int = DEFAULT_CAP) -> LengthDiffSet:
    """L_{x, alpha} = {beta > 0 : x^-1 beta < 0, s_alpha beta < 0, x^-1 s_alpha beta > 0}."""
    alpha = DoubleAffineRoot(tuple(alpha.nu), alpha.r, alpha.j)
    _check_downward(x, alpha)
    members = _ldset_members(x, alpha, cap)
    if alpha not in members:
        raise InternalError(f"{alpha} missing from its own length-difference set")
    return LengthDiffSet(x, alpha, frozenset(members))


def cover_diff_set(x: ExtendedElement, beta: DoubleAffineRoot, cap: int = DEFAULT_CAP) -> CoverDiffSet:
    """U_{x, beta} = {gamma > 0 : x^-1 gamma > 0, s_beta gamma < 0, x^-1 s_beta gamma < 0}.

    Computed as L_{s_beta x, beta}.
    """
    beta = DoubleAffineRoot(tuple(beta.nu), beta.r, beta.j)
    require_positive_level(x)
    x.system.check_root(beta.nu)
    if not daff_is_positive(beta):
        raise DomainError(f"{beta} is not a positive double affine root")
    if _is_negative(x.inverse().act(beta)):
        raise NotUpwardError(f"x^-1({beta}) < 0: s_beta x is not above x")
    upper = apply_reflection_left(beta, x)
    return CoverDiffSet(x, beta, frozenset(_ldset_members(upper, beta, cap)))


def is_cocover(x: ExtendedElement, alpha: DoubleAffineRoot) -> bool:
    """s_alpha x is a cocover of x, i.e. l(x) = l(s_alpha x) + 1."""
    _check_downward(x, alpha)
    return length(x) - length(apply_reflection_left(alpha, x)) == 1


# -- cocovers -----------------------------------------------------------------


@dataclass(frozen=True)
class CocoverDescriptor:
    """One of the four families: alpha = -v~ alpha~ + j pi."""

    case_id: int
    alpha_tilde: AffineRoot
    j: int
    y: SemigroupElement


class Cocover(NamedTuple):
    alpha: DoubleAffineRoot
    y: SemigroupElement
    descriptor: CocoverDescriptor | None


class Cover(NamedTuple):
    beta: DoubleAffineRoot
    y: SemigroupElement


def _sorted_by_text(items, key):
    return sorted(items, key=lambda it: (length(key(it)), format_element(key(it))))


def _theorem_candidates(v: AffineWeylElement, u: AffineWeylElement):
    """(case, alpha~) pairs meeting the four length conditions."""
    s = v.system
    lv, lu = v.length(), u.length()
    for a in sorted(v.inversions()):
        if (v * affine_reflection(s, a)).length() == lv - 1:
            yield 1, a
    for e in qbg_edges_into(v):
        if e.kind is EdgeKind.QUANTUM:
            yield 2, e.label
    for a in positive_affine_roots(s, upward_r_bound(s, lu)):
        if (u * affine_reflection(s, a)).length() == lu + 1:
            yield 3, a
    for a in sorted(u.inversions()):
        if (u * affine_reflection(s, a)).length() == lu + 1 - pairing_2rho(s, a):
            yield 4, a


def _descriptor(x: ExtendedElement, zeta: AffineWeight, v: AffineWeylElement, case: int, a: AffineRoot):
    s = x.system
    za = zeta.l * a.r + dot(zeta.mu, a.nu)
    j = {1: 0, 2: 1, 3: za, 4: za - 1}[case]
    va = v.act_root(a)
    alpha = DoubleAffineRoot(vneg(va.nu), -va.r, j)
    if not daff_is_positive(alpha):
        return None
    y = apply_reflection_left(alpha, x)
    # cross-check against the displayed closed forms for y
    sa = affine_reflection(s, a)
    shifted = zeta.minus(affine_root_as_weight(s, a))
    weight = {1: (v * sa).act_weight(zeta), 2: (v * sa).act_weight(shifted), 3: v.act_weight(zeta), 4: v.act_weight(shifted)}[case]
    if y.zeta != weight or y.wt != affine_reflection(s, va) * x.wt:
        raise InternalError(f"closed form for case {case} disagrees with s_alpha x at {alpha}")
    return alpha, CocoverDescriptor(case, a, j, y)


def theorem2_applies(x: ExtendedElement) -> bool:
    """True when the dominant weight of x is regular with every simple pairing > 2."""
    d = decompose(x)
    return d.regular and all(c > 2 for c in weight_simple_pairings(x.system, d.zeta_plus))


def cocovers_theorem2(x: ExtendedElement) -> list[Cocover]:
    """Cocovers via the four-case classification (needs <zeta, alpha_i> > 2, regular)."""
    d = decompose(x)
    pairings = weight_simple_pairings(x.system, d.zeta_plus)
    if not d.regular:
        raise NotRegularError(f"dominant weight {d.zeta_plus} is not regular")
    if not all(c > 2 for c in pairings):
        raise WeightBoundError(f"need <zeta, alpha_i> > 2 for all i; got {pairings}")
    u = d.wt.inverse() * d.v
    out: dict[DoubleAffineRoot, Cocover] = {}
    for case, a in _theorem_candidates(d.v, u):
        res = _descriptor(x, d.zeta_plus, d.v, case, a)
        if res is not None and res[0] not in out:
            out[res[0]] = Cocover(res[0], res[1].y, res[1])
    return _sorted_by_text(out.values(), key=lambda c: c.y)


def cocovers_fallback(x: ExtendedElement) -> list[Cocover]:
    """Cocovers via corners of every lower graph, each checked by length."""
    require_positive_level(x)
    lx = length(x)
    out: dict[DoubleAffineRoot, Cocover] = {}
    for nu in x.system.roots:
        for alpha in corners(x, nu):
            y = apply_reflection_left(alpha, x)
            if lx - length(y) == 1:
                out[alpha] = Cocover(alpha, y, None)
    return _sorted_by_text(out.values(), key=lambda c: c.y)


def cocovers(x: ExtendedElement, strategy: str = "auto") -> list[Cocover]:
    """Every positive alpha with s_alpha x a cocover of x.

    ``strategy`` is ``"auto"`` (four-case classification when its hypothesis
    holds, corner scan otherwise), ``"theorem"`` or ``"corners"``.
    """
    require_positive_level(x)
    if strategy == "corners" or (strategy == "auto" and not theorem2_applies(x)):
        return cocovers_fallback(x)
    if strategy not in ("auto", "theorem"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return cocovers_theorem2(x)


def classify_cocovers_qbg(x: ExtendedElement, bound: int) -> list[CocoverDescriptor]:
    """Cocovers through quantum Bruhat graph edges, under the M-bounds.

    Raises a distinct error for each violated global hypothesis.  Candidates
    with l(s_{v~ alpha~} w~) > ``bound`` fall outside the statement and are
    dropped.
    """
    d = decompose(x)
    s = x.system
    if not d.regular:
        raise NotRegularError(f"dominant weight {d.zeta_plus} is not regular")
    pairings = weight_simple_pairings(s, d.zeta_plus)
    need = 2 * (bound + 1)
    if any(c < need for c in pairings):
        raise WeightBoundError(f"need <zeta, alpha_i> >= {need} for all i; got {pairings}")
    if d.wt.length() > bound:
        raise AffineLengthBoundError(f"l(w~) = {d.wt.length()} exceeds M = {bound}")
    u = d.wt.inverse() * d.v
    out: dict[DoubleAffineRoot, CocoverDescriptor] = {}
    for case, a in _theorem_candidates(d.v, u):
        if (affine_reflection(s, d.v.act_root(a)) * d.wt).length() > bound:
            continue
        res = _descriptor(x, d.zeta_plus, d.v, case, a)
        if res is not None:
            out.setdefault(res[0], res[1])
    return sorted(out.values(), key=lambda dsc: (dsc.case_id, format_element(dsc.y)))


def required_bound(x: ExtendedElement) -> int:
    """Smallest M for which every four-case candidate meets l(s_{v~a~} w~) <= M."""
    d = decompose(x)
    s = x.system
    u = d.wt.inverse() * d.v
    lengths = [d.wt.length()]
    for _, a in _theorem_candidates(d.v, u):
        lengths.append((affine_reflection(s, d.v.act_root(a)) * d.wt).length())
    return max(lengths)


# -- covers -------------------------------------------------------------------


def _cover_candidates(g: LowerGraph) -> list[tuple[int, int]]:
    # Covers give corners of the complement region {j >= max(0, c(r))}.  Off
    # the lines j = 0, 1, c(r), c(r) + 1 both vertical neighbours belong to
    # it; on each line the members form an interval, and the only finite
    # ends are the leftmost points of j = 0 and j = 1, both ends of the
    # segment on j = c(r), and the rightmost point of j = c(r) + 1.
    l, c0 = g.level, g.c0
    inside = g.complement_contains
    pts: list[tuple[int, int]] = []
    r0 = _walk(lambda r: inside(r, 0), max(0, _floor_div(c0, l)), 1)
    if r0 is not None:
        pts.append((r0, 0))
    r1 = _walk(lambda r: inside(r, 1), _floor_div(c0 - 1, l), 1)
    if r1 is not None:
        pts.append((r1, 1))
    lo = g.t + 1 if g.winv_nu_negative else g.t
    hi = _floor_div(c0, l)
    if not inside(hi, g.boundary(hi)):
        hi -= 1
    if lo <= hi and inside(lo, g.boundary(lo)):
        pts += [(lo, g.boundary(lo)), (hi, g.boundary(hi))]
    rc = _walk(lambda r: inside(r, g.boundary(r) + 1), _floor_div(c0 + 1, l), -1)
    if rc is not None:
        pts.append((rc, g.boundary(rc) + 1))
    return sorted(set(pts))


def covers(x: ExtendedElement) -> list[Cover]:
    """Every positive beta with s_beta x a cover of x."""
    require_positive_level(x)
    lx = length(x)
    out: dict[DoubleAffineRoot, Cover] = {}
    for nu in x.system.roots:
        g = gamma_shape(x, nu)
        for r, j in _cover_candidates(g):
            beta = g.root(r, j)
            y = apply_reflection_left(beta, x)
            if length(y) - lx == 1:
                out[beta] = Cover(beta, y)
    return _sorted_by_text(out.values(), key=lambda c: c.y)


# -- order and intervals ------------------------------------------------------


class _CocoverCache:
    def __init__(self):
        self.table: dict[ExtendedElement, list[Cocover]] = {}

    def get(self, z: ExtendedElement) -> list[Cocover]:
        hit = self.table.get(z)
        if hit is None:
            hit = self.table[z] = cocovers(z)
        return hit


def is_leq(y: ExtendedElement, x: ExtendedElement) -> bool:
    """y <= x in the Bruhat order, by descent through cocovers of x."""
    require_positive_level(x)
    require_positive_level(y)
    if y.system != x.system:
        raise DomainError("elements of different systems")
    ly = length(y)
    if ly > length(x):
        return False
    cache = _CocoverCache()
    memo: dict[ExtendedElement, bool] = {}
    stack = [x]
    # iterative post-order search; every cocover step drops the length by one
    while stack:
        z = stack[-1]
        if z in memo:
            stack.pop()
            continue
        if z == y:
            memo[z] = True
            stack.pop()
            continue
        if length(z) <= ly:
            memo[z] = False
            stack.pop()
            continue
        below = [c.y for c in cache.get(z)]
        pending = [b for b in below if b not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[z] = any(memo[b] for b in below)
        stack.pop()
        if memo[z] and z == x:
            break
    return memo.get(x, False)


@dataclass
class Interval:
    """[y, x] with its Hasse diagram (edges point from an element to a cocover)."""

    lower: SemigroupElement
    upper: SemigroupElement
    elements: list[SemigroupElement]
    edges: list[tuple[SemigroupElement, SemigroupElement, DoubleAffineRoot]]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, z: object) -> bool:
        return z in set(self.elements)


def interval(y: ExtendedElement, x: ExtendedElement, cap: int = DEFAULT_CAP) -> Interval:
    """{z : y <= z <= x}, sorted by (length, canonical text).

    Raises CapExceededError once more than ``cap`` elements below x have
    been explored.
    """
    require_positive_level(x)
    require_positive_level(y)
    ly, lx = length(y), length(x)
    if ly > lx:
        return Interval(y, x, [], [])
    cache = _CocoverCache()
    layers: list[list[ExtendedElement]] = [[x]]
    seen = 1
    for _ in range(lx - ly):
        nxt: dict[ExtendedElement, None] = {}
        for z in layers[-1]:
            for c in cache.get(z):
                nxt.setdefault(c.y, None)
        seen += len(nxt)
        if seen > cap:
            raise CapExceededError(f"interval search explored more than {cap} elements")
        layers.append(list(nxt))
    if y not in layers[-1]:
        return Interval(y, x, [], [])
    good = {y}
    edges = []
    for layer in reversed(layers[:-1]):
        for z in layer:
            hits = [c for c in cache.get(z) if c.y in good]
            if hits:
                good.add(z)
                edges += [(z, c.y, c.alpha) for c in hits]
    key = lambda z: (length(z), format_element(z))
    edges.sort(key=lambda e: (key(e[0]), key(e[1])))
    return Interval(y, x, sorted(good, key=key), edges)


def saturated_chain_lengths_ok(iv: Interval) -> bool:
    """Every edge drops the length by exactly one and lengths stay in range."""
    ly, lx = length(iv.lower), length(iv.upper)
    return all(ly <= length(z) <= lx for z in iv.elements) and all(
        length(a) - length(b) == 1 for a, b, _ in iv.edges
    )


def iter_gamma_points(g: LowerGraph, r_range: Iterable[int], j_range: Iterable[int]):
    js = list(j_range)
    for r in r_range:
        for j in js:
            if g.contains(r, j):
                yield r, j
