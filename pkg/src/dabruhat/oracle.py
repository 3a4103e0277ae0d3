"""Brute-force cross-checks.

Everything here evaluates definitions directly inside an explicit window and
is meant for tests and ``selftest`` only.  Windows are arguments so callers
document their own completeness assumptions.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .affine import AffineRoot, AffineWeylElement, affine_identity, affine_simple_reflection
from .bruhat import covers, gamma_shape
from .double import (
    DoubleAffineRoot,
    ExtendedElement,
    apply_reflection_left,
    daff_is_positive,
    length,
    require_positive_level,
)
from .errors import CapExceededError, DomainError
from .rootsystem import FiniteRootSystem


@dataclass(frozen=True)
class ScanWindow:
    r_min: int
    r_max: int
    j_min: int
    j_max: int
    cap: int = 10**6

    def points(self):
        n = (self.r_max - self.r_min + 1) * (self.j_max - self.j_min + 1)
        if n > self.cap:
            raise CapExceededError(f"window has {n} points, cap is {self.cap}")
        for j in range(self.j_min, self.j_max + 1):
            for r in range(self.r_min, self.r_max + 1):
                yield r, j

    def contains(self, r: int, j: int) -> bool:
        return self.r_min <= r <= self.r_max and self.j_min <= j <= self.j_max


def oracle_aff_length_bfs(wt: AffineWeylElement, max_len: int) -> int | None:
    """Shortest word over s_0..s_n for ``wt``, or None beyond ``max_len``."""
    s = wt.system
    gens = [affine_simple_reflection(s, i) for i in range(s.rank + 1)]
    start = affine_identity(s)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        z = queue.popleft()
        if z == wt:
            return dist[z]
        if dist[z] == max_len:
            continue
        for g in gens:
            nxt = z * g
            if nxt not in dist:
                dist[nxt] = dist[z] + 1
                queue.append(nxt)
    return None


def oracle_inversions_scan(wt: AffineWeylElement, r_bound: int) -> frozenset[AffineRoot]:
    """{a > 0 : wt(a) < 0} over |r| <= r_bound."""
    out = set()
    for nu in wt.system.roots:
        for r in range(-r_bound, r_bound + 1):
            a = AffineRoot(nu, r)
            if a.is_positive() and not wt.act_root(a).is_positive():
                out.add(a)
    return frozenset(out)


def _in_gamma(xinv: ExtendedElement, alpha: DoubleAffineRoot) -> bool:
    return daff_is_positive(alpha) and not daff_is_positive(xinv.act(alpha))


def _in_complement(xinv: ExtendedElement, alpha: DoubleAffineRoot) -> bool:
    return daff_is_positive(alpha) and daff_is_positive(xinv.act(alpha))


def oracle_gamma_scan(x: ExtendedElement, nu, window: ScanWindow) -> frozenset[tuple[int, int]]:
    require_positive_level(x)
    xinv = x.inverse()
    nu = tuple(nu)
    return frozenset(p for p in window.points() if _in_gamma(xinv, DoubleAffineRoot(nu, *p)))


def oracle_corners_scan(x: ExtendedElement, nu, window: ScanWindow) -> frozenset[DoubleAffineRoot]:
    """Points of Gamma in the window none of whose window partners rotate into Gamma."""
    xinv = x.inverse()
    nu = tuple(nu)
    pts = oracle_gamma_scan(x, nu, window)
    out = set()
    for r, j in pts:
        ok = True
        for p, q in pts:
            if (p, q) != (r, j) and _in_gamma(xinv, DoubleAffineRoot(nu, 2 * r - p, 2 * j - q)):
                ok = False
                break
        if ok:
            out.add(DoubleAffineRoot(nu, r, j))
    return frozenset(out)


def oracle_length_diff_scan(x: ExtendedElement, alpha: DoubleAffineRoot, window: ScanWindow) -> frozenset[DoubleAffineRoot]:
    """Filter the four defining conditions of L_{x, alpha} over the window."""
    require_positive_level(x)
    s = x.system
    xinv = x.inverse()
    if not _in_gamma(xinv, alpha):
        raise DomainError(f"{alpha} does not give a downward reflection")
    out = set()
    for gamma in s.roots:
        for p, q in window.points():
            beta = DoubleAffineRoot(gamma, p, q)
            if not _in_gamma(xinv, beta):
                continue
            k = s.pairing(alpha.nu, gamma)
            sb = DoubleAffineRoot(
                tuple(g - k * a for g, a in zip(gamma, alpha.nu)), p - k * alpha.r, q - k * alpha.j
            )
            if not daff_is_positive(sb) and daff_is_positive(xinv.act(sb)):
                out.add(beta)
    return frozenset(out)


def ldset_window_is_complete(x: ExtendedElement, alpha: DoubleAffineRoot, window: ScanWindow) -> bool:
    """True iff the window contains every (p, q) the exact solver would visit."""
    s = x.system
    l = x.level
    for gamma in s.roots:
        k = s.pairing(alpha.nu, gamma)
        if k == 0:
            continue
        g = gamma_shape(x, gamma)
        gp = gamma_shape(x, tuple(k * b - a for a, b in zip(gamma, alpha.nu)))
        for q in range(0, k * alpha.j + 1):
            p_hi = (g.c0 - q) // l
            p_lo = -((-(k * alpha.j - q - gp.c0 + l * k * alpha.r)) // l)
            if p_lo <= p_hi and not (window.contains(p_lo, q) and window.contains(p_hi, q)):
                return False
    return True


def oracle_cocovers_scan(x: ExtendedElement, window: ScanWindow) -> frozenset[DoubleAffineRoot]:
    """All alpha in the window (every finite part) with l(x) - l(s_alpha x) = 1."""
    require_positive_level(x)
    xinv = x.inverse()
    lx = length(x)
    out = set()
    for nu in x.system.roots:
        for p in window.points():
            a = DoubleAffineRoot(nu, *p)
            if _in_gamma(xinv, a) and lx - length(apply_reflection_left(a, x)) == 1:
                out.add(a)
    return frozenset(out)


def oracle_covers_scan(x: ExtendedElement, window: ScanWindow) -> frozenset[DoubleAffineRoot]:
    """All beta in the window with l(s_beta x) - l(x) = 1."""
    require_positive_level(x)
    xinv = x.inverse()
    lx = length(x)
    out = set()
    for nu in x.system.roots:
        for p in window.points():
            b = DoubleAffineRoot(nu, *p)
            if _in_complement(xinv, b) and length(apply_reflection_left(b, x)) - lx == 1:
                out.add(b)
    return frozenset(out)


def oracle_interval_chains(y: ExtendedElement, x: ExtendedElement, max_depth: int) -> frozenset:
    """Elements on saturated cover chains from y up to x, built from covers() only."""
    require_positive_level(x)
    require_positive_level(y)
    ly, lx = length(y), length(x)
    if lx - ly > max_depth:
        raise CapExceededError(f"length gap {lx - ly} exceeds max_depth {max_depth}")
    if ly > lx:
        return frozenset()
    up: dict[ExtendedElement, list[ExtendedElement]] = {}
    layer = [y]
    for _ in range(lx - ly):
        nxt: dict[ExtendedElement, None] = {}
        for z in layer:
            up[z] = [c.y for c in covers(z)]
            for w in up[z]:
                nxt.setdefault(w, None)
        layer = list(nxt)
    if x not in layer:
        return frozenset()
    good = {x}
    changed = True
    while changed:
        changed = False
        for z, ws in up.items():
            if z not in good and any(w in good for w in ws):
                good.add(z)
                changed = True
    return frozenset(good)


def word_ball(system: FiniteRootSystem, radius: int) -> dict[AffineWeylElement, int]:
    """BFS word lengths of every element of W_aff within ``radius``."""
    gens = [affine_simple_reflection(system, i) for i in range(system.rank + 1)]
    start = affine_identity(system)
    dist = {start: 0}
    frontier = [start]
    for d in range(1, radius + 1):
        nxt = []
        for z in frontier:
            for g in gens:
                w = z * g
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def suggest_window(x: ExtendedElement, margin: int = 2, cap: int = 10**6) -> ScanWindow:
    """A window holding every corner of every Gamma_{x, nu} and of its complement.

    Sized from the boundary data only: corners sit between the end of the
    upper outer edge and the point where the boundary meets j = 0.
    """
    lo, hi, top = 0, 0, 0
    for nu in x.system.roots:
        g = gamma_shape(x, nu)
        r0 = min(g.upper_r_max, g.t) - margin
        r1 = -((-g.c0) // g.level) + margin
        lo, hi = min(lo, r0), max(hi, r1)
        top = max(top, g.boundary(r0) + margin)
    return ScanWindow(lo, hi, 0, max(top, margin), cap)
