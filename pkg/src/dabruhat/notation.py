"""Text grammar for elements and roots.

::

    element := "X[" weight "]" ( "Y[" intvec "]" )? ( word )?
    weight  := ("w:")? intvec ";" int ";" int
    intvec  := int ("," int)*
    word    := ("s" digit)+
    root    := intvec ";" int ";" int

Whitespace is ignored.  ``mu`` is read in simple-root coordinates unless it
carries the ``w:`` prefix (fundamental-weight coordinates).  A lone ``0``
stands for the zero vector.
"""
from __future__ import annotations

import re

from .affine import AffineWeight, AffineWeylElement
from .double import DoubleAffineRoot, ExtendedElement, SemigroupElement
from .errors import DomainError, ParseError
from .rootsystem import FiniteRootSystem, Vec

_INT = re.compile(r"[+-]?\d+")


class _Cursor:
    def __init__(self, text: str):
        self.original = text
        kept = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.index = [i for i, _ in kept]
        self.s = "".join(c for _, c in kept)
        self.k = 0

    def pos(self) -> int:
        return self.index[self.k] if self.k < len(self.index) else len(self.original)

    def fail(self, message: str):
        raise ParseError(message, self.original, self.pos())

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.k)

    def expect(self, lit: str) -> None:
        if not self.peek(lit):
            self.fail(f"expected {lit!r}")
        self.k += len(lit)

    def integer(self) -> int:
        m = _INT.match(self.s, self.k)
        if not m:
            self.fail("expected an integer")
        self.k = m.end()
        return int(m.group())

    def intvec(self) -> list[int]:
        out = [self.integer()]
        while self.peek(","):
            self.k += 1
            out.append(self.integer())
        return out

    def done(self) -> bool:
        return self.k >= len(self.s)


def _fit(vec: list[int], system: FiniteRootSystem, cur: _Cursor, what: str) -> Vec:
    if vec == [0]:
        return (0,) * system.rank
    if len(vec) != system.rank:
        cur.fail(f"{what} has {len(vec)} coordinates but {system.name} has rank {system.rank}")
    return tuple(vec)


def parse_element(text: str, system: FiniteRootSystem) -> SemigroupElement:
    """Parse the element grammar; the X-weight must lie in the Tits cone."""
    cur = _Cursor(text)
    cur.expect("X[")
    weight_coords = cur.peek("w:")
    if weight_coords:
        cur.k += 2
    mu = _fit(cur.intvec(), system, cur, "mu")
    cur.expect(";")
    m = cur.integer()
    cur.expect(";")
    l = cur.integer()
    cur.expect("]")
    lam = (0,) * system.rank
    if cur.peek("Y["):
        cur.k += 2
        lam = _fit(cur.intvec(), system, cur, "lambda")
        cur.expect("]")
    word = []
    while cur.peek("s"):
        cur.k += 1
        if cur.k >= len(cur.s) or not cur.s[cur.k].isdigit():
            cur.fail("expected a digit after 's'")
        i = int(cur.s[cur.k])
        if not 1 <= i <= system.rank:
            cur.fail(f"s{i} is not a finite simple reflection of {system.name}")
        word.append(i)
        cur.k += 1
    if not cur.done():
        cur.fail("unexpected trailing input")
    mu_w = mu if weight_coords else system.root_to_weight(mu)
    return SemigroupElement(AffineWeight(mu_w, m, l), AffineWeylElement(lam, system.from_word(word)))


def parse_root(text: str, system: FiniteRootSystem) -> DoubleAffineRoot:
    cur = _Cursor(text)
    nu = _fit(cur.intvec(), system, cur, "nu")
    cur.expect(";")
    r = cur.integer()
    cur.expect(";")
    j = cur.integer()
    if not cur.done():
        cur.fail("unexpected trailing input")
    if not system.is_root(nu):
        raise DomainError(f"{nu} is not a root of {system.name}")
    return DoubleAffineRoot(nu, r, j)


def parse_finite_root(text: str, system: FiniteRootSystem) -> Vec:
    cur = _Cursor(text)
    nu = _fit(cur.intvec(), system, cur, "nu")
    if not cur.done():
        cur.fail("unexpected trailing input")
    if not system.is_root(nu):
        raise DomainError(f"{nu} is not a root of {system.name}")
    return nu


def infer_rank(text: str) -> int | None:
    """Largest vector length appearing in ``text`` (None if only scalars)."""
    best = None
    for chunk in re.split(r"[;\[\]]", re.sub(r"\s+", "", text)):
        chunk = chunk.removeprefix("w:")
        parts = chunk.split(",")
        if len(parts) > 1 and all(_INT.fullmatch(p) for p in parts):
            best = max(best or 0, len(parts))
    return best


def _vec(v) -> str:
    return ",".join(str(c) for c in v)


def format_weight(system: FiniteRootSystem, zeta: AffineWeight) -> str:
    root = system.weight_to_root(zeta.mu)
    mu = _vec(root) if root is not None else "w:" + _vec(zeta.mu)
    return f"{mu};{zeta.m};{zeta.l}"


def format_element(x: ExtendedElement) -> str:
    """Canonical text: ``X[mu;m;l]`` then ``Y[lam]`` if lam != 0, then a reduced word."""
    s = x.system
    out = f"X[{format_weight(s, x.zeta)}]"
    if any(x.wt.lam):
        out += f" Y[{_vec(x.wt.lam)}]"
    word = x.wt.w.reduced_word()
    if word:
        out += " " + "".join(f"s{i}" for i in word)
    return out


def format_root(alpha: DoubleAffineRoot) -> str:
    return f"{_vec(alpha.nu)};{alpha.r};{alpha.j}"


def root_json(alpha: DoubleAffineRoot) -> list:
    return [list(alpha.nu), alpha.r, alpha.j]
