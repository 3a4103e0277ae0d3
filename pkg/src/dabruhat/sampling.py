"""Seeded random inputs for property suites and ``selftest``."""
from __future__ import annotations

import random

from .affine import AffineRoot, AffineWeight, AffineWeylElement, affine_from_word
from .double import DoubleAffineRoot, SemigroupElement, daff_is_positive
from .rootsystem import FiniteRootSystem


def random_affine(system: FiniteRootSystem, rng: random.Random, max_len: int) -> AffineWeylElement:
    """Product of a random word of at most ``max_len`` letters (length <= max_len)."""
    word = [rng.randrange(system.rank + 1) for _ in range(rng.randint(0, max_len))]
    return affine_from_word(system, word)


def dominant_weight(system: FiniteRootSystem, pairings, m: int = 0) -> AffineWeight:
    """The weight with <zeta, alpha_i> = pairings[i] (index 0 is alpha_0)."""
    c0, *rest = pairings
    mu = tuple(rest)
    level = c0 + sum(a * b for a, b in zip(mu, system.theta))
    return AffineWeight(mu, m, level)


def random_dominant(
    system: FiniteRootSystem, rng: random.Random, low: int = 0, high: int = 3, m_range: int = 2
) -> AffineWeight:
    """Dominant weight with every simple pairing in [low, high] and level > 0."""
    while True:
        pairings = [rng.randint(low, high) for _ in range(system.rank + 1)]
        zeta = dominant_weight(system, pairings, rng.randint(-m_range, m_range))
        if zeta.l > 0:
            return zeta


def random_element(
    system: FiniteRootSystem,
    rng: random.Random,
    low: int = 0,
    high: int = 3,
    v_len: int = 3,
    w_len: int = 3,
) -> SemigroupElement:
    """X^{v zeta_+} w~ with random dominant zeta_+ and short random v, w~."""
    zeta = random_dominant(system, rng, low, high)
    v = random_affine(system, rng, v_len)
    wt = random_affine(system, rng, w_len)
    return SemigroupElement(v.act_weight(zeta), wt)


def random_root(system: FiniteRootSystem, rng: random.Random, r_bound: int = 4, j_bound: int = 4) -> DoubleAffineRoot:
    nu = rng.choice(system.roots)
    return DoubleAffineRoot(nu, rng.randint(-r_bound, r_bound), rng.randint(-j_bound, j_bound))


def random_positive_root(system: FiniteRootSystem, rng: random.Random, r_bound: int = 4, j_bound: int = 4) -> DoubleAffineRoot:
    while True:
        a = random_root(system, rng, r_bound, j_bound)
        if daff_is_positive(a):
            return a


def random_affine_root(system: FiniteRootSystem, rng: random.Random, r_bound: int = 4) -> AffineRoot:
    return AffineRoot(rng.choice(system.roots), rng.randint(-r_bound, r_bound))


def pick_from_region(x: SemigroupElement, rng: random.Random, downward: bool, r_bound: int = 6, j_bound: int = 6):
    """A random positive alpha with x^-1(alpha) < 0 (downward) or > 0, or None."""
    xinv = x.inverse()
    pool = []
    for nu in x.system.roots:
        for r in range(-r_bound, r_bound + 1):
            for j in range(0, j_bound + 1):
                a = DoubleAffineRoot(nu, r, j)
                if daff_is_positive(a) and daff_is_positive(xinv.act(a)) != downward:
                    pool.append(a)
    return rng.choice(pool) if pool else None
