"""Oracle agreement suites run by ``dabruhat selftest``."""
from __future__ import annotations

import random
from typing import NamedTuple

from .bruhat import corners, cocovers, covers, gamma_shape, length_diff_set
from .double import apply_reflection_left, length
from .oracle import (
    oracle_cocovers_scan,
    oracle_corners_scan,
    oracle_covers_scan,
    oracle_gamma_scan,
    ldset_window_is_complete,
    oracle_length_diff_scan,
    suggest_window,
    word_ball,
)
from .rootsystem import build_root_system
from .sampling import pick_from_region, random_element


class SuiteResult(NamedTuple):
    name: str
    checked: int
    failures: int


def _systems():
    return [build_root_system("A", 1), build_root_system("A", 2)]


def suite_lengths(rng: random.Random, radius: int = 4) -> SuiteResult:
    checked = bad = 0
    for s in _systems():
        for wt, d in word_ball(s, radius).items():
            checked += 1
            bad += wt.length() != d
    return SuiteResult("affine length = word length", checked, bad)


def suite_geometry(rng: random.Random, samples: int) -> SuiteResult:
    checked = bad = 0
    for _ in range(samples):
        s = rng.choice(_systems())
        x = random_element(s, rng, 0, 2, 2, 2)
        win = suggest_window(x)
        for nu in s.roots:
            g = gamma_shape(x, nu)
            pts = oracle_gamma_scan(x, nu, win)
            checked += 1
            bad += pts != {p for p in win.points() if g.contains(*p)}
            bad += oracle_corners_scan(x, nu, win) != set(corners(x, nu))
    return SuiteResult("lower graphs and corners", checked, bad)


def suite_ldset(rng: random.Random, samples: int) -> SuiteResult:
    checked = bad = 0
    for _ in range(samples):
        s = rng.choice(_systems())
        x = random_element(s, rng, 0, 2, 2, 2)
        alpha = pick_from_region(x, rng, downward=True, r_bound=3, j_bound=3)
        if alpha is None:
            continue
        checked += 1
        exact = length_diff_set(x, alpha).members
        drop = length(x) - length(apply_reflection_left(alpha, x))
        bad += len(exact) != drop
        win = suggest_window(x, margin=6)
        if ldset_window_is_complete(x, alpha, win):
            bad += oracle_length_diff_scan(x, alpha, win) != exact
    return SuiteResult("length-difference sets", checked, bad)


def suite_cocovers(rng: random.Random, samples: int) -> SuiteResult:
    checked = bad = 0
    for _ in range(samples):
        s = rng.choice(_systems())
        x = random_element(s, rng, 0, 2, 2, 2)
        win = suggest_window(x)
        checked += 1
        bad += oracle_cocovers_scan(x, win) != {c.alpha for c in cocovers(x, "corners")}
        bad += oracle_covers_scan(x, win) != {c.beta for c in covers(x)}
    return SuiteResult("cocovers and covers vs scan", checked, bad)


def run_selftest(seed: int = 0, samples: int = 4) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [
        suite_lengths(rng),
        suite_geometry(rng, samples),
        suite_ldset(rng, samples),
        suite_cocovers(rng, samples),
    ]
