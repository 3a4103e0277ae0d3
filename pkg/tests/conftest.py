from __future__ import annotations

import pytest

from dabruhat import DoubleAffineRoot, build_root_system, make_element


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def golden_a2(a2):
    """x = X^{a1+a2+delta+Lambda0} Y^{a2} with the downward root a1 - 2 delta + pi."""
    x = make_element(a2, (1, 1), 1, 1, lam=(0, 1))
    alpha = DoubleAffineRoot((1, 0), -2, 1)
    return x, alpha
