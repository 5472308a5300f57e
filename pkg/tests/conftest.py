from pathlib import Path

import pytest

from cyclocal import CyclicAction, Field, Ring

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


def artin_schreier(q: int) -> CyclicAction:
    """sigma(y) = y + x over F_q, an order-q action."""
    ring = Ring(Field.prime(q), ("x", "y"), prime_vars=("x", "y"))
    return CyclicAction(ring, q, {"y": ring.parse("y + x")})


def tame(q: int, p: int, zeta: int) -> CyclicAction:
    """sigma(y) = zeta*y over F_q with zeta of multiplicative order p."""
    ring = Ring(Field.prime(q), ("x", "y"), prime_vars=("x", "y"))
    return CyclicAction(ring, p, {"y": ring.parse(f"{zeta}*y")})


def counterexample_action() -> CyclicAction:
    ring = Ring(Field.prime(2), ("Z", "Y", "X1", "X2"), prime_vars=("Y", "X1", "X2"))
    return CyclicAction(ring, 2, {"Z": ring.parse("Z + X1"), "Y": ring.parse("Y + X2")})


@pytest.fixture
def as2() -> CyclicAction:
    return artin_schreier(2)


@pytest.fixture
def as3() -> CyclicAction:
    return artin_schreier(3)


@pytest.fixture
def as5() -> CyclicAction:
    return artin_schreier(5)


@pytest.fixture
def tame2() -> CyclicAction:
    return tame(3, 2, 2)


@pytest.fixture
def tame3() -> CyclicAction:
    return tame(7, 3, 2)


@pytest.fixture
def counterexample() -> CyclicAction:
    return counterexample_action()
