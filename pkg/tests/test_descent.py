"""Decomposition over the invariants: pinned values, round-trips, linearity,
uniqueness, the tame grading cross-check, fractional inputs, divisibility
transfer, and the module-basis evidence report."""

from random import Random

import pytest

from cyclocal import (
    CyclicAction,
    Field,
    LocalFraction,
    Poly,
    Ring,
    descend,
    divisibility_transfer_check,
    monogenic_basis_check,
    recompose,
)
from cyclocal.errors import InvalidInstance, NotAGenerator
from cyclocal.randpoly import random_poly, random_unit
from conftest import artin_schreier, tame
from util import random_invariant


def test_pinned_p2(as2):
    ring = as2.ring
    d = descend(as2, ring.var("y"), ring.parse("y^2"))
    assert d.coefficients == (ring.parse("y^2 + x*y"), ring.var("x"))
    assert d.trace == (ring.parse("y^2"), ring.var("x"))
    assert all(d.invariant_flags)


def test_pinned_p3(as3):
    ring = as3.ring
    d = descend(as3, ring.var("y"), ring.parse("y^3"))
    assert d.coefficients == (ring.parse("y^3 - x^2*y"), ring.parse("x^2"), ring.zero())


def test_invariant_input_collapses(as5):
    ring = as5.ring
    b = ring.parse("x^3 + 2*x")
    d = descend(as5, ring.var("y"), b)
    assert d.coefficients[0] == b
    assert all(c.is_zero() for c in d.coefficients[1:])


def test_recompose_trivial(as2):
    ring = as2.ring
    d = descend(as2, ring.var("y"), ring.zero())
    assert recompose(d) == ring.zero()
    d2 = descend(as2, ring.var("y"), ring.parse("x^2 + x"))
    assert recompose(d2) == ring.parse("x^2 + x")


ACTIONS = [artin_schreier(2), artin_schreier(3), artin_schreier(5),
           tame(3, 2, 2), tame(7, 3, 2)]


@pytest.mark.parametrize("action", ACTIONS, ids=lambda a: f"p{a.p}-{a.ring.field}")
def test_roundtrip_random(action):
    rng = Random(211)
    y = action.ring.var("y")
    for _ in range(150):
        b = random_poly(rng, action.ring, 8, allow_zero=True)
        d = descend(action, y, b)
        assert recompose(d) == b
        assert all(d.invariant_flags)


def test_linearity(as3):
    rng = Random(223)
    ring = as3.ring
    y = ring.var("y")
    for _ in range(50):
        b1 = random_poly(rng, ring, 6, allow_zero=True)
        b2 = random_poly(rng, ring, 6, allow_zero=True)
        d1, d2 = descend(as3, y, b1), descend(as3, y, b2)
        dsum = descend(as3, y, b1 + b2)
        assert dsum.coefficients == tuple(a + b for a, b in
                                          zip(d1.coefficients, d2.coefficients))


def test_invariant_linearity(as3):
    rng = Random(227)
    ring = as3.ring
    y = ring.var("y")
    gens = [ring.var("x"), ring.parse("y^3 - x^2*y")]
    for _ in range(40):
        a = random_invariant(rng, as3, gens)
        b = random_poly(rng, ring, 5, allow_zero=True)
        scaled = descend(as3, y, a * b)
        plain = descend(as3, y, b)
        assert scaled.coefficients == tuple(a * c for c in plain.coefficients)


@pytest.mark.parametrize("action", ACTIONS, ids=lambda a: f"p{a.p}-{a.ring.field}")
def test_uniqueness_recovers_declared_coefficients(action):
    """Direct-sum property: descending sum a_i y^i returns exactly the a_i."""
    rng = Random(229)
    ring = action.ring
    y = ring.var("y")
    norm = action.norm(y)
    gens = [ring.var("x"), norm]
    for _ in range(40):
        declared = tuple(random_invariant(rng, action, gens) for _ in range(action.p))
        b = ring.zero()
        for i in range(action.p - 1, -1, -1):
            b = b * y + declared[i]
        d = descend(action, y, b)
        assert d.coefficients == declared


@pytest.mark.parametrize("action,p", [(tame(3, 2, 2), 2), (tame(7, 3, 2), 3)],
                         ids=["tame-p2", "tame-p3"])
def test_tame_grading_oracle(action, p):
    """For sigma(y) = zeta*y, the decomposition is the grading of f by
    y-degree mod p: independent oracle sorting monomials directly."""
    rng = Random(233)
    ring = action.ring
    y = ring.var("y")
    for _ in range(60):
        b = random_poly(rng, ring, 7, allow_zero=True)
        d = descend(action, y, b)
        graded = [dict() for _ in range(p)]
        for exps, coeff in b.terms.items():
            ydeg = exps[ring.var_index("y")]
            i = ydeg % p
            reduced = list(exps)
            reduced[ring.var_index("y")] = ydeg - i
            graded[i][tuple(reduced)] = coeff
        expected = tuple(Poly(ring, t) for t in graded)
        assert d.coefficients == expected


def test_tame_univariate_example():
    ring = Ring(Field.prime(3), ("y",), prime_vars=("y",))
    action = CyclicAction(ring, 2, {"y": ring.parse("2*y")})
    d = descend(action, ring.var("y"), ring.parse("y^3 + y^2 + 1"))
    assert d.coefficients == (ring.parse("y^2 + 1"), ring.parse("y^2"))


def test_fraction_input(as3):
    rng = Random(239)
    ring = as3.ring
    y = ring.var("y")
    for _ in range(25):
        num = random_poly(rng, ring, 5, allow_zero=True)
        den = random_unit(rng, ring, 3)
        b = LocalFraction(num, den)
        d = descend(as3, y, b)
        assert d.denominator is not None
        assert as3.is_invariant(d.denominator)
        assert all(d.invariant_flags)
        assert recompose(d) == b


def test_not_a_generator_surfaces(counterexample):
    ring = counterexample.ring
    # I(Y) = X2 cannot divide I(Z) = X1
    with pytest.raises(NotAGenerator):
        descend(counterexample, ring.var("Y"), ring.var("Z"))


def test_transfer_trivial_divisor(as2):
    ring = as2.ring
    report = divisibility_transfer_check(
        as2, ring.var("y"), ring.one(), [ring.parse("y^2 + x*y"), ring.var("x")])
    assert report.all_pass


def test_transfer_pinned_p2(as2):
    ring = as2.ring
    report = divisibility_transfer_check(
        as2, ring.var("y"), ring.var("x"), [ring.parse("y^2 + x*y"), ring.var("x")])
    assert report.all_pass
    assert report.checks[0].coefficient == ring.var("x") * ring.parse("y^2 + x*y")
    assert report.checks[1].coefficient == ring.parse("x^2")


def test_transfer_pinned_p3(as3):
    ring = as3.ring
    report = divisibility_transfer_check(
        as3, ring.var("y"), ring.parse("y^3 - x^2*y"),
        [ring.one(), ring.zero(), ring.zero()])
    assert report.all_pass


def test_transfer_rejects_bad_instances(as2):
    ring = as2.ring
    with pytest.raises(InvalidInstance):
        divisibility_transfer_check(as2, ring.var("y"), ring.var("y"),
                                    [ring.one(), ring.zero()])
    with pytest.raises(InvalidInstance):
        divisibility_transfer_check(as2, ring.var("y"), ring.one(),
                                    [ring.var("y"), ring.zero()])
    with pytest.raises(InvalidInstance):
        divisibility_transfer_check(as2, ring.var("y"), ring.zero(),
                                    [ring.one(), ring.zero()])


def test_monogenic_report(as2):
    ring = as2.ring
    report = monogenic_basis_check(
        as2, ring.var("y"),
        [ring.parse("y^2"), ring.parse("x*y"), ring.parse("y^3 + x"), ring.zero()])
    assert report.all_pass
    assert all(report.min_poly_invariant)
    assert report.min_poly_coeffs == (ring.parse("y^2 + x*y"), ring.var("x"))


def test_monogenic_report_records_failures(counterexample):
    ring = counterexample.ring
    report = monogenic_basis_check(counterexample, ring.var("Y"),
                                   [ring.var("Z"), ring.var("X1")])
    assert not report.samples[0].ok      # I(Z) = X1 not divisible by X2
    assert report.samples[1].ok          # X1 is invariant, descends trivially
    assert not report.all_pass
