"""Groebner bases, membership with cofactor certificates, colon ideals, and
the localized divisibility and principality tests."""

from random import Random

import pytest

from cyclocal import (
    Field,
    IdealGens,
    LocalPrime,
    Ring,
    buchberger,
    colon_ideal,
    divides_locally,
    ideal_member,
    ideals_equal,
    in_prime,
    is_principal_locally,
)
from cyclocal.errors import DivisionByZero, UnsupportedDomain, ZeroIdeal
from cyclocal.randpoly import random_poly
from util import solve_cofactors

F2 = Ring(Field.prime(2), ("x", "y"), prime_vars=("x", "y"))
F5 = Ring(Field.prime(5), ("x", "y"), prime_vars=("x", "y"))
QQ = Ring(Field.rationals(), ("x", "y"), prime_vars=("x", "y"))
QLEX = Ring(Field.rationals(), ("x", "y"), order="lex", prime_vars=("x", "y"))
ZZ = Ring(Field.integers(), ("x", "y"), prime_vars=("x", "y"))
P_XY = LocalPrime(("x", "y"))


def gens(ring, *texts):
    return IdealGens.make(ring, [ring.parse(t) for t in texts])


def test_already_reduced():
    gb = buchberger(gens(QQ, "x", "y"))
    assert set(gb.basis) == {QQ.var("x"), QQ.var("y")}


def test_unit_ideal():
    gb = buchberger(gens(QQ, "x", "1 + x"))
    assert gb.basis == (QQ.one(),)


def test_lex_hand_example():
    gb = buchberger(gens(QLEX, "x*y - 1", "y^2 - 1"))
    assert set(gb.basis) == {QLEX.parse("x - y"), QLEX.parse("y^2 - 1")}


def test_reduced_basis_idempotent():
    rng = Random(21)
    for _ in range(25):
        g = IdealGens.make(F5, [random_poly(rng, F5, 3, max_terms=3) for _ in range(3)])
        gb = buchberger(g)
        again = buchberger(IdealGens.make(F5, list(gb.basis)))
        assert again.basis == gb.basis


def test_determinism():
    g = gens(F5, "x^2*y - 1", "x*y^2 - x", "y^3 - y")
    assert buchberger(g).basis == buchberger(g).basis


def test_integer_coefficients_rejected():
    with pytest.raises(UnsupportedDomain):
        buchberger(gens(ZZ, "x", "y"))


def test_membership_examples():
    assert ideal_member(QQ.var("y"), gens(QQ, "x", "y"))
    assert not ideal_member(QQ.one(), gens(QQ, "x", "y"))
    assert ideal_member(QQ.parse("x - y"), gens(QQ, "x*y - 1", "y^2 - 1"))


def test_membership_explicit_cofactors():
    # x - y = y*(x*y - 1) - x*(y^2 - 1)
    g1, g2 = QQ.parse("x*y - 1"), QQ.parse("y^2 - 1")
    assert QQ.var("y") * g1 - QQ.var("x") * g2 == QQ.parse("x - y")


@pytest.mark.parametrize("ring", [F2, F5, QQ])
def test_membership_sound_against_cofactor_search(ring):
    """Every positive membership answer on small random instances is backed
    by an explicit cofactor representation found by linear algebra."""
    rng = Random(31)
    trials = 0
    while trials < 30:
        g = [random_poly(rng, ring, 2, max_terms=3) for _ in range(2)]
        ideal = IdealGens.make(ring, g)
        if ideal.is_zero():
            continue
        # random true member of degree <= 4
        h1 = random_poly(rng, ring, 2, max_terms=2, allow_zero=True)
        h2 = random_poly(rng, ring, 2, max_terms=2, allow_zero=True)
        member = h1 * g[0] + h2 * g[1]
        assert ideal_member(member, ideal)
        assert solve_cofactors(member, list(ideal.generators), cofactor_degree=4)
        # a random poly that the basis rejects must have no low-degree cofactors
        probe = random_poly(rng, ring, 2, max_terms=3)
        if not ideal_member(probe, ideal):
            assert not solve_cofactors(probe, list(ideal.generators), cofactor_degree=3)
        trials += 1


def test_colon_examples():
    assert colon_ideal(gens(QQ, "x*y"), QQ.var("y")).generators == (QQ.var("x"),)
    assert colon_ideal(gens(QQ, "x"), QQ.one()).generators == (QQ.var("x"),)
    ring = Ring(Field.prime(2), ("Z", "Y", "X1", "X2"), prime_vars=("Y", "X1", "X2"))
    got = colon_ideal(gens(ring, "X1"), ring.var("X2"))
    assert got.generators == (ring.var("X1"),)


def test_colon_definition_both_inclusions():
    # (I : g) * g sits inside I, and members multiply into I
    ideal = gens(QQ, "x*y", "y^3")
    g = QQ.parse("y^2")
    colon = colon_ideal(ideal, g)
    for h in colon.generators:
        assert ideal_member(h * g, ideal)
    assert ideal_member(QQ.var("x") * g, ideal)
    assert ideal_member(QQ.var("x"), colon)


def test_colon_by_zero():
    with pytest.raises(DivisionByZero):
        colon_ideal(gens(QQ, "x"), QQ.zero())


def test_in_prime():
    ring = Ring(Field.prime(2), ("Z", "Y", "X1", "X2"), prime_vars=("Y", "X1", "X2"))
    P = LocalPrime(("Y", "X1", "X2"))
    assert in_prime(ring.parse("Y + X1*Z"), P)
    assert not in_prime(ring.var("Z"), P)
    assert in_prime(ring.zero(), P)


def test_divides_locally_examples():
    assert divides_locally(QQ.var("x"), QQ.parse("x^2 + x*y"), P_XY)
    ring = Ring(Field.prime(2), ("Z", "Y", "X1", "X2"), prime_vars=("Y", "X1", "X2"))
    P = LocalPrime(("Y", "X1", "X2"))
    assert not divides_locally(ring.var("X1"), ring.var("X2"), P)
    assert divides_locally(QQ.parse("1 + x"), QQ.var("y"), P_XY)


def test_divides_locally_unit_cofactor():
    # z is a unit at (x, y), so x*z divides x locally though not polynomially
    ring = Ring(Field.rationals(), ("x", "y", "z"), prime_vars=("x", "y"))
    P = LocalPrime(("x", "y"))
    f = ring.parse("x*z")
    assert ring.var("x").exact_divide(f) is None
    assert divides_locally(f, ring.var("x"), P)


def test_divides_locally_matches_plain_division_for_monomial_units():
    rng = Random(41)
    for _ in range(40):
        g = random_poly(rng, F5, 4, allow_zero=True)
        f = F5.monomial((rng.randint(0, 2), rng.randint(0, 2)), rng.randrange(1, 5))
        assert divides_locally(f, g, P_XY) == (g.exact_divide(f) is not None)


def test_divides_locally_zero_dividend():
    assert divides_locally(QQ.var("x"), QQ.zero(), P_XY)
    with pytest.raises(DivisionByZero):
        divides_locally(QQ.zero(), QQ.var("x"), P_XY)


def test_principal_examples():
    assert is_principal_locally(gens(QQ, "x"), P_XY) == 0
    ring = Ring(Field.prime(2), ("Z", "Y", "X1", "X2"), prime_vars=("Y", "X1", "X2"))
    P = LocalPrime(("Y", "X1", "X2"))
    assert is_principal_locally(gens(ring, "X1", "X2"), P) is None
    assert is_principal_locally(gens(QQ, "x^2", "x^2 + x^3"), P_XY) == 0


def test_principal_least_index_and_unit_factor():
    # both generate; the least index is reported
    assert is_principal_locally(gens(QQ, "x^2 + x^3", "x^2"), P_XY) == 0


def test_principal_zero_ideal():
    with pytest.raises(ZeroIdeal):
        is_principal_locally(IdealGens.make(QQ, []), P_XY)


def test_principal_order_insensitive():
    rng = Random(43)
    for _ in range(20):
        polys = [random_poly(rng, F5, 3, max_terms=2) for _ in range(3)]
        forward = is_principal_locally(IdealGens.make(F5, polys), P_XY)
        backward = is_principal_locally(IdealGens.make(F5, polys[::-1]), P_XY)
        assert (forward is None) == (backward is None)


def test_ideals_equal():
    assert ideals_equal(gens(QQ, "x", "y"), gens(QQ, "x + y", "y"))
    assert not ideals_equal(gens(QQ, "x"), gens(QQ, "x", "y"))
