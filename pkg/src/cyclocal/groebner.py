"""Buchberger Groebner bases, ideal membership, colon ideals, and the
localization-aware divisibility and principality tests.

All computations here require field coefficients (prime fields or the
rationals).  Localization is always at a prime generated by a subset of the
ring variables, which makes membership in the prime a syntactic check and
turns local divisibility into a colon-ideal computation: g lies in f*B_P
exactly when the colon ideal (f):(g) is not contained in P.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisionByZero, UnsupportedDomain, ZeroIdeal
from .poly import (
    ORDER_KEYS,
    Poly,
    Ring,
    monomial_div,
    monomial_lcm,
    monomial_mul,
)


@dataclass(frozen=True)
class LocalPrime:
    """The distinguished prime, generated by a subset of the variables."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise ValueError("a local prime needs at least one variable")

    @staticmethod
    def of_ring(ring: Ring) -> "LocalPrime":
        return LocalPrime(ring.prime_vars)

    def indices(self, ring: Ring) -> tuple[int, ...]:
        return tuple(ring.var_index(v) for v in self.variables)


def in_prime(f: Poly, prime: LocalPrime) -> bool:
    """True iff every term of f involves a prime variable (0 qualifies)."""
    return f.touches(prime.indices(f.ring))


@dataclass(frozen=True)
class IdealGens:
    """A finite generating set; zero generators are dropped on construction."""

    ring: Ring
    generators: tuple[Poly, ...]

    @staticmethod
    def make(ring: Ring, polys: Iterable[Poly]) -> "IdealGens":
        kept = []
        for p in polys:
            if p.ring != ring:
                raise ValueError("generator from a different ring")
            if not p.is_zero():
                kept.append(p)
        return IdealGens(ring, tuple(kept))

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    basis: tuple[Poly, ...]
    order: str


def _require_field(ring: Ring):
    if not ring.field.is_field:
        raise UnsupportedDomain(
            "Groebner computations need field coefficients, got " + str(ring.field))


def normal_form(f: Poly, reducers: Sequence[Poly], key=None) -> Poly:
    """Fully reduce f modulo the reducers (tried in list order)."""
    if not reducers:
        return f
    ring = f.ring
    key = key or ring.order_key
    fld = ring.field
    leads = [g.leading_term(key) for g in reducers]
    rem = ring.zero()
    h = f
    while h.terms:
        he, hc = h.leading_term(key)
        for g, (ge, gc) in zip(reducers, leads):
            m = monomial_div(he, ge)
            if m is not None:
                c = fld.mul(hc, fld.inv(gc))
                h = h - Poly(ring, {m: c}) * g
                break
        else:
            t = Poly(ring, {he: hc})
            rem = rem + t
            h = h - t
    return rem


def _spoly(f: Poly, g: Poly, key) -> Poly:
    ring = f.ring
    fld = ring.field
    (fe, fc), (ge, gc) = f.leading_term(key), g.leading_term(key)
    lcm = monomial_lcm(fe, ge)
    mf = Poly(ring, {monomial_div(lcm, fe): fld.inv(fc)})
    mg = Poly(ring, {monomial_div(lcm, ge): fld.inv(gc)})
    return mf * f - mg * g


def buchberger(gens: IdealGens, order: str | None = None) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger's algorithm.

    Pair selection is by sugar degree, then the order key of the pair's lcm,
    then pair index, so repeated runs yield bit-identical bases.  The product
    and chain criteria prune S-pairs.
    """
    _require_field(gens.ring)
    ring = gens.ring
    order = order or ring.order
    key = ORDER_KEYS[order]

    basis: list[Poly] = []
    sugars: list[int] = []
    for g in gens.generators:
        if not g.is_zero():
            basis.append(g.monic(key))
            sugars.append(g.total_degree())
    if not basis:
        return GroebnerBasis(ring, (), order)

    leads = [g.leading_term(key)[0] for g in basis]
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_sugar(i: int, j: int) -> int:
        lcm = monomial_lcm(leads[i], leads[j])
        return max(sugars[i] + sum(lcm) - sum(leads[i]),
                   sugars[j] + sum(lcm) - sum(leads[j]))

    def selection_key(p: tuple[int, int]):
        lcm = monomial_lcm(leads[p[0]], leads[p[1]])
        return (pair_sugar(*p), key(lcm), p)

    while pairs:
        i, j = min(pairs, key=selection_key)
        pairs.discard((i, j))
        lcm = monomial_lcm(leads[i], leads[j])
        if lcm == monomial_mul(leads[i], leads[j]):
            continue  # coprime leading monomials: S-pair reduces to zero
        chain = any(
            k != i and k != j
            and monomial_div(lcm, leads[k]) is not None
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        )
        if chain:
            continue
        s = _spoly(basis[i], basis[j], key)
        r = normal_form(s, basis, key)
        if not r.is_zero():
            new_index = len(basis)
            basis.append(r.monic(key))
            sugars.append(max(pair_sugar(i, j), r.total_degree()))
            leads.append(r.leading_term(key)[0])
            pairs.update((k, new_index) for k in range(new_index))

    # minimalize: drop elements whose lead is divisible by another lead
    minimal: list[Poly] = []
    for g in sorted(basis, key=lambda h: key(h.leading_term(key)[0])):
        ge = g.leading_term(key)[0]
        if all(monomial_div(ge, h.leading_term(key)[0]) is None for h in minimal):
            minimal.append(g)
    # interreduce: fully reduce each element against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others, key).monic(key))
    reduced.sort(key=lambda h: key(h.leading_term(key)[0]))
    return GroebnerBasis(ring, tuple(reduced), order)


def ideal_member(f: Poly, gens: IdealGens, gb: GroebnerBasis | None = None) -> bool:
    """True iff f reduces to zero modulo the reduced basis of the ideal."""
    if gens.is_zero():
        return f.is_zero()
    gb = gb or buchberger(gens)
    key = ORDER_KEYS[gb.order]
    return normal_form(f, gb.basis, key).is_zero()


def ideals_equal(a: IdealGens, b: IdealGens) -> bool:
    """Reduced bases are unique per order, so ideal equality is basis equality."""
    if a.ring != b.ring:
        return False
    return buchberger(a).basis == buchberger(b).basis


def _fresh_name(ring: Ring) -> str:
    name = "_t"
    while name in ring.variables:
        name += "_"
    return name


def colon_ideal(gens: IdealGens, g: Poly) -> IdealGens:
    """Generators of (I : g) = {h : h*g in I}.

    Computed from I n (g) by eliminating an auxiliary variable t from
    t*I + (1-t)*(g), then dividing the t-free basis elements by g.
    """
    if g.is_zero():
        raise DivisionByZero("colon ideal by zero")
    _require_field(gens.ring)
    ring = gens.ring
    if gens.is_zero():
        return gens
    tname = _fresh_name(ring)
    ext = Ring(ring.field, (tname,) + ring.variables, order="elim1")

    def lift(p: Poly, t_exp: int) -> Poly:
        return Poly(ext, {(t_exp,) + e: c for e, c in p.terms.items()})

    t_poly = ext.var(tname)
    ext_gens = [lift(f, 1) for f in gens.generators]
    ext_gens.append((ext.one() - t_poly) * lift(g, 0))
    gb = buchberger(IdealGens.make(ext, ext_gens))

    quotients = []
    for h in gb.basis:
        if all(e[0] == 0 for e in h.terms):
            projected = Poly(ring, {e[1:]: c for e, c in h.terms.items()})
            q = projected.exact_divide(g)
            assert q is not None, "intersection element not divisible by g"
            quotients.append(q)
    return IdealGens.make(ring, quotients)


def divides_locally(f: Poly, g: Poly, prime: LocalPrime) -> bool:
    """True iff g lies in f*B_P, i.e. the colon ideal (f):(g) escapes P.

    An ideal is contained in a prime exactly when all its generators are, so
    it suffices to test the computed colon generators against P.
    """
    if f.is_zero():
        raise DivisionByZero("local divisibility by zero")
    if g.is_zero():
        return True
    colon = colon_ideal(IdealGens.make(f.ring, [f]), g)
    return any(not in_prime(h, prime) for h in colon.generators)


def is_principal_locally(gens: IdealGens, prime: LocalPrime) -> int | None:
    """Least index i such that generator i locally divides every generator.

    Returns None when no generator works; since a principal ideal of a local
    ring is generated by one member of any finite generating set, None means
    the ideal is not principal in the localization.
    """
    if gens.is_zero():
        raise ZeroIdeal("principality test on the zero ideal")
    for i, f in enumerate(gens.generators):
        if all(divides_locally(f, g, prime) for j, g in enumerate(gens.generators) if j != i):
            return i
    return None
