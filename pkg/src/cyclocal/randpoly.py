"""Seeded random polynomial generation for the property-check tasks.

Uses random.Random so a fixed seed reproduces the same instances on every
run; that determinism is part of the report contract.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .poly import INTEGER_KIND, PRIME_KIND, Poly, Ring


def random_coeff(rng: Random, ring: Ring, nonzero: bool = True):
    kind = ring.field.kind
    if kind == PRIME_KIND:
        low = 1 if nonzero else 0
        return rng.randrange(low, ring.field.characteristic)
    if kind == INTEGER_KIND:
        c = rng.randint(-9, 9)
        while nonzero and c == 0:
            c = rng.randint(-9, 9)
        return c
    num = rng.randint(-9, 9)
    while nonzero and num == 0:
        num = rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 9))


def random_monomial(rng: Random, ring: Ring, max_degree: int) -> tuple[int, ...]:
    degree = rng.randint(0, max_degree)
    exps = [0] * ring.nvars
    for _ in range(degree):
        exps[rng.randrange(ring.nvars)] += 1
    return tuple(exps)


def random_poly(rng: Random, ring: Ring, max_degree: int = 8,
                max_terms: int = 6, allow_zero: bool = False) -> Poly:
    nterms = rng.randint(0 if allow_zero else 1, max_terms)
    f = ring.zero()
    for _ in range(nterms):
        f = f + ring.monomial(random_monomial(rng, ring, max_degree),
                              random_coeff(rng, ring))
    if not allow_zero and f.is_zero():
        f = f + ring.monomial(random_monomial(rng, ring, max_degree),
                              random_coeff(rng, ring)) + ring.one()
    return f


def random_unit(rng: Random, ring: Ring, max_degree: int = 4) -> Poly:
    """A random element outside the distinguished prime."""
    f = random_poly(rng, ring, max_degree, max_terms=3, allow_zero=True)
    if f.in_distinguished_prime():
        f = f + ring.one()
    return f
