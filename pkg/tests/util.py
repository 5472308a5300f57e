"""Independent oracles used by the tests: brute-force linear algebra over the
coefficient field, invariant-element sampling, and monomial enumeration.
These deliberately avoid the library's Groebner machinery so that agreement
is evidence, not circularity.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from random import Random

from cyclocal import CyclicAction, Poly, Ring
from cyclocal.poly import PRIME_KIND


def monomials_up_to(nvars: int, max_degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            exps = [0] * nvars
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
    return out


def _rank(rows: list[list], field) -> int:
    """Gaussian elimination over F_q (ints) or Q (Fractions)."""
    rows = [list(r) for r in rows if any(c != 0 for c in r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(c, inv) for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def solve_cofactors(f: Poly, gens: list[Poly], cofactor_degree: int) -> bool:
    """Decide by brute-force linear algebra whether f = sum h_i * g_i with
    deg h_i <= cofactor_degree; no Groebner bases involved."""
    ring = f.ring
    field = ring.field
    hmonos = monomials_up_to(ring.nvars, cofactor_degree)
    products = []
    for g in gens:
        for m in hmonos:
            products.append(Poly(ring, {m: field.coerce(1)}) * g)
    support = sorted({e for p in products for e in p.terms} | set(f.terms))
    index = {e: i for i, e in enumerate(support)}
    zero = field.coerce(0)
    rows = []
    for p in products:
        row = [zero] * len(support)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    target = [zero] * len(support)
    for e, c in f.terms.items():
        target[index[e]] = c
    # solvable iff adjoining the target does not raise the rank
    base_rank = _rank(rows, field)
    return _rank(rows + [target], field) == base_rank


def quotient_dimension_oracle(ring: Ring, gens: list[Poly], degree: int) -> int:
    """dim of the ring modulo the ideal, as truncated-span codimension.

    Sound for finite quotients once the truncation degree is generous; the
    caller is responsible for choosing it (stability under +2 is asserted).
    """

    def codim(cap: int) -> int:
        monos = monomials_up_to(ring.nvars, cap)
        index = {e: i for i, e in enumerate(monos)}
        zero = ring.field.coerce(0)
        rows = []
        for g in gens:
            gd = g.total_degree()
            for m in monos:
                if sum(m) + gd <= cap:
                    prod = Poly(ring, {m: ring.field.coerce(1)}) * g
                    row = [zero] * len(monos)
                    for e, c in prod.terms.items():
                        row[index[e]] = c
                    rows.append(row)
        return len(monos) - _rank(rows, ring.field)

    a, b = codim(degree), codim(degree + 2)
    assert a == b, f"oracle not stabilized at degree {degree}: {a} vs {b}"
    return a


def random_invariant(rng: Random, action: CyclicAction, invariant_gens: list[Poly],
                     max_factors: int = 2, nonzero: bool = False) -> Poly:
    """Random polynomial expression in known invariant elements."""
    ring = action.ring
    while True:
        f = ring.zero()
        for _ in range(rng.randint(0 if not nonzero else 1, 3)):
            term = ring.one()
            for _ in range(rng.randint(0, max_factors)):
                term = term * rng.choice(invariant_gens)
            if ring.field.kind == PRIME_KIND:
                coeff = rng.randrange(1, ring.field.characteristic)
            else:
                coeff = Fraction(rng.randint(1, 9))
            f = f + term.scale(coeff)
        if not nonzero or not f.is_zero():
            return f
