"""Pseudo-reflection detection, invariant parameter systems, the free-rank
dimension count, and the binomial bookkeeping for small group orders.

An action is a pseudo-reflection when the distinguished prime admits a
generating system in which all parameters but one are invariant.  Given an
augmentation generator y, such a system is constructed explicitly: descend
each remaining parameter and keep only its degree-zero coefficient, which is
invariant and differs from the original parameter by a multiple of y.

The free-rank check compares the dimension of the ring modulo the n-th power
of the declared invariant-generator ideal (counted by Groebner standard
monomials) against p times the dimension of the invariants modulo the same
power (counted combinatorially, trusting the declaration that the invariant
ring is polynomial on the given generators).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .action import CyclicAction
from .descent import descend
from .errors import (
    ConstructionFailure,
    InvalidInstance,
    NotAGenerator,
    NotAParameterSystem,
    NotCofinal,
    OutOfRange,
)
from .groebner import IdealGens, buchberger, ideals_equal
from .poly import ORDER_KEYS, Poly, Ring, monomial_div


@dataclass(frozen=True)
class ParameterSystem:
    """Generators of the distinguished prime with per-parameter invariance."""

    parameters: tuple[Poly, ...]
    invariant_flags: tuple[bool, ...]

    @property
    def non_invariant_count(self) -> int:
        return sum(1 for f in self.invariant_flags if not f)


def _prime_ideal(ring: Ring) -> IdealGens:
    return IdealGens.make(ring, [ring.var(v) for v in ring.prime_vars])


def generates_prime(ring: Ring, params: Sequence[Poly]) -> bool:
    return ideals_equal(IdealGens.make(ring, params), _prime_ideal(ring))


def pseudo_reflection_direct(action: CyclicAction, params: Sequence[Poly]) -> bool:
    """True iff at most one parameter of the system moves under the action."""
    if not generates_prime(action.ring, params):
        raise NotAParameterSystem(
            "parameters do not generate the distinguished prime")
    moved = sum(1 for q in params if not action.is_invariant(q))
    return moved <= 1


def invariant_parameters(action: CyclicAction, y_var: str,
                         declared: Sequence[Poly] | None = None) -> ParameterSystem:
    """Replace every parameter except y by its invariant degree-zero
    descent coefficient; the result still generates the prime and is a
    pseudo-reflection witness."""
    ring = action.ring
    y = ring.var(y_var)
    if not action.generates_augmentation_ideal(y):
        raise NotAGenerator(f"variable {y_var} is not an augmentation generator")
    if declared is not None:
        params = list(declared)
        if not generates_prime(ring, params):
            raise NotAParameterSystem("declared parameters do not generate the prime")
        others = [q for q in params if q != y]
        if len(others) == len(params):
            raise InvalidInstance(f"declared parameters must include {y_var}")
    else:
        others = [ring.var(v) for v in ring.prime_vars if v != y_var]
    straightened = []
    for q in others:
        d = descend(action, y, q)
        straightened.append(d.coefficients[0])
    result = [y] + straightened
    flags = tuple(action.is_invariant(q) for q in result)
    if not all(flags[1:]):
        raise ConstructionFailure("a straightened parameter is not invariant")
    if not generates_prime(ring, result):
        raise ConstructionFailure("straightened system no longer generates the prime")
    return ParameterSystem(tuple(result), flags)


def lambda_count(n: int, d: int) -> int:
    """Number of degree-n monomials in d variables: C(d+n-1, d-1)."""
    if n < 0 or d < 1:
        raise OutOfRange(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    return math.comb(d + n - 1, d - 1)


@dataclass(frozen=True)
class InequalityCheck:
    """The two binomial bounds driving the order-3 regularity argument."""

    d: int
    quadratic: int     # C(d+1, d-1) = (d+1)d/2
    cubic: int         # C(d+2, d-1) = (d+2)(d+1)d/6
    bound: int         # 1 + d
    first_holds: bool  # quadratic >= bound, with equality exactly at d = 2
    second_holds: bool  # cubic > bound

    @property
    def ok(self) -> bool:
        return self.first_holds and self.second_holds


def p3_inequalities(d: int) -> InequalityCheck:
    if d < 2:
        raise OutOfRange(f"inequalities need d >= 2, got {d}")
    quadratic = math.comb(d + 1, d - 1)
    cubic = math.comb(d + 2, d - 1)
    bound = 1 + d
    return InequalityCheck(d, quadratic, cubic, bound,
                           quadratic >= bound, cubic > bound)


@dataclass(frozen=True)
class RankReport:
    """Dimension comparison at one truncation level."""

    n: int
    dim_ring: int        # dim of B modulo the n-th power of the invariant ideal
    dim_invariants: int  # dim of the invariants modulo the same power
    p: int

    @property
    def ok(self) -> bool:
        return self.dim_ring == self.p * self.dim_invariants


def _standard_monomial_count(ring: Ring, gens: IdealGens, degree_cap: int = 64) -> int:
    """Count monomials outside the leading-term ideal of gens.

    The staircase must be finite: every variable needs a pure power among the
    leading terms, otherwise the quotient is infinite-dimensional.
    """
    gb = buchberger(gens)
    key = ORDER_KEYS[gb.order]
    leads = [g.leading_term(key)[0] for g in gb.basis]
    nvars = ring.nvars
    for i in range(nvars):
        if not any(all(e == 0 for j, e in enumerate(lead) if j != i) for lead in leads):
            raise NotCofinal(
                f"no power of {ring.variables[i]} lies in the ideal; "
                "the quotient is not finite-dimensional")
    count = 0
    stack = [(0,) * nvars]
    seen = {stack[0]}
    while stack:
        mono = stack.pop()
        if any(monomial_div(mono, lead) is not None for lead in leads):
            continue
        if sum(mono) > degree_cap:
            raise NotCofinal("standard monomial enumeration exceeded the degree cap")
        count += 1
        for i in range(nvars):
            nxt = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return count


def free_rank_condition(action: CyclicAction, invariant_gens: Sequence[Poly],
                        n_max: int) -> list[RankReport]:
    """For n = 1..n_max, compare dim B/(q_1,..,q_m)^n with p * (number of
    monomials of degree < n in m variables).

    Equality at every level is what freeness of rank p looks like in
    dimensions; the invariants are trusted to be polynomial on the declared
    generators, but invariance itself is verified.
    """
    if n_max < 1:
        raise OutOfRange(f"need n_max >= 1, got {n_max}")
    gens = list(invariant_gens)
    if not gens:
        raise InvalidInstance("need at least one invariant generator")
    for q in gens:
        if not action.is_invariant(q):
            raise InvalidInstance(f"declared generator {q} is not invariant")
        if q.is_zero():
            raise InvalidInstance("zero generator")
    ring = action.ring
    m = len(gens)
    reports = []
    for n in range(1, n_max + 1):
        products = []
        for combo in combinations_with_replacement(range(m), n):
            prod = ring.one()
            for idx in combo:
                prod = prod * gens[idx]
            products.append(prod)
        dim_ring = _standard_monomial_count(ring, IdealGens.make(ring, products))
        dim_inv = sum(lambda_count(j, m) for j in range(n))
        reports.append(RankReport(n, dim_ring, dim_inv, action.p))
    return reports
