"""The inductive generator tower and its closed form.

Starting from powers of an element y, each row of the triangular table is
obtained by applying the augmentation operator and dividing by the previous
row's first nontrivial entry.  Every division is exact for any y with
nonzero augmentation: the quotients are, identically, the multiset-indexed
orbit sums

    entry(n, i) = sum over 0 <= k_1 <= ... <= k_{i-n} <= n of
                  prod_j sigma^{k_j}(y)

and the rows telescope:  I(entry(n, i)) = (sigma^{n+1}(y) - y) * entry(n+1, i).

The universal orbit ring -- integer coefficients, one variable per group
element, sigma acting by cyclic shift -- is the ambient in which these are
unconditional polynomial identities; verifying them there verifies them for
every action of the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .action import CyclicAction
from .errors import DegenerateOrbit, InternalIdentityViolation, NotPrime
from .groebner import divides_locally
from .poly import Field, Poly, Ring, _is_prime


@dataclass(frozen=True)
class TowerTable:
    """Triangular array entry(n, i), 0 <= n <= p-1, n <= i <= p-1."""

    action: CyclicAction
    y: Poly
    entries: dict[tuple[int, int], Poly]
    methods: dict[tuple[int, int], str]

    @property
    def p(self) -> int:
        return self.action.p

    def entry(self, n: int, i: int) -> Poly:
        if (n, i) not in self.entries:
            raise IndexError(f"no tower entry ({n}, {i}) for p={self.p}")
        return self.entries[(n, i)]

    def cells(self) -> list[tuple[int, int]]:
        return sorted(self.entries)


def tower_build(action: CyclicAction, y: Poly) -> TowerTable:
    """Build the table by the augment-and-divide recursion."""
    p = action.p
    iy = action.augment(y)
    if iy.is_zero():
        raise DegenerateOrbit(f"augmentation of {y} vanishes; tower undefined")
    entries: dict[tuple[int, int], Poly] = {}
    methods: dict[tuple[int, int], str] = {}
    for i in range(p):
        entries[(0, i)] = y ** i
        methods[(0, i)] = "recursion"
    for n in range(p - 1):
        divisor = action.augment(entries[(n, n + 1)])
        for i in range(n + 1, p):
            q = action.augment(entries[(n, i)]).exact_divide(divisor)
            if q is None:
                raise InternalIdentityViolation(
                    f"tower division failed at cell ({n + 1}, {i}); "
                    "the defining identity guarantees exactness")
            entries[(n + 1, i)] = q
            methods[(n + 1, i)] = "recursion"
    return TowerTable(action, y, entries, methods)


def tower_closed_form(action: CyclicAction, y: Poly, i: int, n: int) -> Poly:
    """Sum of orbit products over multisets of size i-n drawn from {0..n}."""
    p = action.p
    if not (0 <= n <= i <= p - 1):
        raise IndexError(f"cell ({n}, {i}) outside the tower for p={p}")
    orbit = action.orbit(y)  # orbit[k] = sigma^k(y)
    total = action.ring.zero()
    for ks in combinations_with_replacement(range(n + 1), i - n):
        prod = action.ring.one()
        for k in ks:
            prod = prod * orbit[k]
        total = total + prod
    return total


@dataclass(frozen=True)
class TowerCellCheck:
    n: int
    i: int
    closed_form_matches: bool
    telescoping_ok: bool | None   # None on the bottom row, where it is vacuous
    generator_ok: bool | None     # None when not applicable

    @property
    def ok(self) -> bool:
        return (self.closed_form_matches
                and self.telescoping_ok is not False
                and self.generator_ok is not False)


@dataclass(frozen=True)
class TowerReport:
    table: TowerTable
    checks: tuple[TowerCellCheck, ...]
    generator_checked: bool

    @property
    def all_pass(self) -> bool:
        return all(c.ok for c in self.checks)


def tower_verify(action: CyclicAction, y: Poly) -> TowerReport:
    """Check, cell by cell: recursion equals closed form, and the rows
    telescope.  When I(y) locally generates the augmentation ideal (which
    needs field coefficients), additionally check that each entry(n, n+1)
    augments to sigma^{n+1}(y) - y and generates the same local ideal as y's
    augmentation."""
    table = tower_build(action, y)
    p = action.p
    orbit = action.orbit(y)
    iy = action.augment(y)
    check_generator = action.ring.field.is_field and action.generates_augmentation_ideal(y)
    checks = []
    for (n, i) in table.cells():
        ent = table.entry(n, i)
        cf = tower_closed_form(action, y, i, n)
        matches = ent == cf
        if n <= p - 2 and i >= n + 1:
            step = orbit[(n + 1) % p] - y
            telescoping = action.augment(ent) == step * table.entry(n + 1, i)
        else:
            telescoping = None
        generator_ok = None
        if check_generator and i == n + 1 and n <= p - 2:
            step = action.augment(ent)
            generator_ok = (step == orbit[(n + 1) % p] - y
                            and divides_locally(step, iy, action.prime)
                            and divides_locally(iy, step, action.prime))
        checks.append(TowerCellCheck(n, i, matches, telescoping, generator_ok))
    return TowerReport(table, tuple(checks), check_generator)


def universal_orbit_ring(p: int) -> CyclicAction:
    """Integer-coefficient ring on u_0..u_{p-1} with sigma the cyclic shift.

    The orbit of u_0 is the whole variable list, so identities verified here
    specialize to any p-cyclic action via u_k -> sigma^k(y).
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    names = tuple(f"u{k}" for k in range(p))
    ring = Ring(Field.integers(), names, order="grevlex", prime_vars=names)
    images = {names[k]: ring.var(names[(k + 1) % p]) for k in range(p)}
    return CyclicAction(ring, p, images)
