"""Decomposition of ring elements over the invariant subring.

When y is an augmentation generator, the ring is a free module over the
invariants with basis 1, y, ..., y^{p-1}.  The coefficients of an element b
are extracted by repeated augment-and-divide against the generator tower:

    b_0 = b,   b_n = I(b_{n-1}) / I(entry(n-1, n)),

then back-substitution downwards recovers a_n from b_n and the already-known
higher coefficients.  Every division is remainder-checked: if y fails to
generate the augmentation ideal, the first inexact division raises rather
than returning a wrong answer.  A non-invariant recovered coefficient is
likewise an error, never silently accepted.

Fractional inputs b = f/u with u a unit are reduced to the polynomial case by
expanding with the remaining orbit of u, which makes the denominator the
invariant norm of u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .action import CyclicAction
from .errors import DescentFailure, InvalidInstance, NotAGenerator
from .groebner import divides_locally
from .poly import LocalFraction, Poly
from .tower import tower_build


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of b over the invariants in the basis 1, y, .., y^{p-1}.

    trace keeps the intermediate b_0..b_{p-1} for auditability.  For a
    fractional input the coefficients are fractions over the invariant
    denominator; for polynomial input denominator is None.
    """

    y: Poly
    coefficients: tuple
    trace: tuple[Poly, ...]
    invariant_flags: tuple[bool, ...]
    denominator: Poly | None = None


def descend(action: CyclicAction, y: Poly, b: Poly | LocalFraction) -> Decomposition:
    """Decompose b as sum a_i * y^i with every a_i invariant."""
    if isinstance(b, LocalFraction):
        return _descend_fraction(action, y, b)
    p = action.p
    table = tower_build(action, y)
    trace = [b]
    for n in range(1, p):
        divisor = action.augment(table.entry(n - 1, n))
        q = action.augment(trace[-1]).exact_divide(divisor)
        if q is None:
            raise NotAGenerator(
                f"augmentation step {n} is not divisible by I(entry({n - 1}, {n})); "
                f"{y} does not generate the augmentation ideal")
        trace.append(q)
    coeffs: list[Poly] = [action.ring.zero()] * p
    coeffs[p - 1] = trace[p - 1]
    for n in range(p - 2, -1, -1):
        acc = trace[n]
        for j in range(n + 1, p):
            acc = acc - coeffs[j] * table.entry(n, j)
        coeffs[n] = acc
    flags = tuple(action.is_invariant(a) for a in coeffs)
    if not all(flags):
        bad = [i for i, f in enumerate(flags) if not f]
        raise DescentFailure(f"coefficients {bad} are not invariant; "
                             f"{y} is not an augmentation generator here")
    rebuilt = action.ring.zero()
    for i in range(p - 1, -1, -1):
        rebuilt = rebuilt * y + coeffs[i]
    if rebuilt != b:
        raise DescentFailure("recomposition does not reproduce the input")
    return Decomposition(y, tuple(coeffs), tuple(trace), flags)


def _descend_fraction(action: CyclicAction, y: Poly, b: LocalFraction) -> Decomposition:
    # expand by the remaining orbit of the denominator: the new denominator is
    # the invariant norm of u, and the numerator stays polynomial
    u = b.den
    cofactor = action.ring.one()
    for k in range(1, action.p):
        cofactor = cofactor * action.apply_power(u, k)
    norm_u = u * cofactor
    assert action.is_invariant(norm_u)
    inner = descend(action, y, b.num * cofactor)
    coeffs = tuple(LocalFraction(c, norm_u) for c in inner.coefficients)
    flags = tuple(action.is_invariant(c) for c in coeffs)
    return Decomposition(y, coeffs, inner.trace, flags, denominator=norm_u)


def recompose(d: Decomposition) -> Poly | LocalFraction:
    """Sum of coefficient * y^i; inverse of descend."""
    if d.denominator is not None:
        acc = LocalFraction.from_poly(d.y.ring.zero())
        for i in range(len(d.coefficients) - 1, -1, -1):
            acc = acc * d.y + d.coefficients[i]
        return acc
    acc = d.y.ring.zero()
    for i in range(len(d.coefficients) - 1, -1, -1):
        acc = acc * d.y + d.coefficients[i]
    return acc


@dataclass(frozen=True)
class TransferCheck:
    index: int
    coefficient: Poly
    divisible: bool


@dataclass(frozen=True)
class TransferReport:
    divisor: Poly
    checks: tuple[TransferCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.divisible for c in self.checks)


def divisibility_transfer_check(action: CyclicAction, y: Poly, divisor: Poly,
                                coeffs: Sequence[Poly]) -> TransferReport:
    """Divisibility by an invariant element transfers to the coefficients.

    Builds b = sum (divisor*c_i) * y^i, descends it, and checks that every
    recovered coefficient is locally divisible by the divisor.
    """
    if divisor.is_zero():
        raise InvalidInstance("transfer divisor must be nonzero")
    if not action.is_invariant(divisor):
        raise InvalidInstance(f"divisor {divisor} is not invariant")
    for c in coeffs:
        if not action.is_invariant(c):
            raise InvalidInstance(f"coefficient {c} is not invariant")
    if len(coeffs) != action.p:
        raise InvalidInstance(f"expected {action.p} coefficients, got {len(coeffs)}")
    b = action.ring.zero()
    for i in range(action.p - 1, -1, -1):
        b = b * y + divisor * coeffs[i]
    d = descend(action, y, b)
    checks = []
    for i, a in enumerate(d.coefficients):
        divisible = a.is_zero() or divides_locally(divisor, a, action.prime)
        checks.append(TransferCheck(i, a, divisible))
    return TransferReport(divisor, tuple(checks))


@dataclass(frozen=True)
class SampleCheck:
    sample: Poly
    ok: bool
    detail: str


@dataclass(frozen=True)
class MonogenicReport:
    y: Poly
    samples: tuple[SampleCheck, ...]
    min_poly_coeffs: tuple[Poly, ...]
    min_poly_invariant: tuple[bool, ...]

    @property
    def all_pass(self) -> bool:
        return all(s.ok for s in self.samples) and all(self.min_poly_invariant)


def monogenic_basis_check(action: CyclicAction, y: Poly,
                          samples: Sequence[Poly]) -> MonogenicReport:
    """Evidence that 1, y, ..., y^{p-1} is a module basis over the invariants:
    every sample descends with invariant coefficients and recomposes exactly,
    and the minimal polynomial of y has invariant coefficients."""
    results = []
    for b in samples:
        try:
            d = descend(action, y, b)
            ok = recompose(d) == b
            detail = " | ".join(c.render() for c in d.coefficients)
        except (NotAGenerator, DescentFailure) as exc:
            ok = False
            detail = str(exc)
        results.append(SampleCheck(b, ok, detail))
    mp = action.minimal_polynomial(y)
    flags = tuple(action.is_invariant(c) for c in mp)
    return MonogenicReport(y, tuple(results), tuple(mp), flags)
