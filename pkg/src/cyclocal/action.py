"""Order-p ring automorphisms of a localized polynomial ring and the
difference-operator calculus they induce.

An action is given by the images of the variables under a chosen generator
sigma of the cyclic group.  The supported class is residue-trivial: every
image differs from its variable by an element of the distinguished prime, so
sigma preserves the prime, carries units to units, and fixes coefficients.

The central object is the augmentation operator I = sigma - id.  Its values
on the ring variables generate the augmentation ideal, and an element y with
I_G = B*I(y) is called an augmentation generator; the search for one reduces
to the local principality test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    DegenerateOrbit,
    DivisionByZero,
    InternalIdentityViolation,
    NotAUnit,
    NotLocal,
    NotPrime,
    OrderViolation,
    TrivialAction,
)
from .groebner import IdealGens, LocalPrime, divides_locally, in_prime, is_principal_locally
from .poly import LocalFraction, Poly, Ring, _is_prime


@dataclass(frozen=True)
class Certificate:
    """Evidence gathered by validate(): declared order and locality both hold."""

    p: int
    order_ok: bool
    locality_ok: bool
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class AugmentationIdeal:
    """Variable augmentations that generate the augmentation ideal.

    generators[i] is the (nonzero) augmentation of source_vars[i]; every
    generator lies in the distinguished prime.  principal_witness, when set,
    is the index of a generator that locally generates the whole ideal.
    """

    gens: IdealGens
    source_vars: tuple[str, ...]
    principal_witness: int | None = None

    def is_zero(self) -> bool:
        return self.gens.is_zero()


class CyclicAction:
    """A p-cyclic group of local automorphisms, given by a generator sigma."""

    def __init__(self, ring: Ring, p: int, images: Mapping[str, Poly]):
        if not _is_prime(p):
            raise NotPrime(f"group order {p} is not prime")
        full: dict[str, Poly] = {}
        for v in ring.variables:
            img = images.get(v)
            full[v] = img if img is not None else ring.var(v)
            if full[v].ring != ring:
                raise ValueError(f"image of {v!r} lives in a different ring")
        for v in images:
            if v not in ring.variables:
                raise ValueError(f"image given for unknown variable {v!r}")
        self.ring = ring
        self.p = p
        self.images = full
        self.prime = LocalPrime.of_ring(ring)
        self._power_images: dict[int, dict[str, Poly]] = {0: {v: ring.var(v) for v in ring.variables}, 1: full}

    def _images_power(self, k: int) -> dict[str, Poly]:
        k = k % self.p
        if k not in self._power_images:
            prev = self._images_power(k - 1)
            self._power_images[k] = {v: prev[v].substitute(self.images) for v in self.ring.variables}
        return self._power_images[k]

    def apply(self, f: Poly) -> Poly:
        """sigma(f)."""
        return f.substitute(self.images)

    def apply_power(self, f: Poly, k: int) -> Poly:
        """sigma^k(f); exponents are taken mod p."""
        return f.substitute(self._images_power(k))

    # -- validation -------------------------------------------------------------

    def validate(self) -> Certificate:
        """Check locality and that the automorphism has exact order p."""
        notes = []
        for v in self.ring.variables:
            delta = self.images[v] - self.ring.var(v)
            if not in_prime(delta, self.prime):
                raise NotLocal(
                    f"sigma({v}) - {v} = {delta} is not in the prime "
                    f"({', '.join(self.prime.variables)})")
        notes.append("locality: sigma(x) - x lies in the prime for every variable")
        for t in range(1, self.p):
            imgs = self._images_power(t)
            if all(imgs[v] == self.ring.var(v) for v in self.ring.variables):
                raise OrderViolation(f"sigma^{t} is already the identity (declared order {self.p})")
        final = {v: self._images_power(self.p - 1)[v].substitute(self.images) for v in self.ring.variables}
        for v in self.ring.variables:
            if final[v] != self.ring.var(v):
                raise OrderViolation(f"sigma^{self.p}({v}) = {final[v]} != {v}")
        notes.append(f"order: sigma^{self.p} = id and no smaller power is the identity")
        notes.append("coefficients are fixed by construction")
        return Certificate(self.p, True, True, tuple(notes))

    # -- augmentation calculus ----------------------------------------------------

    def augment(self, f: Poly) -> Poly:
        """I(f) = sigma(f) - f."""
        return self.apply(f) - f

    def augment_fraction(self, b1: Poly, b2: Poly) -> LocalFraction:
        """I(b1/b2) = (I(b1)*b2 - b1*I(b2)) / (b2*sigma(b2)) for a unit b2."""
        if b2.is_zero():
            raise DivisionByZero("fraction with zero denominator")
        if b2.in_distinguished_prime():
            raise NotAUnit(f"denominator {b2} lies in the distinguished prime")
        num = self.augment(b1) * b2 - b1 * self.augment(b2)
        return LocalFraction(num, b2 * self.apply(b2))

    def orbit(self, f: Poly) -> list[Poly]:
        """[f, sigma(f), ..., sigma^(p-1)(f)]."""
        out = [f]
        for _ in range(self.p - 1):
            out.append(self.apply(out[-1]))
        return out

    def is_invariant(self, f: Poly | LocalFraction) -> bool:
        if isinstance(f, LocalFraction):
            return self.apply(f.num) * f.den == f.num * self.apply(f.den)
        return self.apply(f) == f

    def trace(self, f: Poly) -> Poly:
        """Sum of the full orbit; always invariant."""
        total = self.ring.zero()
        for g in self.orbit(f):
            total = total + g
        return total

    def norm(self, f: Poly) -> Poly:
        """Product of the full orbit; always invariant."""
        total = self.ring.one()
        for g in self.orbit(f):
            total = total * g
        return total

    def minimal_polynomial(self, y: Poly) -> list[Poly]:
        """Coefficients c_0..c_{p-1} of prod_k (T - sigma^k(y)), monic of degree p.

        Every coefficient is a symmetric function of the orbit, hence
        invariant; this is asserted.
        """
        orb = self.orbit(y)
        if len(set(orb)) != self.p:
            raise DegenerateOrbit(f"orbit of {y} has fewer than {self.p} distinct elements")
        coeffs = [self.ring.one()]  # polynomial 1 in the auxiliary variable T
        for root in orb:
            nxt = [self.ring.zero()] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - root * c
            coeffs = nxt
        assert coeffs[self.p] == self.ring.one()
        lower = coeffs[: self.p]
        for c in lower:
            if not self.is_invariant(c):
                raise InternalIdentityViolation(f"orbit-symmetric coefficient {c} moved under sigma")
        return lower

    # -- augmentation ideal ----------------------------------------------------

    def augmentation_ideal(self) -> AugmentationIdeal:
        """Nonzero variable augmentations, in variable order."""
        gens = []
        sources = []
        for v in self.ring.variables:
            g = self.augment(self.ring.var(v))
            if not g.is_zero():
                assert in_prime(g, self.prime)
                gens.append(g)
                sources.append(v)
        return AugmentationIdeal(IdealGens.make(self.ring, gens), tuple(sources))

    def find_augmentation_generator(self) -> str | None:
        """Variable whose augmentation locally generates the augmentation
        ideal, or None when the ideal is not principal."""
        ideal = self.augmentation_ideal()
        if ideal.is_zero():
            raise TrivialAction("all variable augmentations vanish")
        idx = is_principal_locally(ideal.gens, self.prime)
        if idx is None:
            return None
        return ideal.source_vars[idx]

    def generates_augmentation_ideal(self, y: Poly) -> bool:
        """True iff I(y) locally divides every variable augmentation."""
        iy = self.augment(y)
        if iy.is_zero():
            return False
        ideal = self.augmentation_ideal()
        return all(divides_locally(iy, g, self.prime) for g in ideal.gens.generators)

    def __repr__(self) -> str:
        imgs = ", ".join(f"{v}->{self.images[v]}" for v in self.ring.variables)
        return f"<CyclicAction p={self.p} on {self.ring}: {imgs}>"
