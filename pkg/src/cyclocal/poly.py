"""Exact sparse multivariate polynomial arithmetic.

A polynomial is a dict mapping exponent tuples (one entry per ring variable)
to nonzero coefficients.  Coefficients live in one of three exact domains:

  * a prime field F_q        -- ints reduced to 0..q-1
  * the rationals            -- fractions.Fraction
  * the integers             -- plain ints (used by the universal orbit ring)

No floating point ever appears; every operation is exact.  The zero
polynomial is the empty dict.  Term iteration and rendering follow the ring's
monomial order (graded reverse lexicographic by default), so the text form of
a polynomial is canonical and serves as the interchange format in scenario
files and reports.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    AmbientMismatch,
    DivisionByZero,
    IncompleteMap,
    NotAUnit,
)

Coeff = Union[int, Fraction]
Exponents = tuple[int, ...]

PRIME_KIND = "prime"
RATIONAL_KIND = "rational"
INTEGER_KIND = "integer"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient domain: a prime field, the rationals, or the integers."""

    kind: str
    characteristic: int = 0

    @staticmethod
    def prime(q: int) -> "Field":
        if not _is_prime(q):
            raise ValueError(f"characteristic {q} is not prime")
        return Field(PRIME_KIND, q)

    @staticmethod
    def rationals() -> "Field":
        return Field(RATIONAL_KIND, 0)

    @staticmethod
    def integers() -> "Field":
        return Field(INTEGER_KIND, 0)

    @property
    def is_field(self) -> bool:
        return self.kind in (PRIME_KIND, RATIONAL_KIND)

    def coerce(self, value: Coeff) -> Coeff:
        """Normalize an int or Fraction into this domain."""
        if self.kind == PRIME_KIND:
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return value.numerator % self.characteristic
                return self.mul(value.numerator % self.characteristic,
                                self.inv(value.denominator % self.characteristic))
            return value % self.characteristic
        if self.kind == RATIONAL_KIND:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        c = a + b
        return c % self.characteristic if self.kind == PRIME_KIND else c

    def sub(self, a: Coeff, b: Coeff) -> Coeff:
        c = a - b
        return c % self.characteristic if self.kind == PRIME_KIND else c

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        c = a * b
        return c % self.characteristic if self.kind == PRIME_KIND else c

    def neg(self, a: Coeff) -> Coeff:
        return (-a) % self.characteristic if self.kind == PRIME_KIND else -a

    def inv(self, a: Coeff) -> Coeff:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.kind == PRIME_KIND:
            return pow(a, -1, self.characteristic)
        if self.kind == RATIONAL_KIND:
            return Fraction(1) / a
        if a in (1, -1):
            return a
        raise DivisionByZero(f"{a} is not a unit of the integers")

    def exact_div(self, a: Coeff, b: Coeff) -> Coeff | None:
        """a / b when the quotient exists in the domain, else None."""
        if b == 0:
            raise DivisionByZero("coefficient division by zero")
        if self.kind == INTEGER_KIND:
            q, r = divmod(a, b)
            return q if r == 0 else None
        return self.mul(a, self.inv(b))

    def __str__(self) -> str:
        if self.kind == PRIME_KIND:
            return f"F_{self.characteristic}"
        return "QQ" if self.kind == RATIONAL_KIND else "ZZ"


# --- monomial orders ---------------------------------------------------------
#
# Keys are built so that tuple comparison realizes the order; larger key means
# larger monomial.  'elim1' is the block order eliminating the first variable
# (used internally for colon ideals).

def _grevlex_key(e: Exponents):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e: Exponents):
    return e


def _elim1_key(e: Exponents):
    return (e[0], _grevlex_key(e[1:]))


ORDER_KEYS = {"grevlex": _grevlex_key, "lex": _lex_key, "elim1": _elim1_key}


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents | None:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class Ring:
    """Ambient ring descriptor: coefficients, named variables, monomial order,
    and the distinguished prime generated by a subset of the variables.

    Elements outside the distinguished prime are the units of the localized
    ring that all divisibility and principality statements refer to.
    """

    field: Field
    variables: tuple[str, ...]
    order: str = "grevlex"
    prime_vars: tuple[str, ...] = ()

    def __post_init__(self):
        if self.order not in ORDER_KEYS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for v in self.prime_vars:
            if v not in self.variables:
                raise ValueError(f"prime variable {v!r} is not a ring variable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self.variables}") from None

    def order_key(self, e: Exponents):
        return ORDER_KEYS[self.order](e)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: Coeff) -> "Poly":
        c = self.field.coerce(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return Poly(self, {tuple(e): self.field.coerce(1)})

    def monomial(self, exps: Iterable[int], coeff: Coeff = 1) -> "Poly":
        e = tuple(exps)
        if len(e) != self.nvars:
            raise ValueError("exponent tuple has wrong length")
        c = self.field.coerce(coeff)
        return Poly(self, {e: c} if c != 0 else {})

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)

    def prime_indices(self) -> tuple[int, ...]:
        return tuple(self.var_index(v) for v in self.prime_vars)

    def __str__(self) -> str:
        vars_ = ",".join(self.variables)
        loc = f" at ({','.join(self.prime_vars)})" if self.prime_vars else ""
        return f"{self.field}[{vars_}]{loc}"


class Poly:
    """Immutable sparse polynomial over a Ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exponents, Coeff]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_coefficient(self) -> Coeff:
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, self.ring.field.coerce(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.var_index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def sorted_terms(self, key=None) -> list[tuple[Exponents, Coeff]]:
        """Terms in descending monomial order."""
        key = key or self.ring.order_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, key=None) -> tuple[Exponents, Coeff]:
        if not self.terms:
            raise DivisionByZero("zero polynomial has no leading term")
        key = key or self.ring.order_key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def touches(self, var_indices: Iterable[int]) -> bool:
        """True iff every term involves at least one of the given variables.

        Membership test for the prime generated by those variables; the zero
        polynomial belongs to every such prime.
        """
        idx = tuple(var_indices)
        return all(any(e[i] > 0 for i in idx) for e in self.terms)

    def in_distinguished_prime(self) -> bool:
        return self.touches(self.ring.prime_indices())

    # -- arithmetic ------------------------------------------------------------

    def _coerce_other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise AmbientMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        fld = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = fld.add(out.get(e, 0), c)
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __neg__(self) -> "Poly":
        fld = self.ring.field
        return Poly(self.ring, {e: fld.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        fld = self.ring.field
        out: dict[Exponents, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                s = fld.add(out.get(e, 0), fld.mul(c1, c2))
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Coeff) -> "Poly":
        fld = self.ring.field
        c = fld.coerce(c)
        return Poly(self.ring, {e: fld.mul(v, c) for e, v in self.terms.items()})

    def monic(self, key=None) -> "Poly":
        """Divide by the leading coefficient (field coefficients only)."""
        if not self.terms:
            return self
        _, lc = self.leading_term(key)
        return self.scale(self.ring.field.inv(lc))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    # -- division and substitution ---------------------------------------------

    def exact_divide(self, g: "Poly") -> "Poly | None":
        """Return q with self = q*g, or None when no such polynomial exists.

        Complete over fields and over the integers: for a true multiple the
        leading-term loop always runs to a zero remainder, and any blockage
        (monomial or coefficient) certifies non-divisibility.
        """
        g = self._coerce_other(g)
        if g.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        fld = self.ring.field
        key = self.ring.order_key
        ge, gc = g.leading_term()
        q: dict[Exponents, Coeff] = {}
        r = self
        while r.terms:
            re, rc = r.leading_term(key)
            m = monomial_div(re, ge)
            if m is None:
                return None
            c = fld.exact_div(rc, gc)
            if c is None:
                return None
            q[m] = c
            r = r - Poly(self.ring, {m: c}) * g
        return Poly(self.ring, q)

    def substitute(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Apply the coefficient-fixing ring homomorphism x -> images[x]."""
        ring = self.ring
        for v in ring.variables:
            if v not in images:
                raise IncompleteMap(f"no image for variable {v!r}")
            img = images[v]
            if not isinstance(img, Poly) or img.ring != ring:
                raise AmbientMismatch(f"image of {v!r} lives in a different ring")
        power_cache: dict[tuple[int, int], Poly] = {}

        def ipow(i: int, n: int) -> Poly:
            got = power_cache.get((i, n))
            if got is None:
                got = images[ring.variables[i]] ** n
                power_cache[(i, n)] = got
            return got

        out = ring.zero()
        for e, c in self.sorted_terms():
            t = ring.const(c)
            for i, n in enumerate(e):
                if n:
                    t = t * ipow(i, n)
            out = out + t
        return out

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms in descending monomial order."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for e, c in self.sorted_terms():
            body = "*".join(
                v if n == 1 else f"{v}^{n}"
                for v, n in zip(self.ring.variables, e)
                if n > 0
            )
            negative = c < 0  # prime-field coefficients sit in 0..q-1
            mag = -c if negative else c
            if not body:
                coeff_txt = str(mag)
            elif mag == 1:
                coeff_txt = body
            else:
                coeff_txt = f"{mag}*{body}"
            if not pieces:
                pieces.append(("-" if negative else "") + coeff_txt)
            else:
                pieces.append(("- " if negative else "+ ") + coeff_txt)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<Poly {self.render()} over {self.ring}>"


@dataclass(frozen=True, eq=False)
class LocalFraction:
    """A fraction whose denominator is a unit of the localized ring.

    Normalization clears coefficient content only; structural equality is by
    exact cross-multiplication, so reduced form is best-effort.
    """

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.ring != self.num.ring:
            raise AmbientMismatch("numerator and denominator in different rings")
        if self.den.is_zero():
            raise DivisionByZero("zero denominator")
        if self.den.in_distinguished_prime():
            raise NotAUnit(f"denominator {self.den} lies in the distinguished prime")
        n, d = _normalize_fraction(self.num, self.den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @staticmethod
    def from_poly(f: Poly) -> "LocalFraction":
        return LocalFraction(f, f.ring.one())

    def _coerce(self, other) -> "LocalFraction":
        if isinstance(other, LocalFraction):
            if other.ring != self.ring:
                raise AmbientMismatch("fractions over different rings")
            return other
        if isinstance(other, Poly):
            return LocalFraction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return LocalFraction.from_poly(self.ring.const(other))
        return NotImplemented

    def __add__(self, other) -> "LocalFraction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalFraction(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "LocalFraction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalFraction(self.num * other.den - other.num * self.den,
                             self.den * other.den)

    def __neg__(self) -> "LocalFraction":
        return LocalFraction(-self.num, self.den)

    def __mul__(self, other) -> "LocalFraction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, LocalFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is cross-multiplication; no canonical hash

    def render(self) -> str:
        if self.den == self.ring.one():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<LocalFraction {self.render()}>"


def _normalize_fraction(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    fld = num.ring.field
    if fld.is_field:
        _, lc = den.leading_term()
        if lc != fld.coerce(1):
            inv = fld.inv(lc)
            return num.scale(inv), den.scale(inv)
        return num, den
    # integers: clear common content, keep the denominator's lead positive
    coeffs = list(num.terms.values()) + list(den.terms.values())
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(int(c)))
    if den.leading_term()[1] < 0:
        g = -g
    if g not in (0, 1):
        num = Poly(num.ring, {e: c // g for e, c in num.terms.items()})
        den = Poly(den.ring, {e: c // g for e, c in den.terms.items()})
    return num, den


# --- parsing -----------------------------------------------------------------

_IDENT_START = set(string.ascii_letters + "_")
_IDENT_CHARS = set(string.ascii_letters + string.digits + "_")


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "+-*^()/":
                self.toks.append((ch, ch))
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", text[i:j]))
                i = j
            elif ch in _IDENT_START:
                j = i
                while j < len(text) and text[j] in _IDENT_CHARS:
                    j += 1
                self.toks.append(("ident", text[i:j]))
                i = j
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial")
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise ValueError("unexpected end of polynomial")
        self.pos += 1
        return t


def _parse_poly(ring: Ring, text: str) -> Poly:
    """Parse '+ - * ^ ( )' expressions with integer or a/b coefficients.

    Round-trips the canonical rendering exactly and also accepts free-form
    input such as '(y+x)^3'.
    """
    toks = _Tokens(text)

    def parse_expr() -> Poly:
        sign = 1
        t = toks.peek()
        while t is not None and t[0] in "+-":
            toks.next()
            if t[0] == "-":
                sign = -sign
            t = toks.peek()
        acc = parse_term()
        if sign < 0:
            acc = -acc
        while True:
            t = toks.peek()
            if t is None or t[0] not in "+-":
                break
            toks.next()
            rhs = parse_term()
            acc = acc + rhs if t[0] == "+" else acc - rhs
        return acc

    def parse_term() -> Poly:
        acc = parse_factor()
        while True:
            t = toks.peek()
            if t is None or t[0] != "*":
                break
            toks.next()
            acc = acc * parse_factor()
        return acc

    def parse_factor() -> Poly:
        base = parse_atom()
        t = toks.peek()
        if t is not None and t[0] == "^":
            toks.next()
            kind, val = toks.next()
            if kind != "int":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def parse_atom() -> Poly:
        kind, val = toks.next()
        if kind == "(":
            inner = parse_expr()
            k2, _ = toks.next()
            if k2 != ")":
                raise ValueError("missing closing parenthesis")
            return inner
        if kind == "-":
            return -parse_atom()
        if kind == "int":
            t = toks.peek()
            if t is not None and t[0] == "/":
                toks.next()
                k2, v2 = toks.next()
                if k2 != "int":
                    raise ValueError("malformed fraction coefficient")
                return ring.const(Fraction(int(val), int(v2)))
            return ring.const(int(val))
        if kind == "ident":
            if val not in ring.variables:
                raise ValueError(f"unknown variable {val!r}")
            return ring.var(val)
        raise ValueError(f"unexpected token {val!r}")

    result = parse_expr()
    if toks.peek() is not None:
        raise ValueError(f"trailing input after polynomial: {toks.peek()[1]!r}")
    return result
