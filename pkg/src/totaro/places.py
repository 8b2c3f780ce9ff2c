"""Local arithmetic of the rationals.

Places of Q, Legendre and Hilbert symbols, quadratic fields with their place
decomposition, and monic integer polynomials with local degree data.
Everything is exact; rationals are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from itertools import islice
from typing import Iterable

from sympy import Poly, discriminant, divisors, factorint, isprime, primerange, symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_from_int_poly

from .errors import InvalidPolynomial, RamifiedPrime, ZeroArgument

_X = symbols("x")


def as_fraction(value) -> Fraction:
    """Coerce ints and Fractions; reject floats so nothing inexact leaks in."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"expected an exact rational, got {value!r}")
    return Fraction(value)


def rational_record(x) -> dict:
    """{"num": ..., "den": ...}, the exact wire form of a rational."""
    x = as_fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ZeroArgument("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_part(x) -> int:
    """Squarefree integer in the same square class as the nonzero rational x."""
    x = as_fraction(x)
    if x == 0:
        raise ZeroArgument("0 has no square class")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def prime_support(*values) -> list[int]:
    """Primes dividing a numerator or denominator of any of the values."""
    primes: set[int] = set()
    for v in values:
        v = as_fraction(v)
        if v == 0:
            continue
        primes.update(factorint(abs(v.numerator)))
        primes.update(factorint(v.denominator))
    return sorted(primes)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@total_ordering
@dataclass(frozen=True)
class Place:
    """A place of Q: the real place (``prime=None``) or a prime."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not isprime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    @property
    def kind(self) -> str:
        return "real-infinite" if self.prime is None else "finite"

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.prime is None else str(self.prime)

    def __repr__(self):
        return f"Place({self})"


INF = Place()


def place(v) -> Place:
    """Build a place from ``"inf"``, an int prime, or a Place."""
    if isinstance(v, Place):
        return v
    if v in ("inf", "oo", "infinity", None):
        return INF
    return Place(int(v))


def relevant_places(*values) -> list[Place]:
    """The real place, 2, and every prime in the support of the values."""
    primes = set(prime_support(*values)) | {2}
    return [INF] + [Place(p) for p in sorted(primes)]


def _unit_part(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, v) -> int:
    """The Hilbert symbol (a, b)_v, equal to +1 iff z^2 = a x^2 + b y^2 has a
    nontrivial solution over the completion of Q at v."""
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol needs nonzero arguments")
    v = place(v)
    # a = n/d has the square class of n*d
    a = a.numerator * a.denominator
    b = b.numerator * b.denominator
    if v.is_infinite:
        return -1 if (a < 0 and b < 0) else 1
    p = v.prime
    alpha, u = _unit_part(a, p)
    beta, w = _unit_part(b, p)
    if p == 2:
        eps_u, eps_w = ((u - 1) // 2) % 2, ((w - 1) // 2) % 2
        om_u, om_w = ((u * u - 1) // 8) % 2, ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(w, p)
    return s


def is_local_square(x, v) -> bool:
    """Whether the nonzero rational x is a square in the completion at v."""
    x = as_fraction(x)
    if x == 0:
        raise ZeroArgument("0")
    v = place(v)
    if v.is_infinite:
        return x > 0
    n = x.numerator * x.denominator
    e, u = _unit_part(n, v.prime)
    if e % 2:
        return False
    if v.prime == 2:
        return u % 8 == 1
    return legendre(u, v.prime) == 1


def is_rational_square(x) -> bool:
    x = as_fraction(x)
    if x < 0:
        return False
    from math import isqrt

    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


class QuadraticField:
    """K = Q(sqrt d) for a squarefree integer d other than 0 and 1."""

    def __init__(self, d: int):
        d = int(d)
        if d in (0, 1) or squarefree_part(d) != d:
            raise ValueError(f"d={d} must be squarefree and not 0 or 1")
        self.d = d

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self):
        return hash(("K", self.d))

    def __repr__(self):
        return f"QuadraticField({self.d})"

    def conjugate(self, c: tuple) -> tuple:
        """The nontrivial automorphism on r + s*sqrt(d), stored as (r, s)."""
        r, s = c
        return (r, -s)

    def decomposition(self, v) -> str:
        """``"split"``, ``"inert"`` or ``"ramified"``.

        At the real place a complex K counts as ramified."""
        v = place(v)
        d = self.d
        if v.is_infinite:
            return "split" if d > 0 else "ramified"
        p = v.prime
        if p == 2:
            if d % 4 in (2, 3):
                return "ramified"
            return "split" if d % 8 == 1 else "inert"
        if d % p == 0:
            return "ramified"
        return "split" if legendre(d, p) == 1 else "inert"

    def local_degree(self, v) -> int:
        return 1 if self.decomposition(v) == "split" else 2


def _subset_sums(degrees: Iterable[int], n: int) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return {s for s in sums if 0 < s < n}


class IntegerPolynomial:
    """A monic irreducible polynomial over Z, coefficients constant first.

    Irreducibility is certified when the object is built: rational roots are
    excluded, then factorization patterns modulo good primes are intersected
    until no proper factor degree survives. Polynomials whose patterns never
    rule out a factor (x^4 + 1 and friends) fall back to exact factorization.
    """

    def __init__(self, coefficients: Iterable[int], *, certify: bool = True):
        coeffs = []
        for c in coefficients:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise InvalidPolynomial(f"coefficient {c!r} is not an integer")
            coeffs.append(int(c))
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise InvalidPolynomial("degree must be at least 1")
        if coeffs[-1] != 1:
            raise InvalidPolynomial("polynomial must be monic")
        self.coefficients = tuple(coeffs)
        if certify:
            self._certify()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def high_first(self) -> list[int]:
        return list(reversed(self.coefficients))

    def as_sympy(self) -> Poly:
        return Poly(self.high_first(), _X, domain="ZZ")

    @cached_property
    def disc(self) -> int:
        if self.degree == 1:
            return 1
        return int(discriminant(self.as_sympy().as_expr(), _X))

    def __call__(self, x):
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def __eq__(self, other):
        return isinstance(other, IntegerPolynomial) and other.coefficients == self.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coefficients)})"

    def __str__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
                terms.append(f"{coef} {mono}")
            else:
                sign = "-" if c < 0 else "+"
                terms.append(f"{sign} {abs(c)}{'*' + mono if mono else ''}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def factor_degrees_mod(self, p: int) -> list[int]:
        """Degrees (with multiplicity) of the irreducible factors mod p."""
        f = gf_from_int_poly(self.high_first(), p)
        _, factors = gf_factor(f, p, ZZ)
        out = []
        for g, e in factors:
            out.extend([len(g) - 1] * e)
        return sorted(out)

    def _certify(self, primes_to_try: int = 40):
        n = self.degree
        if n == 1:
            return
        c0 = self.coefficients[0]
        if c0 == 0:
            raise InvalidPolynomial(f"{self} has the root 0")
        for r in divisors(abs(c0)):
            if self(r) == 0 or self(-r) == 0:
                raise InvalidPolynomial(f"{self} has a rational root")
        if n <= 3:
            return
        disc = self.disc
        if disc == 0:
            raise InvalidPolynomial(f"{self} is not squarefree")
        possible = set(range(1, n))
        good = (p for p in primerange(2, 10**6) if disc % p)
        for p in islice(good, primes_to_try):
            possible &= _subset_sums(self.factor_degrees_mod(p), n)
            if not possible:
                return
        if not self.as_sympy().is_irreducible:
            raise InvalidPolynomial(f"{self} is reducible over Q")


def local_degrees(f: IntegerPolynomial, p: int) -> list[int]:
    """Local degrees [F_w : Q_p] of the places w of F = Q[x]/(f) above p.

    Away from the discriminant these are the degrees of the irreducible factors
    of f mod p. Primes dividing the discriminant are handled only for quadratic f.
    """
    if not isinstance(f, IntegerPolynomial):
        raise InvalidPolynomial("expected an IntegerPolynomial")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if f.degree == 1:
        return [1]
    if f.disc % p:
        return f.factor_degrees_mod(p)
    if f.degree == 2:
        m = squarefree_part(f.disc)
        return [1, 1] if QuadraticField(m).decomposition(Place(p)) == "split" else [2]
    raise RamifiedPrime(f"{p} divides disc({f}) = {f.disc}")


def real_root_count(f: IntegerPolynomial) -> int:
    """Number of real embeddings of Q[x]/(f)."""
    if f.degree == 1:
        return 1
    return int(f.as_sympy().count_roots())


def quadratic_polynomial(d: int) -> IntegerPolynomial:
    """x^2 - d."""
    return IntegerPolynomial([-int(d), 0, 1])
