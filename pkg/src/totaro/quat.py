"""Quaternion algebras over Q and their unitary descent to K = Q(sqrt d).

Elements of Q0 (x) K are stored as pairs (q1, q2) meaning q1 + q2*sqrt(d);
the K-algebra is never built abstractly, it is always carried by its descent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brauer import BrauerClassQ, quaternion_class, splits_over
from .errors import SearchExhausted
from .places import QuadraticField, as_fraction, quadratic_polynomial, squarefree_part


@dataclass(frozen=True)
class QuaternionAlgebra:
    """(a, b)_Q with i^2 = a, j^2 = b, k = ij = -ji."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if self.a == 0 or self.b == 0:
            from .errors import ZeroArgument

            raise ZeroArgument("quaternion parameters must be nonzero")

    def element(self, w=0, x=0, y=0, z=0) -> QuaternionElement:
        return QuaternionElement(self, *(as_fraction(t) for t in (w, x, y, z)))

    @property
    def one(self):
        return self.element(1)

    @property
    def i(self):
        return self.element(0, 1)

    @property
    def j(self):
        return self.element(0, 0, 1)

    @property
    def k(self):
        return self.element(0, 0, 0, 1)

    def brauer_class(self) -> BrauerClassQ:
        return quaternion_class(self.a, self.b)

    def is_split(self) -> bool:
        return self.brauer_class().is_zero()


@dataclass(frozen=True)
class QuaternionElement:
    alg: QuaternionAlgebra
    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    @property
    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        return QuaternionElement(self.alg, *(s + t for s, t in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return QuaternionElement(self.alg, *(s - t for s, t in zip(self.coords, other.coords)))

    def __neg__(self):
        return QuaternionElement(self.alg, *(-s for s in self.coords))

    def scale(self, c) -> QuaternionElement:
        c = as_fraction(c)
        return QuaternionElement(self.alg, *(c * s for s in self.coords))

    def __mul__(self, other):
        if isinstance(other, QuaternionElement):
            return multiply(self, other, self.alg)
        return self.scale(other)

    __rmul__ = scale

    def is_scalar(self) -> bool:
        return self.x == self.y == self.z == 0


def multiply(u: QuaternionElement, v: QuaternionElement, alg: QuaternionAlgebra) -> QuaternionElement:
    a, b = alg.a, alg.b
    w1, x1, y1, z1 = u.coords
    w2, x2, y2, z2 = v.coords
    return QuaternionElement(
        alg,
        w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
        w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
        w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
        w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
    )


def conjugate(u: QuaternionElement) -> QuaternionElement:
    """Canonical involution u -> trd(u) - u."""
    return QuaternionElement(u.alg, u.w, -u.x, -u.y, -u.z)


def reduced_trace(u: QuaternionElement) -> Fraction:
    return 2 * u.w


def reduced_norm(u: QuaternionElement) -> Fraction:
    a, b = u.alg.a, u.alg.b
    return u.w**2 - a * u.x**2 - b * u.y**2 + a * b * u.z**2


@dataclass(frozen=True)
class DescentElement:
    """q1 + q2*sqrt(d) in Q0 (x) K."""

    q1: QuaternionElement
    q2: QuaternionElement


class UnitaryQuaternion:
    """(Q0, canonical involution) (x) (K, conjugation).

    The involution sends q1 + q2*sqrt(d) to conj(q1) - conj(q2)*sqrt(d);
    it is K-semilinear and restricts to conjugation on the centre K.
    """

    def __init__(self, base: QuaternionAlgebra, K: QuadraticField):
        self.base = base
        self.K = K

    def __repr__(self):
        return f"UnitaryQuaternion(({self.base.a}, {self.base.b}) x Q(sqrt {self.K.d}))"

    def element(self, q1=None, q2=None) -> DescentElement:
        zero = self.base.element()
        return DescentElement(q1 if q1 is not None else zero, q2 if q2 is not None else zero)

    def scalar(self, r=0, s=0) -> DescentElement:
        """The central element r + s*sqrt(d)."""
        return DescentElement(self.base.element(r), self.base.element(s))

    def add(self, u: DescentElement, v: DescentElement) -> DescentElement:
        return DescentElement(u.q1 + v.q1, u.q2 + v.q2)

    def multiply(self, u: DescentElement, v: DescentElement) -> DescentElement:
        d = self.K.d
        return DescentElement(
            u.q1 * v.q1 + (u.q2 * v.q2).scale(d),
            u.q1 * v.q2 + u.q2 * v.q1,
        )

    def sigma(self, u: DescentElement) -> DescentElement:
        return DescentElement(conjugate(u.q1), -conjugate(u.q2))

    def central_part(self, u: DescentElement) -> tuple[Fraction, Fraction] | None:
        """(r, s) if u = r + s*sqrt(d) is central, else None."""
        if u.q1.is_scalar() and u.q2.is_scalar():
            return (u.q1.w, u.q2.w)
        return None

    def fixed_centre(self) -> str:
        """The fixed field of sigma on the centre K, read off the basis {1, sqrt d}."""
        one = self.sigma(self.scalar(1, 0))
        root = self.sigma(self.scalar(0, 1))
        if self.central_part(one) == (1, 0) and self.central_part(root) == (0, -1):
            return "Q"
        return "K"  # pragma: no cover - cannot happen for this construction


def albert_descent(alg: QuaternionAlgebra, K: QuadraticField) -> UnitaryQuaternion:
    return UnitaryQuaternion(alg, K)


def splitting_quadratic(alg: QuaternionAlgebra, bound: int = 50) -> int | None:
    """Smallest-height squarefree d with Q(sqrt d) splitting alg, or None if alg is split.

    Ties in |d| go to the negative value.
    """
    cls = alg.brauer_class()
    if cls.is_zero():
        return None
    for h in range(1, bound + 1):
        for d in (-h, h):
            if d == 1 or squarefree_part(d) != d:
                continue
            if splits_over(cls, quadratic_polynomial(d)):
                return d
    raise SearchExhausted(f"no splitting Q(sqrt d) with |d| <= {bound} for {alg}")
