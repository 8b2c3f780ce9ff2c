"""Brauer classes over Q and over a quadratic field K, stored as local invariants.

A class is a finite map from places to Q/Z (values are Fractions in [0, 1))
whose entries sum to 0. Over a number field exponent equals index, so the
Schur index is the lcm of the local denominators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Mapping

from .errors import BaseMismatch, InvalidClass, RamifiedPrime, SearchExhausted
from .places import (
    INF,
    IntegerPolynomial,
    Place,
    QuadraticField,
    as_fraction,
    hilbert_symbol,
    is_local_square,
    local_degrees,
    place,
    real_root_count,
    relevant_places,
    squarefree_part,
)

HALF = Fraction(1, 2)


def mod1(x) -> Fraction:
    x = as_fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class PlaceOverK:
    """A place w of K above the place ``base`` of Q.

    ``slot`` tells the two places apart when ``base`` splits in K; it is None
    for inert and ramified places.
    """

    base: Place
    decomposition: str
    slot: int | None = None

    def __post_init__(self):
        if self.decomposition == "split":
            if self.slot not in (1, 2):
                raise InvalidClass(f"split place above {self.base} needs slot 1 or 2")
        elif self.decomposition in ("inert", "ramified"):
            if self.slot is not None:
                raise InvalidClass(f"{self.decomposition} place above {self.base} has no slot")
        else:
            raise InvalidClass(f"unknown decomposition {self.decomposition!r}")

    @property
    def local_degree(self) -> int:
        return 1 if self.decomposition == "split" else 2

    @property
    def is_complex(self) -> bool:
        return self.base.is_infinite and self.decomposition != "split"

    def sort_key(self):
        return (self.base.sort_key(), self.slot or 0)

    def __str__(self):
        return f"{self.base}" if self.slot is None else f"{self.base}.{self.slot}"


def places_over(K: QuadraticField, v) -> list[PlaceOverK]:
    v = place(v)
    dec = K.decomposition(v)
    if dec == "split":
        return [PlaceOverK(v, dec, 1), PlaceOverK(v, dec, 2)]
    return [PlaceOverK(v, dec)]


class _BrauerClass:
    """Shared arithmetic for classes over Q and over K."""

    invariants: Mapping

    def _with(self, invariants):  # pragma: no cover - overridden
        raise NotImplementedError

    def _check_base(self, other):
        raise NotImplementedError

    def __getitem__(self, v) -> Fraction:
        return self.invariants.get(v, Fraction(0))

    @property
    def support(self) -> list:
        return sorted(self.invariants, key=lambda w: w.sort_key())

    def is_zero(self) -> bool:
        return not self.invariants

    def __add__(self, other):
        return tensor(self, other)

    def __neg__(self):
        return opposite(self)

    def __eq__(self, other):
        return type(self) is type(other) and self._base_key() == other._base_key() and dict(
            self.invariants
        ) == dict(other.invariants)

    def __hash__(self):
        return hash((self._base_key(), frozenset(self.invariants.items())))

    def _base_key(self):
        return None

    def items(self):
        return [(w, self.invariants[w]) for w in self.support]

    def records(self) -> list[dict]:
        """Invariants in the wire format used by input and report documents."""
        out = []
        for w, x in self.items():
            v = w if isinstance(w, Place) else w.base
            rec = {"place": "inf" if v.is_infinite else v.prime}
            if isinstance(w, PlaceOverK) and w.slot is not None:
                rec["slot"] = w.slot
            rec.update(num=x.numerator, den=x.denominator)
            out.append(rec)
        return out


def _clean(invariants) -> dict:
    out = {}
    for w, x in invariants.items():
        x = mod1(x)
        if x:
            out[w] = x
    return out


class BrauerClassQ(_BrauerClass):
    """A class in Br Q given by its Hasse invariants."""

    def __init__(self, invariants: Mapping | Iterable = ()):
        if isinstance(invariants, Mapping):
            invariants = invariants.items()
        inv: dict[Place, Fraction] = {}
        for v, x in invariants:
            v = place(v)
            inv[v] = inv.get(v, Fraction(0)) + as_fraction(x)
        inv = _clean(inv)
        if inv.get(INF, Fraction(0)) not in (0, HALF):
            raise InvalidClass("invariant at the real place must be 0 or 1/2")
        if mod1(sum(inv.values(), Fraction(0))) != 0:
            raise InvalidClass(f"local invariants {inv} do not sum to 0")
        self.invariants = inv

    def _with(self, invariants):
        return BrauerClassQ(invariants)

    def _check_base(self, other):
        if not isinstance(other, BrauerClassQ):
            raise BaseMismatch("cannot combine a class over Q with a class over K")

    def __repr__(self):
        body = ", ".join(f"{v}: {x}" for v, x in self.items())
        return f"BrauerClassQ({{{body}}})"


class BrauerClassK(_BrauerClass):
    """A class in Br K for K = Q(sqrt d)."""

    def __init__(self, K: QuadraticField, invariants: Mapping | Iterable = ()):
        self.K = K
        if isinstance(invariants, Mapping):
            invariants = invariants.items()
        inv: dict[PlaceOverK, Fraction] = {}
        for w, x in invariants:
            if not isinstance(w, PlaceOverK):
                w = self.place(*w) if isinstance(w, tuple) else self.place(w)
            expected = K.decomposition(w.base)
            if w.decomposition != expected:
                raise InvalidClass(f"{w.base} is {expected} in {K}, not {w.decomposition}")
            inv[w] = inv.get(w, Fraction(0)) + as_fraction(x)
        inv = _clean(inv)
        for w, x in inv.items():
            if w.is_complex:
                raise InvalidClass("invariants at complex places vanish")
            if w.base.is_infinite and x != HALF:
                raise InvalidClass("invariants at real places must be 0 or 1/2")
        if mod1(sum(inv.values(), Fraction(0))) != 0:
            raise InvalidClass("local invariants do not sum to 0")
        self.invariants = inv

    def place(self, v, slot: int | None = None) -> PlaceOverK:
        """The place of K above v (``slot`` picks one of two split places)."""
        v = place(v)
        dec = self.K.decomposition(v)
        if dec == "split" and slot is None:
            raise InvalidClass(f"{v} splits in {self.K}; give slot 1 or 2")
        if dec != "split" and slot is not None:
            raise InvalidClass(f"{v} is {dec} in {self.K}; there is only one place above it")
        return PlaceOverK(v, dec, slot if dec == "split" else None)

    def _with(self, invariants):
        return BrauerClassK(self.K, invariants)

    def _base_key(self):
        return self.K.d

    def _check_base(self, other):
        if not isinstance(other, BrauerClassK) or other.K != self.K:
            raise BaseMismatch("classes live over different fields")

    def __repr__(self):
        body = ", ".join(f"{w}: {x}" for w, x in self.items())
        return f"BrauerClassK(d={self.K.d}, {{{body}}})"


def zero_class(K: QuadraticField | None = None):
    return BrauerClassQ() if K is None else BrauerClassK(K)


def quaternion_class(a, b) -> BrauerClassQ:
    """Class of the quaternion algebra (a, b) over Q."""
    inv = {v: HALF for v in relevant_places(a, b) if hilbert_symbol(a, b, v) == -1}
    return BrauerClassQ(inv)


def tensor(alpha, beta):
    alpha._check_base(beta)
    inv = dict(alpha.invariants)
    for w, x in beta.invariants.items():
        inv[w] = inv.get(w, Fraction(0)) + x
    return alpha._with(inv)


def opposite(alpha):
    return alpha._with({w: -x for w, x in alpha.invariants.items()})


def schur_index(alpha) -> int:
    return lcm(1, *(x.denominator for x in alpha.invariants.values()))


def restrict_to_quadratic(alpha: BrauerClassQ, K: QuadraticField) -> BrauerClassK:
    """Base change Br Q -> Br K: multiply by the local degree at each place above."""
    inv = {}
    for v, x in alpha.invariants.items():
        for w in places_over(K, v):
            inv[w] = w.local_degree * x
    return BrauerClassK(K, inv)


def corestrict(beta: BrauerClassK) -> BrauerClassQ:
    inv: dict[Place, Fraction] = {}
    for w, x in beta.invariants.items():
        inv[w.base] = inv.get(w.base, Fraction(0)) + x
    return BrauerClassQ(inv)


def admits_unitary_involution(beta: BrauerClassK) -> bool:
    """A K/Q-involution exists iff the corestriction to Q vanishes."""
    return corestrict(beta).is_zero()


def _compositum_degrees(K: QuadraticField, f: IntegerPolynomial, v: Place) -> list[int]:
    """Local degrees of FK over K_w at the places above a place w of K over v."""
    dec = K.decomposition(v)
    if v.is_infinite:
        r = real_root_count(f)
        if dec != "split":
            return [1] * (f.degree)  # complex places: everything splits
        return [1] * r + [2] * ((f.degree - r) // 2)
    p = v.prime
    if dec == "split":
        return local_degrees(f, p)
    if f.degree == 2:
        m = squarefree_part(f.disc)
        if is_local_square(m, v) or is_local_square(m * K.d, v):
            return [1, 1]
        return [2]
    if f.degree == 1:
        return [1]
    degs = local_degrees(f, p)  # p unramified in F here
    if dec == "ramified":
        return degs
    out = []
    for e in degs:
        out.extend([e // 2, e // 2] if e % 2 == 0 else [e])
    return out


def splits_over(alpha, f: IntegerPolynomial) -> bool:
    """Whether F = Q[x]/(f) splits alpha (for a K-class: whether FK does)."""
    if isinstance(alpha, BrauerClassK):
        for w, x in alpha.invariants.items():
            degs = _compositum_degrees(alpha.K, f, w.base)
            if any(mod1(e * x) for e in degs):
                return False
        return True
    for v, x in alpha.invariants.items():
        if v.is_infinite:
            degs = [1] * real_root_count(f) or [2]
        else:
            degs = local_degrees(f, v.prime)
        if any(mod1(e * x) for e in degs):
            return False
    return True


def _squarefree_upto(h: int) -> list[int]:
    return [n for n in range(1, h + 1) if squarefree_part(n) == n]


def symbol_candidates(bound: int):
    """Pairs (a, b) of squarefree integers ordered by height, then (|a|, |b|, sign)."""
    sf = _squarefree_upto(bound)
    for h in sf:
        pairs = []
        for ma, mb in product(sf, repeat=2):
            if max(ma, mb) != h:
                continue
            for sa, sb in product((1, -1), repeat=2):
                pairs.append((ma, mb, sa < 0, sb < 0, sa * ma, sb * mb))
        for *_, a, b in sorted(pairs):
            yield a, b


def find_quaternion_symbol(alpha: BrauerClassQ, bound: int = 50) -> tuple[int, int]:
    """Smallest-height (a, b) with quaternion_class(a, b) == alpha."""
    if any(x != HALF for x in alpha.invariants.values()):
        raise InvalidClass("only classes of exponent dividing 2 are quaternion symbols")
    for a, b in symbol_candidates(bound):
        if quaternion_class(a, b) == alpha:
            return a, b
    raise SearchExhausted(f"no quaternion symbol of height <= {bound} for {alpha}")


def _trinomials(degree: int, bound: int):
    coeffs = [
        (max(abs(c), abs(e)), abs(c), abs(e), c, e)
        for c in range(-bound, bound + 1)
        for e in range(-bound, bound + 1)
        if e != 0
    ]
    for *_, c, e in sorted(coeffs):
        yield [e, c] + [0] * (degree - 2) + [1]


def search_splitting_polynomial(alpha, degree: int, bound: int = 30) -> IntegerPolynomial:
    """First irreducible trinomial x^n + c x + e (n = degree) whose field splits alpha.

    Candidates are ordered by max(|c|, |e|), then (|c|, |e|, c, e). Candidates
    ramified at a supported prime are skipped, since their local degrees are
    not computed.
    """
    from .errors import InvalidPolynomial

    if degree == 1:
        f = IntegerPolynomial([0, 1])
        if splits_over(alpha, f):
            return f
        raise SearchExhausted("a nonzero class is not split by Q")
    for coeffs in _trinomials(degree, bound):
        try:
            f = IntegerPolynomial(coeffs)
            if splits_over(alpha, f):
                return f
        except (InvalidPolynomial, RamifiedPrime):
            continue
    raise SearchExhausted(f"no degree-{degree} trinomial of height <= {bound} splits {alpha}")
