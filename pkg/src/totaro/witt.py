"""Quadratic forms over Q, hermitian forms over (K, conjugation), and the
Scharlau transfer along odd-degree extensions.

Isometry over Q is decided by the complete set of invariants (dimension,
determinant mod squares, Hasse symbols, signature). Determinants are plain
determinants modulo squares throughout, never signed discriminants.
Hermitian forms are handled through their trace forms: two hermitian forms
over a quadratic extension are isometric iff their trace forms are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import prod
from typing import Callable, Iterable, Sequence

from sympy import Matrix, Poly, Rational, symbols

from .errors import Degenerate, EvenDegree, InvalidPolynomial, NonInvertibleEntry, RankMismatch
from .places import (
    INF,
    IntegerPolynomial,
    Place,
    QuadraticField,
    as_fraction,
    hilbert_symbol,
    is_local_square,
    is_rational_square,
    place,
    prime_support,
    relevant_places,
    squarefree_part,
)

# ---------------------------------------------------------------------------
# quadratic forms over Q


@dataclass(frozen=True)
class QuadraticForm:
    """Diagonal form <a_1, ..., a_n> over Q."""

    entries: tuple[Fraction, ...] = ()

    def __post_init__(self):
        entries = tuple(as_fraction(a) for a in self.entries)
        if any(a == 0 for a in entries):
            raise Degenerate("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __add__(self, other: QuadraticForm) -> QuadraticForm:
        return QuadraticForm(self.entries + other.entries)

    def scale(self, c) -> QuadraticForm:
        c = as_fraction(c)
        return QuadraticForm(tuple(c * a for a in self.entries))

    def __neg__(self):
        return self.scale(-1)

    def tensor(self, other: QuadraticForm) -> QuadraticForm:
        return QuadraticForm(tuple(a * b for a in self.entries for b in other.entries))

    def gram(self) -> list[list[Fraction]]:
        n = self.dim
        return [[self.entries[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def __call__(self, vec: Sequence) -> Fraction:
        return sum((a * x * x for a, x in zip(self.entries, vec)), Fraction(0))

    def __repr__(self):
        return "<" + ", ".join(str(a) for a in self.entries) + ">"


def hyperbolic(m: int) -> QuadraticForm:
    return QuadraticForm((Fraction(1), Fraction(-1)) * m)


def diagonal_entries(gram: Sequence[Sequence], is_zero: Callable = lambda x: x == 0) -> list:
    """Symmetric Gaussian elimination over any field of characteristic != 2.

    Returns the diagonal of a congruent diagonal matrix. Raises Degenerate when
    the matrix is singular.
    """
    m = [list(row) for row in gram]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    out = []
    for i in range(n):
        if is_zero(m[i][i]):
            j = next((j for j in range(i + 1, n) if not is_zero(m[j][j])), None)
            if j is not None:
                m[i], m[j] = m[j], m[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if not is_zero(m[i][j])), None)
                if j is None:
                    raise Degenerate("Gram matrix is singular")
                # replace e_i by e_i + e_j; new diagonal entry is 2 m[i][j]
                for c in range(n):
                    m[i][c] = m[i][c] + m[j][c]
                for r in range(n):
                    m[r][i] = m[r][i] + m[r][j]
        piv = m[i][i]
        for j in range(i + 1, n):
            if is_zero(m[j][i]):
                continue
            t = m[j][i] / piv
            for c in range(i, n):
                m[j][c] = m[j][c] - t * m[i][c]
            for r in range(i, n):
                m[r][j] = m[r][j] - t * m[r][i]
        out.append(piv)
    return out


def diagonalize(gram: Sequence[Sequence]) -> QuadraticForm:
    """A diagonal form isometric to the symmetric rational matrix ``gram``."""
    return QuadraticForm(tuple(diagonal_entries([[as_fraction(x) for x in row] for row in gram])))


@dataclass(frozen=True)
class WittInvariants:
    """Complete isometry invariants of a form over Q.

    ``hasse_minus`` holds the places v where prod_{i<j} (a_i, a_j)_v = -1.
    """

    dim: int
    disc: int
    hasse_minus: frozenset
    signature: int

    def as_dict(self):
        return {
            "dim": self.dim,
            "disc": self.disc,
            "hasse_minus": [str(v) for v in sorted(self.hasse_minus)],
            "signature": self.signature,
        }


def hasse_symbol(q: QuadraticForm, v) -> int:
    e = q.entries
    return prod(hilbert_symbol(e[i], e[j], v) for i in range(len(e)) for j in range(i + 1, len(e)))


def determinant(q: QuadraticForm) -> Fraction:
    return prod(q.entries, start=Fraction(1))


def invariants(q: QuadraticForm) -> WittInvariants:
    minus = frozenset(v for v in relevant_places(*q.entries) if hasse_symbol(q, v) == -1)
    sig = sum(1 if a > 0 else -1 for a in q.entries)
    return WittInvariants(q.dim, squarefree_part(determinant(q)), minus, sig)


def isometric(q1: QuadraticForm, q2: QuadraticForm) -> bool:
    return invariants(q1) == invariants(q2)


def is_hyperbolic(q: QuadraticForm) -> bool:
    return q.dim % 2 == 0 and invariants(q) == invariants(hyperbolic(q.dim // 2))


def witt_equivalent(q1: QuadraticForm, q2: QuadraticForm) -> bool:
    """Equal classes in W(Q): q1 + (-q2) is hyperbolic."""
    return is_hyperbolic(q1 + (-q2))


def is_locally_isotropic(q: QuadraticForm, v) -> bool:
    n = q.dim
    if n < 2:
        return False
    v = place(v)
    if v.is_infinite:
        return any(a > 0 for a in q.entries) and any(a < 0 for a in q.entries)
    d = determinant(q)
    if n == 2:
        return is_local_square(-d, v)
    eps = hasse_symbol(q, v)
    if n == 3:
        return hilbert_symbol(-1, -d, v) == eps
    if n == 4:
        return not is_local_square(d, v) or eps == hilbert_symbol(-1, -1, v)
    return True


def is_isotropic(q: QuadraticForm) -> bool:
    """Whether q represents 0 nontrivially over Q (Hasse-Minkowski)."""
    if q.dim < 2:
        return False
    if q.dim == 2:
        return is_rational_square(-determinant(q))
    return all(is_locally_isotropic(q, v) for v in relevant_places(*q.entries))


# ---------------------------------------------------------------------------
# hermitian forms over (K, conjugation), K = Q(sqrt d)


@dataclass(frozen=True)
class HermitianForm:
    """Diagonal hermitian form <a_1, ..., a_n> over (K, conjugation), a_i in Q^x."""

    K: QuadraticField
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(as_fraction(a) for a in self.entries)
        if any(a == 0 for a in entries):
            raise Degenerate("hermitian entries must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def scale(self, nu) -> HermitianForm:
        nu = as_fraction(nu)
        return HermitianForm(self.K, tuple(nu * a for a in self.entries))


def trace_form(h: HermitianForm) -> QuadraticForm:
    """x -> h(x, x) as a quadratic form over Q: <a_i> (x) <1, -d>."""
    return QuadraticForm(tuple(h.entries)).tensor(QuadraticForm((1, -h.K.d)))


def hermitian_isometric(h1: HermitianForm, h2: HermitianForm) -> bool:
    return h1.K == h2.K and h1.rank == h2.rank and isometric(trace_form(h1), trace_form(h2))


def similarity_candidates(h: HermitianForm, h2: HermitianForm) -> list[int]:
    """Squarefree products of -1, 2 and the primes of the entries and of d.

    This set is enough: a similarity factor only matters modulo norms from K,
    and the ratio of the two determinants already lives in this group, while
    the sign takes care of the real places.
    """
    primes = sorted(set(prime_support(*h.entries, *h2.entries, h.K.d)) | {2})
    out = set()
    for r in range(len(primes) + 1):
        for sub in combinations(primes, r):
            m = prod(sub, start=1)
            out.update((m, -m))
    return sorted(out, key=lambda m: (abs(m), m < 0))


def hermitian_similar(h: HermitianForm, h2: HermitianForm) -> tuple[bool, int | None]:
    """Decide whether nu * h2 is isometric to h for some nu in Q^x; return a witness."""
    if h.K != h2.K:
        from .errors import BaseMismatch

        raise BaseMismatch("hermitian forms over different fields")
    if h.rank != h2.rank:
        raise RankMismatch(f"ranks {h.rank} and {h2.rank} differ")
    target = invariants(trace_form(h))
    for nu in similarity_candidates(h, h2):
        if invariants(trace_form(h2.scale(nu))) == target:
            return True, nu
    return False, None


# ---------------------------------------------------------------------------
# number fields as towers of simple extensions


def _trim(c: list, is_zero) -> list:
    while c and is_zero(c[-1]):
        c.pop()
    return c


class RationalField:
    """Q as the bottom of every tower."""

    absolute_degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return as_fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def to_vector(self, x) -> list[Fraction]:
        return [x]

    def from_vector(self, v):
        return v[0]

    def absolute_s(self, x):
        return x

    def absolute_basis(self):
        return [Fraction(1)]

    def __repr__(self):
        return "Q"


QQ = RationalField()


class FieldElement:
    """Polynomial in the generator with coefficients in the base field, reduced."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _other(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        other = self._other(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._other(other)
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        return self * self.field.inverse(other)

    def __rtruediv__(self, other):
        return self._other(other) * self.field.inverse(self)

    def __pow__(self, n: int):
        out = self.field.one
        base = self
        if n < 0:
            base, n = self.field.inverse(self), -n
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return all(self.field.base.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        try:
            other = self._other(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(self.field.to_vector(self)))

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} in {self.field!r})"


class SimpleField:
    """base[t] / (g(t)) for a monic g with coefficients in ``base``.

    The functional ``s`` reads off the constant coefficient, i.e. s(1) = 1 and
    s(t^i) = 0 for 0 < i < deg g.
    """

    def __init__(self, base, modulus: Sequence, name: str = "t"):
        self.base = base
        mod = [base.coerce(c) for c in modulus]
        if len(mod) < 2 or not base.is_zero(mod[-1] - base.one):
            raise InvalidPolynomial("modulus must be monic of degree >= 1")
        self.modulus = mod
        self.degree = len(mod) - 1
        self.name = name
        self.zero = FieldElement(self, [base.zero] * self.degree)
        self.one = self.coerce(base.one)
        self.gen = (
            FieldElement(self, [base.zero, base.one] + [base.zero] * (self.degree - 2))
            if self.degree > 1
            else FieldElement(self, [-mod[0]])
        )

    @property
    def absolute_degree(self) -> int:
        return self.degree * self.base.absolute_degree

    def __repr__(self):
        return f"SimpleField({self.name}, deg {self.degree} over {self.base!r})"

    def coerce(self, x) -> FieldElement:
        if isinstance(x, FieldElement) and x.field is self:
            return x
        return FieldElement(self, [self.base.coerce(x)] + [self.base.zero] * (self.degree - 1))

    def element(self, coeffs: Iterable) -> FieldElement:
        coeffs = [self.base.coerce(c) for c in coeffs]
        return self._reduce(coeffs)

    def is_zero(self, x) -> bool:
        return self.coerce(x).is_zero()

    def _reduce(self, c: list) -> FieldElement:
        n, mod, bz = self.degree, self.modulus, self.base.zero
        c = list(c)
        for top in range(len(c) - 1, n - 1, -1):
            lead = c[top]
            if self.base.is_zero(lead):
                continue
            for k in range(n + 1):
                c[top - n + k] = c[top - n + k] - lead * mod[k]
        c = c[:n] + [bz] * (n - len(c))
        return FieldElement(self, c)

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        n = self.degree
        prodc = [self.base.zero] * (2 * n - 1)
        for i, a in enumerate(x.coeffs):
            if self.base.is_zero(a):
                continue
            for j, b in enumerate(y.coeffs):
                prodc[i + j] = prodc[i + j] + a * b
        return self._reduce(prodc)

    def inverse(self, x: FieldElement) -> FieldElement:
        """Extended Euclid on (x, modulus) over the base field."""
        bz, iz = self.base.zero, self.base.is_zero
        r0, r1 = list(self.modulus), _trim(list(x.coeffs), iz)
        if not r1:
            raise NonInvertibleEntry("division by zero in a number field")
        s0, s1 = [], [self.base.one]
        while len(r1) > 1:
            q, r = _polydivmod(r0, r1, bz, iz)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1, bz), bz, iz)
            if not r1:
                raise NonInvertibleEntry("element shares a factor with the modulus")
        c = r1[0]
        return self._reduce([t / c for t in s1]) if s1 else self.zero

    def s(self, x) -> object:
        return self.coerce(x).coeffs[0]

    def absolute_s(self, x):
        return self.base.absolute_s(self.s(x))

    def to_vector(self, x) -> list[Fraction]:
        x = self.coerce(x)
        out = []
        for c in x.coeffs:
            out.extend(self.base.to_vector(c))
        return out

    def from_vector(self, v: Sequence[Fraction]) -> FieldElement:
        m = self.base.absolute_degree
        return FieldElement(self, [self.base.from_vector(v[i * m:(i + 1) * m]) for i in range(self.degree)])

    def absolute_basis(self) -> list[FieldElement]:
        """gen^i * (basis of base), ordered to match ``to_vector``."""
        out = []
        for i in range(self.degree):
            gi = self.gen ** i if self.degree > 1 else self.one
            for b in self.base.absolute_basis():
                out.append(gi * self.coerce(b))
        return out

    def multiplication_matrix(self, x) -> list[list[Fraction]]:
        """Matrix of y -> x*y on the absolute basis (columns are images)."""
        x = self.coerce(x)
        cols = [self.to_vector(x * b) for b in self.absolute_basis()]
        n = len(cols)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def norm(self, x) -> Fraction:
        """N_{L/Q}(x) as the determinant of multiplication by x."""
        return _det(self.multiplication_matrix(x))

    def charpoly(self, x) -> list[Fraction]:
        """Characteristic polynomial over Q of multiplication by x, constant first."""
        t = symbols("t")
        m = Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in self.multiplication_matrix(x)])
        cp = Poly(m.charpoly(t).as_expr(), t).all_coeffs()
        return [Fraction(int(c.p), int(c.q)) for c in reversed(cp)]


def _polymul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _polysub(a, b, zero, is_zero):
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)], is_zero)


def _polydivmod(a, b, zero, is_zero):
    a = list(a)
    q = [zero] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = a[k + i] - c * y
    return _trim(q, is_zero), _trim(a[: len(b) - 1], is_zero)


def _det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            t = m[r][i] / m[i][i]
            if t:
                for c in range(i, n):
                    m[r][c] -= t * m[i][c]
    return det


class SimpleExtension:
    """L = Q(lambda) with lambda a root of f, optionally followed by a tower of
    further simple extensions L_i = L_{i-1}(lambda_i), lambda_i a root of the
    integer polynomial ``tower[i-1]``.

    All degrees must be odd. The tower is certified to be a field: some element
    of small height must have an irreducible characteristic polynomial of full
    degree over Q.
    """

    def __init__(self, f: IntegerPolynomial | Sequence[int], tower: Sequence = ()):
        self.f = f if isinstance(f, IntegerPolynomial) else IntegerPolynomial(f)
        self.tower = tuple(g if isinstance(g, IntegerPolynomial) else IntegerPolynomial(g) for g in tower)
        for g in (self.f, *self.tower):
            if g.degree % 2 == 0:
                raise EvenDegree(f"{g} has even degree")
        levels = [SimpleField(QQ, self.f.coefficients, "lambda")]
        for i, g in enumerate(self.tower, start=1):
            levels.append(SimpleField(levels[-1], g.coefficients, f"lambda_{i}"))
        self.levels = levels
        if self.tower:
            self._certify_field()

    @property
    def base_field(self) -> SimpleField:
        return self.levels[0]

    @property
    def top(self) -> SimpleField:
        return self.levels[-1]

    @property
    def degree(self) -> int:
        return self.top.absolute_degree

    @property
    def lam(self) -> FieldElement:
        return self.top.coerce(self._lift(self.levels[0].gen, 0))

    def _lift(self, x, level: int):
        for lv in self.levels[level + 1:]:
            x = lv.coerce(x)
        return x

    def generator(self, i: int) -> FieldElement:
        """lambda (i = 0) or lambda_i, as an element of the top field."""
        return self._lift(self.levels[i].gen, i)

    def element(self, coeffs: Sequence) -> FieldElement:
        """Element of the base level Q(lambda), lifted to the top field."""
        return self._lift(self.levels[0].element(coeffs), 0)

    def _certify_field(self):
        gens = [self.generator(i) for i in range(len(self.levels))]
        for shift in range(1, 6):
            theta = gens[0]
            for i, g in enumerate(gens[1:], start=1):
                theta = theta + g * (shift**i)
            cp = self.top.charpoly(theta)
            if any(c.denominator != 1 for c in cp):
                continue
            try:
                IntegerPolynomial([c.numerator for c in cp])
                return
            except InvalidPolynomial:
                continue
        raise InvalidPolynomial("tower does not define a field (no primitive element certified)")

    def norm(self, x) -> Fraction:
        return self.top.norm(x)

    def s(self, x) -> Fraction:
        """The composite functional: constant coefficient at every level."""
        return self.top.absolute_s(self.top.coerce(x))

    def __repr__(self):
        t = "".join(f" then {g}" for g in self.tower)
        return f"SimpleExtension({self.f}{t})"


def _coerce_entries(ext: SimpleExtension, form) -> list[FieldElement]:
    out = []
    for mu in form:
        if isinstance(mu, FieldElement):
            mu = ext.top.coerce(mu)
        elif isinstance(mu, (list, tuple)):
            mu = ext.element(mu)
        else:
            mu = ext.top.coerce(as_fraction(mu))
        out.append(mu)
    return out


def transfer_gram(ext: SimpleExtension, mu, functional: Callable | None = None) -> list[list[Fraction]]:
    """Gram matrix of x -> s(mu x^2) on the absolute power basis."""
    s = functional or ext.s
    basis = ext.top.absolute_basis()
    n = len(basis)
    prods = {}
    gram = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k in range(j, n):
            key = (j, k)
            prods[key] = s(mu * basis[j] * basis[k])
            gram[j][k] = gram[k][j] = prods[key]
    return gram


def transfer(ext: SimpleExtension, form, functional: Callable | None = None) -> QuadraticForm:
    """Scharlau transfer to Q of the diagonal form <mu_1, ...> over the top field."""
    out = QuadraticForm()
    for mu in _coerce_entries(ext, form):
        if mu.is_zero():
            raise NonInvertibleEntry("zero entry")
        ext.top.inverse(mu)
        out = out + diagonalize(transfer_gram(ext, mu, functional))
    return out


def transfer_stepwise(ext: SimpleExtension, form) -> QuadraticForm:
    """The same transfer, one level at a time: each level's functional is
    linear over the level below, and forms are diagonalized in between."""
    entries = _coerce_entries(ext, form)
    for lv in reversed(ext.levels):
        entries = [lv.coerce(e) for e in entries]
        lower = []
        powers = [lv.gen ** i for i in range(lv.degree)] if lv.degree > 1 else [lv.one]
        base = lv.base
        for mu in entries:
            gram = [[lv.s(mu * a * b) for b in powers] for a in powers]
            lower.extend(diagonal_entries(gram, base.is_zero))
        entries = lower
    return QuadraticForm(tuple(entries))


def generator_functional(ext: SimpleExtension, theta) -> Callable:
    """The functional with s(1) = 1 and s(theta^i) = 0 for 0 < i < [L:Q].

    Requires theta to generate L over Q.
    """
    top = ext.top
    theta = top.coerce(theta)
    n = top.absolute_degree
    powers = [top.to_vector(theta ** i) for i in range(n)]
    # find w with <w, powers[i]> = delta_{i0}
    m = [row[:] for row in powers]
    rhs = [Fraction(1)] + [Fraction(0)] * (n - 1)
    w = _solve(m, rhs)
    if w is None:
        raise ValueError("element does not generate the field")

    def s(x):
        v = top.to_vector(top.coerce(x))
        return sum((a * b for a, b in zip(w, v)), Fraction(0))

    return s


def _solve(m, rhs):
    n = len(m)
    a = [list(row) + [r] for row, r in zip(m, rhs)]
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return None
        a[i], a[piv] = a[piv], a[i]
        for r in range(n):
            if r != i and a[r][i] != 0:
                t = a[r][i] / a[i][i]
                for c in range(i, n + 1):
                    a[r][c] -= t * a[i][c]
    return [a[i][n] / a[i][i] for i in range(n)]


def is_generator(ext: SimpleExtension, theta) -> bool:
    top = ext.top
    theta = top.coerce(theta)
    n = top.absolute_degree
    return _det([top.to_vector(theta ** i) for i in range(n)]) != 0


def projection_formula_check(ext: SimpleExtension, q: QuadraticForm, scalar) -> tuple[bool, bool]:
    """Check s_*(q over L) ~ q and s_*(scalar * (q over L)) ~ N(scalar) q in W(Q).

    The first flag uses the extension's own functional. For the second, the
    functional is the one attached to ``scalar`` as generator (s(1) = 1,
    s(scalar^i) = 0) when ``scalar`` generates L; a rational scalar uses the
    extension's functional.
    """
    scalar = _coerce_entries(ext, [scalar])[0]
    if scalar.is_zero():
        raise NonInvertibleEntry("scalar must be invertible")
    lifted = [ext.top.coerce(a) for a in q.entries]
    first = witt_equivalent(transfer(ext, lifted), q)
    functional = generator_functional(ext, scalar) if is_generator(ext, scalar) else None
    scaled = transfer(ext, [scalar * a for a in lifted], functional)
    second = witt_equivalent(scaled, q.scale(ext.norm(scalar)))
    return first, second


def odd_degree_descent(h: HermitianForm, h2: HermitianForm, ext: SimpleExtension, scalar) -> Fraction | None:
    """Descend a similarity h (x) L = scalar * (h2 (x) L) to Q.

    The premise over L is tested by transferring both sides back to Q; when it
    holds, nu = N_{L/Q}(scalar) and h = nu * h2 is verified over Q. Returns nu,
    or None when the premise over L fails.
    """
    if ext.degree % 2 == 0:
        raise EvenDegree("descent needs an odd-degree extension")
    if h.K != h2.K:
        from .errors import BaseMismatch

        raise BaseMismatch("hermitian forms over different fields")
    if h.rank != h2.rank:
        raise RankMismatch(f"ranks {h.rank} and {h2.rank} differ")
    scalar = _coerce_entries(ext, [scalar])[0]
    functional = generator_functional(ext, scalar) if is_generator(ext, scalar) else None
    lhs = transfer(ext, [ext.top.coerce(a) for a in trace_form(h).entries], functional)
    rhs = transfer(ext, [scalar * a for a in trace_form(h2).entries], functional)
    if not isometric(lhs, rhs):
        return None
    nu = ext.norm(scalar)
    if not hermitian_isometric(h, h2.scale(nu)):  # pragma: no cover - projection formulas forbid this
        raise AssertionError("premise held over L but the descended similarity failed over Q")
    return nu
