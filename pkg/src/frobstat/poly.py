"""Univariate polynomial algebra over a Field.

Coefficients are stored low-to-high as raw field representations with no
trailing zeros.  Prime-field instances delegate to the int-list kernels in
`_kernels`; extension fields use generic routines written against the raw
field operations.  deg(0) is reported as -1 and stands for "minus infinity".
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _kernels as _k
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotSquarefree,
    OutOfRange,
    ZeroPolynomial,
)
from .ff import Field, FieldElement
from .rng import SplitMix64


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _make(cls, field: Field, trimmed: tuple) -> "Poly":
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", trimmed)
        return self

    @classmethod
    def from_ints(cls, field: Field, ints: Sequence[int]) -> "Poly":
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._make(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._make(field, (field.one,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._make(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [field.from_int(c) if isinstance(c, int) else c])

    # --- structure ---

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial (the minus-infinity marker)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # --- ring operations ---

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        if f.k == 1:
            return Poly._make(f, tuple(_k.add(list(self.coeffs), list(other.coeffs), f.p)))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, bi in enumerate(b):
            cs[i] = f.add(cs[i], bi)
        while cs and f.is_zero(cs[-1]):
            cs.pop()
        return Poly._make(f, tuple(cs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly._make(f, tuple(f.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        if f.k == 1:
            return Poly._make(f, tuple(_k.mul(list(self.coeffs), list(other.coeffs), f.p)))
        if not self.coeffs or not other.coeffs:
            return Poly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if f.is_zero(ai):
                continue
            for j, bj in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        while out and f.is_zero(out[-1]):
            out.pop()
        return Poly._make(f, tuple(out))

    def scale(self, c) -> "Poly":
        f = self.field
        if f.is_zero(c):
            return Poly.zero(f)
        return Poly._make(f, tuple(f.mul(a, c) for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        f = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if f.k == 1:
            q, r = _k.divrem(list(self.coeffs), list(other.coeffs), f.p)
            return Poly._make(f, tuple(q)), Poly._make(f, tuple(r))
        db = other.degree
        if self.degree < db:
            return Poly.zero(f), self
        inv_lead = f.inv(other.coeffs[-1])
        r = list(self.coeffs)
        q = [f.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if f.is_zero(c):
                continue
            c = f.mul(c, inv_lead)
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = f.sub(r[i - db + j], f.mul(c, other.coeffs[j]))
        while r and f.is_zero(r[-1]):
            r.pop()
        while q and f.is_zero(q[-1]):
            q.pop()
        return Poly._make(f, tuple(q)), Poly._make(f, tuple(r))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __call__(self, x):
        """Evaluate at a raw representation or a FieldElement."""
        f = self.field
        if isinstance(x, FieldElement):
            if x.field != f:
                raise FieldMismatch(f"{f} vs {x.field}")
            return FieldElement(f, self(x.rep))
        y = f.zero
        for c in reversed(self.coeffs):
            y = f.add(f.mul(y, x), c)
        return y

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*t" if c != self.field.one else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != self.field.one else f"t^{i}")
        return "Poly(" + " + ".join(terms) + f" over {self.field})"


def derivative(f: Poly) -> Poly:
    """Formal derivative in characteristic p."""
    fld = f.field
    if fld.k == 1:
        return Poly._make(fld, tuple(_k.deriv(list(f.coeffs), fld.p)))
    cs = []
    for i in range(1, len(f.coeffs)):
        cs.append(fld.mul(fld.from_int(i), f.coeffs[i]))
    while cs and fld.is_zero(cs[-1]):
        cs.pop()
    return Poly._make(fld, tuple(cs))


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    a._check(b)
    fld = a.field
    if fld.k == 1:
        return Poly._make(fld, tuple(_k.gcd(list(a.coeffs), list(b.coeffs), fld.p)))
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: Poly) -> bool:
    """True iff f has no repeated root over the algebraic closure.

    Nonzero constants are squarefree; a nonconstant f with f' = 0 is a p-th
    power over the perfect field F_q, hence not squarefree.
    """
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    if f.field.k == 1:
        return _k.is_squarefree(list(f.coeffs), f.field.p)
    if f.degree == 0:
        return True
    d = derivative(f)
    if d.is_zero():
        return False
    return gcd(f, d).degree == 0


def _powmod_generic(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    acc = base % mod
    while e > 0:
        if e & 1:
            result = (result * acc) % mod
        e >>= 1
        if e:
            acc = (acc * acc) % mod
    return result


def _ddf_parts_generic(f: Poly) -> tuple[int, ...]:
    fld = f.field
    q = fld.q
    g = f.monic()
    x = Poly.x(fld)
    h = x
    parts: list[int] = []
    i = 0
    while g.degree >= 2 * (i + 1):
        i += 1
        h = _powmod_generic(h, q, g)
        d = gcd(h - x, g)
        if d.degree > 0:
            parts.extend([i] * (d.degree // i))
            g = g // d
            h = h % g
    if g.degree > 0:
        parts.append(g.degree)
    parts.sort(reverse=True)
    return tuple(parts)


def ddf_type(f: Poly) -> tuple[int, ...]:
    """Degree multiset of the monic irreducible factors of squarefree f.

    Computed by distinct-degree splitting: extract gcd(f, t^{q^i} - t) for
    i = 1, 2, ...; never performs equal-degree factorization.
    """
    if f.is_zero():
        raise ZeroPolynomial("ddf_type of the zero polynomial")
    if f.degree < 1:
        raise OutOfRange("ddf_type requires deg f >= 1")
    if not is_squarefree(f):
        raise NotSquarefree("ddf_type requires a squarefree polynomial")
    return _ddf_type_unchecked(f)


def _ddf_type_unchecked(f: Poly) -> tuple[int, ...]:
    if f.field.k == 1:
        return _k.ddf_type(list(f.coeffs), f.field.p)
    return _ddf_parts_generic(f)


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over the owning field."""
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    fld = f.field
    if fld.k == 1:
        return _k.is_irreducible(list(f.coeffs), fld.p)
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    q = fld.q
    g = f.monic()
    x = Poly.x(fld)
    checkpoints = {d // r for r in _k._prime_factors(d)}
    h = x
    for j in range(1, d + 1):
        h = _powmod_generic(h, q, g)
        if j in checkpoints and gcd(h - x, g).degree > 0:
            return False
        if j == d:
            return h == x
    return False  # pragma: no cover


def random_irreducible(field: Field, d: int, seed: int = 0) -> Poly:
    """Monic irreducible of exact degree d, deterministic given the seed."""
    if d < 1:
        raise OutOfRange("degree must be >= 1")
    rng = SplitMix64(seed)
    while True:
        reps = [field.rep_from_index(rng.randbelow(field.q)) for _ in range(d)]
        cand = Poly(field, reps + [field.one])
        if is_irreducible(cand):
            return cand


def count_roots_in_extension(f: Poly, k: int) -> int:
    """N_k = #{a in F_{q^k} : f(a) = 0} for squarefree f, from its DDF type.

    N_k = sum over d | k of d * (number of degree-d irreducible factors);
    no extension arithmetic is performed.
    """
    if f.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if k < 1:
        raise OutOfRange("extension degree must be >= 1")
    if not is_squarefree(f):
        raise NotSquarefree("count_roots_in_extension requires squarefree input")
    if f.degree < 1:
        return 0
    total = 0
    for part in _ddf_type_unchecked(f):
        if k % part == 0:
            total += part
    return total


def count_distinct_roots(f: Poly) -> int:
    """Number of distinct roots of nonzero f in its own field."""
    if f.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    fld = f.field
    if fld.k == 1:
        return _k.count_distinct_roots(list(f.coeffs), fld.p)
    if f.degree < 1:
        return 0
    g = f.monic()
    x = Poly.x(fld)
    h = _powmod_generic(x, fld.q, g) - (x % g)
    return gcd(h, g).degree
