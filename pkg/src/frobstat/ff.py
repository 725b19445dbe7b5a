"""Exact arithmetic in F_p and F_{p^k}, with deterministic field construction.

Elements carry a canonical representation: a residue in [0, p) when k = 1,
and a coefficient tuple of length k over F_p (low degree first) when k > 1.
Extensions are always built directly over the prime field; there is no
tower structure and no embedding between extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

from . import _kernels as _k
from .errors import DivisionByZero, FieldMismatch, InvariantViolation, NotPrime, TooLarge
from .rng import SplitMix64

MAX_CHARACTERISTIC = 1 << 20
MAX_ORDER = 1 << 40
MAX_ENUMERATION = 1 << 20

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

Rep = Union[int, tuple]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor of F_{p^k}; modulus is None exactly when k = 1."""

    p: int
    k: int = 1
    modulus: tuple | None = None

    @cached_property
    def q(self) -> int:
        return self.p ** self.k

    # --- raw-representation arithmetic (ints for k = 1, tuples for k > 1) ---

    @property
    def zero(self) -> Rep:
        return 0 if self.k == 1 else (0,) * self.k

    @property
    def one(self) -> Rep:
        return 1 if self.k == 1 else (1,) + (0,) * (self.k - 1)

    def from_int(self, c: int) -> Rep:
        if self.k == 1:
            return c % self.p
        return (c % self.p,) + (0,) * (self.k - 1)

    def add(self, a: Rep, b: Rep) -> Rep:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Rep, b: Rep) -> Rep:
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Rep) -> Rep:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: Rep, b: Rep) -> Rep:
        if self.k == 1:
            return (a * b) % self.p
        c = _k.rem(_k.mul(list(a), list(b), self.p), list(self.modulus), self.p)
        return tuple(c) + (0,) * (self.k - len(c))

    def inv(self, a: Rep) -> Rep:
        if self.k == 1:
            if a % self.p == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if not any(a):
            raise DivisionByZero("inverse of zero")
        c = _k.inv_mod(list(a), list(self.modulus), self.p)
        return tuple(c) + (0,) * (self.k - len(c))

    def div(self, a: Rep, b: Rep) -> Rep:
        return self.mul(a, self.inv(b))

    def pow(self, a: Rep, e: int) -> Rep:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        acc, result = a, self.one
        while e > 0:
            if e & 1:
                result = self.mul(result, acc)
            e >>= 1
            if e:
                acc = self.mul(acc, acc)
        return result

    def is_zero(self, a: Rep) -> bool:
        return a == 0 if self.k == 1 else not any(a)

    # --- enumeration ---

    def rep_from_index(self, i: int) -> Rep:
        """i-th element in the canonical order (0 first, then 1)."""
        if self.k == 1:
            return i
        p = self.p
        digits = []
        for _ in range(self.k):
            digits.append(i % p)
            i //= p
        return tuple(digits)

    def index_of(self, a: Rep) -> int:
        if self.k == 1:
            return a
        i = 0
        for d in reversed(a):
            i = i * self.p + d
        return i

    def element(self, value) -> "FieldElement":
        """Wrap an int (reduced mod p) or a raw representation."""
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        rep = tuple(v % self.p for v in value)
        if len(rep) != self.k:
            raise ValueError(f"representation length {len(rep)} != k = {self.k}")
        return FieldElement(self, rep if self.k > 1 else rep[0])

    def elements(self) -> Iterator["FieldElement"]:
        if self.q > MAX_ENUMERATION:
            raise TooLarge(f"field of order {self.q} exceeds enumeration bound 2^20")
        for i in range(self.q):
            yield FieldElement(self, self.rep_from_index(i))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.k}"


@dataclass(frozen=True)
class FieldElement:
    field: Field
    rep: Rep

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.rep, other.rep))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.rep, other.rep))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.rep, other.rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.rep, other.rep))

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.rep))

    def __bool__(self) -> bool:
        return not self.field.is_zero(self.rep)

    def __repr__(self) -> str:
        return f"{self.field}({self.rep})"


def make_field(p: int, k: int = 1, seed: int = 0) -> Field:
    """Build F_{p^k}; the modulus search is deterministic given the seed.

    Random monic candidates are drawn from a splitmix64 stream seeded with
    `seed`; after 10^4 failures the search falls back to scanning monic
    polynomials in ascending integer-code order (little-endian base-p digits).
    """
    if k < 1:
        raise TooLarge(f"extension degree must be >= 1, got {k}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p > MAX_CHARACTERISTIC:
        raise TooLarge(f"characteristic {p} exceeds 2^20")
    if p ** k > MAX_ORDER:
        raise TooLarge(f"field order p^k = {p}^{k} exceeds 2^40")
    if k == 1:
        return Field(p, 1, None)

    rng = SplitMix64(seed)
    for _ in range(10_000):
        cand = [rng.randbelow(p) for _ in range(k)] + [1]
        if _k.is_irreducible(cand, p):
            return Field(p, k, tuple(cand))
    for code in range(p ** k):  # deterministic fallback; reached with probability ~0
        cand = []
        c = code
        for _ in range(k):
            cand.append(c % p)
            c //= p
        cand.append(1)
        if _k.is_irreducible(cand, p):
            return Field(p, k, tuple(cand))
    raise InvariantViolation("no irreducible modulus found")  # pragma: no cover


def field_of_order(q: int, seed: int = 0) -> Field:
    """Build the field with q = p^k elements from its order alone."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    if is_prime(q):
        return make_field(q, 1, seed)
    for k in range(2, q.bit_length() + 1):
        p = round(q ** (1.0 / k))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand ** k == q:
                if not is_prime(cand):
                    raise NotPrime(f"{q} is not a prime power")
                return make_field(cand, k, seed)
    raise NotPrime(f"{q} is not a prime power")


def enumerate_field(field: Field) -> Iterator[FieldElement]:
    """All q elements in a fixed order, starting 0, 1, ...; q <= 2^20."""
    return field.elements()
