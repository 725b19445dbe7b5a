"""Dense univariate polynomial kernels over prime fields F_p.

Polynomials are little-endian coefficient lists of Python ints reduced into
[0, p), with no trailing zeros; the zero polynomial is the empty list.
These functions are the hot path of the exhaustive experiment drivers, so
they avoid any object wrapping.  Extension fields go through the generic
routines in `poly` instead.
"""

from __future__ import annotations


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = (out[i] + bi) % p
    return trim(out)


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return trim(out)


def scale(a: list[int], s: int, p: int) -> list[int]:
    s %= p
    if s == 0:
        return []
    return [(ai * s) % p for ai in a]


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([v % p for v in out])


def divrem(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = (c * inv_lead) % p
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def rem(a: list[int], b: list[int], p: int) -> list[int]:
    return divrem(a, b, p)[1]


def monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def deriv(a: list[int], p: int) -> list[int]:
    return trim([(i * a[i]) % p for i in range(1, len(a))])


def eval_at(a: list[int], x: int, p: int) -> int:
    y = 0
    for c in reversed(a):
        y = (y * x + c) % p
    return y


def mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    return rem(mul(a, b, p), f, p)


def powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    """base^e mod f, square-and-multiply; f monic of degree >= 1."""
    result = [1]
    acc = rem(base, f, p)
    while e > 0:
        if e & 1:
            result = mulmod(result, acc, f, p)
        e >>= 1
        if e:
            acc = mulmod(acc, acc, f, p)
    return result


def is_squarefree(f: list[int], p: int) -> bool:
    """f nonzero.  Nonzero constants count as squarefree."""
    if len(f) <= 1:
        return bool(f)
    d = deriv(f, p)
    if not d:
        return False  # f is a p-th power
    return len(gcd(f, d, p)) == 1


def ddf_type(f: list[int], p: int) -> tuple[int, ...]:
    """Degree multiset of the irreducible factors of squarefree f, deg f >= 1.

    Extracts gcd(f, t^{p^i} - t) for i = 1, 2, ...; a degree-(i*c) extract
    contributes c parts equal to i.  The caller guarantees squarefreeness.
    """
    g = monic(f, p)
    parts: list[int] = []
    h = [0, 1]
    i = 0
    while len(g) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(h, p, g, p)
        d = gcd(sub(h, [0, 1], p), g, p)
        if len(d) > 1:
            parts.extend([i] * ((len(d) - 1) // i))
            g = divrem(g, d, p)[0]
            h = rem(h, g, p)
    if len(g) > 1:
        parts.append(len(g) - 1)
    parts.sort(reverse=True)
    return tuple(parts)


def count_distinct_roots(f: list[int], p: int) -> int:
    """Number of distinct roots of nonzero f in F_p."""
    if len(f) <= 1:
        return 0
    g = monic(f, p)
    h = sub(powmod([0, 1], p, g, p), [0, 1], p)
    return len(gcd(h, g, p)) - 1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: t^{p^d} = t mod f and gcd(f, t^{p^{d/r}} - t) = 1 for r | d."""
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    g = monic(f, p)
    if g[0] == 0:
        return False  # divisible by t
    checkpoints = {d // r for r in _prime_factors(d)}
    h = [0, 1]
    for j in range(1, d + 1):
        h = powmod(h, p, g, p)
        if j in checkpoints:
            if len(gcd(sub(h, [0, 1], p), g, p)) > 1:
                return False
        if j == d:
            return h == [0, 1]
    return False  # unreachable


def inv_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Inverse of a modulo f (extended Euclid); a nonzero mod f, f monic."""
    r0, r1 = list(f), rem(a, f, p)
    if not r1:
        raise ZeroDivisionError("inverse of zero")
    s0: list[int] = []
    s1: list[int] = [1]
    while r1:
        q, r = divrem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible modulo f")
    return rem(scale(s0, pow(r0[0], p - 2, p), p), f, p)
