"""Sparse bivariate polynomials F(t, x) over a Field.

Provides the specialization map f -> F(t, f(t)), generic degrees, Sylvester
resultants, Wronskians, and point counting over extensions of a prime base
field.  Point counts back the Lang-Weil splitting detector `detect_nu`.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .errors import (
    BudgetExceeded,
    FieldMismatch,
    InvariantViolation,
    NonPrimeBase,
    OutOfRange,
    Undetected,
    ZeroPolynomial,
)
from .ff import Field, make_field
from .poly import Poly, count_distinct_roots

POINT_GRID_BUDGET = 1 << 34     # hard bound on p^{2k} for count_plane_points
NU_VALIDATION_FIBERS = 1 << 15  # soft bound on fibers for the confirmation count
NU_MIN_CHAR = 11


class BiPoly:
    """Term map (a, b) -> coefficient of t^a x^b, zero coefficients omitted."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping):
        cleaned = {}
        for (a, b), c in terms.items():
            if a < 0 or b < 0:
                raise OutOfRange("negative exponent in bivariate term")
            if not field.is_zero(c):
                cleaned[(a, b)] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_int_terms(cls, field: Field, terms: Mapping) -> "BiPoly":
        return cls(field, {ab: field.from_int(c) for ab, c in terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_t(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    @property
    def deg_x(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiPoly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def _check(self, other: "BiPoly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for ab, c in other.terms.items():
            out[ab] = f.add(out.get(ab, f.zero), c)
        return BiPoly(f, out)

    def __neg__(self) -> "BiPoly":
        f = self.field
        return BiPoly(f, {ab: f.neg(c) for ab, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        f = self.field
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                prod = f.mul(c1, c2)
                out[key] = f.add(out.get(key, f.zero), prod)
        return BiPoly(f, out)

    def coeffs_in_x(self) -> list[Poly]:
        """Coefficient polynomials c_b(t) for x^0 .. x^{deg_x}."""
        f = self.field
        rows: list[dict] = [dict() for _ in range(self.deg_x + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for row in rows:
            if row:
                size = max(row) + 1
                cs = [f.zero] * size
                for a, c in row.items():
                    cs[a] = c
                out.append(Poly(f, cs))
            else:
                out.append(Poly.zero(f))
        return out

    def coeffs_in_t(self) -> list[Poly]:
        """Coefficient polynomials in x for t^0 .. t^{deg_t}."""
        return self.swap_variables().coeffs_in_x()

    def swap_variables(self) -> "BiPoly":
        return BiPoly(self.field, {(b, a): c for (a, b), c in self.terms.items()})

    def evaluate(self, t0, x0):
        """Value at raw representations (t0, x0)."""
        f = self.field
        acc = f.zero
        for (a, b), c in self.terms.items():
            acc = f.add(acc, f.mul(c, f.mul(f.pow(t0, a), f.pow(x0, b))))
        return acc

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        bits = []
        for (a, b) in sorted(self.terms, key=lambda ab: (-(ab[0] + ab[1]), -ab[1])):
            c = self.terms[(a, b)]
            mon = "".join(
                [f"t^{a}" if a > 1 else "t" if a == 1 else "",
                 f"x^{b}" if b > 1 else "x" if b == 1 else ""]
            ) or "1"
            bits.append(f"{c}*{mon}")
        return "BiPoly(" + " + ".join(bits) + f" over {self.field})"


def substitute(F: BiPoly, f: Poly) -> Poly:
    """F(t, f(t)), by Horner evaluation in x with Poly coefficients."""
    if F.field != f.field:
        raise FieldMismatch(f"{F.field} vs {f.field}")
    cs = F.coeffs_in_x()
    if not cs:
        return Poly.zero(F.field)
    acc = cs[-1]
    for c in reversed(cs[:-1]):
        acc = acc * f + c
    return acc


def generic_degree(F: BiPoly, n: int) -> int:
    """deg_t F(t, A_0 + A_1 t + ... + A_n t^n) for indeterminate A_j.

    Equals max(a + n*b) over the support: the top coefficient is a nonzero
    polynomial in A_n.
    """
    if F.is_zero():
        raise ZeroPolynomial("generic degree of the zero polynomial")
    if n < 0:
        raise OutOfRange("n must be >= 0")
    return max(a + n * b for a, b in F.terms)


def _sylvester_det(fc: list[Poly], gc: list[Poly], field: Field) -> Poly:
    """Resultant from x-coefficient lists (low-to-high), Bareiss elimination."""
    while fc and fc[-1].is_zero():
        fc.pop()
    while gc and gc[-1].is_zero():
        gc.pop()
    if not fc or not gc:
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0 and n == 0:
        raise OutOfRange("eliminated variable absent from both polynomials")
    if m == 0:
        res = Poly.one(field)
        for _ in range(n):
            res = res * fc[0]
        return res
    if n == 0:
        res = Poly.one(field)
        for _ in range(m):
            res = res * gc[0]
        return res
    size = m + n
    rows: list[list[Poly]] = []
    frow = list(reversed(fc))  # leading coefficient first
    grow = list(reversed(gc))
    zero = Poly.zero(field)
    for i in range(n):
        rows.append([zero] * i + frow + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + grow + [zero] * (size - i - n - 1))
    return _bareiss(rows, field)


def _bareiss(mat: list[list[Poly]], field: Field) -> Poly:
    """Fraction-free determinant over the polynomial ring; exact divisions."""
    n = len(mat)
    sign = 1
    prev = Poly.one(field)
    for r in range(n - 1):
        if mat[r][r].is_zero():
            for i in range(r + 1, n):
                if not mat[i][r].is_zero():
                    mat[r], mat[i] = mat[i], mat[r]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        pivot = mat[r][r]
        for i in range(r + 1, n):
            row_i = mat[i]
            head = row_i[r]
            for j in range(r + 1, n):
                num = pivot * row_i[j] - head * mat[r][j]
                quot, rem = divmod(num, prev)
                if not rem.is_zero():
                    raise InvariantViolation("non-exact division in Bareiss step")
                row_i[j] = quot
            row_i[r] = Poly.zero(field)
        prev = pivot
    det = mat[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(F: BiPoly, G: BiPoly, eliminate: str = "x") -> Poly:
    """Sylvester resultant eliminating one variable; a Poly in the other.

    Vanishes identically iff F and G share a factor of positive degree in
    the eliminated variable.
    """
    F._check(G)
    if F.is_zero() or G.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    if eliminate == "x":
        return _sylvester_det(F.coeffs_in_x(), G.coeffs_in_x(), F.field)
    if eliminate == "t":
        return _sylvester_det(F.coeffs_in_t(), G.coeffs_in_t(), F.field)
    raise OutOfRange(f"eliminate must be 't' or 'x', got {eliminate!r}")


def wronskian3(f: Poly, g: Poly, h: Poly) -> Poly:
    """det [[f, g, h], [f', g', h'], [f'', g'', h'']], cofactor expansion."""
    from .poly import derivative

    if f.field != g.field or f.field != h.field:
        raise FieldMismatch("wronskian arguments from different fields")
    f1, g1, h1 = derivative(f), derivative(g), derivative(h)
    f2, g2, h2 = derivative(f1), derivative(g1), derivative(h1)
    return (
        f * (g1 * h2 - g2 * h1)
        - g * (f1 * h2 - f2 * h1)
        + h * (f1 * g2 - f2 * g1)
    )


def _fiber_polys(F: BiPoly, ext: Field) -> Iterator[Poly]:
    """F(t0, x) as a Poly in x over ext, for every t0 in enumeration order.

    Base coefficients are lifted into the extension along the canonical
    inclusion of constants.
    """
    lift = (lambda c: c) if ext.k == 1 else (lambda c: (c,) + (0,) * (ext.k - 1))
    cs = [
        [lift(c) for c in poly.coeffs] for poly in F.coeffs_in_x()
    ]
    for i in range(ext.q):
        t0 = ext.rep_from_index(i)
        fiber = []
        for coeffs in cs:
            acc = ext.zero
            for c in reversed(coeffs):
                acc = ext.add(ext.mul(acc, t0), c)
            fiber.append(acc)
        yield Poly(ext, fiber)


def count_plane_points(F: BiPoly, k: int) -> int:
    """#{(t, x) in F_{p^k}^2 : F(t, x) = 0}; prime base field only.

    Walks every t-fiber of a freshly built F_{p^k} and adds the number of
    distinct roots of the specialized univariate polynomial.
    """
    if F.field.k != 1:
        raise NonPrimeBase("count_plane_points requires a prime base field")
    if k < 1:
        raise OutOfRange("extension degree must be >= 1")
    p = F.field.p
    if p ** (2 * k) > POINT_GRID_BUDGET:
        raise BudgetExceeded(f"grid {p}^{2 * k} exceeds 2^34 evaluation budget")
    ext = F.field if k == 1 else make_field(p, k, seed=0)
    q = ext.q
    total = 0
    for fiber in _fiber_polys(F, ext):
        if fiber.is_zero():
            total += q
        else:
            total += count_distinct_roots(fiber)
    return total


def detect_nu(
    F: BiPoly,
    k_max: int,
    min_char: int = NU_MIN_CHAR,
    validation_fibers: int = NU_VALIDATION_FIBERS,
) -> int:
    """Splitting degree of an F_p-irreducible plane curve, via point counts.

    Returns the smallest k <= k_max with N_k >= p^k / 2: the number of
    Frobenius-conjugate absolutely irreducible factors.  When the fiber
    budget allows it also confirms N_{2k} >= p^{2k} / 2.  The default
    minimum characteristic keeps the Lang-Weil threshold separating
    cleanly for total degree <= 6; lowering it is the caller's risk.
    """
    if F.field.k != 1:
        raise NonPrimeBase("detect_nu requires a prime base field")
    if F.is_zero() or F.total_degree < 1:
        raise ZeroPolynomial("detect_nu needs a nonconstant polynomial")
    p = F.field.p
    if p < min_char:
        raise OutOfRange(f"detect_nu requires characteristic >= {min_char}")
    if k_max < 1:
        raise OutOfRange("k_max must be >= 1")
    for k in range(1, k_max + 1):
        if p ** (2 * k) > POINT_GRID_BUDGET:
            break
        if count_plane_points(F, k) * 2 >= p ** k:
            if p ** (2 * k) <= validation_fibers:
                if count_plane_points(F, 2 * k) * 2 < p ** (2 * k):
                    raise Undetected(
                        f"N_{k} detection not confirmed at extension {2 * k}"
                    )
            return k
    raise Undetected(f"no k <= {k_max} with N_k >= p^k / 2 within budget")
