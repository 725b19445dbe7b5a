import pytest

from frobstat.errors import (
    BudgetExceeded,
    FieldMismatch,
    NonPrimeBase,
    OutOfRange,
    Undetected,
    ZeroPolynomial,
)
from frobstat.ff import make_field
from frobstat.mpoly import (
    BiPoly,
    count_plane_points,
    detect_nu,
    generic_degree,
    resultant,
    substitute,
    wronskian3,
)
from frobstat.poly import Poly
from frobstat.rng import SplitMix64

F2 = make_field(2)
F5 = make_field(5)
F7 = make_field(7)
F11 = make_field(11)


def B(field, terms):
    return BiPoly.from_int_terms(field, terms)


def P(field, *ints):
    return Poly.from_ints(field, ints)


def test_substitute_examples():
    F = B(F5, {(0, 2): 1, (1, 0): 1})  # x^2 + t
    f = P(F5, 1, 0, 1)                 # t^2 + 1
    assert substitute(F, f) == P(F5, 1, 1, 2, 0, 1)  # t^4 + 2t^2 + t + 1
    x = B(F5, {(0, 1): 1})
    assert substitute(x, f) == f
    t = B(F5, {(1, 0): 1})
    assert substitute(t, f) == Poly.x(F5)


def test_substitute_field_mismatch():
    with pytest.raises(FieldMismatch):
        substitute(B(F5, {(0, 1): 1}), P(F7, 1, 1))


def test_substitute_is_ring_homomorphism():
    rng = SplitMix64(99)
    field = make_field(101)

    def rand_bipoly():
        return BiPoly(
            field,
            {(rng.randbelow(3), rng.randbelow(3)): rng.randbelow(101) for _ in range(3)},
        )

    for _ in range(25):
        F, G = rand_bipoly(), rand_bipoly()
        f = Poly(field, [rng.randbelow(101) for _ in range(3)])
        assert substitute(F + G, f) == substitute(F, f) + substitute(G, f)
        assert substitute(F * G, f) == substitute(F, f) * substitute(G, f)


def test_generic_degree_examples():
    assert generic_degree(B(F7, {(0, 1): 1, (1, 0): -1}), 1) == 1   # x - t
    assert generic_degree(B(F7, {(0, 2): 1, (1, 0): 1}), 2) == 4    # x^2 + t
    assert generic_degree(B(F7, {(0, 2): 1, (3, 0): 1}), 1) == 3    # x^2 + t^3
    with pytest.raises(ZeroPolynomial):
        generic_degree(BiPoly(F7, {}), 1)


def test_generic_degree_oracle():
    # deg substitute(F, f) <= generic_degree, equality hit over 20 random f
    field = make_field(257)
    rng = SplitMix64(8)
    for terms, n in [({(0, 2): 1, (1, 0): 1}, 2), ({(0, 2): 1, (3, 0): 1}, 1)]:
        F = B(field, terms)
        bound = generic_degree(F, n)
        best = -1
        for _ in range(20):
            f = Poly(field, [rng.randbelow(257) for _ in range(n)] + [1 + rng.randbelow(256)])
            d = substitute(F, f).degree
            assert d <= bound
            best = max(best, d)
        assert best == bound


def test_resultant_examples():
    A = B(F7, {(0, 1): 1, (1, 0): -1})                 # x - t
    C = B(F7, {(0, 2): 1, (2, 0): 1, (0, 0): -1})      # x^2 + t^2 - 1
    assert resultant(A, C, "x") == P(F7, -1, 0, 2)     # 2t^2 - 1
    D = B(F7, {(0, 2): 1, (0, 0): 1})                  # x^2 + 1
    assert resultant(D, D, "x").is_zero()
    E1 = B(F7, {(0, 1): 1, (0, 0): 3})                 # x + 3
    E2 = B(F7, {(0, 1): 1, (0, 0): 5})                 # x + 5
    r = resultant(E1, E2, "x")
    assert r.degree == 0 and not r.is_zero()


def test_resultant_eliminate_t():
    A = B(F7, {(1, 0): 1, (0, 1): -1})  # t - x
    C = B(F7, {(2, 0): 1, (0, 0): 1})   # t^2 + 1
    r = resultant(A, C, "t")            # x^2 + 1 as Poly in x
    assert r == P(F7, 1, 0, 1)


def test_resultant_detects_common_factor():
    # (x - t) * (x + t) and (x - t) * (x + 1) share x - t
    A = B(F7, {(0, 2): 1, (2, 0): -1})
    C = B(F7, {(0, 2): 1, (0, 1): 1, (1, 1): -1, (1, 0): -1})
    assert resultant(A, C, "x").is_zero()


def test_wronskian_examples():
    one, t = Poly.one(F7), Poly.x(F7)
    t2 = P(F7, 0, 0, 1)
    assert wronskian3(one, t, t2) == P(F7, 2)
    one2, tb, tb2 = Poly.one(F2), Poly.x(F2), P(F2, 0, 0, 1)
    assert wronskian3(one2, tb, tb2).is_zero()
    f, g = P(F7, 1, 2, 3), P(F7, 4, 5)
    assert wronskian3(f, f, g).is_zero()
    assert wronskian3(f, g, f).is_zero()
    assert wronskian3(g, f, f).is_zero()


def test_wronskian_alternating_random():
    rng = SplitMix64(3)
    for _ in range(10):
        f = Poly(F7, [rng.randbelow(7) for _ in range(4)])
        g = Poly(F7, [rng.randbelow(7) for _ in range(4)])
        h = Poly(F7, [rng.randbelow(7) for _ in range(4)])
        w = wronskian3(f, g, h)
        assert wronskian3(g, f, h) == -w


def test_count_plane_points_examples():
    graph = B(F7, {(0, 1): 1, (2, 0): -1})  # x - t^2
    assert count_plane_points(graph, 1) == 7
    circle = B(F7, {(0, 2): 1, (2, 0): 1})  # x^2 + t^2
    assert count_plane_points(circle, 1) == 1
    assert count_plane_points(circle, 2) == 97  # two lines over F_49 sharing (0,0)


def test_count_plane_points_brute_force_cross_check():
    rng = SplitMix64(6)
    for _ in range(5):
        F = BiPoly(F5, {(rng.randbelow(3), rng.randbelow(3)): rng.randbelow(5) for _ in range(4)})
        if F.is_zero():
            continue
        for k in (1, 2):
            field = F5 if k == 1 else make_field(5, 2, seed=0)
            brute = 0
            for i in range(field.q):
                for j in range(field.q):
                    t0 = field.rep_from_index(i)
                    x0 = field.rep_from_index(j)
                    lift_terms = {
                        ab: (c if field.k == 1 else (c,) + (0,) * (field.k - 1))
                        for ab, c in F.terms.items()
                    }
                    Fk = BiPoly(field, lift_terms)
                    if field.is_zero(Fk.evaluate(t0, x0)):
                        brute += 1
            assert count_plane_points(F, k) == brute


def test_count_plane_points_errors():
    f9 = make_field(3, 2, seed=0)
    with pytest.raises(NonPrimeBase):
        count_plane_points(B(f9, {(0, 1): 1}), 1)
    big = make_field(131101)  # 131101^2 > 2^34
    with pytest.raises(BudgetExceeded):
        count_plane_points(B(big, {(0, 1): 1}), 1)


def test_detect_nu_examples():
    assert detect_nu(B(F7, {(0, 1): 1, (2, 0): -1}), 4, min_char=7) == 1
    assert detect_nu(B(F7, {(0, 2): 1, (2, 0): 1}), 4, min_char=7) == 2
    assert detect_nu(B(F5, {(0, 2): 1, (1, 0): 1}), 4, min_char=5) == 1
    assert detect_nu(B(F11, {(0, 2): 1, (2, 0): 1}), 4) == 2


def test_detect_nu_guards():
    with pytest.raises(OutOfRange):
        detect_nu(B(F7, {(0, 2): 1, (2, 0): 1}), 4)  # default min_char = 11
    with pytest.raises(Undetected):
        detect_nu(B(F11, {(0, 2): 1, (2, 0): 1}), 1)  # k_max too small to see nu = 2
    f9 = make_field(3, 2, seed=0)
    with pytest.raises(NonPrimeBase):
        detect_nu(B(f9, {(0, 1): 1}), 2)


def _cofactor_det(mat, field):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = Poly.zero(field)
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _cofactor_det(minor, field)
        total = total - term if j % 2 else total + term
    return total


def test_bareiss_against_cofactor_expansion():
    from frobstat.mpoly import _sylvester_det

    rng = SplitMix64(314)
    for _ in range(20):
        dx_f, dx_g = 1 + rng.randbelow(2), 1 + rng.randbelow(2)
        F = BiPoly(F7, {(rng.randbelow(3), b): rng.randbelow(7) for b in range(dx_f + 1)})
        G = BiPoly(F7, {(rng.randbelow(3), b): rng.randbelow(7) for b in range(dx_g + 1)})
        fc, gc = F.coeffs_in_x(), G.coeffs_in_x()
        while fc and fc[-1].is_zero():
            fc.pop()
        while gc and gc[-1].is_zero():
            gc.pop()
        if len(fc) < 2 or len(gc) < 2:
            continue
        m, n = len(fc) - 1, len(gc) - 1
        size = m + n
        zero = Poly.zero(F7)
        rows = []
        frow, grow = list(reversed(fc)), list(reversed(gc))
        for i in range(n):
            rows.append([zero] * i + frow + [zero] * (size - i - m - 1))
        for i in range(m):
            rows.append([zero] * i + grow + [zero] * (size - i - n - 1))
        assert _sylvester_det(F.coeffs_in_x(), G.coeffs_in_x(), F7) == _cofactor_det(rows, F7)


def test_bipoly_equality_and_degrees():
    F = B(F7, {(0, 2): 1, (1, 0): 1, (2, 2): 0})
    assert F == B(F7, {(0, 2): 1, (1, 0): 1})
    assert F.deg_t == 1 and F.deg_x == 2 and F.total_degree == 2
