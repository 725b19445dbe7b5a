import itertools

import pytest

from frobstat.errors import (
    DivisionByZero,
    FieldMismatch,
    NotSquarefree,
    ZeroPolynomial,
)
from frobstat.ff import make_field
from frobstat.poly import (
    Poly,
    _ddf_parts_generic,
    count_distinct_roots,
    count_roots_in_extension,
    ddf_type,
    derivative,
    gcd,
    is_irreducible,
    is_squarefree,
    random_irreducible,
)
from frobstat.rng import SplitMix64

F2 = make_field(2)
F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)
F9 = make_field(3, 2, seed=0)


def P(field, *ints):
    return Poly.from_ints(field, ints)


def test_product_example():
    # (t+1)(t+4) = t^2 + 4 over F_5
    assert P(F5, 1, 1) * P(F5, 4, 1) == P(F5, 4, 0, 1)


def test_gcd_example():
    g = gcd(P(F7, -1, 0, 1), P(F7, -1, 0, 0, 1))  # t^2-1, t^3-1
    assert g == P(F7, -1, 1)
    assert g.is_monic()


def test_derivative_char3():
    assert derivative(P(F3, 1, 1, 0, 1)) == Poly.one(F3)  # d/dt (t^3+t+1) = 1


def test_divrem_contract():
    rng = SplitMix64(17)
    for field in (F7, F9):
        for _ in range(50):
            a = Poly(field, [field.rep_from_index(rng.randbelow(field.q)) for _ in range(6)])
            b = Poly(field, [field.rep_from_index(rng.randbelow(field.q)) for _ in range(3)])
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(P(F7, 1, 1), Poly.zero(F7))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        P(F7, 1, 1) + P(F5, 1, 1)
    with pytest.raises(FieldMismatch):
        P(F7, 1, 1)(F5.element(2))


def test_evaluation():
    f = P(F7, 1, 2, 1)  # (t+1)^2
    assert f(F7.element(2)).rep == 2  # 9 mod 7
    assert f(6) == 0


def test_squarefree_examples():
    assert not is_squarefree(P(F2, 0, 0, 1))       # t^2
    assert is_squarefree(P(F3, 1, 0, 1))           # t^2 + 1
    assert is_squarefree(Poly.one(F7))             # constant
    assert not is_squarefree(P(F3, 1, 0, 0, 1))    # t^3 + 1 = (t+1)^3
    with pytest.raises(ZeroPolynomial):
        is_squarefree(Poly.zero(F7))


def test_ddf_examples():
    assert ddf_type(P(F2, 0, 1, 1)) == (1, 1)       # t^2 + t
    assert ddf_type(P(F2, 1, 1, 0, 1)) == (3,)      # t^3 + t + 1
    assert ddf_type(P(F3, 1, 0, 0, 0, 1)) == (2, 2) # t^4 + 1
    with pytest.raises(NotSquarefree):
        ddf_type(P(F2, 0, 0, 1))


def test_ddf_parts_sum_to_degree():
    rng = SplitMix64(23)
    for _ in range(200):
        d = 1 + rng.randbelow(8)
        f = Poly(F5, [rng.randbelow(5) for _ in range(d)] + [1])
        if not is_squarefree(f):
            continue
        assert sum(ddf_type(f)) == d


def _all_monic(field, degree):
    for low in itertools.product(range(field.q), repeat=degree):
        reps = [field.rep_from_index(i) for i in low] + [field.one]
        yield Poly(field, reps)


def _trial_division_type(f, irreducibles):
    parts = []
    rest = f.monic()
    for g in irreducibles:
        while rest.degree >= g.degree and (rest % g).is_zero():
            parts.append(g.degree)
            rest = rest // g
    assert rest.degree == 0
    return tuple(sorted(parts, reverse=True))


def _irreducibles_up_to(field, max_degree):
    found = []
    for d in range(1, max_degree + 1):
        for cand in _all_monic(field, d):
            if not any(
                2 * g.degree <= d and (cand % g).is_zero() for g in found
            ):
                found.append(cand)
    return found


@pytest.mark.parametrize("field,max_degree", [(F2, 6), (F3, 6)])
def test_ddf_against_trial_division(field, max_degree):
    irr = _irreducibles_up_to(field, max_degree)
    for d in range(1, max_degree + 1):
        for f in _all_monic(field, d):
            if not is_squarefree(f):
                continue
            assert ddf_type(f) == _trial_division_type(f, irr)


def test_generic_ddf_matches_kernel_on_prime_field():
    rng = SplitMix64(31)
    for _ in range(100):
        d = 1 + rng.randbelow(6)
        f = Poly(F7, [rng.randbelow(7) for _ in range(d)] + [1])
        if not is_squarefree(f):
            continue
        assert _ddf_parts_generic(f) == ddf_type(f)


def test_ddf_over_extension_field():
    # all squarefree monics of degree <= 3 over F_9, against trial division
    irr = _irreducibles_up_to(F9, 3)
    for d in (2, 3):
        for f in _all_monic(F9, d):
            if not is_squarefree(f):
                continue
            assert ddf_type(f) == _trial_division_type(f, irr)


def test_irreducibility_examples():
    assert is_irreducible(P(F3, 1, 0, 1))        # t^2+1, -1 nonsquare mod 3
    assert not is_irreducible(P(F5, 1, 0, 1))    # 2^2 = -1 mod 5
    g = random_irreducible(F2, 4, seed=7)
    assert g.degree == 4 and g.is_monic()
    assert ddf_type(g) == (4,)


def test_random_irreducible_deterministic():
    assert random_irreducible(F5, 3, seed=11) == random_irreducible(F5, 3, seed=11)


def test_irreducible_over_extension():
    g = random_irreducible(F9, 2, seed=4)
    assert g.degree == 2 and is_irreducible(g)
    assert ddf_type(g) == (2,)


def test_count_roots_examples():
    f = P(F3, 1, 0, 1)  # t^2 + 1
    assert count_roots_in_extension(f, 1) == 0
    assert count_roots_in_extension(f, 2) == 2
    g = P(F2, 1, 1, 0, 1)  # t^3 + t + 1
    assert count_roots_in_extension(g, 3) == 3
    assert count_roots_in_extension(g, 2) == 0
    t = Poly.x(F7)
    for k in (1, 2, 5):
        assert count_roots_in_extension(t, k) == 1


def test_count_roots_not_squarefree():
    with pytest.raises(NotSquarefree):
        count_roots_in_extension(P(F3, 0, 0, 1), 1)


def test_count_roots_base_field_matches_evaluation():
    rng = SplitMix64(41)
    for field in (F5, F9):
        for _ in range(40):
            d = 1 + rng.randbelow(5)
            f = Poly(field, [field.rep_from_index(rng.randbelow(field.q)) for _ in range(d)] + [field.one])
            if not is_squarefree(f):
                continue
            brute = sum(1 for e in field.elements() if field.is_zero(f(e.rep)))
            assert count_roots_in_extension(f, 1) == brute
            assert count_distinct_roots(f) == brute


def test_gcd_divides_both():
    rng = SplitMix64(47)
    for _ in range(100):
        a = Poly(F7, [rng.randbelow(7) for _ in range(1 + rng.randbelow(6))])
        b = Poly(F7, [rng.randbelow(7) for _ in range(1 + rng.randbelow(6))])
        if a.is_zero() or b.is_zero():
            continue
        g = gcd(a, b)
        assert g.is_monic()
        assert (a % g).is_zero() and (b % g).is_zero()
