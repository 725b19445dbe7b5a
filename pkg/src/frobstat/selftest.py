"""Built-in oracle-equivalence suites, runnable without pytest.

Each check pits an implementation against an independent route: DDF types
against exhaustive trial division, point-count inversion against DDF,
predictions against brute-force coset enumeration, resultants against
specialized univariate resultants.  `frobstat selftest` runs these and
exits nonzero on any failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _kernels as _k
from .errors import ExclusionError
from .ff import Field, make_field
from .frob import type_from_point_counts, type_from_univariate
from .groups import GroupShape, full_cycle_probability, predict, wreath_oracle
from .mpoly import BiPoly, generic_degree, resultant, substitute
from .poly import Poly, count_roots_in_extension, random_irreducible
from .rng import SplitMix64
from .stats import ScanPoint, fit_exponent


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _monic_polys(p: int, degree: int):
    """All monic coefficient lists of the exact degree over F_p."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def _irreducibles_by_trial_division(p: int, max_degree: int) -> list[list[int]]:
    """Monic irreducibles of degree <= max_degree, independent of Rabin/DDF."""
    found: list[list[int]] = []
    for d in range(1, max_degree + 1):
        for cand in _monic_polys(p, d):
            composite = False
            for g in found:
                if 2 * (len(g) - 1) > d:
                    break
                if not _k.rem(cand, g, p):
                    composite = True
                    break
            if not composite:
                found.append(cand)
    return found


def _factor_type_by_trial_division(f: list[int], p: int, irreducibles) -> tuple:
    parts = []
    rest = _k.monic(f, p)
    for g in irreducibles:
        while len(rest) > 1 and not _k.rem(rest, g, p):
            parts.append(len(g) - 1)
            rest = _k.divrem(rest, g, p)[0]
        if len(rest) == 1:
            break
    parts.sort(reverse=True)
    return tuple(parts)


def check_ddf_against_trial_division(max_degree: int = 6) -> CheckResult:
    for p in (2, 3):
        irr = _irreducibles_by_trial_division(p, max_degree)
        for d in range(1, max_degree + 1):
            for f in _monic_polys(p, d):
                if not _k.is_squarefree(f, p):
                    continue
                got = _k.ddf_type(f, p)
                want = _factor_type_by_trial_division(f, p, irr)
                if got != want:
                    return CheckResult(
                        "ddf-vs-trial-division",
                        False,
                        f"p={p} f={f}: ddf {got} != trial division {want}",
                    )
    return CheckResult("ddf-vs-trial-division", True)


def check_frobenius_cross_oracle(per_prime: int = 1000, max_degree: int = 8) -> CheckResult:
    for p in (2, 3, 5, 7):
        field = make_field(p)
        rng = SplitMix64(p * 1_000_003)
        produced = 0
        while produced < per_prime:
            d = 1 + rng.randbelow(max_degree)
            coeffs = [rng.randbelow(p) for _ in range(d)] + [1]
            f = Poly(field, coeffs)
            try:
                parts = type_from_univariate(f, d)
            except ExclusionError:
                continue
            produced += 1
            counts = [count_roots_in_extension(f, k) for k in range(1, d + 1)]
            inverted = type_from_point_counts(counts, d)
            if parts != inverted:
                return CheckResult(
                    "frobenius-cross-oracle",
                    False,
                    f"p={p} f={coeffs}: {parts} != {inverted}",
                )
    return CheckResult("frobenius-cross-oracle", True)


def check_predictions_against_wreath() -> CheckResult:
    for d in range(1, 5):
        for nu in range(1, 4):
            shape = GroupShape((d,), (nu,))
            predicted = {label[0]: pr for label, pr in predict(shape).items()}
            oracle = wreath_oracle(d, nu)
            if predicted != oracle:
                return CheckResult(
                    "predict-vs-wreath-oracle",
                    False,
                    f"d={d} nu={nu}: {predicted} != {oracle}",
                )
    return CheckResult("predict-vs-wreath-oracle", True)


def check_full_cycle_identity() -> CheckResult:
    degrees = range(1, 7)
    for d1, d2 in itertools.product(degrees, repeat=2):
        for nu1, nu2 in itertools.product(range(1, 4), repeat=2):
            shape = GroupShape((d1, d2), (nu1, nu2))
            got = full_cycle_probability(shape)
            want = Fraction(1, d1 * d2)
            if got != want:
                return CheckResult(
                    "full-cycle-probability",
                    False,
                    f"shape {shape}: {got} != {want}",
                )
    return CheckResult("full-cycle-probability", True)


def check_prediction_normalization() -> CheckResult:
    shapes = [((4,), (1,)), ((2, 3), (2, 1)), ((5,), (2,)), ((1, 1, 2), (3, 1, 2))]
    for degrees, splittings in shapes:
        total = sum(predict(GroupShape(degrees, splittings)).values())
        if total != 1:
            return CheckResult(
                "prediction-normalization", False, f"{degrees}/{splittings}: {total}"
            )
    return CheckResult("prediction-normalization", True)


def check_substitution_homomorphism(trials: int = 30) -> CheckResult:
    field = make_field(101)
    rng = SplitMix64(2024)

    def random_bipoly():
        terms = {}
        for _ in range(1 + rng.randbelow(4)):
            terms[(rng.randbelow(3), rng.randbelow(3))] = rng.randbelow(101)
        return BiPoly(field, terms)

    for _ in range(trials):
        F, G = random_bipoly(), random_bipoly()
        f = Poly(field, [rng.randbelow(101) for _ in range(3)])
        lhs_add = substitute(F + G, f)
        rhs_add = substitute(F, f) + substitute(G, f)
        lhs_mul = substitute(F * G, f)
        rhs_mul = substitute(F, f) * substitute(G, f)
        if lhs_add != rhs_add or lhs_mul != rhs_mul:
            return CheckResult("substitution-homomorphism", False, f"F={F} G={G}")
    return CheckResult("substitution-homomorphism", True)


def check_generic_degree_oracle() -> CheckResult:
    field = make_field(257)
    rng = SplitMix64(11)
    cases = [
        ({(0, 2): 1, (1, 0): 1}, 2, 4),
        ({(0, 2): 1, (3, 0): 1}, 1, 3),
        ({(0, 1): 1, (1, 0): -1 % 257}, 1, 1),
    ]
    for terms, n, expected in cases:
        F = BiPoly.from_int_terms(field, terms)
        if generic_degree(F, n) != expected:
            return CheckResult(
                "generic-degree", False, f"terms={terms} n={n}: != {expected}"
            )
        best = -1
        for _ in range(20):
            f = Poly(field, [rng.randbelow(257) for _ in range(n)] + [1 + rng.randbelow(256)])
            best = max(best, substitute(F, f).degree)
        if best != expected:
            return CheckResult(
                "generic-degree", False, f"terms={terms} n={n}: oracle max {best}"
            )
    return CheckResult("generic-degree", True)


def _univariate_resultant(a: Poly, b: Poly) -> object:
    """Scalar resultant via the Euclidean algorithm, independent of Bareiss."""
    field = a.field
    if a.is_zero() or b.is_zero():
        return field.zero
    res = field.one
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return field.zero
        res = field.mul(res, field.pow(b.lead(), a.degree - r.degree))
        if (a.degree * b.degree) % 2 == 1:
            res = field.neg(res)
        a, b = b, r
    return field.mul(res, field.pow(b.lead(), a.degree))


def check_resultant_specialization(trials: int = 25) -> CheckResult:
    field = make_field(97)
    rng = SplitMix64(5)

    def random_bipoly():
        terms = {}
        for _ in range(2 + rng.randbelow(4)):
            terms[(rng.randbelow(3), rng.randbelow(3))] = 1 + rng.randbelow(96)
        return BiPoly(field, terms)

    checked = 0
    while checked < trials:
        F, G = random_bipoly(), random_bipoly()
        if F.deg_x < 1 or G.deg_x < 1:
            continue
        R = resultant(F, G, "x")
        t0 = rng.randbelow(97)
        fx = Poly(field, [c(t0) for c in F.coeffs_in_x()])
        gx = Poly(field, [c(t0) for c in G.coeffs_in_x()])
        if fx.degree != F.deg_x or gx.degree != G.deg_x:
            continue  # leading coefficient vanished at t0
        expected = _univariate_resultant(fx, gx)
        if R(t0) != expected:
            return CheckResult(
                "resultant-specialization", False, f"F={F} G={G} t0={t0}"
            )
        checked += 1
    return CheckResult("resultant-specialization", True)


def check_random_irreducible() -> CheckResult:
    for p, d in ((2, 4), (5, 3), (7, 2)):
        field = make_field(p)
        g = random_irreducible(field, d, seed=d)
        if g.degree != d or not g.is_monic():
            return CheckResult("random-irreducible", False, f"p={p} d={d}: {g}")
        if type_from_univariate(g, d) != (d,):
            return CheckResult("random-irreducible", False, f"p={p} d={d} reducible")
    return CheckResult("random-irreducible", True)


def check_fit_exponent() -> CheckResult:
    pts = [ScanPoint(4, 0.5, 1, {}), ScanPoint(16, 0.25, 1, {})]
    fit = fit_exponent(pts)
    if abs(fit.slope + 0.5) > 1e-12:
        return CheckResult("fit-exponent", False, f"slope {fit.slope}")
    flat = [ScanPoint(q, 0.125, 1, {}) for q in (4, 9, 25)]
    if abs(fit_exponent(flat).slope) > 1e-12:
        return CheckResult("fit-exponent", False, "flat data nonzero slope")
    return CheckResult("fit-exponent", True)


def run_selftest(quick: bool = False) -> list[CheckResult]:
    per_prime = 100 if quick else 1000
    max_degree = 5 if quick else 6
    return [
        check_ddf_against_trial_division(max_degree),
        check_frobenius_cross_oracle(per_prime),
        check_predictions_against_wreath(),
        check_full_cycle_identity(),
        check_prediction_normalization(),
        check_substitution_homomorphism(),
        check_generic_degree_oracle(),
        check_resultant_specialization(),
        check_random_irreducible(),
        check_fit_exponent(),
    ]
