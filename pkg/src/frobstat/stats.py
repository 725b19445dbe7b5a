"""Distances to prediction, chi-square testing, and error-exponent fitting.

Probability laws are mappings from sortable labels to exact Fractions;
empirical data enters as integer counts.  Total variation distance is the
primary acceptance metric; chi-square is supplementary and feeds the Galois
detector's decision rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InsufficientData, NotNormalized, TooFewCells

DEFAULT_MIN_EXPECTED = 5.0


def _check_normalized(dist: Mapping) -> None:
    total = sum(dist.values())
    if total != 1:
        raise NotNormalized(f"probabilities sum to {total}, not 1")
    if any(v < 0 for v in dist.values()):
        raise NotNormalized("negative probability")


def normalize_counts(counts: Mapping, total: int) -> dict:
    return {label: Fraction(c, total) for label, c in counts.items()}


def tv_distance(p: Mapping, q: Mapping) -> Fraction:
    """(1/2) sum of |p - q| over the union of supports; exact."""
    _check_normalized(p)
    _check_normalized(q)
    keys = set(p) | set(q)
    total = Fraction(0)
    for key in keys:
        total += abs(Fraction(p.get(key, 0)) - Fraction(q.get(key, 0)))
    return total / 2


def tv_sampling_se(predicted: Mapping, n: int) -> float:
    """Crude standard-error scale for an n-sample TV estimate.

    Sums the per-class binomial standard deviations: every class contributes
    sqrt(p(1-p)/n)/2 to the expected absolute deviation.
    """
    return sum(math.sqrt(float(p) * (1.0 - float(p)) / n) for p in predicted.values()) / 2


@dataclass(frozen=True)
class ChiSquareResult:
    stat: float
    dof: int
    p_value: float


def chi_square(
    counts: Mapping,
    expected: Mapping,
    total: int,
    min_expected: float = DEFAULT_MIN_EXPECTED,
) -> ChiSquareResult:
    """Pearson chi-square of counts against an expected law.

    Cells whose expected count falls below `min_expected` are pooled into a
    single bucket, deterministically by label order.  Labels observed but
    not predicted join the pooled bucket as well.
    """
    _check_normalized(expected)
    labels = sorted(set(counts) | set(expected))
    cells = []  # (observed, expected) for kept cells
    pool_obs, pool_exp = 0, Fraction(0)
    for label in labels:
        obs = counts.get(label, 0)
        exp = Fraction(expected.get(label, 0)) * total
        if exp < min_expected:
            pool_obs += obs
            pool_exp += exp
        else:
            cells.append((obs, exp))
    if pool_exp > 0 or pool_obs > 0:
        cells.append((pool_obs, pool_exp))
    if len(cells) < 2:
        raise TooFewCells(f"{len(cells)} cell(s) after pooling")
    stat = 0.0
    for obs, exp in cells:
        if exp == 0:
            if obs:
                stat = math.inf
            continue
        stat += (obs - float(exp)) ** 2 / float(exp)
    dof = len(cells) - 1
    return ChiSquareResult(stat, dof, chi2_sf(stat, dof))


def chi2_sf(x: float, dof: int) -> float:
    """Upper tail of the chi-square law: Q(dof/2, x/2)."""
    if x <= 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    return _reg_gamma_upper(dof / 2.0, x / 2.0)


def _reg_gamma_upper(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x), abs error < 1e-12.

    Series for P(a,x) when x < a + 1, Lentz continued fraction for Q(a,x)
    otherwise.
    """
    if x <= 0:
        return 1.0
    if x < a + 1.0:
        # lower series: P(a,x) = e^{-x} x^a / Gamma(a) * sum x^n / (a)_{n+1}
        term = 1.0 / a
        total = term
        n = a
        for _ in range(10_000):
            n += 1.0
            term *= x / n
            total += term
            if abs(term) < abs(total) * 1e-16:
                break
        p = total * math.exp(-x + a * math.log(x) - math.lgamma(a))
        return 1.0 - p
    # continued fraction (modified Lentz)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


@dataclass(frozen=True)
class ScanPoint:
    q: int
    tv: float
    samples: int
    exclusions: dict

    def __post_init__(self):
        if not 0.0 <= self.tv <= 1.0:
            raise NotNormalized(f"tv = {self.tv} outside [0, 1]")


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    points_used: int
    dropped_zero_tv: int


def fit_exponent(points: Sequence[ScanPoint]) -> ExponentFit:
    """Least-squares slope of log(tv) against log(q).

    Points with tv = 0 are dropped (their count is reported); at least two
    surviving points with distinct q are required.
    """
    usable = [pt for pt in points if pt.tv > 0]
    dropped = len(points) - len(usable)
    if len(usable) < 2 or len({pt.q for pt in usable}) < 2:
        raise InsufficientData("need >= 2 points with tv > 0 and distinct q")
    xs = [math.log(pt.q) for pt in usable]
    ys = [math.log(pt.tv) for pt in usable]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return ExponentFit(sxy / sxx, len(usable), dropped)
