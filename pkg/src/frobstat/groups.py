"""Partitions, conjugacy-class sizes, and predicted Frobenius-class laws.

A cycle type is a weakly decreasing tuple of positive ints.  A class label
for a product of factors is a tuple of such partitions, the i-th of weight
d_i * nu_i with every part divisible by nu_i.  All probabilities are exact
`fractions.Fraction` values.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import OutOfRange

Partition = tuple[int, ...]
ClassLabel = tuple[Partition, ...]

MAX_PARTITION_WEIGHT = 40
MAX_CLASS_WEIGHT = 20
MAX_FACTOR_DEGREE = 12
MAX_SPLITTING = 6
MAX_ORACLE_DEGREE = 4
MAX_ORACLE_SPLITTING = 3


@lru_cache(maxsize=None)
def _partitions(d: int, max_part: int) -> tuple[Partition, ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d, descending-lexicographic order."""
    if not 1 <= d <= MAX_PARTITION_WEIGHT:
        raise OutOfRange(f"partitions_of supports 1 <= d <= {MAX_PARTITION_WEIGHT}")
    return _partitions(d, d)


def class_size(lam: Partition) -> int:
    """Number of permutations of S_{|lam|} with cycle type lam."""
    d = sum(lam)
    if not 1 <= d <= MAX_CLASS_WEIGHT:
        raise OutOfRange(f"class_size supports weight 1..{MAX_CLASS_WEIGHT}")
    if any(part < 1 for part in lam):
        raise OutOfRange("partition parts must be positive")
    denom = 1
    for length, count in Counter(lam).items():
        denom *= length ** count * factorial(count)
    return factorial(d) // denom


@dataclass(frozen=True)
class GroupShape:
    """The data (d_1..d_m), (nu_1..nu_m) of a product of wreath factors."""

    degrees: tuple[int, ...]
    splittings: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) != len(self.splittings):
            raise OutOfRange("degrees and splittings must have equal length")
        if not self.degrees:
            raise OutOfRange("shape needs at least one factor")
        if any(d < 1 for d in self.degrees) or any(v < 1 for v in self.splittings):
            raise OutOfRange("degrees and splittings must be positive")

    @property
    def total_degree(self) -> int:
        return sum(d * v for d, v in zip(self.degrees, self.splittings))


def _check_shape_bounds(shape: GroupShape) -> None:
    if any(d > MAX_FACTOR_DEGREE for d in shape.degrees):
        raise OutOfRange(f"factor degrees must be <= {MAX_FACTOR_DEGREE}")
    if any(v > MAX_SPLITTING for v in shape.splittings):
        raise OutOfRange(f"splittings must be <= {MAX_SPLITTING}")


def factor_distribution(d: int, nu: int) -> dict[Partition, Fraction]:
    """Law of the induced cycle type of one factor on d*nu points.

    A uniform element of the relevant coset induces the type of a uniform
    sigma in S_d with every cycle length multiplied by nu.
    """
    dist = {}
    fact = factorial(d)
    for lam in partitions_of(d):
        scaled = tuple(part * nu for part in lam)
        dist[scaled] = Fraction(class_size(lam), fact)
    return dist


def predict(shape: GroupShape) -> dict[ClassLabel, Fraction]:
    """Predicted class-label law; probabilities sum to 1 exactly."""
    _check_shape_bounds(shape)
    factors = [
        factor_distribution(d, v) for d, v in zip(shape.degrees, shape.splittings)
    ]
    out: dict[ClassLabel, Fraction] = {}
    for combo in itertools.product(*(f.items() for f in factors)):
        label = tuple(lam for lam, _ in combo)
        prob = Fraction(1)
        for _, pr in combo:
            prob *= pr
        out[label] = prob
    return out


def cycle_type_of(perm: list[int]) -> Partition:
    """Cycle type of a permutation given as an image list on 0..n-1."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def wreath_cycle_counts(d: int, nu: int) -> tuple[Counter, int]:
    """Exact cycle-type counts over the full shift coset of S_d wr Z/nu.

    Enumerates all (sigma_0..sigma_{nu-1}) in S_d^nu and the permutation
    (x, u) -> (sigma_u(x), u+1) on d*nu points.
    """
    if not 1 <= d <= MAX_ORACLE_DEGREE:
        raise OutOfRange(f"wreath oracle supports d <= {MAX_ORACLE_DEGREE}")
    if not 1 <= nu <= MAX_ORACLE_SPLITTING:
        raise OutOfRange(f"wreath oracle supports nu <= {MAX_ORACLE_SPLITTING}")
    counts: Counter = Counter()
    perms = list(itertools.permutations(range(d)))
    for sigmas in itertools.product(perms, repeat=nu):
        perm = [0] * (d * nu)
        for u in range(nu):
            base = ((u + 1) % nu) * d
            sig = sigmas[u]
            for x in range(d):
                perm[u * d + x] = base + sig[x]
        counts[cycle_type_of(perm)] += 1
    return counts, factorial(d) ** nu


def wreath_oracle(d: int, nu: int) -> dict[Partition, Fraction]:
    """Empirical (exhaustive) type law over the coset; checks `predict`."""
    counts, total = wreath_cycle_counts(d, nu)
    return {lam: Fraction(c, total) for lam, c in counts.items()}


def full_cycle_probability(shape: GroupShape) -> Fraction:
    """Probability under predict(shape) that every component is a full cycle.

    Computed factorwise: the scaled single part (d_i * nu_i) comes from the
    d_i-cycles of S_{d_i}, so the factor contributes class_size((d_i,))/d_i!.
    """
    _check_shape_bounds(shape)
    prob = Fraction(1)
    for d in shape.degrees:
        prob *= Fraction(class_size((d,)), factorial(d))
    return prob
