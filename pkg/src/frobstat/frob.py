"""Frobenius-type extraction from concrete data, by two independent engines.

Engine one reads the type off a squarefree univariate polynomial (its DDF
type).  Engine two inverts point counts N_1..N_d over successive extensions
into closed-point multiplicities.  Each engine serves as the other's oracle.
Exclusion conditions (degree drop, repeated roots, non-transversality) are
raised as `ExclusionError`s; experiment drivers tally them as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import _kernels as _k
from .errors import (
    DegreeDrop,
    Inconsistent,
    NotSquarefree,
    NotTransversal,
    OutOfRange,
)
from .groups import ClassLabel, Partition
from .poly import Poly, _ddf_type_unchecked, is_squarefree

FROM_FACTORIZATION = "from-factorization"
FROM_POINT_COUNTS = "from-point-counts"


@dataclass(frozen=True)
class FrobeniusType:
    label: ClassLabel
    source: str


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if not 1 <= n <= 40:
        raise OutOfRange("mobius is tabulated for 1 <= n <= 40")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def type_from_univariate(g: Poly, expected_degree: int) -> Partition:
    """DDF type of g when g is squarefree of exactly the expected degree."""
    if g.degree != expected_degree:
        raise DegreeDrop(f"degree {g.degree} != expected {expected_degree}")
    if not is_squarefree(g):
        raise NotSquarefree("repeated factor")
    return _ddf_type_unchecked(g)


def classify_coeffs(g: list[int], p: int, expected_degree: int) -> Partition:
    """Prime-field fast path of `type_from_univariate` on an int-list poly."""
    if len(g) - 1 != expected_degree:
        raise DegreeDrop(f"degree {len(g) - 1} != expected {expected_degree}")
    if not _k.is_squarefree(g, p):
        raise NotSquarefree("repeated factor")
    return _k.ddf_type(g, p)


def type_from_point_counts(counts: Sequence[int], d: int) -> Partition:
    """Invert N_1..N_d into a cycle type on d points.

    Closed-point multiplicities come from e * a_e = sum_{j | e} mu(e/j) N_j;
    all a_e must be nonnegative integers with total weight d.
    """
    if d < 1 or len(counts) != d:
        raise OutOfRange(f"need exactly d = {d} >= 1 point counts")
    multiplicities = {}
    for e in range(1, d + 1):
        s = 0
        for j in range(1, e + 1):
            if e % j == 0:
                s += mobius(e // j) * counts[j - 1]
        if s < 0 or s % e != 0:
            raise Inconsistent(
                f"degree-{e} closed-point count is {s}/{e}: not a nonnegative integer"
            )
        multiplicities[e] = s // e
    weight = sum(e * a for e, a in multiplicities.items())
    if weight != d:
        raise NotTransversal(f"total weight {weight} != {d}")
    parts = []
    for e in sorted(multiplicities, reverse=True):
        parts.extend([e] * multiplicities[e])
    return tuple(parts)


def frobenius_type_from_polys(
    gs: Sequence[Poly], expected_degrees: Sequence[int]
) -> FrobeniusType:
    label = tuple(
        type_from_univariate(g, d) for g, d in zip(gs, expected_degrees, strict=True)
    )
    return FrobeniusType(label, FROM_FACTORIZATION)


def frobenius_type_from_counts(
    count_rows: Sequence[Sequence[int]], degrees: Sequence[int]
) -> FrobeniusType:
    label = tuple(
        type_from_point_counts(row, d)
        for row, d in zip(count_rows, degrees, strict=True)
    )
    return FrobeniusType(label, FROM_POINT_COUNTS)
