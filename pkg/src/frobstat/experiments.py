"""Experiment drivers: equidistribution checks at desk scale.

Every driver iterates a family of specializations, classifies each trial
into a Frobenius class label (or an exclusion), and compares the empirical
law against the exact prediction from `groups.predict`.

Execution is sharded into fixed-size blocks; shard i draws its PRNG stream
from child_seed(seed, i).  The shard plan depends only on the trial count,
never on the worker count, and shard results are merged in index order, so
a run is bit-identical whether executed serially or on a process pool.
Drivers prefer exhaustive enumeration whenever the specialization space
fits the loop budget; the sample count applies when it does not.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import _kernels as _k
from .errors import (
    BudgetExceeded,
    CommonFactor,
    ConfigError,
    ExclusionError,
    HypothesisViolation,
    InsufficientData,
    InvariantViolation,
    NuUndetected,
    OutOfRange,
    TooFewCells,
    Undetected,
    ZeroPolynomial,
)
from .ff import Field, field_of_order, is_prime
from .frob import classify_coeffs, type_from_univariate
from .groups import GroupShape, predict
from .mpoly import (
    NU_MIN_CHAR,
    BiPoly,
    _sylvester_det,
    detect_nu,
    generic_degree,
    substitute,
    wronskian3,
)
from .poly import Poly, gcd
from .rng import SplitMix64, child_seed
from .stats import (
    ChiSquareResult,
    ExponentFit,
    ScanPoint,
    chi_square,
    fit_exponent,
    normalize_counts,
    tv_distance,
)

EXHAUSTIVE_LIMIT = 10_000_000
SHARD_SIZE = 4096
EXCLUSION_KEYS = ("not_squarefree", "degree_drop", "not_transversal")
EXCLUSION_RARITY_C = 10.0


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    q: int
    trials: int
    exclusions: dict
    shape: GroupShape
    counts: dict
    predicted: dict
    tv: float
    chi2: Optional[ChiSquareResult]
    seed: int
    runtime_ms: int

    @property
    def accepted(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        """Stable JSON-ready form; field order and names are part of the API."""
        classes = []
        for label in sorted(set(self.counts) | set(self.predicted)):
            classes.append(
                {
                    "label": [list(part) for part in label],
                    "count": self.counts.get(label, 0),
                    "predicted": float(self.predicted.get(label, 0)),
                }
            )
        return {
            "experiment": self.experiment,
            "params": self.params,
            "q": self.q,
            "trials": self.trials,
            "exclusions": {k: self.exclusions.get(k, 0) for k in EXCLUSION_KEYS},
            "shape": {
                "degrees": list(self.shape.degrees),
                "splittings": list(self.shape.splittings),
            },
            "classes": classes,
            "tv": self.tv,
            "chi2": None
            if self.chi2 is None
            else {"stat": self.chi2.stat, "dof": self.chi2.dof, "p": self.chi2.p_value},
            "seed": self.seed,
            "runtime_ms": self.runtime_ms,
        }


# --- shared execution machinery -------------------------------------------


def _resolve_mode(mode: str, space: int, samples: Optional[int], limit: int):
    """Return ('exhaustive', space) or ('sample', samples)."""
    if mode == "auto":
        if space <= limit:
            return "exhaustive", space
        if samples is None:
            raise ConfigError(
                f"space of {space} specializations exceeds the exhaustive "
                f"budget {limit}; a sample count is required"
            )
        return "sample", samples
    if mode == "exhaustive":
        if space > limit:
            raise BudgetExceeded(f"{space} specializations exceed budget {limit}")
        return "exhaustive", space
    if mode == "sample":
        if samples is None:
            raise ConfigError("sample mode requires a sample count")
        return "sample", samples
    raise ConfigError(f"unknown mode {mode!r}")


def _shard_ranges(total: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + SHARD_SIZE, total)) for lo in range(0, total, SHARD_SIZE)]


def _run_shards(worker, arg_list: list, workers: int) -> tuple[dict, dict]:
    if workers <= 1 or len(arg_list) <= 1:
        results = [worker(a) for a in arg_list]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, arg_list))
    counts: dict = {}
    excl = {k: 0 for k in EXCLUSION_KEYS}
    for shard_counts, shard_excl in results:  # merge in shard-index order
        for label, c in shard_counts.items():
            counts[label] = counts.get(label, 0) + c
        for k, c in shard_excl.items():
            excl[k] += c
    return counts, excl


def _finish_report(
    name: str,
    params: dict,
    q: int,
    trials: int,
    counts: dict,
    excl: dict,
    shape: GroupShape,
    predicted: dict,
    seed: int,
    started: float,
    warnings: list[str],
) -> ExperimentReport:
    accepted = sum(counts.values())
    if accepted + sum(excl.values()) != trials:
        raise InvariantViolation("trials != accepted + exclusions")
    if accepted == 0:
        raise InsufficientData("every trial was excluded")
    excluded = trials - accepted
    if excluded * q > EXCLUSION_RARITY_C * trials:
        warnings.append(
            f"exclusion fraction {excluded / trials:.4f} exceeds {EXCLUSION_RARITY_C}/q"
        )
    empirical = normalize_counts(counts, accepted)
    tv = float(tv_distance(empirical, predicted))
    try:
        chi2 = chi_square(counts, predicted, accepted)
    except TooFewCells:
        chi2 = None
    params = dict(params)
    params["warnings"] = warnings
    return ExperimentReport(
        experiment=name,
        params=params,
        q=q,
        trials=trials,
        exclusions=excl,
        shape=shape,
        counts=counts,
        predicted=predicted,
        tv=tv,
        chi2=chi2,
        seed=seed,
        runtime_ms=int((time.perf_counter() - started) * 1000),
    )


# --- Bateman-Horn driver ---------------------------------------------------


@dataclass(frozen=True)
class BHConfig:
    field: Field
    polys: tuple
    n: int
    mode: str = "auto"  # auto | exhaustive | sample
    samples: Optional[int] = None
    seed: int = 0
    strict: bool = False
    nu: Optional[tuple] = None
    workers: int = 1
    exhaustive_limit: int = EXHAUSTIVE_LIMIT


def _precheck_bh_poly(F: BiPoly, index: int, p: int) -> None:
    """Cheap guards against obviously reducible or inseparable inputs."""
    if F.is_zero():
        raise ConfigError(f"F_{index} is zero")
    exps = list(F.terms)
    if len(exps) == 1:
        a, b = exps[0]
        if a + b != 1:
            raise ConfigError(f"F_{index} is a monomial of degree != 1")
    else:
        if min(a for a, _ in exps) > 0 or min(b for _, b in exps) > 0:
            raise ConfigError(f"F_{index} is divisible by a monomial")
    if not any(b % p for _, b in exps):
        raise ConfigError(
            f"F_{index} has vanishing x-derivative (all x-exponents divisible by {p})"
        )


def _bh_shard_prime(args):
    (p, n, comp_coeffs, expected, lo, hi, q_pow_n, stream_seed) = args
    comp = [[list(c) for c in cs] for cs in comp_coeffs]
    counts: dict = {}
    excl = {k: 0 for k in EXCLUSION_KEYS}
    sampling = stream_seed is not None
    rng = SplitMix64(stream_seed) if sampling else None
    for idx in range(lo, hi):
        if sampling:
            f = [rng.randbelow(p) for _ in range(n)]
            f.append(1 + rng.randbelow(p - 1))
        else:
            rest = idx % q_pow_n
            f = []
            for _ in range(n):
                f.append(rest % p)
                rest //= p
            f.append(1 + idx // q_pow_n)
        label = []
        try:
            for cs, deg in zip(comp, expected):
                g = cs[-1]
                for cb in reversed(cs[:-1]):
                    g = _k.add(_k.mul(g, f, p), cb, p)
                label.append(classify_coeffs(g, p, deg))
        except ExclusionError as exc:
            excl[exc.tally_key] += 1
            continue
        key = tuple(label)
        counts[key] = counts.get(key, 0) + 1
    return counts, excl


def _bh_trial_generic(field, polys, expected, f_coeffs):
    f = Poly(field, f_coeffs)
    label = []
    for F, deg in zip(polys, expected):
        label.append(type_from_univariate(substitute(F, f), deg))
    return tuple(label)


def run_bateman_horn(cfg: BHConfig) -> ExperimentReport:
    """Joint decomposition statistics of F_i(t, f) over degree-n polynomials f.

    Membership in the sample space requires deg f = n exactly (leading
    coefficient nonzero); a specialization is accepted when every F_i(t, f)
    is squarefree of full generic degree.
    """
    started = time.perf_counter()
    field = cfg.field
    q, p = field.q, field.p
    if cfg.n < 1:
        raise OutOfRange("n must be >= 1")
    if not cfg.polys:
        raise ConfigError("need at least one bivariate polynomial")
    warnings: list[str] = []
    for i, F in enumerate(cfg.polys, 1):
        if F.field != field:
            raise ConfigError(f"F_{i} lives in {F.field}, expected {field}")
        _precheck_bh_poly(F, i, p)

    # splitting degrees
    if cfg.nu is not None:
        if len(cfg.nu) != len(cfg.polys) or any(v < 1 for v in cfg.nu):
            raise ConfigError("nu override must list one positive value per F_i")
        nus = tuple(cfg.nu)
        nu_source = "supplied"
    elif field.k == 1 and p >= NU_MIN_CHAR:
        try:
            nus = tuple(
                detect_nu(F, k_max=2 * max(F.total_degree, 1)) for F in cfg.polys
            )
        except Undetected as exc:
            raise NuUndetected(str(exc)) from exc
        nu_source = "detected"
    else:
        nus = (1,) * len(cfg.polys)
        nu_source = "default"
        warnings.append(
            "splitting degrees assumed 1: point-count detection needs a prime "
            f"base field of characteristic >= {NU_MIN_CHAR}; pass nu to override"
        )

    full_degrees = tuple(generic_degree(F, cfg.n) for F in cfg.polys)
    degrees = []
    for i, (D, v) in enumerate(zip(full_degrees, nus), 1):
        if D % v != 0:
            raise ConfigError(
                f"generic degree {D} of F_{i} is not divisible by nu = {v}"
            )
        degrees.append(D // v)
    shape = GroupShape(tuple(degrees), nus)

    # applicability conditions
    ok = (
        cfg.n >= 3
        or (q % 2 == 1 and cfg.n >= 2)
        or (p > max(degrees) and cfg.n >= 1)
    )
    if not ok:
        message = (
            "applicability conditions not met: need n >= 3, or odd q with "
            "n >= 2, or characteristic above every component degree"
        )
        if cfg.strict:
            raise HypothesisViolation(message)
        warnings.append(message)

    predicted = predict(shape)
    space = (q - 1) * q ** cfg.n
    mode, trials = _resolve_mode(cfg.mode, space, cfg.samples, cfg.exhaustive_limit)

    if field.k == 1:
        comp_coeffs = tuple(
            tuple(tuple(c.coeffs) for c in F.coeffs_in_x()) for F in cfg.polys
        )
        args = []
        for i, (lo, hi) in enumerate(_shard_ranges(trials)):
            stream = child_seed(cfg.seed, i) if mode == "sample" else None
            args.append(
                (p, cfg.n, comp_coeffs, full_degrees, lo, hi, q ** cfg.n, stream)
            )
        counts, excl = _run_shards(_bh_shard_prime, args, cfg.workers)
    else:
        # extension base field: generic path, serial
        counts, excl = {}, {k: 0 for k in EXCLUSION_KEYS}
        rng = SplitMix64(child_seed(cfg.seed, 0))
        q_pow_n = q ** cfg.n
        for idx in range(trials):
            if mode == "sample":
                reps = [field.rep_from_index(rng.randbelow(q)) for _ in range(cfg.n)]
                reps.append(field.rep_from_index(1 + rng.randbelow(q - 1)))
            else:
                rest = idx % q_pow_n
                reps = []
                for _ in range(cfg.n):
                    reps.append(field.rep_from_index(rest % q))
                    rest //= q
                reps.append(field.rep_from_index(1 + idx // q_pow_n))
            try:
                label = _bh_trial_generic(field, cfg.polys, full_degrees, reps)
            except ExclusionError as exc:
                excl[exc.tally_key] += 1
                continue
            counts[label] = counts.get(label, 0) + 1

    params = {
        "F": [bipoly_source(F) for F in cfg.polys],
        "n": cfg.n,
        "mode": mode,
        "samples_requested": cfg.samples,
        "nu": list(nus),
        "nu_source": nu_source,
        "strict": cfg.strict,
    }
    return _finish_report(
        "bh", params, q, trials, counts, excl, shape, predicted, cfg.seed, started, warnings
    )


def bipoly_source(F: BiPoly) -> str:
    """Canonical source string for a bivariate polynomial over a prime field."""
    if F.is_zero():
        return "0"
    bits = []
    for a, b in sorted(F.terms, key=lambda ab: (-(ab[0] + ab[1]), -ab[1], -ab[0])):
        c = F.terms[(a, b)]
        mon = ""
        if a:
            mon += f"t^{a}" if a > 1 else "t"
        if b:
            mon += f"x^{b}" if b > 1 else "x"
        if not isinstance(c, int):
            coeff = str(tuple(c))
        elif c == 1 and mon:
            coeff = ""
        else:
            coeff = str(c)
        bits.append((coeff + mon) or "1")
    return " + ".join(bits)


def poly_source(f: Poly) -> str:
    """Canonical source string for a univariate polynomial."""
    if f.is_zero():
        return "0"
    bits = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if f.field.is_zero(c):
            continue
        mon = f"t^{i}" if i > 1 else ("t" if i == 1 else "")
        if not isinstance(c, int):
            coeff = str(tuple(c))
        elif c == 1 and mon:
            coeff = ""
        else:
            coeff = str(c)
        bits.append((coeff + mon) or "1")
    return " + ".join(bits)


# --- plane-curve intersections ---------------------------------------------


def _intersect_terms(d: int) -> list[tuple[int, int]]:
    """Draw order for the coefficients of an affine curve of total degree d."""
    return [(a, b) for b in range(d + 1) for a in range(d + 1 - b)]


def _intersect_shard(args):
    (p, d1, d2, lo, hi, space1, stream_seed) = args
    field = Field(p, 1, None)
    terms1 = _intersect_terms(d1)
    terms2 = _intersect_terms(d2)
    target = d1 * d2
    counts: dict = {}
    excl = {k: 0 for k in EXCLUSION_KEYS}
    sampling = stream_seed is not None
    rng = SplitMix64(stream_seed) if sampling else None
    for idx in range(lo, hi):
        if sampling:
            draw1 = [rng.randbelow(p) for _ in terms1]
            draw2 = [rng.randbelow(p) for _ in terms2]
        else:
            rest = idx % space1
            draw1 = []
            for _ in terms1:
                draw1.append(rest % p)
                rest //= p
            rest = idx // space1
            draw2 = []
            for _ in terms2:
                draw2.append(rest % p)
                rest //= p
        try:
            fc = _curve_x_coeffs(field, terms1, draw1, d1)
            gc = _curve_x_coeffs(field, terms2, draw2, d2)
            r = _sylvester_det(fc, gc, field)
            parts = classify_coeffs(list(r.coeffs), p, target)
        except ExclusionError as exc:
            excl[exc.tally_key] += 1
            continue
        except (ZeroPolynomial, OutOfRange):
            # a vanishing curve or one with no x-dependence at all: the
            # intersection is not a reduced set of d1*d2 points
            excl["degree_drop"] += 1
            continue
        key = (parts,)
        counts[key] = counts.get(key, 0) + 1
    return counts, excl


def _curve_x_coeffs(field: Field, terms, draw, d) -> list[Poly]:
    rows: list[list[int]] = [[0] * (d + 1 - b) for b in range(d + 1)]
    for (a, b), c in zip(terms, draw):
        rows[b][a] = c
    return [Poly(field, row) for row in rows]


def run_plane_intersections(
    d1: int,
    d2: int,
    q: int,
    samples: Optional[int] = None,
    seed: int = 0,
    mode: str = "auto",
    workers: int = 1,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> ExperimentReport:
    """Frobenius class of the intersection of two random affine plane curves.

    Each trial draws uniform coefficient tuples for curves of total degree
    d1 and d2, eliminates x by a resultant, and accepts when the resultant
    is squarefree of degree d1*d2 (transversal intersection, no points at
    infinity, distinct t-coordinates).
    """
    started = time.perf_counter()
    if not is_prime(q):
        raise OutOfRange("plane intersections require a prime field")
    if d1 < 1 or d2 < 1 or d1 * d2 > 12:
        raise OutOfRange("need d1, d2 >= 1 with d1*d2 <= 12")
    target = d1 * d2
    space1 = q ** len(_intersect_terms(d1))
    space = space1 * q ** len(_intersect_terms(d2))
    mode, trials = _resolve_mode(mode, space, samples, exhaustive_limit)
    args = []
    for i, (lo, hi) in enumerate(_shard_ranges(trials)):
        stream = child_seed(seed, i) if mode == "sample" else None
        args.append((q, d1, d2, lo, hi, space1, stream))
    counts, excl = _run_shards(_intersect_shard, args, workers)
    shape = GroupShape((target,), (1,))
    params = {
        "d1": d1,
        "d2": d2,
        "mode": mode,
        "samples_requested": samples,
    }
    return _finish_report(
        "intersect",
        params,
        q,
        trials,
        counts,
        excl,
        shape,
        predict(shape),
        seed,
        started,
        [],
    )


# --- hyperplane sections of a parametrized curve ----------------------------


def _sections_shard(args):
    (p, base, others, d, lo, hi, stream_seed) = args
    base = list(base)
    others = [list(f) for f in others]
    n = len(others)
    width = max([len(base)] + [len(f) for f in others])
    counts: dict = {}
    excl = {k: 0 for k in EXCLUSION_KEYS}
    sampling = stream_seed is not None
    rng = SplitMix64(stream_seed) if sampling else None
    for idx in range(lo, hi):
        if sampling:
            coeffs = [rng.randbelow(p) for _ in range(n)]
        else:
            rest = idx
            coeffs = []
            for _ in range(n):
                coeffs.append(rest % p)
                rest //= p
        g = [0] * width
        for j, c in enumerate(base):
            g[j] = c
        for A, f in zip(coeffs, others):
            if A:
                for j, c in enumerate(f):
                    g[j] += A * c
        g = [v % p for v in g]
        while g and g[-1] == 0:
            g.pop()
        try:
            parts = classify_coeffs(g, p, d)
        except ExclusionError as exc:
            excl[exc.tally_key] += 1
            continue
        key = (parts,)
        counts[key] = counts.get(key, 0) + 1
    return counts, excl


def run_curve_sections(
    field: Field,
    param: Sequence[Poly],
    samples: Optional[int] = None,
    seed: int = 0,
    mode: str = "auto",
    workers: int = 1,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> ExperimentReport:
    """Decomposition statistics of f_0 + A_1 f_1 + ... + A_n f_n.

    Samples (A_1..A_n) uniformly over F_q^n (or enumerates them all) and
    classifies the specialization against the symmetric-group prediction in
    degree d = max deg f_i.
    """
    started = time.perf_counter()
    polys = list(param)
    n = len(polys) - 1
    if n < 2:
        raise OutOfRange("need at least three polynomials f_0, f_1, f_2")
    for f in polys:
        if f.field != field:
            raise ConfigError(f"parametrization must live over {field}")
    d = max(f.degree for f in polys)
    if d < 1:
        raise OutOfRange("max degree must be >= 1")
    if d > 12:
        raise OutOfRange("max degree must be <= 12")
    g = polys[0]
    for f in polys[1:]:
        g = gcd(g, f)
    if g.degree > 0:
        raise CommonFactor(f"gcd of the parametrization has degree {g.degree}")

    q = field.q
    space = q ** n
    mode, trials = _resolve_mode(mode, space, samples, exhaustive_limit)
    shape = GroupShape((d,), (1,))
    predicted = predict(shape)

    if field.k == 1:
        base = tuple(polys[0].coeffs)
        others = tuple(tuple(f.coeffs) for f in polys[1:])
        args = []
        for i, (lo, hi) in enumerate(_shard_ranges(trials)):
            stream = child_seed(seed, i) if mode == "sample" else None
            args.append((field.p, base, others, d, lo, hi, stream))
        counts, excl = _run_shards(_sections_shard, args, workers)
    else:
        counts, excl = {}, {k: 0 for k in EXCLUSION_KEYS}
        rng = SplitMix64(child_seed(seed, 0))
        for idx in range(trials):
            if mode == "sample":
                reps = [field.rep_from_index(rng.randbelow(q)) for _ in range(n)]
            else:
                rest = idx
                reps = []
                for _ in range(n):
                    reps.append(field.rep_from_index(rest % q))
                    rest //= q
            g = polys[0]
            for a, f in zip(reps, polys[1:]):
                g = g + f.scale(a)
            try:
                parts = type_from_univariate(g, d)
            except ExclusionError as exc:
                excl[exc.tally_key] += 1
                continue
            counts[(parts,)] = counts.get((parts,), 0) + 1

    params = {
        "param": [poly_source(f) for f in polys],
        "mode": mode,
        "samples_requested": samples,
    }
    return _finish_report(
        "sections", params, q, trials, counts, excl, shape, predicted, seed, started, []
    )


# --- statistical Galois-group detection -------------------------------------


UNCHECKED_GALOIS_HYPOTHESIS = (
    "ratios f_i/f_j generating the full rational function field are not verified"
)


@dataclass
class GaloisReport:
    params: dict
    alpha: float
    degree: int
    verdict: str
    preconditions: list
    runs: list
    witnesses: list
    seed: int
    runtime_ms: int

    def to_dict(self) -> dict:
        return {
            "experiment": "galois",
            "params": self.params,
            "alpha": self.alpha,
            "degree": self.degree,
            "verdict": self.verdict,
            "unchecked": [UNCHECKED_GALOIS_HYPOTHESIS],
            "preconditions": self.preconditions,
            "runs": [r.to_dict() for r in self.runs],
            "witnesses": self.witnesses,
            "seed": self.seed,
            "runtime_ms": self.runtime_ms,
        }


def run_galois_detect(
    param_coeffs: Sequence[Sequence[int]],
    q_list: Sequence[int],
    samples: Optional[int] = None,
    seed: int = 0,
    alpha: float = 1e-3,
    mode: str = "auto",
    workers: int = 1,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> GaloisReport:
    """Frequency-based test of whether the family has full symmetric group.

    Runs the hyperplane-section experiment for each q, aggregates the per-q
    chi-square p-values against the S_d prediction, and reports a verdict.
    The Wronskian precondition is evaluated per q over all index triples;
    whether the ratios f_i/f_j generate the rational function field is NOT
    checked, and the verdict is only as strong as that unchecked hypothesis.
    """
    started = time.perf_counter()
    if not q_list:
        raise InsufficientData("empty q list")
    if not 0.0 < alpha < 1.0:
        raise OutOfRange("alpha must be in (0, 1)")
    ds = [len(c) - 1 for c in param_coeffs]
    degree = max(ds) if ds else 0
    runs = []
    preconditions = []
    witnesses = []
    consistent = True
    for q in q_list:
        field = field_of_order(q)
        polys = [Poly.from_ints(field, cs) for cs in param_coeffs]
        warn = []
        if field.p == 2:
            warn.append("even characteristic: the detector's premise needs odd q")
        nonzero_triples = [
            [i, j, k]
            for i, j, k in combinations(range(len(polys)), 3)
            if not wronskian3(polys[i], polys[j], polys[k]).is_zero()
        ]
        if not nonzero_triples:
            warn.append("every Wronskian triple vanishes: full-group premise fails")
        preconditions.append(
            {"q": q, "wronskian_nonzero_triples": nonzero_triples, "warnings": warn}
        )
        report = run_curve_sections(
            field,
            polys,
            samples=samples,
            seed=child_seed(seed, q),
            mode=mode,
            workers=workers,
            exhaustive_limit=exhaustive_limit,
        )
        runs.append(report)
        if report.chi2 is not None and report.chi2.p_value < alpha:
            consistent = False
            accepted = report.accepted
            worst = max(
                set(report.counts) | set(report.predicted),
                key=lambda lab: abs(
                    Fraction(report.counts.get(lab, 0), accepted)
                    - report.predicted.get(lab, Fraction(0))
                ),
            )
            witnesses.append(
                {
                    "q": q,
                    "label": [list(part) for part in worst],
                    "count": report.counts.get(worst, 0),
                    "observed_freq": report.counts.get(worst, 0) / accepted,
                    "predicted": float(report.predicted.get(worst, 0)),
                }
            )
    verdict = f"consistent with S_{degree}" if consistent else f"rejects S_{degree}"
    params = {
        "param": [_int_poly_source(cs) for cs in param_coeffs],
        "q_list": list(q_list),
        "mode": mode,
        "samples_requested": samples,
    }
    return GaloisReport(
        params=params,
        alpha=alpha,
        degree=degree,
        verdict=verdict,
        preconditions=preconditions,
        runs=runs,
        witnesses=witnesses,
        seed=seed,
        runtime_ms=int((time.perf_counter() - started) * 1000),
    )


# --- q-scan of the error decay ----------------------------------------------


@dataclass
class ScanReport:
    params: dict
    points: list
    fit: ExponentFit
    seed: int
    runtime_ms: int

    def to_dict(self) -> dict:
        return {
            "experiment": "scan",
            "params": self.params,
            "points": [
                {
                    "q": pt.q,
                    "tv": pt.tv,
                    "samples": pt.samples,
                    "exclusions": {k: pt.exclusions.get(k, 0) for k in EXCLUSION_KEYS},
                }
                for pt in self.points
            ],
            "slope": self.fit.slope,
            "points_used": self.fit.points_used,
            "dropped_zero_tv": self.fit.dropped_zero_tv,
            "seed": self.seed,
            "runtime_ms": self.runtime_ms,
        }


def run_q_scan(
    int_terms: Sequence[dict],
    n: int,
    q_list: Sequence[int],
    samples: Optional[int] = None,
    seed: int = 0,
    strict: bool = False,
    nu: Optional[tuple] = None,
    workers: int = 1,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> ScanReport:
    """Bateman-Horn experiment across several q; fits log(tv) vs log(q).

    `int_terms` carries the integer-coefficient term maps of the F_i, which
    are reduced into each field in turn.  Per-q streams derive their seeds
    from the q value, so a scan agrees with individual runs.
    """
    started = time.perf_counter()
    if len(q_list) < 3:
        raise InsufficientData("a scan needs at least three q values")
    points = []
    for q in q_list:
        field = field_of_order(q)
        polys = tuple(BiPoly.from_int_terms(field, terms) for terms in int_terms)
        report = run_bateman_horn(
            BHConfig(
                field=field,
                polys=polys,
                n=n,
                mode="auto",
                samples=samples,
                seed=child_seed(seed, q),
                strict=strict,
                nu=nu,
                workers=workers,
                exhaustive_limit=exhaustive_limit,
            )
        )
        points.append(
            ScanPoint(q=q, tv=report.tv, samples=report.trials, exclusions=report.exclusions)
        )
    fit = fit_exponent(points)
    params = {
        "experiment": "bh",
        "F": [_terms_source(terms) for terms in int_terms],
        "n": n,
        "q_list": list(q_list),
        "samples_requested": samples,
    }
    return ScanReport(
        params=params,
        points=points,
        fit=fit,
        seed=seed,
        runtime_ms=int((time.perf_counter() - started) * 1000),
    )


def _terms_source(terms: dict) -> str:
    bits = []
    for a, b in sorted(terms, key=lambda ab: (-(ab[0] + ab[1]), -ab[1], -ab[0])):
        c = terms[(a, b)]
        mon = ""
        if a:
            mon += f"t^{a}" if a > 1 else "t"
        if b:
            mon += f"x^{b}" if b > 1 else "x"
        coeff = "" if c == 1 and mon else str(c)
        bits.append((coeff + mon) or "1")
    return " + ".join(bits)


def _int_poly_source(coeffs: Sequence[int]) -> str:
    bits = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mon = f"t^{i}" if i > 1 else ("t" if i == 1 else "")
        coeff = "" if c == 1 and mon else str(c)
        bits.append((coeff + mon) or "1")
    return " + ".join(bits) if bits else "0"
