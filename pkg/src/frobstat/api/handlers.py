"""Request handlers shared by the HTTP service and the in-process CLI path.

Each handler accepts a validated request model, drives the core package,
and returns the stable report dict.
"""

from __future__ import annotations

from fractions import Fraction

from .. import experiments as exp
from ..errors import ConfigError
from ..ff import field_of_order
from ..groups import GroupShape, predict
from ..parsing import parse_poly
from ..selftest import run_selftest
from . import models


def _mode(exhaustive: bool, force_sample: bool) -> str:
    if exhaustive and force_sample:
        raise ConfigError("exhaustive and force_sample are mutually exclusive")
    if exhaustive:
        return "exhaustive"
    if force_sample:
        return "sample"
    return "auto"


def handle_predict(req: models.PredictRequest) -> dict:
    splittings = req.splittings or [1] * len(req.degrees)
    shape = GroupShape(tuple(req.degrees), tuple(splittings))
    law = predict(shape)
    classes = []
    for label in sorted(law):
        pr: Fraction = law[label]
        classes.append(
            {
                "label": [list(part) for part in label],
                "probability": float(pr),
                "fraction": f"{pr.numerator}/{pr.denominator}",
            }
        )
    return {
        "shape": {"degrees": list(shape.degrees), "splittings": list(shape.splittings)},
        "classes": classes,
    }


def handle_bh(req: models.BHRequest) -> dict:
    field = field_of_order(req.q)
    polys = tuple(parse_poly(src, ("t", "x")).bind_bipoly(field) for src in req.F)
    cfg = exp.BHConfig(
        field=field,
        polys=polys,
        n=req.n,
        mode=_mode(req.exhaustive, req.force_sample),
        samples=req.samples,
        seed=req.seed,
        strict=req.strict,
        nu=tuple(req.nu) if req.nu else None,
        workers=req.workers,
    )
    return exp.run_bateman_horn(cfg).to_dict()


def handle_intersect(req: models.IntersectRequest) -> dict:
    report = exp.run_plane_intersections(
        req.d1,
        req.d2,
        req.q,
        samples=req.samples,
        seed=req.seed,
        mode=_mode(req.exhaustive, req.force_sample),
        workers=req.workers,
    )
    return report.to_dict()


def handle_sections(req: models.SectionsRequest) -> dict:
    field = field_of_order(req.q)
    polys = [parse_poly(src, ("t",)).bind_poly(field) for src in req.param]
    report = exp.run_curve_sections(
        field,
        polys,
        samples=req.samples,
        seed=req.seed,
        mode=_mode(req.exhaustive, req.force_sample),
        workers=req.workers,
    )
    return report.to_dict()


def _int_coeffs(src: str) -> list[int]:
    expr = parse_poly(src, ("t",))
    if not expr.terms:
        return []
    size = max(e[0] for e in expr.terms) + 1
    out = [0] * size
    for (a,), c in expr.terms.items():
        out[a] = c
    return out


def handle_galois(req: models.GaloisRequest) -> dict:
    report = exp.run_galois_detect(
        [_int_coeffs(src) for src in req.param],
        req.q,
        samples=req.samples,
        seed=req.seed,
        alpha=req.alpha,
        workers=req.workers,
    )
    return report.to_dict()


def handle_scan(req: models.ScanRequest) -> dict:
    if req.exp != "bh":
        raise ConfigError(f"scan supports only the bh experiment, got {req.exp!r}")
    int_terms = [parse_poly(src, ("t", "x")).terms for src in req.F]
    report = exp.run_q_scan(
        int_terms,
        req.n,
        req.q,
        samples=req.samples,
        seed=req.seed,
        strict=req.strict,
        nu=tuple(req.nu) if req.nu else None,
        workers=req.workers,
    )
    return report.to_dict()


def handle_selftest(req: models.SelftestRequest) -> dict:
    checks = run_selftest(quick=req.quick)
    return {
        "passed": all(c.ok for c in checks),
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
    }
