"""Request and response schemas for the experiment service.

Response field order matches the stable JSON report schema emitted by the
CLI, so a report serializes identically through either front end.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel


class HealthResponse(BaseModel):
    status: str
    version: str


class PredictRequest(BaseModel):
    degrees: list[int]
    splittings: Optional[list[int]] = None


class PredictedClass(BaseModel):
    label: list[list[int]]
    probability: float
    fraction: str


class ShapeModel(BaseModel):
    degrees: list[int]
    splittings: list[int]


class PredictResponse(BaseModel):
    shape: ShapeModel
    classes: list[PredictedClass]


class ExclusionsModel(BaseModel):
    not_squarefree: int
    degree_drop: int
    not_transversal: int


class ClassEntry(BaseModel):
    label: list[list[int]]
    count: int
    predicted: float


class ChiSquareModel(BaseModel):
    stat: float
    dof: int
    p: float


class ExperimentResponse(BaseModel):
    experiment: str
    params: dict
    q: int
    trials: int
    exclusions: ExclusionsModel
    shape: ShapeModel
    classes: list[ClassEntry]
    tv: float
    chi2: Optional[ChiSquareModel]
    seed: int
    runtime_ms: int


class BHRequest(BaseModel):
    F: list[str]
    n: int
    q: int
    samples: Optional[int] = None
    exhaustive: bool = False
    force_sample: bool = False
    nu: Optional[list[int]] = None
    strict: bool = False
    seed: int = 0
    workers: int = 1


class IntersectRequest(BaseModel):
    d1: int
    d2: int
    q: int
    samples: Optional[int] = None
    exhaustive: bool = False
    force_sample: bool = False
    seed: int = 0
    workers: int = 1


class SectionsRequest(BaseModel):
    param: list[str]
    q: int
    samples: Optional[int] = None
    exhaustive: bool = False
    force_sample: bool = False
    seed: int = 0
    workers: int = 1


class GaloisPrecondition(BaseModel):
    q: int
    wronskian_nonzero_triples: list[list[int]]
    warnings: list[str]


class GaloisWitness(BaseModel):
    q: int
    label: list[list[int]]
    count: int
    observed_freq: float
    predicted: float


class GaloisRequest(BaseModel):
    param: list[str]
    q: list[int]
    samples: Optional[int] = None
    alpha: float = 1e-3
    seed: int = 0
    workers: int = 1


class GaloisResponse(BaseModel):
    experiment: str
    params: dict
    alpha: float
    degree: int
    verdict: str
    unchecked: list[str]
    preconditions: list[GaloisPrecondition]
    runs: list[ExperimentResponse]
    witnesses: list[GaloisWitness]
    seed: int
    runtime_ms: int


class ScanRequest(BaseModel):
    exp: str = "bh"
    F: list[str]
    n: int
    q: list[int]
    samples: Optional[int] = None
    nu: Optional[list[int]] = None
    strict: bool = False
    seed: int = 0
    workers: int = 1


class ScanPointModel(BaseModel):
    q: int
    tv: float
    samples: int
    exclusions: ExclusionsModel


class ScanResponse(BaseModel):
    experiment: str
    params: dict
    points: list[ScanPointModel]
    slope: float
    points_used: int
    dropped_zero_tv: int
    seed: int
    runtime_ms: int


class SelftestRequest(BaseModel):
    quick: bool = False


class SelftestCheck(BaseModel):
    name: str
    ok: bool
    detail: str


class SelftestResponse(BaseModel):
    passed: bool
    checks: list[SelftestCheck]
