"""FastAPI application exposing the experiment drivers.

Run with:  uvicorn frobstat.api.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import FrobstatError, HypothesisViolation, InvariantViolation
from . import handlers, models

app = FastAPI(
    title="frobstat",
    version=__version__,
    description="Decomposition statistics over finite fields: predictions and experiments.",
)


@app.exception_handler(FrobstatError)
async def _frobstat_error(request: Request, exc: FrobstatError) -> JSONResponse:
    if isinstance(exc, InvariantViolation):
        status = 500
    elif isinstance(exc, HypothesisViolation):
        status = 409
    else:
        status = 400
    return JSONResponse(
        status_code=status,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/health", response_model=models.HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/predict", response_model=models.PredictResponse)
def predict(req: models.PredictRequest) -> dict:
    return handlers.handle_predict(req)


@app.post("/bh", response_model=models.ExperimentResponse)
def bateman_horn(req: models.BHRequest) -> dict:
    return handlers.handle_bh(req)


@app.post("/intersect", response_model=models.ExperimentResponse)
def intersect(req: models.IntersectRequest) -> dict:
    return handlers.handle_intersect(req)


@app.post("/sections", response_model=models.ExperimentResponse)
def sections(req: models.SectionsRequest) -> dict:
    return handlers.handle_sections(req)


@app.post("/galois", response_model=models.GaloisResponse)
def galois(req: models.GaloisRequest) -> dict:
    return handlers.handle_galois(req)


@app.post("/scan", response_model=models.ScanResponse)
def scan(req: models.ScanRequest) -> dict:
    return handlers.handle_scan(req)


@app.post("/selftest", response_model=models.SelftestResponse)
def selftest(req: models.SelftestRequest) -> dict:
    return handlers.handle_selftest(req)
