"""HTTP service exposing the analysis, classification, render and verify
operations.  The CLI calls the library directly; this app wraps the same
report builders for use over HTTP.

Run with: uvicorn newtonmaps.service:app
"""

from __future__ import annotations

import base64

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import reports
from .dynamics import basin_grid
from .newton import newton_map
from .parsing import ParseError, parse_map
from .ppm import labels_to_rgb
from .reports import SCHEMA

app = FastAPI(title="newtonmaps", version="0.1.0")


class AnalyzeRequest(BaseModel):
    spec: str
    already_newton: bool = False
    tol: float = Field(default=1e-6, gt=0)


class ClassifyRequest(BaseModel):
    d: int = Field(ge=3, le=5)


class RenderRequest(BaseModel):
    spec: str
    already_newton: bool = False
    center: list[float] = Field(default=[0.0, 0.0], min_length=2, max_length=2)
    half_width: float = Field(default=2.0, gt=0)
    half_height: float = Field(default=2.0, gt=0)
    width: int = Field(default=400, ge=16, le=2000)
    height: int = Field(default=400, ge=16, le=2000)
    cap: int = Field(default=1000, ge=1)


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 0


def _parse(spec):
    try:
        return parse_map(spec)
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/analyze")
def analyze(req: AnalyzeRequest):
    r = _parse(req.spec)
    return reports.analyze_report(r, already_newton=req.already_newton, tol=req.tol)


@app.post("/classify")
def classify(req: ClassifyRequest):
    return reports.classify_report(req.d)


@app.post("/render")
def render(req: RenderRequest):
    r = _parse(req.spec)
    n_map = r if req.already_newton else newton_map(r)
    try:
        grid = basin_grid(
            n_map,
            (complex(req.center[0], req.center[1]), req.half_width, req.half_height),
            (req.width, req.height),
            cap=req.cap,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    sidecar = grid.sidecar()
    sidecar["schema"] = SCHEMA
    rgb = labels_to_rgb(grid.labels)
    sidecar["image_rgb_base64"] = base64.b64encode(rgb.tobytes()).decode("ascii")
    return sidecar


@app.post("/verify")
def verify(req: VerifyRequest):
    if req.suite not in reports.SUITES:
        raise HTTPException(status_code=422, detail=f"unknown suite {req.suite!r}")
    return reports.verify_suite(req.suite, seed=req.seed)
