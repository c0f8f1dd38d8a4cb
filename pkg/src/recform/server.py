"""HTTP service exposing the pipeline: build, factor, verify, evaluate.

Run with:  uvicorn recform.server:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import api
from .errors import CertificationError, MathPreconditionError, PrecisionError

app = FastAPI(
    title="recform",
    description=(
        "Decomposable forms generated by families of linear recurrences: "
        "exact construction, factorization over the splitting field, and "
        "identity verification."
    ),
    version="0.1.0",
)


class FormRequest(BaseModel):
    problem: api.ProblemModel


class FactorRequest(BaseModel):
    problem: api.ProblemModel
    precision: float = 1e-12
    tolerance: float = 1e-9


class VerifyRequest(BaseModel):
    problem: api.ProblemModel
    n_start: int = 0
    n_end: int = 20


class EvalRequest(BaseModel):
    problem: api.ProblemModel
    seq: int = 1
    n_start: int = 0
    n_end: int = 10


@app.exception_handler(MathPreconditionError)
async def _math_precondition(request: Request, exc: MathPreconditionError):
    return JSONResponse(
        status_code=400, content={"detail": str(exc), "code": "math-precondition"}
    )


@app.exception_handler(CertificationError)
async def _certification(request: Request, exc: CertificationError):
    return JSONResponse(
        status_code=400,
        content={"detail": str(exc), "code": "certification", "residual": exc.residual},
    )


@app.exception_handler(PrecisionError)
async def _precision(request: Request, exc: PrecisionError):
    return JSONResponse(
        status_code=400, content={"detail": str(exc), "code": "precision"}
    )


@app.exception_handler(ValueError)
async def _bad_value(request: Request, exc: ValueError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "code": "invalid"})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/form", response_model=api.FormResponse)
def form(request: FormRequest) -> api.FormResponse:
    return api.run_form(request.problem)


@app.post("/factor", response_model=api.FactorResponse)
def factor(request: FactorRequest) -> api.FactorResponse:
    return api.run_factor(
        request.problem, precision=request.precision, tolerance=request.tolerance
    )


@app.post("/verify", response_model=api.VerifyResponse)
def verify(request: VerifyRequest) -> api.VerifyResponse:
    return api.run_verify(request.problem, request.n_start, request.n_end)


@app.post("/eval", response_model=api.EvalResponse)
def evaluate(request: EvalRequest) -> api.EvalResponse:
    return api.run_eval(request.problem, request.seq, request.n_start, request.n_end)


@app.get("/examples", response_model=list[api.ExampleInfo])
def examples() -> list[api.ExampleInfo]:
    return api.list_examples()


@app.get("/examples/{name}", response_model=api.ProblemModel)
def example(name: str) -> api.ProblemModel:
    try:
        return api.get_example(name)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc.args[0])) from exc
