"""Request/response models and handlers shared by the HTTP service and the CLI.

Handlers take validated pydantic models and return pydantic models; they raise
the package's domain errors, which the server maps to HTTP statuses and the
CLI maps to exit codes.  Rationals travel as "p/q" strings end to end.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field

from .algebra import ComplexApprox, HomogeneousForm, format_rat, parse_rat
from .factorization import (
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
    Decomposition,
    decompose_form,
)
from .form_builder import FormPackage, build_form
from .problems import BUNDLED_PROBLEMS, Problem
from .verify import verify_identity


class ProblemModel(BaseModel):
    k: int = Field(ge=2)
    gammas: list[str]
    sequences: list[list[str]]
    mode: Literal["family", "cassini"] = "family"

    @classmethod
    def from_problem(cls, problem: Problem) -> "ProblemModel":
        return cls(**problem.to_dict())

    def to_problem(self) -> Problem:
        return Problem.from_dict(self.model_dump())


class TermModel(BaseModel):
    exponents: list[int]
    coefficient: str


class FormResponse(BaseModel):
    k: int
    delta: str
    base: str
    rhs_scale: str
    form_f: list[TermModel]
    form_f_tilde: list[TermModel]
    identity: str


class CoefficientModel(BaseModel):
    exact: str | None = None
    real: float
    imag: float
    error_bound: float


class FactorModel(BaseModel):
    coefficients: list[CoefficientModel]
    multiplicity: int
    root: CoefficientModel
    exact: bool


class FactorResponse(BaseModel):
    k: int
    delta: str
    rhs_scale: str
    factors: list[FactorModel]
    residual: float
    exact: bool


class FailureModel(BaseModel):
    n: int
    lhs: str
    rhs: str


class VerifyResponse(BaseModel):
    n_start: int
    n_end: int
    total: int
    failures: list[FailureModel]
    ok: bool
    elapsed: float


class TermValue(BaseModel):
    n: int
    value: str


class EvalResponse(BaseModel):
    seq: int
    terms: list[TermValue]


class ExampleInfo(BaseModel):
    name: str
    k: int
    mode: str


def _form_terms(form: HomogeneousForm) -> list[TermModel]:
    return [
        TermModel(exponents=list(exps), coefficient=format_rat(coeff))
        for exps, coeff in form.items()
    ]


def form_package_response(package: FormPackage) -> FormResponse:
    rhs_scale = package.rhs_scale
    identity = (
        f"{package.form_f_tilde.render()} = {format_rat(rhs_scale)} * "
        f"({format_rat(package.base)})^n"
    )
    return FormResponse(
        k=package.arity,
        delta=format_rat(package.delta),
        base=format_rat(package.base),
        rhs_scale=format_rat(rhs_scale),
        form_f=_form_terms(package.form_f),
        form_f_tilde=_form_terms(package.form_f_tilde),
        identity=identity,
    )


def form_response_to_package(response: FormResponse) -> FormPackage:
    """Rebuild the exact in-memory package from its wire form (round-trip)."""
    k = response.k

    def to_form(terms: list[TermModel]) -> HomogeneousForm:
        return HomogeneousForm(
            k, {tuple(t.exponents): parse_rat(t.coefficient) for t in terms}
        )

    return FormPackage(
        form_f=to_form(response.form_f),
        form_f_tilde=to_form(response.form_f_tilde),
        delta=parse_rat(response.delta),
        base=parse_rat(response.base),
        arity=k,
    )


def _coefficient_model(value) -> CoefficientModel:
    if isinstance(value, Fraction):
        return CoefficientModel(
            exact=format_rat(value), real=float(value), imag=0.0, error_bound=0.0
        )
    assert isinstance(value, ComplexApprox)
    return CoefficientModel(
        exact=None, real=value.real, imag=value.imag, error_bound=value.error_bound
    )


def decomposition_response(
    decomposition: Decomposition, package: FormPackage
) -> FactorResponse:
    factors = [
        FactorModel(
            coefficients=[_coefficient_model(c) for c in factor.coefficients],
            multiplicity=factor.multiplicity,
            root=_coefficient_model(factor.source_root.value),
            exact=factor.is_exact,
        )
        for factor in decomposition.factors
    ]
    return FactorResponse(
        k=package.arity,
        delta=format_rat(package.delta),
        rhs_scale=format_rat(package.rhs_scale),
        factors=factors,
        residual=decomposition.residual,
        exact=decomposition.is_exact,
    )


# ---------------------------------------------------------------------------
# handlers


def run_form(problem: ProblemModel) -> FormResponse:
    family = problem.to_problem().family()
    return form_package_response(build_form(family))


def run_factor(
    problem: ProblemModel,
    precision: float = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
) -> FactorResponse:
    family = problem.to_problem().family()
    package = build_form(family)
    decomposition = decompose_form(family, precision=precision, tolerance=tolerance)
    return decomposition_response(decomposition, package)


def run_verify(problem: ProblemModel, n_start: int, n_end: int) -> VerifyResponse:
    family = problem.to_problem().family()
    package = build_form(family)
    report = verify_identity(family, package, (n_start, n_end))
    return VerifyResponse(
        n_start=n_start,
        n_end=n_end,
        total=report.total,
        failures=[
            FailureModel(n=n, lhs=format_rat(lhs), rhs=format_rat(rhs))
            for n, lhs, rhs in report.failures
        ],
        ok=report.ok,
        elapsed=report.elapsed,
    )


def run_eval(problem: ProblemModel, seq: int, n_start: int, n_end: int) -> EvalResponse:
    sequence = problem.to_problem().sequence(seq)
    terms = [
        TermValue(n=n, value=format_rat(sequence.eval(n)))
        for n in range(n_start, n_end + 1)
    ]
    return EvalResponse(seq=seq, terms=terms)


def list_examples() -> list[ExampleInfo]:
    return [
        ExampleInfo(name=name, k=problem.k, mode=problem.mode)
        for name, problem in sorted(BUNDLED_PROBLEMS.items())
    ]


def get_example(name: str) -> ProblemModel:
    if name not in BUNDLED_PROBLEMS:
        known = ", ".join(sorted(BUNDLED_PROBLEMS))
        raise KeyError(f"unknown example {name!r}; bundled examples: {known}")
    return ProblemModel.from_problem(BUNDLED_PROBLEMS[name])
