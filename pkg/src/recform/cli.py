"""Command-line client for the pipeline.

Thin wrapper over the same handlers the HTTP service uses; problems come from
JSON files or bundled example names.  Exit codes: 0 success, 1 usage error,
2 mathematical precondition failure (zero trailing coefficient or dependent
initial rows), 3 certification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import api
from .algebra import HomogeneousForm, exponent_vectors, parse_rat
from .errors import CertificationError, MathPreconditionError, PrecisionError
from .problems import load_problem

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_CERTIFICATION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise ValueError(f"range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _load_problem_model(source: str) -> api.ProblemModel:
    return api.ProblemModel.from_problem(load_problem(source))


def _print_form(response: api.FormResponse, dense: bool) -> None:
    print(f"F~ = {_render_terms(response.form_f_tilde, response.k, dense)}")
    print(f"F  = {_render_terms(response.form_f, response.k, dense)}")
    print(f"Delta = {response.delta}")
    print(f"base  = {response.base}")
    print(f"identity: F~(terms at n) = {response.rhs_scale} * ({response.base})^n")


def _render_terms(terms: list[api.TermModel], k: int, dense: bool) -> str:
    if not dense:
        form = HomogeneousForm(
            k, {tuple(t.exponents): parse_rat(t.coefficient) for t in terms}
        )
        return form.render()
    lookup = {tuple(t.exponents): t.coefficient for t in terms}
    parts = []
    for exps in exponent_vectors(k, k):
        coeff = lookup.get(exps, "0")
        monomial = "*".join(
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e
        )
        parts.append(f"{coeff}*{monomial}")
    return " + ".join(parts)


def _format_coefficient(c: api.CoefficientModel) -> str:
    if c.exact is not None:
        return c.exact
    if c.imag == 0.0:
        return f"{c.real:.12g}"
    return f"{c.real:.12g}{c.imag:+.12g}i"


def _print_factor(response: api.FactorResponse) -> None:
    for factor in response.factors:
        vec = ", ".join(_format_coefficient(c) for c in factor.coefficients)
        tag = "exact" if factor.exact else "approx"
        root = _format_coefficient(factor.root)
        print(
            f"factor ({vec}) multiplicity {factor.multiplicity} "
            f"[{tag}, root {root}]"
        )
    print(f"scale = {response.rhs_scale} (applied to the product for F~)")
    print(f"residual = {response.residual:.3g}")


def _print_verify(response: api.VerifyResponse) -> None:
    passed = response.total - len(response.failures)
    print(f"{passed}/{response.total} OK on n in {response.n_start}..{response.n_end}")
    for failure in response.failures:
        print(f"  FAIL n={failure.n}: lhs={failure.lhs} rhs={failure.rhs}")


def build_parser() -> _Parser:
    parser = _Parser(prog="recform", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_form = sub.add_parser("form", help="build the form package for a problem")
    p_form.add_argument("file", help="problem file path or bundled example name")
    p_form.add_argument("--json", action="store_true", help="machine-readable output")
    p_form.add_argument(
        "--dense", action="store_true", help="list every coefficient, including zeros"
    )

    p_factor = sub.add_parser("factor", help="decompose the form into linear factors")
    p_factor.add_argument("file")
    p_factor.add_argument("--precision", type=float, default=1e-12)
    p_factor.add_argument("--tolerance", type=float, default=1e-9)
    p_factor.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="check the identity over an index range")
    p_verify.add_argument("file")
    p_verify.add_argument("--n-range", default="0..20", help="inclusive range A..B")
    p_verify.add_argument("--json", action="store_true")

    p_eval = sub.add_parser("eval", help="tabulate terms of one input sequence")
    p_eval.add_argument("file")
    p_eval.add_argument("--seq", type=int, default=1, help="1-based sequence index")
    p_eval.add_argument("--n-range", default="0..10")
    p_eval.add_argument("--json", action="store_true")

    p_examples = sub.add_parser("examples", help="list or run the bundled examples")
    p_examples.add_argument("name", nargs="?", help="run this example end to end")
    p_examples.add_argument("--json", action="store_true")

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "examples":
        return _cmd_examples(args)
    problem = _load_problem_model(args.file)
    if args.command == "form":
        response = api.run_form(problem)
        if args.json:
            print(response.model_dump_json(indent=2))
        else:
            _print_form(response, args.dense)
        return EXIT_OK
    if args.command == "factor":
        response = api.run_factor(
            problem, precision=args.precision, tolerance=args.tolerance
        )
        if args.json:
            print(response.model_dump_json(indent=2))
        else:
            _print_factor(response)
        return EXIT_OK
    if args.command == "verify":
        lo, hi = _parse_range(args.n_range)
        response = api.run_verify(problem, lo, hi)
        if args.json:
            print(response.model_dump_json(indent=2))
        else:
            _print_verify(response)
        return EXIT_OK if response.ok else EXIT_CERTIFICATION
    if args.command == "eval":
        lo, hi = _parse_range(args.n_range)
        response = api.run_eval(problem, args.seq, lo, hi)
        if args.json:
            print(response.model_dump_json(indent=2))
        else:
            for term in response.terms:
                print(f"n={term.n}: {term.value}")
        return EXIT_OK
    raise AssertionError(f"unhandled command {args.command}")


def _cmd_examples(args: argparse.Namespace) -> int:
    if args.name is None:
        infos = api.list_examples()
        if args.json:
            print("[" + ", ".join(info.model_dump_json() for info in infos) + "]")
        else:
            for info in infos:
                print(f"{info.name}  (k={info.k}, mode={info.mode})")
        return EXIT_OK
    try:
        problem = api.get_example(args.name)
    except KeyError as exc:
        print(f"recform: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    form = api.run_form(problem)
    verify = api.run_verify(problem, 0, 20)
    if args.json:
        print(form.model_dump_json(indent=2))
        print(verify.model_dump_json(indent=2))
    else:
        print(f"== {args.name} ==")
        _print_form(form, dense=False)
        _print_verify(verify)
    return EXIT_OK if verify.ok else EXIT_CERTIFICATION


def _glue_range_options(argv: list[str]) -> list[str]:
    """Turn ["--n-range", "-3..3"] into ["--n-range=-3..3"] so argparse accepts it."""
    out = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg == "--n-range" and i + 1 < len(argv):
            out.append(f"--n-range={argv[i + 1]}")
            skip = True
        else:
            out.append(arg)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_range_options(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except MathPreconditionError as exc:
        print(f"recform: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (CertificationError, PrecisionError) as exc:
        print(f"recform: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except ValueError as exc:
        print(f"recform: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
