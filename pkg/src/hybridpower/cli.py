"""Command-line front end.

Subcommands:
  evaluate      criterion values for a fixed design (needs --n)
  samplesize    minimal n for a criterion (needs --criterion/--target)
  distribution  survival grid and quantiles of the rejection probability
  figure        write the deterministic CSV datasets behind fig2..fig7
  serve         run the JSON HTTP service

Scenario input comes from flags, or from a JSON file (--scenario) using the
service schema with individual flags overriding file fields.

Exit codes: 0 ok, 2 invalid input, 3 infeasible criterion, 4 criterion unmet
at n_max, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from pydantic import ValidationError

from . import __version__
from .errors import (
    DegenerateConditionalError,
    HybridPowerError,
    InfeasibleCriterionError,
    InvalidInputError,
    SampleSizeCapError,
)
from .figures import FIGURES
from .scenario import (
    ApiScenario,
    distribution_report,
    evaluate_report,
    solve_report,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_N_MAX = 4
EXIT_IO = 5

FLOAT_FMT = "%.10g"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fmt(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return FLOAT_FMT % value
    return str(value)


def _set_path(data: dict, path: tuple[str, ...], value) -> None:
    node = data
    for key in path[:-1]:
        node = node.setdefault(key, {})
    node[path[-1]] = value


# flag name -> scenario field path
_FLAG_PATHS = {
    "prior_mean": ("prior", "mean"),
    "prior_sd": ("prior", "sd"),
    "prior_lo": ("prior", "lo"),
    "prior_hi": ("prior", "hi"),
    "alpha": ("setup", "alpha"),
    "theta0": ("setup", "theta0"),
    "sigma": ("setup", "sigma"),
    "mcid": ("setup", "mcid"),
    "n": ("n",),
    "criterion": ("criterion", "type"),
    "target": ("criterion", "target"),
    "gamma": ("criterion", "gamma"),
    "theta_alt": ("criterion", "theta_alt"),
    "lam": ("lambda",),
    "n_max": ("n_max",),
    "unconditional": ("conditional",),
}


def build_scenario(args: argparse.Namespace) -> ApiScenario:
    data: dict = {}
    if getattr(args, "scenario", None):
        try:
            with open(args.scenario, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise CliError(f"cannot read scenario file: {exc}", EXIT_IO)
        except json.JSONDecodeError as exc:
            raise CliError(f"scenario file is not valid JSON: {exc}", EXIT_INVALID)
        if not isinstance(data, dict):
            raise CliError("scenario file must contain a JSON object", EXIT_INVALID)
    for flag, path in _FLAG_PATHS.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if flag == "unconditional":
            if value:
                _set_path(data, ("conditional",), False)
            continue
        _set_path(data, path, value)
    try:
        return ApiScenario.model_validate(data)
    except ValidationError as exc:
        lines = []
        for err in exc.errors():
            path = ".".join(str(p) for p in err["loc"]) or "<root>"
            lines.append(f"{path}: {err['msg']}")
        raise CliError("invalid scenario:\n  " + "\n  ".join(lines), EXIT_INVALID)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report))
        return
    _print_text(report)


def _print_text(report: dict, indent: str = "") -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_text(value, indent + "  ")
        elif isinstance(value, list):
            print(f"{indent}{key}: " + " ".join(_fmt(v) for v in value))
        else:
            print(f"{indent}{key}: {_fmt(value)}")


def cmd_evaluate(args) -> int:
    scenario = build_scenario(args)
    if scenario.n is None:
        raise CliError("evaluate requires --n (or 'n' in the scenario file)", EXIT_INVALID)
    report = evaluate_report(scenario.setup.to_domain(), scenario.prior.to_domain(), scenario.n)
    _emit(report, args.format)
    return EXIT_OK


def cmd_samplesize(args) -> int:
    scenario = build_scenario(args)
    if scenario.criterion is None:
        raise CliError(
            "samplesize requires --criterion/--target (or 'criterion' in the scenario file)",
            EXIT_INVALID,
        )
    report = solve_report(
        scenario.setup.to_domain(),
        scenario.prior.to_domain(),
        scenario.criterion.to_domain(),
        scenario.n_max,
    )
    _emit(report, args.format)
    return EXIT_OK


def cmd_distribution(args) -> int:
    scenario = build_scenario(args)
    if scenario.n is None:
        raise CliError("distribution requires --n (or 'n' in the scenario file)", EXIT_INVALID)
    report = distribution_report(
        scenario.setup.to_domain(),
        scenario.prior.to_domain(),
        scenario.n,
        scenario.conditional,
        scenario.grid,
    )
    if args.format == "csv":
        print("x,survival")
        for x, s in zip(report["x"], report["survival"]):
            print(f"{_fmt(x)},{_fmt(s)}")
        return EXIT_OK
    _emit(report, args.format)
    return EXIT_OK


def write_figure(fig_id: str, out_dir: str) -> list[str]:
    """Serialise one figure's datasets; returns the written paths."""
    datasets = FIGURES[fig_id]()
    written = []
    os.makedirs(out_dir, exist_ok=True)
    for name, (header, rows) in datasets.items():
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
        written.append(path)
    return written


def cmd_figure(args) -> int:
    if args.id not in FIGURES:
        raise CliError(
            f"unknown figure id {args.id!r}; choose from {', '.join(sorted(FIGURES))}",
            EXIT_INVALID,
        )
    try:
        written = write_figure(args.id, args.out)
    except OSError as exc:
        raise CliError(f"cannot write figure data: {exc}", EXIT_IO)
    for path in written:
        print(path)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    addr = args.addr or os.environ.get("HYBRIDPOWER_ADDR", "127.0.0.1:8710")
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise CliError(f"--addr must look like host:port, got {addr!r}", EXIT_INVALID)
    uvicorn.run(app, host=host, port=int(port))
    return EXIT_OK


def _add_scenario_flags(p: argparse.ArgumentParser, with_criterion=False, with_n=False,
                        with_lambda=False, with_conditional=False):
    p.add_argument("--scenario", help="JSON scenario file (service schema); flags override")
    p.add_argument("--prior-mean", dest="prior_mean", type=float)
    p.add_argument("--prior-sd", dest="prior_sd", type=float)
    p.add_argument("--prior-lo", dest="prior_lo", type=float)
    p.add_argument("--prior-hi", dest="prior_hi", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--theta0", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--mcid", type=float)
    p.add_argument("--n-max", dest="n_max", type=int)
    if with_n:
        p.add_argument("--n", type=int)
    if with_criterion:
        p.add_argument("--criterion", choices=["point", "quantile", "ep", "pos"])
        p.add_argument("--target", type=float)
        p.add_argument("--gamma", type=float)
        p.add_argument("--theta-alt", dest="theta_alt", type=float)
    if with_lambda:
        p.add_argument("--lambda", dest="lam", type=float)
    if with_conditional:
        p.add_argument("--unconditional", action="store_true", default=None,
                       help="use the unconditional rejection-probability distribution")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridpower",
        description="Sample-size derivation under effect-size uncertainty",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="criterion values for a fixed design")
    _add_scenario_flags(p_eval, with_n=True, with_lambda=True)
    p_eval.set_defaults(func=cmd_evaluate)

    p_solve = sub.add_parser("samplesize", help="minimal n meeting a criterion")
    _add_scenario_flags(p_solve, with_criterion=True)
    p_solve.set_defaults(func=cmd_samplesize)

    p_dist = sub.add_parser("distribution", help="rejection-probability distribution data")
    _add_scenario_flags(p_dist, with_n=True, with_conditional=True)
    p_dist.set_defaults(func=cmd_distribution)

    p_fig = sub.add_parser("figure", help="emit figure datasets as CSV")
    p_fig.add_argument("--id", required=True)
    p_fig.add_argument("--out", required=True, help="output directory")
    p_fig.set_defaults(func=cmd_figure)

    p_serve = sub.add_parser("serve", help="run the JSON HTTP service")
    p_serve.add_argument("--addr", help="host:port (default env HYBRIDPOWER_ADDR or 127.0.0.1:8710)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InfeasibleCriterionError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SampleSizeCapError as exc:
        print(f"exceeds n_max: {exc}", file=sys.stderr)
        return EXIT_N_MAX
    except (InvalidInputError, DegenerateConditionalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HybridPowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
