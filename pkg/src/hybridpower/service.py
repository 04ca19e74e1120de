"""Stateless JSON-over-HTTP facade.

POST endpoints under /v1 mirror the library one-to-one; handlers are pure
functions of the request body, hold no state, and return the same values as
the CLI's --format json output on an identical scenario.

Error contract: schema violations are 400 with {code, message, field_path};
infeasible, degenerate, or capped computations are 422 with a machine-
readable code ("infeasible" | "exceeds_n_max" | "degenerate_conditional").

CORS for the web client is enabled by setting HYBRIDPOWER_CORS_ORIGIN.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import __version__
from .errors import (
    DegenerateConditionalError,
    HybridPowerError,
    InfeasibleCriterionError,
    InvalidInputError,
    SampleSizeCapError,
)
from .scenario import (
    ApiScenario,
    distribution_report,
    evaluate_report,
    implied_reward_report,
    solve_report,
    utility_report,
)

app = FastAPI(title="hybridpower", version=__version__, docs_url=None, redoc_url=None)

_cors_origin = os.environ.get("HYBRIDPOWER_CORS_ORIGIN")
if _cors_origin:
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in _cors_origin.split(",")],
        allow_methods=["GET", "POST"],
        allow_headers=["content-type"],
    )


def _error(status: int, code: str, message: str, field_path: str | None = None,
           detail: dict | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if field_path is not None:
        body["field_path"] = field_path
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


_HTTP_CODES = {404: "not_found", 405: "method_not_allowed"}


@app.exception_handler(StarletteHTTPException)
async def _on_http_error(request: Request, exc: StarletteHTTPException):
    # keep the {code, message} contract on every 4xx/5xx body
    code = _HTTP_CODES.get(exc.status_code, "http_error")
    return _error(exc.status_code, code, str(exc.detail))


@app.exception_handler(RequestValidationError)
async def _on_validation_error(request: Request, exc: RequestValidationError):
    errors = exc.errors()
    first = errors[0] if errors else {"loc": (), "msg": "invalid request"}
    # drop the leading "body" segment fastapi adds
    loc = [str(p) for p in first.get("loc", ()) if p != "body"]
    return _error(400, "invalid_input", str(first.get("msg", "invalid request")),
                  field_path=".".join(loc) or None)


@app.exception_handler(InfeasibleCriterionError)
async def _on_infeasible(request: Request, exc: InfeasibleCriterionError):
    detail = {"bound": exc.bound} if exc.bound is not None else None
    return _error(422, "infeasible", str(exc), detail=detail)


@app.exception_handler(SampleSizeCapError)
async def _on_cap(request: Request, exc: SampleSizeCapError):
    return _error(422, "exceeds_n_max", str(exc),
                  detail={"n_max": exc.n_max, "achieved": exc.achieved})


@app.exception_handler(DegenerateConditionalError)
async def _on_degenerate(request: Request, exc: DegenerateConditionalError):
    return _error(422, "degenerate_conditional", str(exc))


@app.exception_handler(InvalidInputError)
async def _on_invalid(request: Request, exc: InvalidInputError):
    return _error(400, "invalid_input", str(exc))


@app.exception_handler(ValueError)
async def _on_value_error(request: Request, exc: ValueError):
    return _error(400, "invalid_input", str(exc))


@app.exception_handler(HybridPowerError)
async def _on_library_error(request: Request, exc: HybridPowerError):
    return _error(422, "computation_failed", str(exc))


def _require(scenario: ApiScenario, field: str):
    value = getattr(scenario, field)
    if value is None:
        raise RequestValidationError(
            [{"loc": ("body", "lambda" if field == "lam" else field),
              "msg": "field required for this endpoint", "type": "missing"}]
        )
    return value


@app.post("/v1/evaluate")
def evaluate(scenario: ApiScenario) -> dict:
    n = _require(scenario, "n")
    return evaluate_report(scenario.setup.to_domain(), scenario.prior.to_domain(), n)


@app.post("/v1/sample-size")
def sample_size(scenario: ApiScenario) -> dict:
    criterion = _require(scenario, "criterion")
    return solve_report(
        scenario.setup.to_domain(),
        scenario.prior.to_domain(),
        criterion.to_domain(),
        scenario.n_max,
    )


@app.post("/v1/power-distribution")
def power_distribution(scenario: ApiScenario) -> dict:
    n = _require(scenario, "n")
    return distribution_report(
        scenario.setup.to_domain(),
        scenario.prior.to_domain(),
        n,
        scenario.conditional,
        scenario.grid,
    )


@app.post("/v1/utility")
def utility_endpoint(scenario: ApiScenario) -> dict:
    lam = _require(scenario, "lam")
    return utility_report(scenario.setup.to_domain(), scenario.prior.to_domain(),
                          lam, scenario.n_max)


@app.post("/v1/implied-reward")
def implied_reward_endpoint(scenario: ApiScenario) -> dict:
    return implied_reward_report(scenario.setup.to_domain(), scenario.prior.to_domain(),
                                 scenario.grid, scenario.n_max)


@app.get("/v1/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}
