/** Scenario form state: validation mirroring the server's ranges, and the
 * pure mapping from form state to request bodies.  Import/export round-trips
 * through the service's scenario JSON schema. */

import type {
  CriterionSpec,
  CriterionType,
  ScenarioRequest,
} from "./types.js";

export interface ScenarioForm {
  prior: { mean: number; sd: number; lo: number; hi: number };
  setup: { alpha: number; theta0: number; sigma: number; mcid: number };
  target: number;
  gamma: number;
  lambda: number;
  perPatientCost: number;
  criterionTab: CriterionType;
}

export const DEFAULT_FORM: ScenarioForm = {
  prior: { mean: 0.2, sd: 0.2, lo: -0.3, hi: 0.7 },
  setup: { alpha: 0.025, theta0: 0, sigma: 1, mcid: 0.05 },
  target: 0.8,
  gamma: 0.9,
  lambda: 3333,
  perPatientCost: 30000,
  criterionTab: "ep",
};

export type FieldErrors = Partial<Record<string, string>>;

/** Client-side mirror of the server-side ranges; invalid fields block
 * submission with inline messages. */
export function validateForm(form: ScenarioForm): FieldErrors {
  const errors: FieldErrors = {};
  const finite = (v: number) => Number.isFinite(v);
  for (const [path, value] of Object.entries({
    "prior.mean": form.prior.mean,
    "prior.sd": form.prior.sd,
    "prior.lo": form.prior.lo,
    "prior.hi": form.prior.hi,
    "setup.alpha": form.setup.alpha,
    "setup.theta0": form.setup.theta0,
    "setup.sigma": form.setup.sigma,
    "setup.mcid": form.setup.mcid,
    target: form.target,
    gamma: form.gamma,
    lambda: form.lambda,
    perPatientCost: form.perPatientCost,
  })) {
    if (!finite(value)) errors[path] = "must be a number";
  }
  if (Object.keys(errors).length > 0) return errors;

  if (form.prior.sd <= 0) errors["prior.sd"] = "must be > 0";
  if (!(form.prior.lo < form.prior.hi)) errors["prior.hi"] = "upper bound must exceed lower";
  if (!(form.setup.alpha > 0 && form.setup.alpha < 0.5)) {
    errors["setup.alpha"] = "must be in (0, 0.5)";
  }
  if (form.setup.sigma <= 0) errors["setup.sigma"] = "must be > 0";
  if (form.setup.mcid < form.setup.theta0) {
    errors["setup.mcid"] = "must be at least theta0";
  }
  if (form.setup.mcid >= form.prior.hi) {
    errors["setup.mcid"] = "must lie below the prior's upper bound";
  }
  if (!(form.target > 0 && form.target < 1)) errors["target"] = "must be in (0, 1)";
  if (!(form.gamma > 0 && form.gamma <= 1)) errors["gamma"] = "must be in (0, 1]";
  if (form.lambda < 0) errors["lambda"] = "must be >= 0";
  if (form.perPatientCost < 0) errors["perPatientCost"] = "must be >= 0";
  return errors;
}

export function isValid(form: ScenarioForm): boolean {
  return Object.keys(validateForm(form)).length === 0;
}

function base(form: ScenarioForm): Pick<ScenarioRequest, "prior" | "setup"> {
  return {
    prior: { ...form.prior },
    setup: { ...form.setup },
  };
}

/** The four sample-size requests behind the dashboard's n-per-criterion panel. */
export function sampleSizeRequests(
  form: ScenarioForm,
): { method: string; body: ScenarioRequest }[] {
  const criteria: { method: string; criterion: CriterionSpec }[] = [
    { method: "mcid", criterion: { type: "point", target: form.target, theta_alt: form.setup.mcid } },
    { method: "quantile_0.9", criterion: { type: "quantile", target: form.target, gamma: 0.9 } },
    { method: "quantile_0.5", criterion: { type: "quantile", target: form.target, gamma: 0.5 } },
    { method: "ep", criterion: { type: "ep", target: form.target } },
    { method: "pos", criterion: { type: "pos", target: form.target } },
  ];
  return criteria.map(({ method, criterion }) => ({
    method,
    body: { ...base(form), criterion },
  }));
}

export function evaluateRequest(form: ScenarioForm, n: number): ScenarioRequest {
  return { ...base(form), n };
}

export function distributionRequest(form: ScenarioForm, n: number): ScenarioRequest {
  return {
    ...base(form),
    n,
    conditional: true,
    grid: { from: 0, to: 1, points: 201 },
  };
}

export function utilityRequest(form: ScenarioForm): ScenarioRequest {
  return { ...base(form), lambda: form.lambda };
}

export function impliedRewardRequest(form: ScenarioForm): ScenarioRequest {
  return { ...base(form), grid: { from: 0.5, to: 0.95, points: 46 } };
}

/** Scenario export: the service schema, directly re-importable. */
export function exportScenario(form: ScenarioForm): string {
  const body: ScenarioRequest = { ...base(form) };
  return JSON.stringify(body, null, 2);
}

export function importScenario(json: string, current: ScenarioForm): ScenarioForm {
  const parsed = JSON.parse(json) as ScenarioRequest;
  if (typeof parsed !== "object" || parsed === null || !parsed.prior) {
    throw new Error("scenario JSON must contain a prior");
  }
  return {
    ...current,
    prior: { ...current.prior, ...parsed.prior },
    setup: { ...current.setup, ...(parsed.setup ?? {}) },
    ...(parsed.lambda !== undefined ? { lambda: parsed.lambda } : {}),
  };
}
