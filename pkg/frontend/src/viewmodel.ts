/** View models for the two screens.  Every numeric readout in these models
 * is copied verbatim from a service response (or composed from response
 * fields by pure display transforms like the currency conversion); the
 * tests intercept the requests and enforce exactly that. */

import { ApiClient, ApiError } from "./api.js";
import {
  ScenarioForm,
  distributionRequest,
  evaluateRequest,
  impliedRewardRequest,
  sampleSizeRequests,
  utilityRequest,
} from "./form.js";
import type {
  EvaluateResponse,
  PowerDistributionResponse,
  UtilityResponse,
} from "./types.js";

export interface DesignRow {
  method: string;
  n: number | null;
  achieved: number | null;
  note: string | null; // infeasibility or cap explanation from the service
}

export interface DashboardModel {
  designs: DesignRow[];
  infeasibility: string | null;
  evaluatedN: number | null;
  evaluation: EvaluateResponse | null;
  distribution: PowerDistributionResponse | null;
  targetPower: number;
}

const METHOD_LABELS: Record<string, string> = {
  mcid: "Point alternative at the relevance threshold",
  "quantile_0.9": "Prior quantile, gamma = 0.9",
  "quantile_0.5": "Prior quantile, gamma = 0.5",
  ep: "Expected power",
  pos: "Probability of success",
};

export function methodLabel(method: string): string {
  return METHOD_LABELS[method] ?? method;
}

function infeasibilityNotice(err: ApiError): string {
  if (err.body.code === "infeasible" && err.body.detail?.bound !== undefined) {
    return (
      `not attainable: the target exceeds the a-priori probability of a ` +
      `relevant effect (${err.body.detail.bound.toFixed(4)})`
    );
  }
  if (err.body.code === "exceeds_n_max") {
    return `not reached within the sample-size cap (${err.body.detail?.n_max ?? "?"})`;
  }
  return err.body.message;
}

export async function buildDashboardModel(
  client: ApiClient,
  form: ScenarioForm,
  signal?: AbortSignal,
): Promise<DashboardModel> {
  const designs: DesignRow[] = [];
  let infeasibility: string | null = null;

  for (const { method, body } of sampleSizeRequests(form)) {
    try {
      const res = await client.sampleSize(body, signal);
      designs.push({ method, n: res.n, achieved: res.achieved, note: null });
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        const note = infeasibilityNotice(err);
        designs.push({ method, n: null, achieved: null, note });
        if (method === "pos") infeasibility = note;
      } else {
        throw err;
      }
    }
  }

  const anchor = designs.find((d) => d.method === "ep" && d.n !== null)
    ?? designs.find((d) => d.n !== null);
  let evaluation: EvaluateResponse | null = null;
  let distribution: PowerDistributionResponse | null = null;
  const evaluatedN = anchor?.n ?? null;
  if (evaluatedN !== null) {
    evaluation = await client.evaluate(evaluateRequest(form, evaluatedN), signal);
    distribution = await client.powerDistribution(
      distributionRequest(form, evaluatedN), signal);
  }

  return {
    designs,
    infeasibility,
    evaluatedN,
    evaluation,
    distribution,
    targetPower: form.target,
  };
}

export interface UtilityModel {
  curve: { epTarget: number[]; lambda: number[] };
  lambdaAtTarget: number | null;
  /** cost * lambda, shown in millions; null hides the currency panel */
  rewardMillions: string | null;
  direct: UtilityResponse | null;
}

export function formatMillions(costPerPatient: number, lambda: number): string {
  const millions = (costPerPatient * lambda) / 1e6;
  return `≈ ${millions.toFixed(2)} million`;
}

export async function buildUtilityModel(
  client: ApiClient,
  form: ScenarioForm,
  signal?: AbortSignal,
): Promise<UtilityModel> {
  const curveRes = await client.impliedReward(impliedRewardRequest(form), signal);
  const targets = curveRes.ep_target;
  let lambdaAtTarget: number | null = null;
  if (targets.length > 0) {
    let best = 0;
    for (let i = 1; i < targets.length; i++) {
      const ti = targets[i]!;
      if (Math.abs(ti - form.target) < Math.abs(targets[best]! - form.target)) best = i;
    }
    if (Math.abs(targets[best]! - form.target) < 1e-6) {
      lambdaAtTarget = curveRes.lambda[best]!;
    }
  }

  const rewardMillions =
    form.perPatientCost > 0 && lambdaAtTarget !== null
      ? formatMillions(form.perPatientCost, lambdaAtTarget)
      : null;

  const direct =
    form.lambda > 0 ? await client.utility(utilityRequest(form), signal) : null;

  return {
    curve: { epTarget: curveRes.ep_target, lambda: curveRes.lambda },
    lambdaAtTarget,
    rewardMillions,
    direct,
  };
}

export interface ComparisonSlot {
  label: string;
  designs: DesignRow[];
}

export const MAX_COMPARISON_SLOTS = 4;

/** Saved-scenario comparison, capped for legibility. */
export function addComparison(
  slots: ComparisonSlot[],
  slot: ComparisonSlot,
): ComparisonSlot[] {
  return [...slots, slot].slice(-MAX_COMPARISON_SLOTS);
}
