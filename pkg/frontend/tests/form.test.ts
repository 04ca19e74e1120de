import { describe, expect, it } from "vitest";

import {
  DEFAULT_FORM,
  ScenarioForm,
  exportScenario,
  importScenario,
  isValid,
  sampleSizeRequests,
  distributionRequest,
  evaluateRequest,
  impliedRewardRequest,
  utilityRequest,
  validateForm,
} from "../src/form.js";

const clone = (): ScenarioForm => structuredClone(DEFAULT_FORM);

describe("validation mirrors the server ranges", () => {
  it("accepts the defaults", () => {
    expect(validateForm(DEFAULT_FORM)).toEqual({});
    expect(isValid(DEFAULT_FORM)).toBe(true);
  });

  it.each([
    ["prior.sd", (f: ScenarioForm) => (f.prior.sd = 0)],
    ["prior.hi", (f: ScenarioForm) => (f.prior.hi = f.prior.lo - 1)],
    ["setup.alpha", (f: ScenarioForm) => (f.setup.alpha = 0.5)],
    ["setup.sigma", (f: ScenarioForm) => (f.setup.sigma = -1)],
    ["setup.mcid", (f: ScenarioForm) => (f.setup.mcid = f.setup.theta0 - 0.1)],
    ["target", (f: ScenarioForm) => (f.target = 1)],
    ["gamma", (f: ScenarioForm) => (f.gamma = 0)],
    ["lambda", (f: ScenarioForm) => (f.lambda = -5)],
    ["prior.mean", (f: ScenarioForm) => (f.prior.mean = NaN)],
  ])("flags %s", (path, mutate) => {
    const form = clone();
    mutate(form);
    expect(Object.keys(validateForm(form))).toContain(path);
  });

  it("rejects thresholds at or above the prior's upper bound", () => {
    const form = clone();
    form.setup.mcid = form.prior.hi;
    expect(validateForm(form)["setup.mcid"]).toBeTruthy();
  });
});

describe("form to request mapping is pure and exact", () => {
  it("produces the five design requests in a fixed order", () => {
    const reqs = sampleSizeRequests(DEFAULT_FORM);
    expect(reqs.map((r) => r.method)).toEqual([
      "mcid", "quantile_0.9", "quantile_0.5", "ep", "pos",
    ]);
    expect(reqs[0]!.body).toEqual({
      prior: { mean: 0.2, sd: 0.2, lo: -0.3, hi: 0.7 },
      setup: { alpha: 0.025, theta0: 0, sigma: 1, mcid: 0.05 },
      criterion: { type: "point", target: 0.8, theta_alt: 0.05 },
    });
    expect(reqs[3]!.body.criterion).toEqual({ type: "ep", target: 0.8 });
    expect(reqs[4]!.body.criterion).toEqual({ type: "pos", target: 0.8 });
  });

  it("snapshot: representative request bodies", () => {
    const form = clone();
    form.prior.mean = 0.3;
    form.target = 0.9;
    form.lambda = 1000;
    expect({
      samplesize: sampleSizeRequests(form).map((r) => r.body),
      evaluate: evaluateRequest(form, 218),
      distribution: distributionRequest(form, 218),
      utility: utilityRequest(form),
      impliedReward: impliedRewardRequest(form),
    }).toMatchSnapshot();
  });

  it("does not mutate the form", () => {
    const form = clone();
    const before = JSON.stringify(form);
    sampleSizeRequests(form);
    evaluateRequest(form, 10);
    utilityRequest(form);
    expect(JSON.stringify(form)).toBe(before);
  });
});

describe("scenario import/export", () => {
  it("round-trips to an identical form", () => {
    const form = clone();
    form.prior.mean = 0.35;
    form.setup.mcid = 0.1;
    const restored = importScenario(exportScenario(form), clone());
    expect(restored.prior).toEqual(form.prior);
    expect(restored.setup).toEqual(form.setup);
    // identical forms produce identical request bodies, hence identical
    // rendered numbers
    expect(sampleSizeRequests(restored)).toEqual(sampleSizeRequests(form));
  });

  it("rejects scenarios without a prior", () => {
    expect(() => importScenario("{}", clone())).toThrow(/prior/);
  });
});
