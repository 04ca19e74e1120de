import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DEFAULT_FORM } from "../src/form.js";
import { buildDashboardModel } from "../src/viewmodel.js";
import {
  EVALUATE_RESPONSE,
  SAMPLE_SIZE_RESPONSES,
  makeFetch,
} from "./fixtures.js";

describe("design dashboard model", () => {
  it("shows the four published sample sizes and the infeasibility notice, "
     + "all sourced from intercepted responses", async () => {
    const { fetchImpl, intercepted } = makeFetch();
    const model = await buildDashboardModel(new ApiClient("", fetchImpl), DEFAULT_FORM);

    const byMethod = Object.fromEntries(model.designs.map((d) => [d.method, d]));
    expect(byMethod["mcid"]!.n).toBe(3140);
    expect(byMethod["quantile_0.9"]!.n).toBe(834);
    expect(byMethod["quantile_0.5"]!.n).toBe(120);
    expect(byMethod["ep"]!.n).toBe(218);
    expect(byMethod["pos"]!.n).toBeNull();
    expect(model.infeasibility).toMatch(/0\.7768/);

    // every n equals the intercepted response's n verbatim (no client math)
    const sampleSizeCalls = intercepted.filter((c) => c.url.endsWith("/v1/sample-size"));
    expect(sampleSizeCalls).toHaveLength(5);
    expect(byMethod["mcid"]!.n).toBe(
      (SAMPLE_SIZE_RESPONSES["point"]!.body as { n: number }).n);
    expect(byMethod["ep"]!.achieved).toBe(
      (SAMPLE_SIZE_RESPONSES["ep"]!.body as { achieved: number }).achieved);
  });

  it("evaluates at the expected-power design and copies its numbers verbatim",
     async () => {
    const { fetchImpl, intercepted } = makeFetch();
    const model = await buildDashboardModel(new ApiClient("", fetchImpl), DEFAULT_FORM);

    expect(model.evaluatedN).toBe(218);
    const evalCall = intercepted.find((c) => c.url.endsWith("/v1/evaluate"));
    expect(evalCall!.body.n).toBe(218);
    const canned = EVALUATE_RESPONSE.body as Record<string, unknown>;
    expect(model.evaluation).toEqual(canned);

    const distCall = intercepted.find((c) => c.url.endsWith("/v1/power-distribution"));
    expect(distCall!.body.n).toBe(218);
    expect(distCall!.body.conditional).toBe(true);
  });

  it("issues no further design math when every rule fails", async () => {
    const infeasible = {
      status: 422,
      body: { code: "infeasible", message: "no", detail: { bound: 0.1 } },
    };
    const { fetchImpl, intercepted } = makeFetch({
      "samplesize:point": infeasible,
      "samplesize:quantile:0.9": infeasible,
      "samplesize:quantile:0.5": infeasible,
      "samplesize:ep": infeasible,
      "samplesize:pos": infeasible,
    });
    const model = await buildDashboardModel(new ApiClient("", fetchImpl), DEFAULT_FORM);
    expect(model.evaluatedN).toBeNull();
    expect(model.evaluation).toBeNull();
    expect(intercepted.some((c) => c.url.endsWith("/v1/evaluate"))).toBe(false);
  });
});
