/** Canned /v1 responses recorded from the running service on the reference
 * scenario (prior mean 0.2, sd 0.2 on [-0.3, 0.7]; alpha 0.025; threshold
 * 0.05).  Tests route fetch through these so every displayed number can be
 * traced to an intercepted response. */

import type { FetchLike } from "../src/api.js";

type Canned = { status: number; body: unknown };

export const SAMPLE_SIZE_RESPONSES: Record<string, Canned> = {
  point: {
    status: 200,
    body: {
      n: 3140,
      achieved: 0.80005596726894,
      achieved_below: 0.7999310515202362,
      criterion: { type: "point", target: 0.8, theta_alt: 0.05 },
    },
  },
  "quantile:0.9": {
    status: 200,
    body: {
      n: 834,
      achieved: 0.8002220087495404,
      achieved_below: 0.7997514897932021,
      criterion: { type: "quantile", target: 0.8, gamma: 0.9 },
    },
  },
  "quantile:0.5": {
    status: 200,
    body: {
      n: 120,
      achieved: 0.8006865926189279,
      achieved_below: 0.7973994488370272,
      criterion: { type: "quantile", target: 0.8, gamma: 0.5 },
    },
  },
  ep: {
    status: 200,
    body: {
      n: 218,
      achieved: 0.8001939912607493,
      achieved_below: 0.7994505595459543,
      criterion: { type: "ep", target: 0.8 },
    },
  },
  pos: {
    status: 422,
    body: {
      code: "infeasible",
      message:
        "success-probability target 0.8 is not attainable: it cannot reach " +
        "the a-priori probability of a relevant effect, 0.776810",
      detail: { bound: 0.7768104481059642 },
    },
  },
};

export const EVALUATE_RESPONSE: Canned = {
  status: 200,
  body: {
    power_at_mcid: 0.11090622962132339,
    ep: 0.8001939912607493,
    pos: 0.6215990529229627,
    pos_prime: 0.6265203850657786,
    decomposition: {
      type1: 0.0006943738947946063,
      irrelevant: 0.0042269582480212444,
      relevant: 0.6215990529229627,
    },
    mass_relevant: 0.7768104481059642,
  },
};

export const UTILITY_RESPONSE: Canned = {
  status: 200,
  body: {
    n_opt: 329,
    utility: 1896.1703969114806,
    ep_at_opt: 0.859434734032389,
    pos_at_opt: 0.6676178808615303,
  },
};

/** Published reading of the implied-reward curve at a power level of 0.8;
 * the engine's own value on this scenario is 1734.52. */
export const LAMBDA_AT_08_PUBLISHED = 1732;
export const LAMBDA_AT_08_ENGINE = 1734.522708702276;

export function impliedRewardResponse(lambdaAt08: number): Canned {
  const ep_target: number[] = [];
  const lambda: number[] = [];
  for (let i = 0; i <= 45; i++) {
    const t = 0.5 + 0.01 * i;
    ep_target.push(Number(t.toFixed(10)));
    // monotone synthetic curve pinned to the value under test at 0.8
    lambda.push((lambdaAt08 * Math.exp(3.5 * (t - 0.8))) as number);
  }
  return { status: 200, body: { ep_target, lambda } };
}

export function distributionResponse(points = 201): Canned {
  const x: number[] = [];
  const survival: number[] = [];
  for (let i = 0; i < points; i++) {
    const t = i / (points - 1);
    x.push(t);
    survival.push(1 - t); // placeholder grid; charts only need a monotone shape
  }
  return {
    status: 200,
    body: {
      x,
      survival,
      quantiles: {
        p10: 0.2990243243320311,
        p25: 0.6498298392119632,
        p50: 0.9655768695034339,
        p75: 0.9997668758929946,
        p90: 0.999999815987523,
      },
    },
  };
}

export interface Intercepted {
  url: string;
  body: Record<string, unknown>;
}

/** fetch stub: routes requests to the canned responses and records them. */
export function makeFetch(
  overrides: Partial<Record<string, Canned>> = {},
): { fetchImpl: FetchLike; intercepted: Intercepted[] } {
  const intercepted: Intercepted[] = [];

  const fetchImpl: FetchLike = async (url, init) => {
    const body = init?.body ? (JSON.parse(init.body as string) as Record<string, unknown>) : {};
    intercepted.push({ url, body });
    if (init?.signal?.aborted) {
      throw new DOMException("aborted", "AbortError");
    }
    let canned: Canned | undefined;
    if (url.endsWith("/v1/sample-size")) {
      const criterion = body.criterion as { type: string; gamma?: number };
      const key =
        criterion.type === "quantile" ? `quantile:${criterion.gamma}` : criterion.type;
      canned = overrides[`samplesize:${key}`] ?? SAMPLE_SIZE_RESPONSES[key];
    } else if (url.endsWith("/v1/evaluate")) {
      canned = overrides["evaluate"] ?? EVALUATE_RESPONSE;
    } else if (url.endsWith("/v1/power-distribution")) {
      canned = overrides["power-distribution"] ?? distributionResponse();
    } else if (url.endsWith("/v1/utility")) {
      canned = overrides["utility"] ?? UTILITY_RESPONSE;
    } else if (url.endsWith("/v1/implied-reward")) {
      canned = overrides["implied-reward"] ?? impliedRewardResponse(LAMBDA_AT_08_PUBLISHED);
    } else if (url.endsWith("/v1/health")) {
      canned = { status: 200, body: { status: "ok", version: "test" } };
    }
    if (!canned) throw new Error(`no canned response for ${url}`);
    return new Response(JSON.stringify(canned.body), {
      status: canned.status,
      headers: { "content-type": "application/json" },
    });
  };

  return { fetchImpl, intercepted };
}
