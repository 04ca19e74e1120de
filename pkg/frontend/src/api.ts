/** Typed client for the /v1 endpoints.  Every call is cancellable; callers
 * pass an AbortSignal so a newer form state can invalidate in-flight work. */

import type {
  ApiErrorBody,
  EvaluateResponse,
  ImpliedRewardResponse,
  PowerDistributionResponse,
  SampleSizeResponse,
  ScenarioRequest,
  UtilityResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: ScenarioRequest, signal?: AbortSignal): Promise<T> {
    const res = await this.fetchImpl(`${this.baseUrl}/v1/${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!res.ok) {
      throw new ApiError(res.status, (await res.json()) as ApiErrorBody);
    }
    return (await res.json()) as T;
  }

  evaluate(body: ScenarioRequest, signal?: AbortSignal): Promise<EvaluateResponse> {
    return this.post("evaluate", body, signal);
  }

  sampleSize(body: ScenarioRequest, signal?: AbortSignal): Promise<SampleSizeResponse> {
    return this.post("sample-size", body, signal);
  }

  powerDistribution(
    body: ScenarioRequest,
    signal?: AbortSignal,
  ): Promise<PowerDistributionResponse> {
    return this.post("power-distribution", body, signal);
  }

  utility(body: ScenarioRequest, signal?: AbortSignal): Promise<UtilityResponse> {
    return this.post("utility", body, signal);
  }

  impliedReward(body: ScenarioRequest, signal?: AbortSignal): Promise<ImpliedRewardResponse> {
    return this.post("implied-reward", body, signal);
  }

  async health(signal?: AbortSignal): Promise<{ status: string; version: string }> {
    const res = await this.fetchImpl(`${this.baseUrl}/v1/health`, { signal });
    return (await res.json()) as { status: string; version: string };
  }
}
