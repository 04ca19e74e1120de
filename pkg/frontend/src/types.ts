/** Request and response shapes of the /v1 JSON API. */

export interface PriorSpec {
  mean: number;
  sd: number;
  lo: number;
  hi: number;
}

export interface SetupSpec {
  alpha: number;
  theta0: number;
  sigma: number;
  mcid: number;
}

export type CriterionType = "point" | "quantile" | "ep" | "pos";

export interface CriterionSpec {
  type: CriterionType;
  target: number;
  gamma?: number;
  theta_alt?: number;
}

export interface GridSpec {
  from: number;
  to: number;
  points: number;
}

export interface ScenarioRequest {
  prior: PriorSpec;
  setup: SetupSpec;
  n?: number;
  criterion?: CriterionSpec;
  lambda?: number;
  conditional?: boolean;
  grid?: GridSpec;
  n_max?: number;
}

export interface Decomposition {
  type1: number;
  irrelevant: number;
  relevant: number;
}

export interface EvaluateResponse {
  power_at_mcid: number;
  ep: number;
  pos: number;
  pos_prime: number;
  decomposition: Decomposition;
  mass_relevant: number;
}

export interface SampleSizeResponse {
  n: number;
  achieved: number;
  achieved_below?: number;
  criterion: CriterionSpec;
}

export interface PowerDistributionResponse {
  x: number[];
  survival: number[];
  quantiles: Record<string, number>;
}

export interface UtilityResponse {
  n_opt: number;
  utility: number;
  ep_at_opt: number;
  pos_at_opt: number;
  warning?: string;
}

export interface ImpliedRewardResponse {
  ep_target: number[];
  lambda: number[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  field_path?: string;
  detail?: { bound?: number; n_max?: number; achieved?: number };
}
