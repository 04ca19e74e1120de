/** Page wiring: form inputs, tabs, comparison slots, request gating. */

import { ApiClient } from "./api.js";
import { LatestGate } from "./concurrency.js";
import {
  DEFAULT_FORM,
  ScenarioForm,
  exportScenario,
  importScenario,
  isValid,
  validateForm,
} from "./form.js";
import { renderComparison, renderDashboard, renderUtility } from "./render.js";
import {
  ComparisonSlot,
  addComparison,
  buildDashboardModel,
  buildUtilityModel,
  DashboardModel,
} from "./viewmodel.js";

const FIELD_PATHS: Record<string, (f: ScenarioForm, v: number) => void> = {
  "prior.mean": (f, v) => (f.prior.mean = v),
  "prior.sd": (f, v) => (f.prior.sd = v),
  "prior.lo": (f, v) => (f.prior.lo = v),
  "prior.hi": (f, v) => (f.prior.hi = v),
  "setup.alpha": (f, v) => (f.setup.alpha = v),
  "setup.theta0": (f, v) => (f.setup.theta0 = v),
  "setup.sigma": (f, v) => (f.setup.sigma = v),
  "setup.mcid": (f, v) => (f.setup.mcid = v),
  target: (f, v) => (f.target = v),
  gamma: (f, v) => (f.gamma = v),
  lambda: (f, v) => (f.lambda = v),
  perPatientCost: (f, v) => (f.perPatientCost = v),
};

export function setupApp(root: Document, client: ApiClient): void {
  const form: ScenarioForm = structuredClone(DEFAULT_FORM);
  const dashboardGate = new LatestGate();
  const utilityGate = new LatestGate();
  let slots: ComparisonSlot[] = [];
  let lastModel: DashboardModel | null = null;

  const el = (id: string) => root.getElementById(id);

  function showErrors(): boolean {
    const errors = validateForm(form);
    for (const input of root.querySelectorAll<HTMLInputElement>("input[data-field]")) {
      const path = input.dataset.field ?? "";
      const msg = errors[path];
      const slot = root.querySelector(`[data-error-for="${path}"]`);
      if (slot) slot.textContent = msg ?? "";
      input.classList.toggle("invalid", msg !== undefined);
    }
    return Object.keys(errors).length === 0;
  }

  async function refresh(): Promise<void> {
    // invalid forms issue no requests
    if (!showErrors()) return;
    const dashboardHost = el("dashboard");
    const utilityHost = el("utility");
    if (dashboardHost) {
      const model = await dashboardGate.run((signal) =>
        buildDashboardModel(client, form, signal),
      );
      if (model) {
        lastModel = model;
        dashboardHost.innerHTML = renderDashboard(form, model);
      }
    }
    if (utilityHost) {
      const model = await utilityGate.run((signal) =>
        buildUtilityModel(client, form, signal),
      );
      if (model) utilityHost.innerHTML = renderUtility(model);
    }
  }

  for (const input of root.querySelectorAll<HTMLInputElement>("input[data-field]")) {
    const path = input.dataset.field ?? "";
    const setter = FIELD_PATHS[path];
    if (!setter) continue;
    input.addEventListener("change", () => {
      setter(form, Number(input.value));
      void refresh();
    });
  }

  el("export")?.addEventListener("click", () => {
    const out = el("scenario-json") as HTMLTextAreaElement | null;
    if (out) out.value = exportScenario(form);
  });

  el("import")?.addEventListener("click", () => {
    const src = el("scenario-json") as HTMLTextAreaElement | null;
    if (!src || !src.value.trim()) return;
    try {
      Object.assign(form, importScenario(src.value, form));
      for (const input of root.querySelectorAll<HTMLInputElement>("input[data-field]")) {
        const path = input.dataset.field ?? "";
        const value = path.split(".").reduce<unknown>(
          (acc, key) => (acc as Record<string, unknown>)[key], form);
        input.value = String(value);
      }
      void refresh();
    } catch (err) {
      const slot = root.querySelector('[data-error-for="scenario-json"]');
      if (slot) slot.textContent = err instanceof Error ? err.message : String(err);
    }
  });

  el("compare")?.addEventListener("click", () => {
    if (!lastModel) return;
    const label = `mean ${form.prior.mean}, sd ${form.prior.sd}`;
    slots = addComparison(slots, { label, designs: lastModel.designs });
    const host = el("comparison");
    if (host) host.innerHTML = renderComparison(slots);
  });

  if (isValid(form)) void refresh();
}

declare const window: (Window & typeof globalThis) | undefined;

if (typeof window !== "undefined" && typeof document !== "undefined") {
  const base = new URLSearchParams(window.location.search).get("api") ?? "";
  setupApp(document, new ApiClient(base));
}
