/** View models to HTML/SVG strings.  Numeric readouts are printed from the
 * model fields (service-sourced); charts use the display geometry. */

import { Frame, extent, linePath, stackedBar, svg, verticalMarker } from "./charts.js";
import { ScenarioForm } from "./form.js";
import { powerCurve, priorDensityCurve } from "./geometry.js";
import { ComparisonSlot, DashboardModel, UtilityModel, methodLabel } from "./viewmodel.js";

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

function fmt(v: number | null, digits = 4): string {
  return v === null ? "-" : v.toFixed(digits);
}

export function renderDesignTable(model: DashboardModel): string {
  const rows = model.designs
    .map((d) => {
      const nCell =
        d.n !== null
          ? `<td class="n" data-method="${d.method}">${d.n}</td>`
          : `<td class="n" data-method="${d.method}">&mdash;</td>`;
      const note = d.note ? `<div class="note">${esc(d.note)}</div>` : "";
      return (
        `<tr><td>${esc(methodLabel(d.method))}</td>${nCell}` +
        `<td>${fmt(d.achieved)}${note}</td></tr>`
      );
    })
    .join("");
  return (
    `<table class="designs"><thead><tr><th>rule</th><th>n</th>` +
    `<th>achieved</th></tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderEvaluation(model: DashboardModel): string {
  if (!model.evaluation || model.evaluatedN === null) return "";
  const e = model.evaluation;
  const d = e.decomposition;
  const bar = stackedBar(
    [
      { label: "type I", value: d.type1, color: "#b2182b" },
      { label: "irrelevant", value: d.irrelevant, color: "#ef8a62" },
      { label: "relevant (PoS)", value: d.relevant, color: "#2166ac" },
    ],
    320,
    18,
  )
    .map(
      (seg) =>
        `<rect x="${seg.x.toFixed(1)}" y="0" width="${seg.w.toFixed(1)}" height="18" ` +
        `fill="${seg.color}"><title>${esc(seg.label)}</title></rect>`,
    )
    .join("");
  return (
    `<dl class="metrics" data-n="${model.evaluatedN}">` +
    `<dt>expected power</dt><dd id="ep">${fmt(e.ep)}</dd>` +
    `<dt>probability of success</dt><dd id="pos">${fmt(e.pos)}</dd>` +
    `<dt>marginal rejection probability</dt><dd id="pos-prime">${fmt(e.pos_prime)}</dd>` +
    `<dt>a-priori mass of relevant effects</dt><dd id="mass">${fmt(e.mass_relevant)}</dd>` +
    `<dt>power at the relevance threshold</dt><dd id="power-mcid">${fmt(e.power_at_mcid)}</dd>` +
    `</dl>` +
    `<svg class="split" viewBox="0 0 320 18" xmlns="http://www.w3.org/2000/svg">${bar}</svg>`
  );
}

export function renderPriorPanel(form: ScenarioForm): string {
  const uncond = priorDensityCurve(form.prior, null);
  const cond = priorDensityCurve(form.prior, form.setup.mcid);
  const frame: Frame = {
    width: 320,
    height: 120,
    x: { min: form.prior.lo, max: form.prior.hi },
    y: extent([...uncond.y, ...cond.y], 0.05),
  };
  return svg(
    frame,
    `<path d="${linePath(frame, uncond.x, uncond.y)}" fill="none" stroke="#888"/>` +
      `<path d="${linePath(frame, cond.x, cond.y)}" fill="none" stroke="#2166ac"/>`,
  );
}

export function renderPowerPanel(form: ScenarioForm, model: DashboardModel): string {
  const solved = model.designs.filter((d) => d.n !== null);
  if (solved.length === 0) return "";
  const frame: Frame = {
    width: 320,
    height: 120,
    x: { min: form.prior.lo, max: form.prior.hi },
    y: { min: 0, max: 1 },
  };
  const colors = ["#2166ac", "#b2182b", "#ef8a62", "#4daf4a"];
  const paths = solved
    .map((d, i) => {
      const curve = powerCurve(form.setup, d.n as number, form.prior.lo, form.prior.hi);
      return (
        `<path d="${linePath(frame, curve.x, curve.y)}" fill="none" ` +
        `stroke="${colors[i % colors.length]}"><title>${esc(methodLabel(d.method))}</title></path>`
      );
    })
    .join("");
  return svg(frame, paths);
}

export function renderCdfPanel(model: DashboardModel): string {
  if (!model.distribution) return "";
  const { x, survival } = model.distribution;
  const cdf = survival.map((s) => 1 - s);
  const frame: Frame = {
    width: 320,
    height: 120,
    x: { min: 0, max: 1 },
    y: { min: 0, max: 1 },
  };
  return svg(
    frame,
    `<path d="${linePath(frame, x, cdf)}" fill="none" stroke="#2166ac"/>` +
      `<path d="${verticalMarker(frame, model.targetPower)}" stroke="#b2182b" stroke-dasharray="4 3"/>`,
  );
}

export function renderDashboard(form: ScenarioForm, model: DashboardModel): string {
  const notice = model.infeasibility
    ? `<p class="infeasible" id="infeasibility">probability-of-success rule ${esc(model.infeasibility)}</p>`
    : "";
  return (
    `<section class="panel"><h3>Required sample sizes</h3>${renderDesignTable(model)}${notice}</section>` +
    `<section class="panel"><h3>Criteria at n = ${model.evaluatedN ?? "-"}</h3>${renderEvaluation(model)}</section>` +
    `<section class="panel"><h3>Prior and conditional prior</h3>${renderPriorPanel(form)}</section>` +
    `<section class="panel"><h3>Probability to reject vs effect</h3>${renderPowerPanel(form, model)}</section>` +
    `<section class="panel"><h3>Random power CDF</h3>${renderCdfPanel(model)}</section>`
  );
}

export function renderUtility(model: UtilityModel): string {
  const { epTarget, lambda } = model.curve;
  const frame: Frame = {
    width: 320,
    height: 140,
    x: extent(epTarget),
    y: extent(lambda, 0.05),
  };
  const curve = svg(
    frame,
    `<path d="${linePath(frame, epTarget, lambda)}" fill="none" stroke="#2166ac"/>`,
  );
  const lambdaLine =
    model.lambdaAtTarget !== null
      ? `<p>implied reward at the selected power level: <strong id="lambda-at-target">${model.lambdaAtTarget.toFixed(0)}</strong> per-patient costs</p>`
      : "";
  const currency = model.rewardMillions
    ? `<p id="reward-currency">${esc(model.rewardMillions)} $US</p>`
    : "";
  const direct = model.direct
    ? `<dl class="metrics"><dt>utility-maximising n</dt><dd id="n-opt">${model.direct.n_opt}</dd>` +
      `<dt>expected power at the optimum</dt><dd id="ep-at-opt">${model.direct.ep_at_opt.toFixed(2)}</dd>` +
      (model.direct.warning ? `<dt>note</dt><dd id="utility-warning">${esc(model.direct.warning)}</dd>` : "") +
      `</dl>`
    : "";
  return (
    `<section class="panel"><h3>Implied reward vs expected power</h3>${curve}${lambdaLine}${currency}</section>` +
    `<section class="panel"><h3>Direct utility maximisation</h3>${direct}</section>`
  );
}

export function renderComparison(slots: ComparisonSlot[]): string {
  if (slots.length === 0) return "";
  const header = slots.map((s) => `<th>${esc(s.label)}</th>`).join("");
  const methods = slots[0]!.designs.map((d) => d.method);
  const rows = methods
    .map((method) => {
      const cells = slots
        .map((s) => {
          const row = s.designs.find((d) => d.method === method);
          return `<td>${row && row.n !== null ? row.n : "&mdash;"}</td>`;
        })
        .join("");
      return `<tr><td>${esc(methodLabel(method))}</td>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="comparison"><thead><tr><th>rule</th>${header}</tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}
