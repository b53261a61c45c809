/** DOM rendering. Framework-free: each section re-renders from state into
 * its container. Colors: pro-Kremlin indicators red, pro-Western blue. */

import { ApiError, CheckResponse, GlossaryEntry, Indicator, Label } from "./api.js";
import { t } from "./messages.js";
import { ViewState } from "./state.js";

/** Banker's rounding to one decimal, applied to the API probability as a
 * percentage — the displayed number never re-derives anything else. */
export function formatPercent(probability: number): string {
  const scaled = probability * 1000;
  const floor = Math.floor(scaled);
  const diff = scaled - floor;
  let tenths: number;
  if (diff > 0.5) {
    tenths = floor + 1;
  } else if (diff < 0.5) {
    tenths = floor;
  } else {
    tenths = floor % 2 === 0 ? floor : floor + 1;
  }
  return (tenths / 10).toFixed(1) + "%";
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function verdictTitle(label: Label, probability: number): string {
  const name = label === "Propaganda" ? t("verdict.propaganda") : t("verdict.noPropaganda");
  return `${name} — ${formatPercent(probability)}`;
}

function indicatorList(heading: string, className: string, indicators: Indicator[]): HTMLElement {
  const section = el("div", `stance-list ${className}`);
  section.appendChild(el("h3", undefined, heading));
  const list = el("ul");
  for (const indicator of indicators) {
    const item = el("li", "indicator", indicator.feature);
    item.title = `weight ${indicator.weight.toFixed(3)}, contribution ${indicator.contribution.toFixed(5)}`;
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

export function renderVerdict(
  container: HTMLElement,
  result: CheckResponse,
  onKeywordClick: (id: string) => void,
): void {
  container.replaceChildren();
  const card = el("div", "verdict-card");

  const title = el("h2", result.verdict.label === "Propaganda" ? "verdict propaganda" : "verdict clean");
  title.textContent = verdictTitle(result.verdict.label, result.verdict.probability);
  card.appendChild(title);

  if (result.verdict.arbitration_applied) {
    card.appendChild(el("span", "badge arbitration", t("verdict.arbitrationBadge")));
  }
  if (result.translated) {
    card.appendChild(el("span", "badge translated", t("verdict.translatedBadge")));
  }
  card.appendChild(el("p", "language-line", t("verdict.languageLine", { language: result.language })));

  const indicators = result.explanation.indicators;
  if (indicators.length === 0) {
    card.appendChild(el("p", "no-indicators", t("indicators.none")));
  } else {
    const groups = el("div", "stance-groups");
    groups.appendChild(indicatorList(
      t("indicators.proKremlin"), "pro-kremlin",
      indicators.filter((i) => i.stance === "ProKremlin"),
    ));
    groups.appendChild(indicatorList(
      t("indicators.proWestern"), "pro-western",
      indicators.filter((i) => i.stance === "ProWestern"),
    ));
    card.appendChild(groups);
  }

  if (result.explanation.keywords.length > 0) {
    card.appendChild(el("h3", undefined, t("keywords.heading")));
    const chips = el("div", "keyword-chips");
    for (const hit of result.explanation.keywords) {
      const chip = el("button", "keyword-chip", `${hit.id} ×${hit.count}`);
      chip.dataset.keywordId = hit.id;
      chip.addEventListener("click", () => onKeywordClick(hit.id));
      chips.appendChild(chip);
    }
    card.appendChild(chips);
  }

  container.appendChild(card);
}

export function renderError(container: HTMLElement, error: ApiError): void {
  container.replaceChildren();
  const message =
    error.code === "unsupported_language"
      ? t("error.unsupportedLanguage", { language: error.language ?? "?" })
      : t("error.generic", { message: error.message });
  const box = el("div", "error-box", message);
  box.dataset.errorCode = error.code;
  container.appendChild(box);
}

export function renderPopover(
  container: HTMLElement,
  state: ViewState,
  entries: GlossaryEntry[] | null,
): void {
  container.replaceChildren();
  if (!state.expandedKeyword || !entries) {
    return;
  }
  const entry = entries.find((candidate) => candidate.id === state.expandedKeyword);
  if (!entry) {
    return;
  }
  const popover = el("div", "glossary-popover");
  popover.dataset.entryId = entry.id;
  popover.appendChild(el("strong", undefined, entry.term));
  popover.appendChild(el("p", undefined, entry.explanation));
  container.appendChild(popover);
}

export function renderFeedback(
  container: HTMLElement,
  state: ViewState,
  onSubmit: (label: Label) => void,
): void {
  container.replaceChildren();
  const enabled = state.result !== null && !state.pending;
  const box = el("div", "feedback-box");
  box.appendChild(el("p", undefined, t("feedback.question")));

  if (state.submittedLabel && !state.feedbackFailed) {
    box.appendChild(el("p", "feedback-thanks", t("feedback.thanks")));
  } else {
    for (const [label, key] of [
      ["Propaganda", "feedback.propaganda"],
      ["NoPropaganda", "feedback.noPropaganda"],
    ] as const) {
      const button = el("button", "feedback-button", t(key));
      button.dataset.feedbackLabel = label;
      button.disabled = !enabled;
      button.addEventListener("click", () => onSubmit(label));
      box.appendChild(button);
    }
    if (state.feedbackFailed) {
      const retry = el("p", "feedback-retry", t("feedback.retry"));
      retry.dataset.retry = "true";
      box.appendChild(retry);
    }
  }
  container.appendChild(box);
}
