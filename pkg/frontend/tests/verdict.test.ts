import { beforeEach, describe, expect, it } from "vitest";

import { ApiError } from "../src/api.js";
import { formatPercent, renderError, renderVerdict } from "../src/view.js";
import { makeResult } from "./helpers.js";

let container: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<section id="verdict"></section>';
  container = document.getElementById("verdict")!;
});

describe("verdict rendering across the three arbitration cases", () => {
  it("shows the reduced probability and the disagreement badge when arbitrated", () => {
    const result = makeResult(); // Propaganda 0.35, arbitration applied, not flipped
    renderVerdict(container, result, () => {});
    expect(container.querySelector("h2")!.textContent).toBe("Propaganda — 35.0%");
    expect(container.querySelector(".badge.arbitration")!.textContent).toBe("models disagreed");
  });

  it("shows the flipped verdict with its complemented probability", () => {
    const result = makeResult({
      verdict: {
        label: "NoPropaganda",
        probability: 0.75,
        neural_label: "Propaganda",
        neural_prob: 0.7,
        svm_label: "NoPropaganda",
        arbitration_applied: true,
        flipped: true,
      },
    });
    renderVerdict(container, result, () => {});
    expect(container.querySelector("h2")!.textContent).toBe("No propaganda — 75.0%");
    expect(container.querySelector(".badge.arbitration")).not.toBeNull();
  });

  it("shows the untouched verdict without a badge when the models agree", () => {
    const result = makeResult({
      verdict: {
        label: "NoPropaganda",
        probability: 0.9,
        neural_label: "NoPropaganda",
        neural_prob: 0.9,
        svm_label: "NoPropaganda",
        arbitration_applied: false,
        flipped: false,
      },
    });
    renderVerdict(container, result, () => {});
    expect(container.querySelector("h2")!.textContent).toBe("No propaganda — 90.0%");
    expect(container.querySelector(".badge.arbitration")).toBeNull();
  });
});

describe("indicator rendering", () => {
  it("renders only API-provided indicators, grouped by stance", () => {
    renderVerdict(container, makeResult(), () => {});
    const kremlin = [...container.querySelectorAll(".pro-kremlin .indicator")].map((n) => n.textContent);
    const western = [...container.querySelectorAll(".pro-western .indicator")].map((n) => n.textContent);
    expect(kremlin).toEqual(["negation"]);
    expect(western).toEqual(["quote_mark"]);
    const all = [...container.querySelectorAll(".indicator")].map((n) => n.textContent);
    expect(all.sort()).toEqual(["negation", "quote_mark"]);
  });

  it("shows the placeholder when there are no indicators", () => {
    const result = makeResult({
      explanation: { indicators: [], keywords: [] },
    });
    renderVerdict(container, result, () => {});
    expect(container.querySelector(".no-indicators")!.textContent).toBe(
      "no notable linguistic markers",
    );
    expect(container.querySelectorAll(".indicator")).toHaveLength(0);
  });

  it("renders keyword chips with counts", () => {
    renderVerdict(container, makeResult(), () => {});
    const chip = container.querySelector(".keyword-chip")!;
    expect(chip.textContent).toBe("denazification ×2");
  });
});

describe("error rendering", () => {
  it("names the detected language for unsupported-language errors", () => {
    renderError(container, new ApiError("unsupported_language", "nope", "zh"));
    const box = container.querySelector(".error-box")!;
    expect(box.textContent).toContain("(zh)");
    expect((box as HTMLElement).dataset.errorCode).toBe("unsupported_language");
  });

  it("passes through the machine-readable reason for other errors", () => {
    renderError(container, new ApiError("fetch_failed", "fetch failed: timeout"));
    expect(container.querySelector(".error-box")!.textContent).toContain("fetch failed: timeout");
  });
});

describe("probability formatting", () => {
  it("rounds half-even to one decimal", () => {
    expect(formatPercent(0.35)).toBe("35.0%");
    expect(formatPercent(0.0625)).toBe("6.2%");   // 6.25 ties to even
    expect(formatPercent(0.1875)).toBe("18.8%");  // 18.75 ties to even
    expect(formatPercent(0.12345)).toBe("12.3%");
    expect(formatPercent(1.0)).toBe("100.0%");
    expect(formatPercent(0.0)).toBe("0.0%");
  });
});
