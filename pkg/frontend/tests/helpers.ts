import { CheckResponse, GlossaryEntry } from "../src/api.js";

export function makeResult(overrides: Partial<CheckResponse> = {}): CheckResponse {
  return {
    language: "ru",
    language_confidence: 0.8,
    supported: true,
    translated: false,
    verdict: {
      label: "Propaganda",
      probability: 0.35,
      neural_label: "Propaganda",
      neural_prob: 0.8,
      svm_label: "NoPropaganda",
      arbitration_applied: true,
      flipped: false,
    },
    explanation: {
      indicators: [
        { feature: "negation", stance: "ProKremlin", weight: 1.2, doc_value: 0.1, contribution: 0.12 },
        { feature: "quote_mark", stance: "ProWestern", weight: -0.9, doc_value: 0.05, contribution: -0.045 },
      ],
      keywords: [{ id: "denazification", count: 2 }],
    },
    request_id: "req-0001",
    ...overrides,
  };
}

export const GLOSSARY_RU: GlossaryEntry[] = [
  { id: "denazification", term: "денацификация", explanation: "War framing term." },
  { id: "biolabs", term: "биолаборатории", explanation: "Conspiracy claim." },
];

export const GLOSSARY_DE: GlossaryEntry[] = [
  { id: "denazification", term: "entnazifizierung", explanation: "War framing term (German)." },
];

export function appShell(): void {
  document.body.innerHTML = `
    <textarea id="input-text"></textarea>
    <input id="input-url" type="url">
    <button id="check-button"></button>
    <span id="status"></span>
    <section id="verdict"></section>
    <section id="popover"></section>
    <section id="feedback"></section>
  `;
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
