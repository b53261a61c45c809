import { afterEach, beforeEach, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { GLOSSARY_DE, GLOSSARY_RU, appShell, jsonResponse, makeResult } from "./helpers.js";

let fetchMock: ReturnType<typeof vi.fn>;
let app: App;
let checkResult = makeResult();

beforeEach(() => {
  appShell();
  checkResult = makeResult();
  fetchMock = vi.fn(async (input: RequestInfo | URL) => {
    const url = String(input);
    if (url.endsWith("/api/check")) {
      return jsonResponse(checkResult);
    }
    if (url.includes("/api/glossary?lang=ru")) {
      return jsonResponse({ language: "ru", entries: GLOSSARY_RU });
    }
    if (url.includes("/api/glossary?lang=de")) {
      return jsonResponse({ language: "de", entries: GLOSSARY_DE });
    }
    return jsonResponse({ error: "not_found", message: "no" }, 404);
  });
  vi.stubGlobal("fetch", fetchMock);
  app = new App(new ApiClient(""));
  app.mount();
});

afterEach(() => {
  vi.unstubAllGlobals();
});

async function runCheck(): Promise<void> {
  (document.getElementById("input-text") as HTMLTextAreaElement).value = "какой-то текст";
  await app.submitCheck();
}

it("opens a glossary popover with the explanation on keyword click", async () => {
  await runCheck();
  const chip = document.querySelector(".keyword-chip") as HTMLButtonElement;
  expect(chip).not.toBeNull();

  await app.handleKeywordClick("denazification");
  const popover = document.querySelector(".glossary-popover") as HTMLElement;
  expect(popover).not.toBeNull();
  expect(popover.dataset.entryId).toBe("denazification");
  expect(popover.textContent).toContain("War framing term.");
});

it("closes the popover when the same keyword is clicked again", async () => {
  await runCheck();
  await app.handleKeywordClick("denazification");
  expect(document.querySelector(".glossary-popover")).not.toBeNull();
  await app.handleKeywordClick("denazification");
  expect(document.querySelector(".glossary-popover")).toBeNull();
});

it("wires the chip's click event to the popover", async () => {
  await runCheck();
  (document.querySelector(".keyword-chip") as HTMLButtonElement).click();
  await vi.waitFor(() => {
    expect(document.querySelector(".glossary-popover")).not.toBeNull();
  });
});

it("serves repeat opens from the per-language cache", async () => {
  await runCheck();
  await app.handleKeywordClick("denazification");
  await app.handleKeywordClick("denazification"); // close
  await app.handleKeywordClick("denazification"); // reopen
  const glossaryCalls = fetchMock.mock.calls.filter(([u]) => String(u).includes("/api/glossary"));
  expect(glossaryCalls).toHaveLength(1);
});

it("refetches after a language switch instead of serving the stale cache", async () => {
  await runCheck();
  await app.handleKeywordClick("denazification");
  expect(document.querySelector(".glossary-popover")!.textContent).toContain("денацификация");

  checkResult = makeResult({ language: "de" });
  await runCheck();
  await app.handleKeywordClick("denazification");

  const glossaryCalls = fetchMock.mock.calls
    .map(([u]) => String(u))
    .filter((u) => u.includes("/api/glossary"));
  expect(glossaryCalls).toEqual([
    expect.stringContaining("lang=ru"),
    expect.stringContaining("lang=de"),
  ]);
  expect(document.querySelector(".glossary-popover")!.textContent).toContain("entnazifizierung");
});

it("keeps at most one popover open", async () => {
  checkResult = makeResult({
    explanation: {
      indicators: [],
      keywords: [
        { id: "denazification", count: 1 },
        { id: "biolabs", count: 1 },
      ],
    },
  });
  await runCheck();
  await app.handleKeywordClick("denazification");
  await app.handleKeywordClick("biolabs");
  const popovers = document.querySelectorAll(".glossary-popover");
  expect(popovers).toHaveLength(1);
  expect((popovers[0] as HTMLElement).dataset.entryId).toBe("biolabs");
});
