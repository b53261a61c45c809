/** Application wiring: binds the input form, verdict panel, glossary
 * popover, and feedback controls to the API client. */

import { ApiClient, ApiError, GlossaryEntry, Label } from "./api.js";
import { t } from "./messages.js";
import {
  ViewState,
  failCheck,
  finishCheck,
  initialState,
  startCheck,
  toggleKeyword,
} from "./state.js";
import { renderError, renderFeedback, renderPopover, renderVerdict } from "./view.js";

export class App {
  state: ViewState = initialState();
  private glossaryEntries: GlossaryEntry[] | null = null;
  private glossaryLanguage: string | null = null;

  constructor(
    private api: ApiClient,
    private root: Document = document,
  ) {}

  mount(): void {
    // the static shell carries English fallbacks; the catalog owns them here
    const title = this.root.querySelector("h1");
    if (title) {
      title.textContent = t("app.title");
    }
    const tagline = this.root.querySelector(".tagline");
    if (tagline) {
      tagline.textContent = t("app.tagline");
    }
    const text = this.root.getElementById("input-text") as HTMLTextAreaElement | null;
    if (text) {
      text.placeholder = t("input.placeholder");
    }
    const url = this.root.getElementById("input-url") as HTMLInputElement | null;
    if (url) {
      url.placeholder = t("input.urlPlaceholder");
    }
    const button = this.root.getElementById("check-button") as HTMLButtonElement;
    button.textContent = t("input.checkButton");
    button.addEventListener("click", () => void this.submitCheck());
    this.renderAll();
  }

  private container(id: string): HTMLElement {
    const node = this.root.getElementById(id);
    if (!node) {
      throw new Error(`missing container #${id}`);
    }
    return node;
  }

  async submitCheck(): Promise<void> {
    const text = (this.root.getElementById("input-text") as HTMLTextAreaElement).value.trim();
    const url = (this.root.getElementById("input-url") as HTMLInputElement).value.trim();
    if (!text && !url) {
      return;
    }
    this.state = startCheck(this.state);
    this.renderAll();
    try {
      const result = await this.api.check(text ? { text } : { url });
      this.state = finishCheck(this.state, result);
      if (this.glossaryLanguage !== result.language) {
        this.glossaryEntries = null;  // language switch invalidates the popover data
        this.glossaryLanguage = null;
      }
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") {
        return; // replaced by a newer request
      }
      this.state = failCheck(
        this.state,
        error instanceof ApiError ? error : new ApiError("unknown", String(error)),
      );
    }
    this.renderAll();
  }

  async handleKeywordClick(keywordId: string): Promise<void> {
    this.state = toggleKeyword(this.state, keywordId);
    if (this.state.expandedKeyword && this.state.result) {
      const language = this.state.result.language;
      if (this.glossaryLanguage !== language || !this.glossaryEntries) {
        this.glossaryEntries = await this.api.glossary(language);
        this.glossaryLanguage = language;
      }
    }
    this.renderPopoverOnly();
  }

  async handleFeedback(label: Label): Promise<void> {
    const result = this.state.result;
    if (!result) {
      return;
    }
    this.state = { ...this.state, submittedLabel: label, feedbackFailed: false };
    try {
      await this.api.submitFeedback(result.request_id, label);
    } catch {
      this.state = { ...this.state, feedbackFailed: true };
    }
    renderFeedback(this.container("feedback"), this.state, (l) => void this.handleFeedback(l));
  }

  private renderPopoverOnly(): void {
    renderPopover(this.container("popover"), this.state, this.glossaryEntries);
  }

  renderAll(): void {
    const verdictBox = this.container("verdict");
    const status = this.container("status");
    status.textContent = this.state.pending ? t("input.pending") : "";
    if (this.state.error) {
      renderError(verdictBox, this.state.error);
    } else if (this.state.result) {
      renderVerdict(verdictBox, this.state.result, (id) => void this.handleKeywordClick(id));
    } else {
      verdictBox.replaceChildren();
    }
    this.renderPopoverOnly();
    renderFeedback(this.container("feedback"), this.state, (label) => void this.handleFeedback(label));
  }
}

export function boot(): void {
  const app = new App(new ApiClient(""));
  app.mount();
}

if (typeof window !== "undefined" && typeof document !== "undefined" && document.getElementById("check-button")) {
  boot();
}
