/** JSON API client. Mirrors the service contract exactly; the UI renders
 * nothing the API did not send. */

export type Label = "Propaganda" | "NoPropaganda";
export type Stance = "ProKremlin" | "ProWestern";

export interface Verdict {
  label: Label;
  probability: number;
  neural_label: Label;
  neural_prob: number;
  svm_label: Label;
  arbitration_applied: boolean;
  flipped: boolean;
}

export interface Indicator {
  feature: string;
  stance: Stance;
  weight: number;
  doc_value: number;
  contribution: number;
}

export interface KeywordHit {
  id: string;
  count: number;
}

export interface CheckResponse {
  language: string;
  language_confidence: number;
  supported: boolean;
  translated: boolean;
  verdict: Verdict;
  explanation: { indicators: Indicator[]; keywords: KeywordHit[] };
  request_id: string;
}

export interface GlossaryEntry {
  id: string;
  term: string;
  explanation: string;
}

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public language?: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  try {
    const body = await response.json();
    return new ApiError(body.error ?? "unknown", body.message ?? response.statusText, body.language);
  } catch {
    return new ApiError("unknown", response.statusText);
  }
}

export class ApiClient {
  private glossaryCache = new Map<string, GlossaryEntry[]>();
  private inflight: AbortController | null = null;

  constructor(private baseUrl: string = "") {}

  /** At most one check request is in flight; a new submit cancels the old. */
  async check(payload: { text?: string; url?: string }): Promise<CheckResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await fetch(this.baseUrl + "/api/check", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
        signal: controller.signal,
      });
      if (!response.ok) {
        throw await parseError(response);
      }
      return (await response.json()) as CheckResponse;
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }

  async submitFeedback(requestId: string, label: Label): Promise<void> {
    const response = await fetch(this.baseUrl + "/api/feedback", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ request_id: requestId, label }),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
  }

  /** Glossaries change only on deploy; cache per language tag. */
  async glossary(language: string): Promise<GlossaryEntry[]> {
    const cached = this.glossaryCache.get(language);
    if (cached) {
      return cached;
    }
    const response = await fetch(this.baseUrl + "/api/glossary?lang=" + encodeURIComponent(language));
    if (!response.ok) {
      throw await parseError(response);
    }
    const body = await response.json();
    const entries = body.entries as GlossaryEntry[];
    this.glossaryCache.set(language, entries);
    return entries;
  }
}
