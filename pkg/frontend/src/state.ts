/** View state: one pending check at a time, feedback only after a result,
 * at most one glossary popover open. */

import { ApiError, CheckResponse, Label } from "./api.js";

export interface ViewState {
  inputText: string;
  inputUrl: string;
  pending: boolean;
  result: CheckResponse | null;
  error: ApiError | null;
  expandedKeyword: string | null;
  submittedLabel: Label | null;
  feedbackFailed: boolean;
}

export function initialState(): ViewState {
  return {
    inputText: "",
    inputUrl: "",
    pending: false,
    result: null,
    error: null,
    expandedKeyword: null,
    submittedLabel: null,
    feedbackFailed: false,
  };
}

export function startCheck(state: ViewState): ViewState {
  return { ...state, pending: true, error: null, expandedKeyword: null, submittedLabel: null, feedbackFailed: false };
}

export function finishCheck(state: ViewState, result: CheckResponse): ViewState {
  return { ...state, pending: false, result, error: null };
}

export function failCheck(state: ViewState, error: ApiError): ViewState {
  return { ...state, pending: false, result: null, error };
}

export function toggleKeyword(state: ViewState, keywordId: string): ViewState {
  return { ...state, expandedKeyword: state.expandedKeyword === keywordId ? null : keywordId };
}

export function feedbackAllowed(state: ViewState): boolean {
  return state.result !== null && !state.pending;
}
