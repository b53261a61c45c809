/** Message catalog. Every user-visible string goes through t(), so locales
 * for the seven supported languages can be added as plain data. */

export type MessageKey =
  | "app.title"
  | "app.tagline"
  | "input.placeholder"
  | "input.urlPlaceholder"
  | "input.checkButton"
  | "input.pending"
  | "verdict.propaganda"
  | "verdict.noPropaganda"
  | "verdict.arbitrationBadge"
  | "verdict.translatedBadge"
  | "verdict.languageLine"
  | "indicators.proKremlin"
  | "indicators.proWestern"
  | "indicators.none"
  | "keywords.heading"
  | "feedback.question"
  | "feedback.propaganda"
  | "feedback.noPropaganda"
  | "feedback.thanks"
  | "feedback.retry"
  | "error.unsupportedLanguage"
  | "error.generic";

type Catalog = Record<MessageKey, string>;

const EN: Catalog = {
  "app.title": "Check the news",
  "app.tagline": "Paste an article or a link and see how it reads.",
  "input.placeholder": "Paste the news text here…",
  "input.urlPlaceholder": "…or paste an article URL",
  "input.checkButton": "Check",
  "input.pending": "Analyzing…",
  "verdict.propaganda": "Propaganda",
  "verdict.noPropaganda": "No propaganda",
  "verdict.arbitrationBadge": "models disagreed",
  "verdict.translatedBadge": "checked via translation",
  "verdict.languageLine": "Detected language: {language}",
  "indicators.proKremlin": "Leaning pro-Kremlin",
  "indicators.proWestern": "Leaning pro-Western",
  "indicators.none": "no notable linguistic markers",
  "keywords.heading": "Glossary keywords",
  "feedback.question": "What do you think this text is?",
  "feedback.propaganda": "Propaganda",
  "feedback.noPropaganda": "Not propaganda",
  "feedback.thanks": "Thanks, your label was recorded.",
  "feedback.retry": "Sending failed — tap to retry.",
  "error.unsupportedLanguage":
    "The detected language ({language}) is not supported and no translator is configured.",
  "error.generic": "The check failed: {message}",
};

const CATALOGS: Record<string, Catalog> = { en: EN };

let activeLocale = "en";

export function setLocale(locale: string): void {
  if (CATALOGS[locale]) {
    activeLocale = locale;
  }
}

export function t(key: MessageKey, params: Record<string, string> = {}): string {
  let text = (CATALOGS[activeLocale] ?? EN)[key] ?? key;
  for (const [name, value] of Object.entries(params)) {
    text = text.replaceAll("{" + name + "}", value);
  }
  return text;
}
