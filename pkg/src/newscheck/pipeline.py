"""Full news check: language routing, chunked document scoring, whole-document
SVM scoring, the disagreement-arbitration rule, and explanation assembly.

The document scorer and the kernel SVM each produce a verdict. When they
disagree, 0.45 is deducted from the document scorer's probability for its
predicted class; if that drops below 0.30 the prediction flips to the
opposite class. The linear model never votes — its coefficients select the
stance indicators shown to the user.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NewsCheckError, UnsupportedLanguageError
from .features import KEYWORD_PREFIX, FeatureVector, Glossary, extract_features, model_input
from .labels import STANCE_PRO_KREMLIN, STANCE_PRO_WESTERN, other_label
from .langid import detect_language, is_supported
from .models import LinearModel, score_document, score_kernel
from .textprep import aggregate_chunk_verdicts, make_document

PROBABILITY_DEDUCTION = 0.45
FLIP_THRESHOLD = 0.30

DEFAULT_TOP_K = 10


@dataclass(frozen=True)
class Verdict:
    label: str
    probability: float  # of the final label
    neural_label: str
    neural_prob: float
    svm_label: str
    arbitration_applied: bool
    flipped: bool

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "probability": self.probability,
            "neural_label": self.neural_label,
            "neural_prob": self.neural_prob,
            "svm_label": self.svm_label,
            "arbitration_applied": self.arbitration_applied,
            "flipped": self.flipped,
        }


@dataclass(frozen=True)
class Indicator:
    feature: str
    stance: str
    weight: float
    doc_value: float
    contribution: float  # weight * doc_value

    def as_dict(self) -> dict:
        return {
            "feature": self.feature,
            "stance": self.stance,
            "weight": self.weight,
            "doc_value": self.doc_value,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class Explanation:
    indicators: tuple[Indicator, ...]
    keywords: tuple[tuple[str, int], ...]  # (glossary id, hit count)

    def as_dict(self) -> dict:
        return {
            "indicators": [i.as_dict() for i in self.indicators],
            "keywords": [{"id": k, "count": c} for k, c in self.keywords],
        }


@dataclass(frozen=True)
class CheckResult:
    language: str
    supported: bool
    translated: bool
    verdict: Verdict
    explanation: Explanation
    confidence: float = 0.0  # language identification confidence

    def as_dict(self) -> dict:
        return {
            "language": self.language,
            "language_confidence": self.confidence,
            "supported": self.supported,
            "translated": self.translated,
            "verdict": self.verdict.as_dict(),
            "explanation": self.explanation.as_dict(),
        }


def arbitrate(neural: tuple[str, float], svm_label: str) -> Verdict:
    """Apply the dual-model correction rule.

    Agreement leaves the document scorer's verdict untouched. On
    disagreement, deduct 0.45 from its probability; a result at or above
    0.30 keeps the label with the reduced probability, below 0.30 the label
    flips and the probability complements. The flip test is expressed as
    prob < 0.75, which is the same inequality without the subtraction's
    rounding at the boundary.
    """
    neural_label, neural_prob = neural
    if not 0.0 <= neural_prob <= 1.0:
        raise ValueError(f"probability out of range: {neural_prob!r}")
    if svm_label == neural_label:
        return Verdict(
            label=neural_label,
            probability=neural_prob,
            neural_label=neural_label,
            neural_prob=neural_prob,
            svm_label=svm_label,
            arbitration_applied=False,
            flipped=False,
        )
    reduced = neural_prob - PROBABILITY_DEDUCTION
    if neural_prob < PROBABILITY_DEDUCTION + FLIP_THRESHOLD:  # reduced < 0.30
        label = other_label(neural_label)
        probability = min(1.0, 1.0 - max(reduced, 0.0))
        flipped = True
    else:
        label = neural_label
        probability = min(1.0, max(0.0, reduced))
        flipped = False
    return Verdict(
        label=label,
        probability=probability,
        neural_label=neural_label,
        neural_prob=neural_prob,
        svm_label=svm_label,
        arbitration_applied=True,
        flipped=flipped,
    )


def build_explanation(x: FeatureVector, model: LinearModel, glossary: Glossary, top_k: int = DEFAULT_TOP_K) -> Explanation:
    """Rank the document's active features by |weight * doc_value|.

    Only catalog features with a nonzero document value and a nonzero weight
    appear; keyword coordinates are reported separately as raw glossary hits.
    Ties in |contribution| break by feature name.
    """
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    candidates = []
    for name, weight in zip(model.feature_names, model.weights):
        if name.startswith(KEYWORD_PREFIX):
            continue
        if name not in x.values:
            raise ValueError(f"dimension mismatch: document vector lacks feature {name!r}")
        doc_value = x.values[name]
        if doc_value > 0.0 and weight != 0.0:
            candidates.append(
                Indicator(
                    feature=name,
                    stance=STANCE_PRO_KREMLIN if weight > 0 else STANCE_PRO_WESTERN,
                    weight=float(weight),
                    doc_value=doc_value,
                    contribution=float(weight) * doc_value,
                )
            )
    candidates.sort(key=lambda ind: (-abs(ind.contribution), ind.feature))
    keywords = sorted(x.keyword_hits.items(), key=lambda kv: (-kv[1], kv[0]))
    return Explanation(indicators=tuple(candidates[:top_k]), keywords=tuple(keywords))


class Translator:
    """Interface for the unsupported-language fallback. The default build is
    unconfigured and refuses; deployments inject a real client."""

    def translate(self, text: str, target: str) -> str:
        raise NewsCheckError("translator not configured")


def check(text: str, registry, translator: Translator | None = None, top_k: int = DEFAULT_TOP_K) -> CheckResult:
    """Run the whole pipeline on one text.

    Unsupported languages are translated to English when a translator is
    configured and rejected otherwise. The document scorer sees the text in
    chunks of up to 520 tokens; both SVM inputs are extracted from the whole
    document at once.
    """
    if not text or not text.strip():
        raise NewsCheckError("empty input")
    language, confidence = detect_language(text, registry.profiles)
    supported = is_supported(language)
    translated = False
    effective_text = text
    effective_language = language
    if not supported:
        if translator is None:
            raise UnsupportedLanguageError(
                f"language not supported, no translator configured (detected {language!r})",
                language=language,
            )
        effective_text = translator.translate(text, "en")
        effective_language = "en"
        translated = True

    bundle = registry.bundle(effective_language)
    doc = make_document(effective_text, effective_language)
    score = bundle.scorer.score if callable(getattr(bundle.scorer, "score", None)) else (
        lambda chunk_text: score_document(bundle.scorer, chunk_text)
    )
    chunk_results = [score(doc.chunk_text(c)) for c in doc.chunks]
    neural = aggregate_chunk_verdicts(chunk_results)

    x = extract_features(doc, bundle.catalog, bundle.glossary)
    svm_label, _ = score_kernel(bundle.kernel, model_input(x, list(bundle.linear.feature_names)))
    verdict = arbitrate(neural, svm_label)
    explanation = build_explanation(x, bundle.linear, bundle.glossary, top_k)
    return CheckResult(
        language=language,
        supported=supported,
        translated=translated,
        verdict=verdict,
        explanation=explanation,
        confidence=confidence,
    )
