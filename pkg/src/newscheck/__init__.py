"""Multilingual news checking.

A dual-model pipeline classifies a text as pro-Kremlin propaganda or not:
a character-n-gram document scorer votes over 520-token chunks, a
feature-based RBF SVM votes over the whole document, and a disagreement
arbitration rule reconciles them. A linear SVM trained on the same features
supplies the stance-indicator explanations, and glossary keyword hits are
reported with curated descriptions. Seven languages are supported natively;
others route through a pluggable translator.
"""

from .corpus import CorpusRecord, load_corpus, save_corpus
from .errors import (
    DataError,
    ExtractionError,
    FetchError,
    NewsCheckError,
    UnsupportedLanguageError,
)
from .features import (
    FeatureCatalog,
    FeatureVector,
    Glossary,
    GlossaryEntry,
    MatcherSpec,
    extract_features,
    load_catalog,
    load_glossary,
)
from .labels import LABEL_NONE, LABEL_PROPAGANDA, STANCE_PRO_KREMLIN, STANCE_PRO_WESTERN
from .langid import (
    SUPPORTED_LANGUAGES,
    LanguageProfile,
    build_profile,
    detect_language,
    is_supported,
    load_profile,
    load_profiles,
    save_profile,
)
from .metrics import (
    ConfusionCounts,
    LengthStats,
    auroc,
    confusion,
    cross_validate,
    length_stats,
    mcc,
    weighted_f1,
)
from .models import (
    KernelModel,
    LinearModel,
    NgramScorer,
    TrainConfig,
    coefficient_report,
    load_model,
    save_model,
    score_document,
    score_kernel,
    score_linear,
    train_kernel,
    train_linear,
    train_ngram_scorer,
)
from .pipeline import (
    CheckResult,
    Explanation,
    Translator,
    Verdict,
    arbitrate,
    build_explanation,
    check,
)
from .registry import Registry, packaged_data_root
from .synthesis import synth_corpus, synth_mixed_corpus
from .textprep import (
    Chunk,
    Document,
    Token,
    aggregate_chunk_verdicts,
    chunk,
    make_document,
    tokenize,
)

__version__ = "0.1.0"
