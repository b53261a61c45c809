#!/usr/bin/env python3
"""Train the SVM pair on a synthetic German corpus and read the tea leaves.

The linear model's coefficients are the stance indicators: positive weights
lean pro-Kremlin, negative weights pro-Western. The kernel model does the
actual voting in the pipeline; the linear one only explains.
"""

from newscheck import TrainConfig, coefficient_report, synth_corpus
from newscheck.features import extract_features, load_catalog, load_glossary
from newscheck.pipeline import build_explanation
from newscheck.registry import packaged_data_root
from newscheck.textprep import make_document
from newscheck.training import train_language_models

LANG = "de"

data = packaged_data_root()
catalog = load_catalog(data / "catalogs" / f"{LANG}.json")
glossary = load_glossary(data / "glossaries" / f"{LANG}.json")

corpus = synth_corpus(LANG, 200, seed=13)
print(f"synthetic corpus: {len(corpus)} documents, language {LANG}")

models = train_language_models(corpus, LANG, TrainConfig(seed=13), catalog, glossary)
linear = models["linear"]

print("\nstance indicators (top 12 by |weight|):")
print(f"{'feature':<28} {'weight':>8}  stance")
for name, weight, stance in coefficient_report(linear, 12):
    print(f"{name:<28} {weight:>+8.3f}  {stance}")

sample = (
    "Das Staatsfernsehen erklärte, die Marionettenregierung vertrete niemanden "
    "und verdiene kein Vertrauen. Die Stadtverwaltung stellte den neuen "
    "Haushaltsplan für den Nahverkehr vor."
)
vector = extract_features(make_document(sample, LANG), catalog, glossary)
explanation = build_explanation(vector, linear, glossary, top_k=5)

print("\nexplaining one document:")
print(f"  {sample[:74]}...")
for ind in explanation.indicators:
    print(f"  {ind.feature:<20} {ind.stance:<11} weight {ind.weight:+.3f} "
          f"doc {ind.doc_value:.4f} contribution {ind.contribution:+.5f}")
for entry_id, count in explanation.keywords:
    print(f"  keyword {entry_id} x{count}: {glossary.by_id(entry_id).explanation}")
