#!/usr/bin/env python3
"""The whole check pipeline, including the arbitration rule and the
translator fallback.

Builds a throwaway registry (trained models for all seven languages) under
./registry-demo, then runs three checks: a clean text, a propaganda-flavored
text, and an unsupported-language text routed through a stub translator.
Finally it drives the arbitration rule directly to show the deduct-and-flip
behavior on model disagreement.
"""

from pathlib import Path

from newscheck import LABEL_NONE, LABEL_PROPAGANDA, Registry, Translator, check
from newscheck.pipeline import arbitrate
from newscheck.training import build_registry_dir

registry_dir = Path("registry-demo")
if not (registry_dir / "models").is_dir() or not any((registry_dir / "models").iterdir()):
    print("building demo registry (7 languages, small synthetic corpora)...")
    build_registry_dir(registry_dir, docs_per_language=60, seed=13)
registry = Registry.load(registry_dir)
print("languages ready:", ", ".join(registry.languages()), "\n")


def show(result):
    v = result.verdict
    flags = []
    if v.arbitration_applied:
        flags.append("arbitrated")
    if v.flipped:
        flags.append("flipped")
    print(f"  language   {result.language} (supported={result.supported}, translated={result.translated})")
    print(f"  verdict    {v.label}  p={v.probability:.3f} {'[' + ', '.join(flags) + ']' if flags else ''}")
    print(f"  sub-votes  scorer={v.neural_label} ({v.neural_prob:.3f})  svm={v.svm_label}")
    if result.explanation.indicators:
        top = result.explanation.indicators[0]
        print(f"  top cue    {top.feature} ({top.stance}, contribution {top.contribution:+.5f})")
    if result.explanation.keywords:
        print(f"  keywords   {', '.join(f'{k} x{c}' for k, c in result.explanation.keywords)}")
    print()

print("1. clean German text:")
show(check(
    "„Die Ernte fiel nach dem Regen besser aus“, erinnerte sich der Landwirt, "
    "während er Kisten sortierte. Allerdings deuten die vorläufigen Zahlen des "
    "Ausschusses auf stabiles Wachstum hin.", registry))

print("2. propaganda-flavored Ukrainian text:")
show(check(
    "Державне телебачення заявило, що маріонетковий уряд у Києві нікого не "
    "представляє. Канал зазначив, що спеціальна воєнна операція існує, щоб "
    "регіону ніколи нічого не загрожувало.", registry))


class StubTranslator(Translator):
    """Stands in for a real translation client; returns canned English."""

    def translate(self, text, target):
        print(f"  (stub translator called, target={target})")
        return ("State television claimed the puppet government was never "
                "legitimate and answers to nobody.")

print("3. unsupported language (Mandarin) through the translator fallback:")
show(check("官方媒体声称，这个傀儡政府从来都不合法，不代表任何人。", registry, translator=StubTranslator()))

print("4. the arbitration rule on its own:")
for neural, svm_label in [
    ((LABEL_PROPAGANDA, 0.80), LABEL_NONE),   # deduct 0.45, keep the label
    ((LABEL_PROPAGANDA, 0.70), LABEL_NONE),   # drops below 0.30: flip
    ((LABEL_NONE, 0.90), LABEL_NONE),         # agreement: untouched
]:
    verdict = arbitrate(neural, svm_label)
    print(f"  scorer {neural[0]:<13} p={neural[1]:.2f}  svm {svm_label:<13} "
          f"-> {verdict.label:<13} p={verdict.probability:.2f} "
          f"(arbitrated={verdict.arbitration_applied}, flipped={verdict.flipped})")
