#!/usr/bin/env python3
"""Language identification walkthrough.

Loads the packaged trigram profiles, scores a handful of sentences, and
shows how the confidence behaves on clear, short, and unsupported inputs.
"""

from newscheck import detect_language, is_supported
from newscheck.langid import load_profiles
from newscheck.registry import packaged_data_root

profiles = load_profiles(packaged_data_root() / "profiles")
print(f"loaded {len(profiles)} profiles: {', '.join(p.code for p in profiles)}\n")

samples = [
    "Der Bundeskanzler sprach über die Energiepolitik der Bundesregierung.",
    "The committee postponed the decision on the harbour expansion.",
    "Уряд оголосив новий пакет економічних заходів у вівторок.",
    "Правительство объявило новый пакет экономических мер во вторник.",
    "Il consiglio comunale ha approvato il nuovo bilancio dei trasporti.",
    "Consiliul local a aprobat noul buget destinat transportului public.",
    "Le conseil municipal a approuvé le nouveau budget des transports.",
    "Esta frase está escrita en español, que la aplicación no soporta.",
    "这条新闻是用中文写的，系统需要翻译客户端才能处理它。",
    "ok",  # too short for confident identification
]

print(f"{'text':<58} {'tag':<4} {'conf':<6} supported")
print("-" * 80)
for text in samples:
    tag, confidence = detect_language(text, profiles)
    shown = text if len(text) <= 55 else text[:52] + "..."
    print(f"{shown:<58} {tag:<4} {confidence:<6.3f} {is_supported(tag)}")
