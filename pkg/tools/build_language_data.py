#!/usr/bin/env python3
"""Regenerate the packaged language data.

Feature catalogs and glossaries are defined here and written as JSON;
trigram profiles are rebuilt from the committed seed texts. Run from the
repo root after editing lexicons, glossary entries, or seeds:

    python tools/build_language_data.py
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from newscheck.features import FeatureCatalog, Glossary, GlossaryEntry, MatcherSpec, save_catalog, save_glossary
from newscheck.langid import build_profile, save_profile

DATA = REPO / "src" / "newscheck" / "data"

QUOTE_CHARS = ['"', "«", "»", "„", "“", "”", "‹", "›"]

LEXICONS: dict[str, dict[str, list[str]]] = {
    "en": {
        "negation": ["not", "no", "never", "nothing", "nobody", "nowhere", "neither", "nor", "cannot", "none"],
        "clause_purpose": ["so", "lest"],
        "clause_reason": ["because", "since"],
        "clause_time": ["when", "while", "until", "before", "after"],
        "reporting_word": ["said", "says", "say", "claimed", "claims", "reported", "reports", "stated",
                           "states", "announced", "declared", "told", "added", "noted"],
        "discourse_marker": ["however", "moreover", "therefore", "furthermore", "nevertheless", "indeed",
                             "meanwhile", "thus"],
    },
    "de": {
        "negation": ["nicht", "kein", "keine", "keinen", "keiner", "keinem", "nie", "niemals", "nichts",
                     "niemand", "niemanden", "niemandem"],
        "clause_purpose": ["damit", "um"],
        "clause_reason": ["weil", "denn"],
        "clause_time": ["als", "wenn", "während", "bevor", "nachdem", "bis", "sobald"],
        "reporting_word": ["sagte", "sagten", "sagt", "erklärte", "erklärten", "erklärt", "berichtete",
                           "berichteten", "berichtet", "teilte", "teilten", "kündigte", "betonte",
                           "betonten", "meinte", "meinten", "äußerte"],
        "discourse_marker": ["jedoch", "allerdings", "außerdem", "dennoch", "zudem", "daher", "übrigens",
                             "gleichwohl", "unterdessen"],
    },
    "fr": {
        "negation": ["ne", "pas", "jamais", "rien", "personne", "aucun", "aucune", "ni", "non"],
        "clause_purpose": ["afin"],
        "clause_reason": ["car", "parce", "puisque"],
        "clause_time": ["quand", "lorsque", "pendant", "avant", "après", "dès"],
        "reporting_word": ["déclaré", "déclara", "déclare", "affirmé", "affirme", "annoncé", "annonce",
                           "rapporté", "rapporte", "dit", "précisé", "précise", "ajouté", "ajoute",
                           "souligné", "souligne"],
        "discourse_marker": ["cependant", "pourtant", "toutefois", "néanmoins", "ainsi", "donc", "enfin"],
    },
    "it": {
        "negation": ["non", "mai", "niente", "nessuno", "nulla", "né"],
        "clause_purpose": ["affinché", "cosicché"],
        "clause_reason": ["perché", "poiché", "siccome"],
        "clause_time": ["quando", "mentre", "finché", "prima", "dopo", "appena"],
        "reporting_word": ["detto", "dice", "dicono", "dichiarato", "dichiara", "afferma", "affermato",
                           "affermano", "annunciato", "annuncia", "riferito", "riferisce", "sostiene",
                           "sostengono", "sottolineato", "sottolinea", "aggiunto", "aggiunge"],
        "discourse_marker": ["tuttavia", "infatti", "quindi", "inoltre", "comunque", "dunque", "peraltro",
                             "intanto"],
    },
    "ro": {
        "negation": ["nu", "niciodată", "nimic", "nimeni", "nici", "niciun", "nicio"],
        "clause_purpose": ["pentru"],
        "clause_reason": ["deoarece", "fiindcă", "căci"],
        "clause_time": ["când", "până", "înainte", "după", "îndată"],
        "reporting_word": ["declarat", "declară", "afirmat", "afirmă", "anunțat", "anunță", "spus",
                           "spune", "adăugat", "adaugă", "subliniat", "subliniază", "precizat",
                           "precizează"],
        "discourse_marker": ["totuși", "așadar", "deci", "însă"],
    },
    "ru": {
        "negation": ["не", "нет", "никогда", "ничего", "никто", "никого", "никому", "ни", "нельзя",
                     "никакой", "никакое", "никакая"],
        "clause_purpose": ["чтобы", "дабы"],
        "clause_reason": ["потому", "поскольку", "ибо", "ведь"],
        "clause_time": ["когда", "пока", "прежде", "после", "едва"],
        "reporting_word": ["заявил", "заявила", "заявило", "заявили", "сказал", "сказала", "сказали",
                           "сообщил", "сообщила", "сообщили", "отметил", "отметила", "подчеркнул",
                           "подчеркнули", "добавил", "добавила"],
        "discourse_marker": ["однако", "впрочем", "кстати", "итак", "конечно", "наконец"],
    },
    "uk": {
        "negation": ["не", "ні", "ніколи", "нічого", "ніхто", "нікого", "нікому", "немає", "жоден",
                     "жодна", "жодне"],
        "clause_purpose": ["щоб", "аби"],
        "clause_reason": ["бо", "оскільки", "адже"],
        "clause_time": ["коли", "поки", "перш", "після", "щойно"],
        "reporting_word": ["заявив", "заявила", "заявило", "заявили", "сказав", "сказала", "сказали",
                           "повідомив", "повідомила", "повідомили", "зазначив", "зазначила",
                           "наголосив", "наголосили", "додав", "додала"],
        "discourse_marker": ["однак", "проте", "втім", "отже", "звісно", "нарешті"],
    },
}

# One explanation per glossary id, shared across languages; terms are localized.
GLOSSARY_EXPLANATIONS = {
    "denazification": "Frames the invaded country as run by Nazis to cast the war as moral cleansing.",
    "biolabs": "Conspiracy claim about secret Western bioweapon laboratories used to justify aggression.",
    "russophobia": "Recasts criticism of state policy as ethnic hatred of Russians.",
    "puppet_government": "Denies the elected government's legitimacy by presenting it as foreign-controlled.",
    "collective_west": "Paints Western countries as a single hostile bloc plotting against Russia.",
    "anglo_saxons": "Attributes world events to scheming by the US and UK, erasing local agency.",
    "color_revolution": "Dismisses grassroots protest movements as staged foreign coups.",
    "special_military_operation": "Official euphemism that downplays a full-scale war.",
    "deep_state": "Alleges hidden unelected forces control Western governments.",
    "traditional_values": "Positions Russia as the last defender of morality against a decadent West.",
}

GLOSSARY_TERMS: dict[str, dict[str, str]] = {
    "en": {
        "denazification": "denazification",
        "biolabs": "biolabs",
        "russophobia": "russophobia",
        "puppet_government": "puppet government",
        "collective_west": "collective west",
        "anglo_saxons": "anglo-saxons",
        "color_revolution": "color revolution",
        "special_military_operation": "special military operation",
        "deep_state": "deep state",
        "traditional_values": "traditional values",
    },
    "de": {
        "denazification": "entnazifizierung",
        "biolabs": "biolabore",
        "russophobia": "russophobie",
        "puppet_government": "marionettenregierung",
        "anglo_saxons": "angelsachsen",
        "color_revolution": "farbrevolution",
        "special_military_operation": "spezialoperation",
        "deep_state": "tiefer staat",
        "traditional_values": "traditionelle werte",
    },
    "fr": {
        "denazification": "dénazification",
        "biolabs": "biolaboratoires",
        "russophobia": "russophobie",
        "puppet_government": "gouvernement fantoche",
        "collective_west": "occident collectif",
        "anglo_saxons": "anglo-saxons",
        "color_revolution": "révolution de couleur",
        "special_military_operation": "opération militaire spéciale",
        "deep_state": "état profond",
        "traditional_values": "valeurs traditionnelles",
    },
    "it": {
        "denazification": "denazificazione",
        "biolabs": "biolaboratori",
        "russophobia": "russofobia",
        "puppet_government": "governo fantoccio",
        "collective_west": "occidente collettivo",
        "anglo_saxons": "anglosassoni",
        "color_revolution": "rivoluzione colorata",
        "special_military_operation": "operazione militare speciale",
        "deep_state": "stato profondo",
        "traditional_values": "valori tradizionali",
    },
    "ro": {
        "denazification": "denazificare",
        "biolabs": "biolaboratoare",
        "russophobia": "rusofobie",
        "puppet_government": "guvernul marionetă",
        "collective_west": "occidentul colectiv",
        "anglo_saxons": "anglo-saxonii",
        "color_revolution": "revoluție colorată",
        "special_military_operation": "operațiunea militară specială",
        "deep_state": "stat paralel",
        "traditional_values": "valori tradiționale",
    },
    "ru": {
        "denazification": "денацификация",
        "biolabs": "биолаборатории",
        "russophobia": "русофобия",
        "puppet_government": "марионеточное правительство",
        "collective_west": "коллективный запад",
        "anglo_saxons": "англосаксы",
        "color_revolution": "цветная революция",
        "special_military_operation": "специальная военная операция",
        "deep_state": "глубинное государство",
        "traditional_values": "традиционные ценности",
    },
    "uk": {
        "denazification": "денацифікація",
        "biolabs": "біолабораторії",
        "russophobia": "русофобія",
        "puppet_government": "маріонетковий уряд",
        "collective_west": "колективний захід",
        "anglo_saxons": "англосакси",
        "color_revolution": "кольорова революція",
        "special_military_operation": "спеціальна воєнна операція",
        "deep_state": "глибинна держава",
        "traditional_values": "традиційні цінності",
    },
}


def build_catalogs() -> None:
    out = DATA / "catalogs"
    out.mkdir(parents=True, exist_ok=True)
    for code, lexicons in sorted(LEXICONS.items()):
        features = {
            name: MatcherSpec(kind="lexicon", entries=tuple(entries), match_mode="exact_token")
            for name, entries in lexicons.items()
        }
        features["quote_mark"] = MatcherSpec(kind="char_class", entries=tuple(QUOTE_CHARS))
        catalog = FeatureCatalog(language=code, features=features)
        save_catalog(catalog, out / f"{code}.json")
        print(f"catalog {code}: {len(features)} features")


def build_glossaries() -> None:
    out = DATA / "glossaries"
    out.mkdir(parents=True, exist_ok=True)
    for code, terms in sorted(GLOSSARY_TERMS.items()):
        entries = tuple(
            GlossaryEntry(id=key, term=term, explanation=GLOSSARY_EXPLANATIONS[key])
            for key, term in terms.items()
        )
        save_glossary(Glossary(language=code, entries=entries), out / f"{code}.json")
        print(f"glossary {code}: {len(entries)} entries")


def build_profiles() -> None:
    out = DATA / "profiles"
    out.mkdir(parents=True, exist_ok=True)
    for seed_file in sorted((DATA / "seeds").glob("*.txt")):
        code = seed_file.stem
        corpus = [line for line in seed_file.read_text(encoding="utf-8").splitlines() if line.strip()]
        profile = build_profile(corpus, code)
        save_profile(profile, out / f"{code}.profile")
        print(f"profile {code}: {len(profile.trigram_log_probs)} trigrams")


if __name__ == "__main__":
    build_catalogs()
    build_glossaries()
    build_profiles()
