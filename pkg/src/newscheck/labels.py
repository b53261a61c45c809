"""Verdict labels and stance names used across modules.

The positive class is Propaganda everywhere: positive decision scores and
positive linear weights point at the pro-Kremlin side.
"""

LABEL_PROPAGANDA = "Propaganda"
LABEL_NONE = "NoPropaganda"

STANCE_PRO_KREMLIN = "ProKremlin"
STANCE_PRO_WESTERN = "ProWestern"

# Labels as they appear in corpus files.
CORPUS_LABEL_PROPAGANDA = "propaganda"
CORPUS_LABEL_NONE = "none"

_TO_SIGN = {LABEL_PROPAGANDA: 1, LABEL_NONE: -1}


def label_sign(label: str) -> int:
    """Map a verdict label to the +1/-1 target the trainers use."""
    try:
        return _TO_SIGN[label]
    except KeyError:
        raise ValueError(f"unknown label: {label!r}") from None


def sign_label(value: float) -> str:
    """Positive decision values are Propaganda; ties fall to NoPropaganda."""
    return LABEL_PROPAGANDA if value > 0 else LABEL_NONE


def other_label(label: str) -> str:
    label_sign(label)
    return LABEL_NONE if label == LABEL_PROPAGANDA else LABEL_PROPAGANDA
