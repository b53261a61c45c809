#!/usr/bin/env python3
"""Corpus length statistics: the same quartile view used to compare training
material against what users actually paste in.

Long conventional news, short social-media posts, and a synthetic corpus in
between make the gap visible.
"""

import random

from newscheck import length_stats, synth_corpus
from newscheck.synthesis import MATERIAL

rng = random.Random(13)

conventional = []
for _ in range(60):
    picks = rng.choices(MATERIAL["en"]["fillers"] + MATERIAL["en"]["clean"], k=rng.randint(18, 30))
    conventional.append(" ".join(picks))

social = []
for _ in range(60):
    picks = rng.choices(MATERIAL["en"]["fillers"], k=rng.randint(1, 3))
    social.append(" ".join(picks))

synthetic = [r.text for r in synth_corpus("en", 60, seed=13)]


def row(name, corpus):
    s = length_stats(corpus)
    print(f"{name:<14} {s.count:>5} {s.mean:>8.1f} {s.min:>6.0f} {s.q1:>7.1f} "
          f"{s.median:>8.1f} {s.q3:>7.1f} {s.max:>6.0f}")


print(f"{'corpus':<14} {'n':>5} {'mean':>8} {'min':>6} {'q1':>7} {'median':>8} {'q3':>7} {'max':>6}")
print("-" * 66)
row("conventional", conventional)
row("synthetic", synthetic)
row("social-style", social)
print("\n(lengths are word tokens, punctuation excluded; quartiles linearly interpolated)")
