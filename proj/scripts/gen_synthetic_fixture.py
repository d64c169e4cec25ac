#!/usr/bin/env python3
"""Regenerates tests/fixtures/synthetic_200.vec.

40 pseudo-word families x 5 suffixed forms. Family members share a random
base direction plus small per-form noise, so within-family cosines are high
and cross-family cosines hover near zero. Fixed seed; the checked-in file
is the reference output.
"""

import math
import random

SEED = 20240808
DIM = 16
SUFFIXES = ["", "a", "en", "os", "ing"]
CONSONANTS = "bdfgklmnprstvz"
VOWELS = "aeiou"


def normalize(v):
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def main() -> None:
    rng = random.Random(SEED)
    bases = set()
    while len(bases) < 40:
        word = (rng.choice(CONSONANTS) + rng.choice(VOWELS) +
                rng.choice(CONSONANTS) + rng.choice(CONSONANTS))
        bases.add(word)

    rows = []
    for base in sorted(bases):
        direction = normalize([rng.gauss(0.0, 1.0) for _ in range(DIM)])
        for suffix in SUFFIXES:
            noise = [rng.gauss(0.0, 0.05) for _ in range(DIM)]
            vec = normalize([d + n for d, n in zip(direction, noise)])
            rows.append((base + suffix, vec))

    print(f"{len(rows)} {DIM}")
    for form, vec in rows:
        print(form + " " + " ".join(f"{x:.4f}" for x in vec))


if __name__ == "__main__":
    main()
