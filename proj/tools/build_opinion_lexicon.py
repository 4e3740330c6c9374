#!/usr/bin/env python3
# Copyright 2026 The xpsearch Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/lexicon/opinion.tsv.

Input is vader_lexicon.txt from the vaderSentiment package (MIT licensed).
Single words with |valence| >= 1.5 are kept, inflected forms whose base is
also present are dropped, and valences are bucketed onto {-1, -0.5, 0.5, 1}.
The hospitality overlay in data/lexicon/opinion_overlay.tsv is applied last.

  python3 tools/build_opinion_lexicon.py vader_lexicon.txt > data/lexicon/opinion.tsv
"""

import os
import re
import sys

MIN_VALENCE = 1.5
STRONG_VALENCE = 2.5
SUFFIXES = ("s", "es", "ed", "d", "ing")

# Function words handled as negators or intensifiers, plus "like", which is
# mostly a preposition in review text.
EXCLUDED = {"no", "not", "never", "without", "very", "extremely", "really",
            "like", "likes", "liked"}


def main(argv):
    if len(argv) != 2:
        sys.stderr.write("usage: build_opinion_lexicon.py VADER_LEXICON\n")
        return 2
    valence = {}
    with open(argv[1], encoding="utf-8") as f:
        for line in f:
            fields = line.rstrip("\n").split("\t")
            word = fields[0]
            if not re.fullmatch(r"[a-z][a-z'-]*[a-z]", word):
                continue
            valence[word] = float(fields[1])

    def inflected(word):
        return any(word.endswith(s) and word[: -len(s)] in valence
                   for s in SUFFIXES)

    lexicon = {}
    for word, v in valence.items():
        if abs(v) < MIN_VALENCE or word in EXCLUDED or inflected(word):
            continue
        magnitude = 1.0 if abs(v) >= STRONG_VALENCE else 0.5
        lexicon[word] = magnitude if v > 0 else -magnitude

    overlay = os.path.join(os.path.dirname(__file__), "..", "data", "lexicon",
                           "opinion_overlay.tsv")
    with open(overlay, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, value = line.split("\t")
            lexicon[word] = float(value)

    out = sys.stdout
    out.write("# Derived from the VADER sentiment lexicon (C.J. Hutto, MIT "
              "license) by tools/build_opinion_lexicon.py.\n")
    for word in sorted(lexicon):
        out.write("%s\t%g\n" % (word, lexicon[word]))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
