#!/usr/bin/env python3
# Copyright 2026 The Keyforge Authors.
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

"""Builds data/lexicon.tsv and data/tag_rules.tsv from the Brill tagger files.

The Brill lexicon and contextual rules are distributed (MIT licence) inside the
TextBlob wheel as textblob/en/en-lexicon.txt and textblob/en/en-context.txt.

  python3 build_lexicon.py <textblob/en dir> <output data dir>
"""

import os
import sys

PENN_TAGS = {
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",
    "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP",
    "WP$", "WRB", ".", ",", ":", "(", ")", "``", "''", "#", "$",
}

TAG_ALIASES = {"-LRB-": "(", "-RRB-": ")", '"': "``", "STAART": "<S>"}

# Domain vocabulary missing from the Brill lexicon.
ADDITIONS = {
    "keyword": "NN", "keywords": "NNS", "keyphrase": "NN", "keyphrases": "NNS",
    "lemmatization": "NN", "lemmatisation": "NN", "tokenization": "NN",
    "tokenisation": "NN", "ontology": "NN", "ontologies": "NNS",
    "thesauri": "NNS", "gazetteer": "NN", "gazetteers": "NNS",
    "dataset": "NN", "datasets": "NNS", "embedding": "NN", "embeddings": "NNS",
    "hyperparameter": "NN", "hyperparameters": "NNS", "classifier": "NN",
    "preprocessing": "NN", "metadata": "NNS", "bigram": "NN", "bigrams": "NNS",
    "unigram": "NN", "unigrams": "NNS", "trigram": "NN", "trigrams": "NNS",
    "corpora": "NNS", "annotator": "NN", "annotators": "NNS",
    "baselines": "NNS", "algorithm": "NN", "algorithms": "NNS",
    "clustering": "NN", "database": "NN", "databases": "NNS",
    "workflow": "NN", "workflows": "NNS", "middleware": "NN",
    "framework": "NN", "frameworks": "NNS", "website": "NN", "websites": "NNS",
    "online": "JJ", "multimedia": "NN", "bandwidth": "NN", "smartphone": "NN",
    "smartphones": "NNS", "blockchain": "NN", "microservice": "NN",
    "microservices": "NNS", "ontological": "JJ", "semantic": "JJ",
    "semantics": "NNS", "genomic": "JJ", "genome": "NN", "genomes": "NNS",
    "proteomics": "NNS", "biomarker": "NN", "biomarkers": "NNS",
}


def map_tag(raw):
    first = raw.split("|")[0]
    first = TAG_ALIASES.get(first, first)
    return first if first in PENN_TAGS else None


def build_lexicon(src, dst):
    entries = {}
    with open(os.path.join(src, "en-lexicon.txt"), encoding="utf-8") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            fields = line.split()
            if len(fields) != 2:
                continue
            tag = map_tag(fields[1])
            if tag is not None:
                entries[fields[0]] = tag
    for word, tag in ADDITIONS.items():
        entries.setdefault(word, tag)
    with open(os.path.join(dst, "lexicon.tsv"), "w", encoding="utf-8",
              newline="\n") as out:
        for word in sorted(entries, key=lambda w: w.encode("utf-8")):
            out.write(f"{word}\t{entries[word]}\n")
    return len(entries)


def build_rules(src, dst):
    rules = []
    with open(os.path.join(src, "en-context.txt"), encoding="utf-8") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            fields = line.split()
            if len(fields) != 4 or fields[2] != "PREVTAG":
                continue
            frm, to, prev = (TAG_ALIASES.get(t, t)
                             for t in (fields[0], fields[1], fields[3]))
            if frm in PENN_TAGS and to in PENN_TAGS and (
                    prev in PENN_TAGS or prev == "<S>"):
                rules.append((frm, to, prev))
    with open(os.path.join(dst, "tag_rules.tsv"), "w", encoding="utf-8",
              newline="\n") as out:
        out.write("# from\tto\tprevious tag (<S> = sentence start)\n")
        for rule in rules:
            out.write("\t".join(rule) + "\n")
    return len(rules)


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    print("lexicon entries:", build_lexicon(sys.argv[1], sys.argv[2]))
    print("tag rules:", build_rules(sys.argv[1], sys.argv[2]))


if __name__ == "__main__":
    main()
