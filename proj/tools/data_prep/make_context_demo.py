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
"""Writes data/context_demo.tsv, a small 3-class label<TAB>title<TAB>abstract
corpus for the context classifier. Classes draw most words from disjoint
topic vocabularies, so the data is separable by construction."""

import pathlib
import random

SEED = 20261016
SIZES = {"cs": 80, "bio": 70, "fin": 60}

TOPIC = {
    "cs": """algorithm compiler neural network networks machine learning deep
        graph database query software kernel processor cache parallel
        distributed computing programming language runtime classifier
        embedding transformer gradient optimization retrieval index search
        encryption protocol server latency bandwidth dataset benchmark
        keyword extraction parser tokenizer""".split(),
    "bio": """protein gene genome cell cells enzyme tissue mutation expression
        sequencing receptor antibody bacteria virus infection clinical patient
        patients tumor cancer metabolism membrane mitochondria neuron immune
        vaccine therapy molecular organism species evolution transcription
        dna rna peptide pathway inflammation biopsy""".split(),
    "fin": """market markets stock stocks bond bonds portfolio asset assets
        investor investors price pricing volatility return returns risk
        credit bank banking interest rate inflation monetary liquidity
        equity dividend hedge fund derivatives option futures capital debt
        valuation earnings fiscal exchange""".split(),
}
SHARED = """the a of and in for with we this study paper results method approach
    analysis new model data show propose based using on from by our two
    effect performance evaluation large significant""".split()


def sentence(rng, label, length, topic_share):
    words = []
    for _ in range(length):
        pool = TOPIC[label] if rng.random() < topic_share else SHARED
        words.append(rng.choice(pool))
    return " ".join(words)


def main():
    rng = random.Random(SEED)
    rows = []
    for label, size in SIZES.items():
        for _ in range(size):
            title = sentence(rng, label, rng.randint(4, 8), 0.7).capitalize()
            abstract = ". ".join(
                sentence(rng, label, rng.randint(8, 14), 0.5).capitalize()
                for _ in range(3)) + "."
            rows.append(f"{label}\t{title}\t{abstract}")
    rng.shuffle(rows)
    out = pathlib.Path(__file__).resolve().parents[2] / "data" / "context_demo.tsv"
    out.write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
