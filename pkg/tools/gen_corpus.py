#!/usr/bin/env python3
"""Freeze the default synthetic corpus into the package data directory.

Run from the repository root:  python tools/gen_corpus.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from sentipipe.corpus import persist_corpus
from sentipipe.synthetic import BUNDLED_CORPUS_FILE, generate_corpus


def main():
    corpus = generate_corpus()
    out = ROOT / "src" / "sentipipe" / "data" / BUNDLED_CORPUS_FILE
    persist_corpus(corpus, str(out))
    print(f"wrote {len(corpus)} records to {out}")


if __name__ == "__main__":
    main()
