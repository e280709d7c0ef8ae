#!/usr/bin/env python3
"""Reference values for the mini-corpus, computed without the C++ library.

Labels come from the dependency-tree counts on each embedded CoNLL-U parse,
compared in integer hundredths (7*TKN + 30*VRB + 40*CNJ > 100). Similarities
compare the gold simple sentences against the expected outputs in
tests/data/minicorpus_expected.json.

usage: minicorpus_oracle.py           print the values
       minicorpus_oracle.py --check   also compare with the pins in tests/acceptance.cpp
"""

import json
import math
import re
import sys
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
TOKEN = re.compile(r"[^\W_]+(?:[./'-][^\W_]+)*")


def stop_words():
    lines = (ROOT / "data" / "stopwords.txt").read_text(encoding="utf-8").splitlines()
    return {w.strip().lower() for w in lines if w.strip() and not w.startswith("#")}


def conllu_rows(block):
    for line in block.splitlines():
        if line and not line.startswith("#"):
            cols = line.split("\t")
            if cols[0].isdigit():
                yield cols


def is_complex(block, stops):
    tkn = vrb = cnj = 0
    for cols in conllu_rows(block):
        form, upos, rel = cols[1], cols[3], cols[7].split(":")[0].lower()
        punct = upos == "PUNCT" or not any(ch.isalnum() for ch in form)
        if not punct and form.lower() not in stops:
            tkn += 1
        if rel in ("root", "attr"):
            vrb += 1
        if rel in ("cc", "conj") or form == ",":
            cnj += 1
    return 7 * tkn + 30 * vrb + 40 * cnj > 100


def bag(sentences):
    return Counter(t.lower() for s in sentences for t in TOKEN.findall(s))


def cosine(a, b):
    dot = sum(n * b[t] for t, n in a.items())
    return dot / (math.sqrt(sum(n * n for n in a.values())) * math.sqrt(sum(n * n for n in b.values())))


def jaccard(a, b):
    return len(a.keys() & b.keys()) / len(a.keys() | b.keys())


def compute():
    stops = stop_words()
    expected = json.loads((ROOT / "tests" / "data" / "minicorpus_expected.json").read_text(encoding="utf-8"))
    entries = [json.loads(l) for l in (ROOT / "data" / "minicorpus.jsonl").read_text(encoding="utf-8").splitlines() if l.strip()]
    cells = Counter()
    cos = jac = 0.0
    for e in entries:
        cells["cc" if is_complex(e["conllu_complex"], stops) else "cs"] += 1
        for block in e["conllu_simple"]:
            cells["sc" if is_complex(block, stops) else "ss"] += 1
        gold, produced = bag(e["simple"]), bag(expected[e["id"]])
        cos += cosine(gold, produced)
        jac += jaccard(gold, produced)
    total = sum(cells.values())
    return {
        "entries": len(entries),
        "cc": cells["cc"], "cs": cells["cs"], "sc": cells["sc"], "ss": cells["ss"],
        "accuracy": (cells["cc"] + cells["ss"]) / total,
        "cosine": cos / len(entries),
        "jaccard": jac / len(entries),
    }


def pins():
    src = (ROOT / "tests" / "acceptance.cpp").read_text(encoding="utf-8")
    found = dict(re.findall(r"constexpr double kPinned(\w+) = ([0-9.]+);", src))
    return {k.lower(): float(v) for k, v in found.items()}


def main():
    values = compute()
    print(json.dumps({k: round(v, 4) if isinstance(v, float) else v for k, v in values.items()}))
    if "--check" in sys.argv[1:]:
        pinned = pins()
        bad = [k for k in ("accuracy", "cosine", "jaccard") if round(values[k] * 1e4) != round(pinned.get(k, -1) * 1e4)]
        if bad:
            print("pin mismatch: " + ", ".join(f"{k} oracle {values[k]:.4f} pinned {pinned.get(k)}" for k in bad))
            return 1
        print("pins agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
