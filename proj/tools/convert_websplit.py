#!/usr/bin/env python3
"""Converts WebSplit-style TSV into the JSONL corpus format.

Each input line is "complex<TAB>simple1 <::::> simple2 ...". Entries carry no
CoNLL-U, so evaluate them with --heuristic or add parses separately.

usage: convert_websplit.py IN_TSV OUT_JSONL [--prefix ID_PREFIX]
"""

import argparse
import json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("src")
    ap.add_argument("out")
    ap.add_argument("--prefix", default="w")
    args = ap.parse_args()
    n = 0
    with open(args.src, encoding="utf-8") as src, open(args.out, "w", encoding="utf-8") as out:
        for lineno, line in enumerate(src, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            complex_text, sep, rest = line.partition("\t")
            simple = [s.strip() for s in rest.split("<::::>") if s.strip()]
            if not sep or not complex_text.strip() or not simple:
                raise SystemExit(f"{args.src}:{lineno}: expected 'complex<TAB>simple <::::> simple'")
            n += 1
            entry = {"id": f"{args.prefix}{n}", "complex": complex_text.strip(), "simple": simple}
            out.write(json.dumps(entry, ensure_ascii=False) + "\n")
    print(f"wrote {n} entries")


if __name__ == "__main__":
    main()
