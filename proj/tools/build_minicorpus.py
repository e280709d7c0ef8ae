#!/usr/bin/env python3
"""Builds CoNLL-U fixtures and the JSONL mini-corpus from compact tree files.

Compact format, one sentence per line:

    form|UPOS|head|deprel[|VerbForm] form|UPOS|head|deprel ...

VERB and AUX tokens without an explicit VerbForm get VerbForm=Fin.
A source file is a sequence of blocks separated by blank lines:

    @ E01
    C: <compact complex sentence>
    S: <compact gold simple sentence>
    X: <hand-predicted system output, plain text>

Lines starting with '#' are comments. Fixture files (*.tree) hold blocks with
only "@ id" and "C:" lines and become one CoNLL-U file each.

usage: build_minicorpus.py corpus SRC OUT_JSONL OUT_EXPECTED
       build_minicorpus.py fixture SRC OUT_CONLLU
"""

import json
import sys

NO_SPACE_BEFORE = {",", ".", ";", ":", "!", "?", "%", ")", "]", "}", "'s", "'S", "n't", "'re", "'ve", "'ll", "'d", "'m", "'", "''"}
NO_SPACE_AFTER = {"(", "[", "{", "$", "``"}


def detok(forms):
    out = ""
    for i, f in enumerate(forms):
        if i > 0 and f not in NO_SPACE_BEFORE and forms[i - 1] not in NO_SPACE_AFTER:
            out += " "
        out += f
    return out


def parse_compact(line, where):
    tokens = []
    for i, item in enumerate(line.split(), 1):
        parts = item.split("|")
        if len(parts) not in (4, 5):
            raise SystemExit(f"{where}: bad token '{item}'")
        form, upos, head, rel = parts[:4]
        vf = parts[4] if len(parts) == 5 else ("Fin" if upos in ("VERB", "AUX") else "")
        tokens.append({"id": i, "form": form, "upos": upos, "head": int(head), "deprel": rel, "vf": vf})
    n = len(tokens)
    roots = [t for t in tokens if t["head"] == 0]
    if len(roots) != 1 or roots[0]["deprel"] != "root":
        raise SystemExit(f"{where}: need exactly one root")
    for t in tokens:
        if not 0 <= t["head"] <= n or t["head"] == t["id"]:
            raise SystemExit(f"{where}: bad head on {t['form']}")
        seen, cur = set(), t["id"]
        while cur != 0:
            if cur in seen:
                raise SystemExit(f"{where}: cycle through {t['form']}")
            seen.add(cur)
            cur = tokens[cur - 1]["head"]
    return tokens


def to_conllu(sid, tokens):
    lines = [f"# sent_id = {sid}", f"# text = {detok([t['form'] for t in tokens])}"]
    for t in tokens:
        feats = f"VerbForm={t['vf']}" if t["vf"] else "_"
        lines.append("\t".join([str(t["id"]), t["form"], t["form"].lower(), t["upos"], "_", feats,
                                str(t["head"]), t["deprel"], "_", "_"]))
    return "\n".join(lines) + "\n\n"


def read_blocks(path):
    blocks, cur = [], None
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            if line.startswith("@ "):
                cur = {"id": line[2:].strip(), "C": [], "S": [], "X": [], "line": lineno}
                blocks.append(cur)
                continue
            key, _, rest = line.partition(": ")
            if cur is None or key not in ("C", "S", "X"):
                raise SystemExit(f"{path}:{lineno}: unexpected line")
            cur[key].append((rest.strip(), f"{path}:{lineno}"))
    return blocks


def build_corpus(src, out_jsonl, out_expected):
    expected = {}
    with open(out_jsonl, "w", encoding="utf-8") as out:
        for b in read_blocks(src):
            if len(b["C"]) != 1 or not b["S"] or not b["X"]:
                raise SystemExit(f"{src}:{b['line']}: entry needs one C, at least one S and X")
            ctoks = parse_compact(*b["C"][0])
            stoks = [parse_compact(*s) for s in b["S"]]
            entry = {
                "id": b["id"],
                "complex": detok([t["form"] for t in ctoks]),
                "simple": [detok([t["form"] for t in s]) for s in stoks],
                "conllu_complex": to_conllu(b["id"], ctoks),
                "conllu_simple": [to_conllu(f"{b['id']}.s{k + 1}", s) for k, s in enumerate(stoks)],
            }
            out.write(json.dumps(entry, ensure_ascii=False) + "\n")
            expected[b["id"]] = [x for x, _ in b["X"]]
    with open(out_expected, "w", encoding="utf-8") as f:
        json.dump(expected, f, indent=2, ensure_ascii=False)
        f.write("\n")


def build_fixture(src, out_conllu):
    with open(out_conllu, "w", encoding="utf-8") as out:
        for b in read_blocks(src):
            for text, where in b["C"]:
                out.write(to_conllu(b["id"], parse_compact(text, where)))


if __name__ == "__main__":
    if len(sys.argv) == 5 and sys.argv[1] == "corpus":
        build_corpus(*sys.argv[2:])
    elif len(sys.argv) == 4 and sys.argv[1] == "fixture":
        build_fixture(*sys.argv[2:])
    else:
        raise SystemExit(__doc__)
