#!/usr/bin/env python3
"""Regenerate include/reprosig/lexicon_data.hpp from the data/ word lists.

Run from the repository root after editing any list under data/:

    python3 tools/gen_lexicon_header.py

The generated header is checked in; a unit test verifies it stays in
sync with the text files.
"""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
LISTS = [
    ("easy_word_list", "easy_words.txt"),
    ("positive_word_list", "sentiment_pos.txt"),
    ("negative_word_list", "sentiment_neg.txt"),
]


def load(name: str) -> list[str]:
    words = (ROOT / "data" / name).read_text(encoding="utf-8").split()
    if words != sorted(set(words)):
        raise SystemExit(f"data/{name} must be sorted and duplicate-free")
    for w in words:
        if w != w.lower():
            raise SystemExit(f"data/{name}: '{w}' is not lowercase")
    return words


def emit(out: list[str], name: str, words: list[str]) -> None:
    out.append(f"inline constexpr std::string_view {name}[] = {{")
    line = "   "
    for w in words:
        piece = f' "{w}",'
        if len(line) + len(piece) > 78:
            out.append(line)
            line = "   "
        line += piece
    if line.strip():
        out.append(line)
    out.append("};")
    out.append("")


def main() -> None:
    out = [
        "// Generated by tools/gen_lexicon_header.py from the files under data/.",
        "// Do not edit by hand; edit the word lists and regenerate.",
        "#pragma once",
        "",
        "#include <string_view>",
        "",
        "namespace reprosig::detail {",
        "",
    ]
    for cpp_name, file_name in LISTS:
        emit(out, cpp_name, load(file_name))
    out.append("}  // namespace reprosig::detail")
    out.append("")
    target = ROOT / "include" / "reprosig" / "lexicon_data.hpp"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text("\n".join(out), encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
