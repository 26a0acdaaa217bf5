"""Builds tests/data/porter_reference.tsv (word<TAB>stem).

Vocabulary: distinct lowercase alphabetic words harvested from English text
in installed Python package sources (comments and docstrings) then a seeded
sample, plus every word of the text fixtures.

Stems come from NLTK's PorterStemmer in MARTIN_EXTENSIONS mode, which
reproduces Martin Porter's reference C program (the one that generated the
published voc.txt/output.txt pairs), including its three departures from the
1980 description: words of length <= 2 are left alone, "bli" -> "ble" and
"logi" -> "log" in step 2. The Snowball "porter" stemmer is used as a second
opinion; every disagreement must be one of those departures or the wider
double-consonant rule of the C program.

    pip install snowballstemmer nltk
    python3 tests/oracles/make_porter_reference.py > tests/data/porter_reference.tsv
"""
import pathlib
import random
import re
import sys
import sysconfig

import snowballstemmer
from nltk.stem.porter import PorterStemmer

WORD = re.compile(r"\b[a-z]{1,24}\b")


def fixture_words():
    words = set()
    data = pathlib.Path(__file__).resolve().parents[1] / "data"
    for path in sorted(data.glob("*.txt")) + sorted(data.glob("*.html")):
        if path.name.startswith("porter_"):
            continue
        words.update(WORD.findall(path.read_text(encoding="utf-8").lower()))
    return words


def harvest(limit_files=4000):
    words = set()
    root = pathlib.Path(sysconfig.get_paths()["purelib"])
    for path in sorted(root.rglob("*.py"))[:limit_files]:
        try:
            text = path.read_text(encoding="utf-8", errors="ignore")
        except OSError:
            continue
        for line in text.splitlines():
            stripped = line.strip()
            if stripped.startswith("#") or '"""' in stripped or stripped[:1].isalpha():
                words.update(WORD.findall(stripped))
    return words


def explained_by_c_departure(word, c_stem, snow_stem):
    if len(word) <= 2:
        return True
    if "bl" in word or "log" in word:
        return True
    # The C program undoubles any final double consonant except l/s/z after
    # removing -ed/-ing; Snowball only undoubles bb dd ff gg mm nn pp rr tt.
    doubled = snow_stem[-2:]
    return len(doubled) == 2 and doubled[0] == doubled[1] and doubled[0] not in "bdfgmnprtlsz"


def main():
    fixed = fixture_words()
    words = sorted(harvest() - fixed)
    rng = random.Random(1980)
    sample = sorted(set(rng.sample(words, min(6000, len(words)))) | fixed)
    reference = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    snow = snowballstemmer.stemmer("porter")
    unexplained = 0
    for w in sample:
        c_stem, s_stem = reference.stem(w), snow.stemWord(w)
        if c_stem != s_stem and not explained_by_c_departure(w, c_stem, s_stem):
            print(f"unexplained disagreement: {w} {c_stem} {s_stem}", file=sys.stderr)
            unexplained += 1
        sys.stdout.write(f"{w}\t{c_stem}\n")
    print(f"{len(sample)} pairs, {unexplained} unexplained", file=sys.stderr)
    return 1 if unexplained else 0


if __name__ == "__main__":
    sys.exit(main())
