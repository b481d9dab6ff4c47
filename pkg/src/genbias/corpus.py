"""Corpus loading, occurrence indexing, sampling, and gender-swapped variants.

A corpus is a UTF-8 text file with one pre-tokenized sentence per line;
tokenization here is whitespace splitting after optional lowercasing.
Sentence segmentation and subword handling are out of scope.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

import numpy as np

from genbias.errors import FormatError

log = logging.getLogger(__name__)

FEMALE = "female"
MALE = "male"


@dataclass(frozen=True)
class Occurrence:
    """Locator tying a word to one position in the corpus."""

    sentence_id: int
    token_index: int
    word: str


@dataclass(frozen=True)
class DefinitionalPair:
    """A female/male word pair whose gender is inherent (she/he, girl/boy)."""

    female: str
    male: str

    def __post_init__(self):
        if not self.female or not self.male:
            raise ValueError("definitional pair elements must be nonempty")
        if self.female == self.male:
            raise ValueError(f"definitional pair has identical elements: {self.female!r}")

    def counterpart(self, word: str) -> str:
        if word == self.female:
            return self.male
        if word == self.male:
            return self.female
        raise ValueError(f"{word!r} is not an element of pair ({self.female}, {self.male})")


@dataclass(frozen=True)
class WordEntry:
    word: str
    gender: str | None = None  # FEMALE or MALE
    score: float | None = None  # original-bias score when the list carries one


@dataclass
class WordList:
    """A named list of words, optionally with per-word gender labels or scores."""

    name: str
    entries: list[WordEntry]

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            if e.word in seen:
                raise FormatError(f"duplicate word {e.word!r} in list {self.name!r}")
            seen.add(e.word)

    @property
    def words(self) -> list[str]:
        return [e.word for e in self.entries]

    def labels(self) -> dict[str, str]:
        return {e.word: e.gender for e in self.entries if e.gender is not None}

    def scores(self) -> dict[str, float]:
        return {e.word: e.score for e in self.entries if e.score is not None}


@dataclass
class Corpus:
    """Tokenized sentences; sentence ids are dense integers 0..len-1."""

    sentences: list[list[str]]
    source_path: str

    def __len__(self) -> int:
        return len(self.sentences)


def load_corpus(path, lowercase: bool = True) -> Corpus:
    """Load a line-per-sentence corpus; empty lines are skipped."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read corpus file {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(
            f"corpus file {path} is not valid UTF-8 at byte offset {exc.start}"
        ) from exc
    sentences = []
    for line in text.splitlines():
        if lowercase:
            line = line.lower()
        tokens = line.split()
        if tokens:
            sentences.append(tokens)
    return Corpus(sentences=sentences, source_path=str(path))


@dataclass
class OccurrenceIndex:
    """Exact-token occurrence lists per word, plus the words never seen.

    Keeps a reference to its corpus so downstream filters can inspect the
    sentences the occurrences live in.
    """

    corpus: Corpus
    by_word: dict[str, list[Occurrence]]
    missing: list[str] = field(default_factory=list)


def index_occurrences(corpus: Corpus, words) -> OccurrenceIndex:
    """Index every exact-token occurrence of the given words.

    Words with zero occurrences map to empty lists and are listed in
    .missing; that is a reported condition, not an error.
    """
    wanted = list(words.words) if isinstance(words, WordList) else list(words)
    wanted_set = set(wanted)
    by_word: dict[str, list[Occurrence]] = {w: [] for w in wanted}
    for sid, sentence in enumerate(corpus.sentences):
        for tid, token in enumerate(sentence):
            if token in wanted_set:
                by_word[token].append(Occurrence(sid, tid, token))
    missing = [w for w in wanted if not by_word[w]]
    return OccurrenceIndex(corpus=corpus, by_word=by_word, missing=missing)


def sample_occurrences(
    index: OccurrenceIndex, word: str, n: int, rng: np.random.Generator
) -> list[Occurrence]:
    """Sample min(n, available) occurrences uniformly without replacement.

    Deterministic given the generator state; the sample is returned in
    canonical (sentence_id, token_index) order. An unindexed word yields an
    empty list.
    """
    if n < 1:
        raise ValueError("sample size must be >= 1")
    occs = index.by_word.get(word)
    if not occs:
        if occs is None:
            log.warning("word %r was never indexed; returning empty sample", word)
        return []
    if len(occs) <= n:
        return list(occs)
    chosen = rng.choice(len(occs), size=n, replace=False)
    return [occs[i] for i in sorted(chosen)]


def swap_pair(corpus: Corpus, occ: Occurrence, pair: DefinitionalPair) -> list[str]:
    """Copy of the sentence with the token at occ replaced by its pair mate.

    Only the addressed position changes; other occurrences of the same word
    in the sentence are untouched.
    """
    sentence = corpus.sentences[occ.sentence_id]
    token = sentence[occ.token_index]
    replacement = pair.counterpart(token)  # raises if token matches neither element
    swapped = list(sentence)
    swapped[occ.token_index] = replacement
    return swapped


def filter_cooccurrence(
    index: OccurrenceIndex, definitional: list[DefinitionalPair]
) -> OccurrenceIndex:
    """Drop occurrences whose sentence contains any definitional-pair element."""
    gendered = set()
    for pair in definitional:
        gendered.add(pair.female)
        gendered.add(pair.male)
    by_word: dict[str, list[Occurrence]] = {}
    for word, occs in index.by_word.items():
        by_word[word] = [
            occ
            for occ in occs
            if not gendered.intersection(index.corpus.sentences[occ.sentence_id])
        ]
    return OccurrenceIndex(corpus=index.corpus, by_word=by_word, missing=list(index.missing))


# ---------------------------------------------------------------------------
# Word-list file loading
#
# Accepted JSON shapes:
#   ["word", ...]                        plain words
#   [["word", s1, s2], ...]              scored words; the LAST numeric field
#                                        is the original-bias score
#   [["female_word", "male_word"], ...]  definitional pairs (separate loader)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read word list {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"word list {path} is not valid JSON: {exc}") from exc


def load_word_list(
    path, name: str | None = None, score_positive: str = FEMALE, lowercase: bool = True
) -> WordList:
    """Load a word list from JSON (plain strings or scored triples).

    When entries carry scores, gender labels are derived from the score sign:
    positive means `score_positive` (default female). Scores are kept as-is.
    """
    data = _load_json(path)
    if not isinstance(data, list):
        raise FormatError(f"word list {path}: expected a JSON array")
    if score_positive not in (FEMALE, MALE):
        raise ValueError("score_positive must be 'female' or 'male'")
    negative = MALE if score_positive == FEMALE else FEMALE
    entries = []
    for item in data:
        if isinstance(item, str):
            word = item.lower() if lowercase else item
            entries.append(WordEntry(word=word))
        elif isinstance(item, list) and item and isinstance(item[0], str):
            nums = [x for x in item[1:] if isinstance(x, (int, float))]
            if not nums:
                raise FormatError(
                    f"word list {path}: entry {item!r} has no numeric score; "
                    "two-string entries are definitional pairs, load them with "
                    "load_definitional_pairs"
                )
            word = item[0].lower() if lowercase else item[0]
            score = float(nums[-1])
            gender = score_positive if score > 0 else (negative if score < 0 else None)
            entries.append(WordEntry(word=word, gender=gender, score=score))
        else:
            raise FormatError(f"word list {path}: unsupported entry {item!r}")
    return WordList(name=name or str(path), entries=entries)


def load_gendered_lists(female_path, male_path, name: str, lowercase: bool = True) -> WordList:
    """Merge two plain word files into one list with explicit gender labels."""
    female = load_word_list(female_path, name=f"{name}/female", lowercase=lowercase)
    male = load_word_list(male_path, name=f"{name}/male", lowercase=lowercase)
    entries = [WordEntry(word=e.word, gender=FEMALE, score=e.score) for e in female.entries]
    entries += [WordEntry(word=e.word, gender=MALE, score=e.score) for e in male.entries]
    return WordList(name=name, entries=entries)


def load_definitional_pairs(path, lowercase: bool = True) -> list[DefinitionalPair]:
    """Load [female, male] pairs from a JSON array of 2-element arrays."""
    data = _load_json(path)
    if not isinstance(data, list):
        raise FormatError(f"definitional pairs {path}: expected a JSON array")
    pairs = []
    for item in data:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise FormatError(f"definitional pairs {path}: bad entry {item!r}")
        f, m = item
        if lowercase:
            f, m = f.lower(), m.lower()
        pairs.append(DefinitionalPair(female=f, male=m))
    return pairs


# ---------------------------------------------------------------------------
# Manifest: JSON-lines interchange with the embedding exporter.


def write_manifest(records, path) -> int:
    """Write manifest records ({"sid","tid","word","tokens","tag"}) as JSON lines."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=True, sort_keys=True))
            fh.write("\n")
            count += 1
    return count


def read_manifest(path) -> list[dict]:
    """Read and validate a manifest file (mainly for tests and tooling)."""
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"manifest {path}: bad JSON at line {lineno}: {exc}") from exc
            for key in ("sid", "tid", "word", "tokens", "tag"):
                if key not in rec:
                    raise FormatError(f"manifest {path}: line {lineno} missing field {key!r}")
            if not (0 <= rec["tid"] < len(rec["tokens"])):
                raise FormatError(f"manifest {path}: line {lineno} token index out of range")
            if rec["tokens"][rec["tid"]] != rec["word"]:
                raise FormatError(
                    f"manifest {path}: line {lineno} word does not match token at index"
                )
            records.append(rec)
    return records
