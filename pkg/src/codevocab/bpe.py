"""Byte-pair encoding over corpus words.

Words are split into characters plus the end-of-word symbol ``</t>``, which
takes part in merges. Merges never cross word boundaries; markers are never
passed to the trainer and pass through :func:`encode_corpus` untouched.
"""
from __future__ import annotations

import heapq
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from . import _kernels
from .pipeline import CorpusWord

END = "</t>"
MERGES_HEADER = "#bpe-merges v1"


@dataclass(frozen=True)
class SubwordSequence:
    word: str
    pieces: tuple[str, ...]


@dataclass
class BpeModel:
    merges: list[tuple[str, str]]
    alphabet: frozenset[str]
    # pair count at the time each merge was chosen; empty for loaded models
    frequencies: list[int] = field(default_factory=list)
    end_marker: str = END

    def vocabulary(self) -> set[str]:
        return set(self.alphabet) | {a + b for a, b in self.merges}

    @cached_property
    def _tables(self):
        symbols = sorted(self.alphabet)
        index = {s: i for i, s in enumerate(symbols)}
        lefts, rights, merged = [], [], []
        for a, b in self.merges:
            for s in (a, b, a + b):
                if s not in index:
                    index[s] = len(symbols)
                    symbols.append(s)
            lefts.append(index[a])
            rights.append(index[b])
            merged.append(index[a + b])
        return (
            symbols,
            index,
            np.array(lefts, dtype=np.int64),
            np.array(rights, dtype=np.int64),
            np.array(merged, dtype=np.int64),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(format_merges(self.merges), encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, path: str | Path) -> "BpeModel":
        return cls.from_merges(parse_merges(Path(path).read_text(encoding="utf-8")))

    @classmethod
    def from_merges(cls, merges: list[tuple[str, str]]) -> "BpeModel":
        """Rebuild a model; the alphabet is every symbol not produced by an earlier merge."""
        produced: set[str] = set()
        alphabet = {END}
        for a, b in merges:
            for s in (a, b):
                if s not in produced:
                    alphabet.add(s)
            produced.add(a + b)
        return cls(list(merges), frozenset(alphabet))


def format_merges(merges: list[tuple[str, str]]) -> str:
    return MERGES_HEADER + "\n" + "".join(f"{a} {b}\n" for a, b in merges)


def parse_merges(text: str) -> list[tuple[str, str]]:
    lines = text.split("\n")
    if lines[0] != MERGES_HEADER:
        raise ValueError(f"not a merges file (expected header {MERGES_HEADER!r})")
    merges = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line:
            continue
        a, sep, b = line.partition(" ")
        if not sep or not a or not b or " " in b:
            raise ValueError(f"line {lineno}: expected 'left right', got {line!r}")
        merges.append((a, b))
    return merges


def _symbols(word: str) -> tuple[str, ...]:
    return (*word, END)


def _pairs(symbols: tuple[str, ...]):
    return zip(symbols, symbols[1:])


def merge_word(symbols: tuple[str, ...], a: str, b: str) -> tuple[str, ...]:
    """Replace every (a, b) occurrence left to right."""
    out = []
    i, n = 0, len(symbols)
    while i < n:
        if i + 1 < n and symbols[i] == a and symbols[i + 1] == b:
            out.append(a + b)
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return tuple(out)


def train(word_freqs: Mapping[str, int], n_merges: int) -> BpeModel:
    """Learn up to ``n_merges`` merges from a word frequency table.

    Each step merges the most frequent adjacent pair, ties going to the
    lexicographically smallest (left, right). Training stops early once no
    pair occurs at least twice.
    """
    if n_merges < 0:
        raise ValueError("n_merges must be >= 0")
    types = sorted(w for w, f in word_freqs.items() if f > 0)
    words = [_symbols(w) for w in types]
    freqs = [word_freqs[w] for w in types]
    alphabet = frozenset(s for w in words for s in w)

    counts: dict[tuple[str, str], int] = {}
    where: dict[tuple[str, str], set[int]] = {}
    for idx, (symbols, f) in enumerate(zip(words, freqs)):
        for p in _pairs(symbols):
            counts[p] = counts.get(p, 0) + f
            where.setdefault(p, set()).add(idx)
    heap = [(-c, a, b) for (a, b), c in counts.items()]
    heapq.heapify(heap)

    merges: list[tuple[str, str]] = []
    recorded: list[int] = []
    while len(merges) < n_merges and heap:
        neg, a, b = heapq.heappop(heap)
        if counts.get((a, b)) != -neg:
            continue  # stale entry
        if -neg < 2:
            break
        merges.append((a, b))
        recorded.append(-neg)
        touched: set[tuple[str, str]] = set()
        for idx in sorted(where.pop((a, b))):
            old = words[idx]
            new = merge_word(old, a, b)
            f = freqs[idx]
            for p in _pairs(old):
                counts[p] -= f
                touched.add(p)
            for p in _pairs(new):
                counts[p] = counts.get(p, 0) + f
                touched.add(p)
            for p in set(_pairs(old)) - set(_pairs(new)):
                if p in where:
                    where[p].discard(idx)
            for p in _pairs(new):
                where.setdefault(p, set()).add(idx)
            words[idx] = new
        for p in touched:
            c = counts[p]
            if c > 0:
                heapq.heappush(heap, (-c, *p))
            else:
                del counts[p]
                where.pop(p, None)
    return BpeModel(merges, alphabet, recorded)


def encode_many(words: Iterable[str], model: BpeModel) -> dict[str, tuple[str, ...]]:
    """Segment every distinct word in one kernel call."""
    unique = sorted(set(words))
    symbols, index, lefts, rights, merged = model._tables
    extra: dict[str, int] = {}
    base = len(symbols)
    flat: list[int] = []
    offsets = [0]
    for w in unique:
        for s in _symbols(w):
            i = index.get(s)
            if i is None:
                i = extra.setdefault(s, base + len(extra))
            flat.append(i)
        offsets.append(len(flat))
    n_ids = base + len(extra)
    keys = lefts * n_ids + rights
    order = np.argsort(keys, kind="stable")
    # a repeated pair keeps its earliest rank
    sorted_keys, first = np.unique(keys[order], return_index=True)
    ranks = order[first].astype(np.int64)
    out, out_offsets = _kernels.segment(
        np.array(flat, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
        sorted_keys.astype(np.int64),
        ranks,
        merged[ranks],
        np.int64(n_ids),
    )
    names = symbols + list(extra)
    out = out.tolist()
    return {
        w: tuple(names[i] for i in out[out_offsets[k] : out_offsets[k + 1]])
        for k, w in enumerate(unique)
    }


def encode(word: str, model: BpeModel) -> SubwordSequence:
    return SubwordSequence(word, encode_many([word], model)[word])


def decode(seq: SubwordSequence | Iterable[str]) -> str:
    pieces = seq.pieces if isinstance(seq, SubwordSequence) else tuple(seq)
    joined = "".join(pieces)
    if not joined.endswith(END):
        raise ValueError(f"subword sequence does not end with {END}: {pieces!r}")
    return joined[: -len(END)]


def vocab_of(model: BpeModel, corpus: Iterable[str]) -> Counter[str]:
    """Subword frequencies after encoding every word of ``corpus``."""
    word_counts = Counter(corpus)
    table = encode_many(word_counts, model)
    out: Counter[str] = Counter()
    for w, c in word_counts.items():
        for piece in table[w]:
            out[piece] += c
    return out


def coverage(subword_counts: Mapping[str, int], min_count: int) -> float:
    """Fraction of the subword vocabulary seen at least ``min_count`` times."""
    if not subword_counts:
        return 0.0
    return sum(c >= min_count for c in subword_counts.values()) / len(subword_counts)


def format_vocab(subword_counts: Mapping[str, int]) -> str:
    items = sorted(subword_counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return "".join(f"{s}\t{c}\n" for s, c in items)


def encode_corpus(words: list[CorpusWord], model: BpeModel, table: dict | None = None) -> list[CorpusWord]:
    """Rewrite a word stream at subword granularity; markers stay atomic."""
    if table is None:
        table = encode_many((w.text for w in words if not w.is_marker), model)
    out: list[CorpusWord] = []
    for w in words:
        if w.is_marker:
            out.append(w)
            continue
        for piece in table[w.text]:
            out.append(CorpusWord(piece, piece == END, None if piece == END else w.kind))
    return out
