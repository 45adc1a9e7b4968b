"""Vocabulary statistics over tokenized corpus files."""
from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .pipeline import DecodeError, unescape_word

REPORT_COLUMNS = ("config", "vocab", "vocab_ratio", "tokens", "tokens_ratio", "k_100k", "oov_pct")


class CorpusFormatError(ValueError):
    pass


def is_marker_token(token: str) -> bool:
    """True for an unescaped ``<...>`` token in a corpus file."""
    return token.startswith("<") and token.endswith(">")


@dataclass
class VocabStats:
    """Word frequencies keyed by the escaped corpus form of each word."""

    frequency: Counter[str] = field(default_factory=Counter)

    @property
    def vocab_size(self) -> int:
        return len(self.frequency)

    @property
    def total_tokens(self) -> int:
        return sum(self.frequency.values())

    def without_markers(self) -> "VocabStats":
        return VocabStats(Counter({w: c for w, c in self.frequency.items() if not is_marker_token(w)}))

    def marker_counts(self) -> Counter[str]:
        return Counter({w: c for w, c in self.frequency.items() if is_marker_token(w)})

    def __add__(self, other: "VocabStats") -> "VocabStats":
        return VocabStats(self.frequency + other.frequency)

    def update(self, tokens: Iterable[str]) -> None:
        self.frequency.update(tokens)


def iter_corpus_tokens(path: str | Path) -> Iterable[str]:
    """Yield validated raw tokens of one corpus file, line by line."""
    with open(path, encoding="utf-8", newline="\n") as fh:
        for lineno, line in enumerate(fh, 1):
            for token in line.rstrip("\n").split(" "):
                if not token:
                    continue
                if "\\" in token:
                    try:
                        unescape_word(token)
                    except DecodeError as exc:
                        raise CorpusFormatError(f"{path}:{lineno}: {exc}") from None
                yield token


def build_stats(paths: Iterable[str | Path]) -> VocabStats:
    """Stream corpus files into a frequency table; memory grows with the vocabulary only."""
    stats = VocabStats()
    for path in paths:
        stats.update(iter_corpus_tokens(path))
    return stats


def oov_threshold(stats: VocabStats, target_vocab: int = 100_000) -> tuple[int, float]:
    """Smallest k leaving at most ``target_vocab`` words with count >= k, and the
    fraction of corpus tokens that would become ``<unk>`` at that k."""
    if target_vocab < 1:
        raise ValueError("target_vocab must be >= 1")
    counts = np.fromiter(stats.frequency.values(), dtype=np.int64, count=len(stats.frequency))
    if len(counts) <= target_vocab:
        return 1, 0.0
    counts = -np.sort(-counts)
    k = int(counts[target_vocab]) + 1
    total = int(counts.sum())
    oov = int(counts[counts < k].sum())
    return k, oov / total


@dataclass(frozen=True)
class GrowthCurve:
    samples: list[tuple[int, int]]
    order_seed: int

    def to_csv(self) -> str:
        return "n_projects,vocab\n" + "".join(f"{n},{v}\n" for n, v in self.samples)


def project_order(n: int, seed: int) -> list[int]:
    keys = np.random.default_rng(seed).random(n)
    return [i for _, i in sorted(zip(keys.tolist(), range(n)))]


def growth_curve(
    projects: Sequence[Iterable[str]], sample_points: Sequence[float], seed: int = 0
) -> GrowthCurve:
    """Distinct words seen after adding shuffled projects one by one.

    A sample at fraction f is taken after ``ceil(f * n_projects)`` projects.
    """
    if any(not 0 < f <= 1 for f in sample_points):
        raise ValueError("sample points must lie in (0, 1]")
    n = len(projects)
    wanted = sorted({max(1, math.ceil(f * n - 1e-9)) for f in sample_points}) if n else []
    order = project_order(n, seed)
    seen: set[str] = set()
    samples = []
    done = 0
    for target in wanted:
        while done < target:
            seen.update(projects[order[done]])
            done += 1
        samples.append((target, len(seen)))
    return GrowthCurve(samples, seed)


@dataclass(frozen=True)
class ComparisonRow:
    config: str
    vocab: int
    vocab_ratio: float
    tokens: int
    tokens_ratio: float
    k_100k: int
    oov_pct: float

    def as_dict(self) -> dict:
        return {
            "config": self.config,
            "vocab": self.vocab,
            "vocab_ratio": f"{self.vocab_ratio:.2f}",
            "tokens": self.tokens,
            "tokens_ratio": f"{self.tokens_ratio:.2f}",
            "k_100k": self.k_100k,
            "oov_pct": f"{self.oov_pct:.2f}",
        }


def compare_configs(
    baseline: VocabStats, variant: VocabStats, name: str = "variant", target_vocab: int = 100_000
) -> ComparisonRow:
    if baseline.total_tokens == 0:
        raise ValueError("baseline corpus has no tokens")
    k, oov = oov_threshold(variant, target_vocab) if variant.vocab_size else (1, 0.0)
    return ComparisonRow(
        name,
        variant.vocab_size,
        variant.vocab_size / baseline.vocab_size,
        variant.total_tokens,
        variant.total_tokens / baseline.total_tokens,
        k,
        100 * oov,
    )


def report_csv(rows: Sequence[ComparisonRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_dict())
    return buf.getvalue()


def report_json(rows: Sequence[ComparisonRow]) -> str:
    return json.dumps([row.as_dict() for row in rows], indent=2, ensure_ascii=False) + "\n"
