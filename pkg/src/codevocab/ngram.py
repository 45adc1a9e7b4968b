"""Interpolated n-gram language model with an optional file-scoped cache.

Probabilities use Jelinek-Mercer interpolation from the highest order down to
the unigram, which itself is mixed with a uniform floor over the training
vocabulary plus ``<unk>``. A context never seen in training passes its mass
straight to the next lower order.
"""
from __future__ import annotations

import copy
import enum
import json
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

UNK = "<unk>"
START = "<s>"
MODEL_HEADER = "#ngram-counts v1"


class Scenario(enum.Enum):
    STATIC = "static"
    DYNAMIC = "dynamic"


class Unit(enum.Enum):
    SUBTOKEN = "subtoken"
    TOKEN = "token"


@dataclass(frozen=True)
class EvalResult:
    entropy_bits: float
    unit: Unit
    mrr: float
    n_units: int

    def to_json(self) -> str:
        return json.dumps(
            {"entropy_bits": self.entropy_bits, "unit": self.unit.value, "mrr": self.mrr, "n_units": self.n_units},
            indent=2,
        ) + "\n"


class CacheState:
    """Unigram counts of the words seen so far in the current file."""

    def __init__(self, gamma: float = 0.1):
        if not 0 <= gamma <= 1:
            raise ValueError("gamma must lie in [0, 1]")
        self.gamma = gamma
        self.counts: Counter[str] = Counter()
        self.total = 0

    def clear(self) -> None:
        self.counts.clear()
        self.total = 0

    def add(self, word: str) -> None:
        self.counts[word] += 1
        self.total += 1

    def prob(self, word: str) -> float:
        return self.counts[word] / self.total if self.total else 0.0


class NgramModel:
    def __init__(self, order: int = 6, lambdas: Sequence[float] | float = 0.5):
        if order < 1:
            raise ValueError("order must be >= 1")
        if isinstance(lambdas, (int, float)):
            lambdas = [float(lambdas)] * order
        lambdas = [float(x) for x in lambdas]
        if len(lambdas) != order:
            raise ValueError(f"expected {order} interpolation weights, got {len(lambdas)}")
        if any(not 0 <= x <= 1 for x in lambdas):
            raise ValueError("interpolation weights must lie in [0, 1]")
        if lambdas[0] >= 1:
            # the uniform floor needs some weight or unseen words get probability 0
            raise ValueError("unigram weight must be < 1")
        self.order = order
        # lambdas[k - 1] weighs the order-k estimate
        self.lambdas = lambdas
        # context tuple (length 0..order-1) -> next word counts
        self.next: dict[tuple[str, ...], Counter[str]] = {}
        self.totals: dict[tuple[str, ...], int] = {}
        self._ranked: list[str] | None = None
        self._dirty: set[str] = set()

    @property
    def vocab(self) -> set[str]:
        return set(self.next.get((), ()))

    def _add(self, history: Sequence[str], word: str) -> None:
        if self._ranked is not None:
            self._dirty.add(word)
        for k in range(self.order):
            if k > len(history):
                break
            ctx = tuple(history[len(history) - k :]) if k else ()
            self.next.setdefault(ctx, Counter())[word] += 1
            self.totals[ctx] = self.totals.get(ctx, 0) + 1

    def _padded(self, words: Sequence[str]) -> list[str]:
        return [START] * (self.order - 1) + list(words)

    def add_file(self, words: Sequence[str]) -> None:
        seq = self._padded(words)
        pad = self.order - 1
        for i in range(pad, len(seq)):
            self._add(seq[i - pad : i], seq[i])

    def _chain(self, history: Sequence[str]) -> list[tuple[float, Counter[str], int]]:
        """(weight, counts, total) for every seen context of ``history``, lowest order first."""
        history = list(history)[-(self.order - 1):] if self.order > 1 else []
        history = [START] * (self.order - 1 - len(history)) + history
        chain = []
        for k in range(2, self.order + 1):
            ctx = tuple(history[len(history) - (k - 1) :])
            counts = self.next.get(ctx)
            if counts is not None:
                chain.append((self.lambdas[k - 1], counts, self.totals[ctx]))
        return chain

    def _prob(self, word: str, chain: list[tuple[float, Counter[str], int]]) -> float:
        unigram = self.next.get((), Counter())
        if word not in unigram:
            word = UNK
        n_types = len(unigram) + (UNK not in unigram)
        total = self.totals.get((), 0)
        lam = self.lambdas[0]
        p = (1 - lam) / n_types + (lam * unigram[word] / total if total else 0.0)
        for lam, counts, ctx_total in chain:
            p = lam * counts[word] / ctx_total + (1 - lam) * p
        return p

    def prob(self, word: str, history: Sequence[str]) -> float:
        """P(word | last order-1 words of history); unseen words score as ``<unk>``."""
        return self._prob(word, self._chain(history))

    def distribution(self, history: Sequence[str]) -> dict[str, float]:
        """Full next-word distribution over vocabulary plus ``<unk>``."""
        chain = self._chain(history)
        return {w: self._prob(w, chain) for w in self.vocab | {UNK}}

    def candidates(self, history: Sequence[str], k: int) -> set[str]:
        """Words that can reach the top-k of the distribution at this history.

        Outside the continuations of seen contexts a word's probability only
        grows with its unigram count, so the most frequent unigrams complete
        the set.
        """
        history = self._padded(history)[-(self.order - 1):] if self.order > 1 else []
        out: set[str] = set()
        for j in range(1, self.order):
            counts = self.next.get(tuple(history[len(history) - j :]))
            if counts:
                out.update(counts)
        return out | self._top_unigrams(k, out)

    def _top_unigrams(self, k: int, exclude: set[str]) -> set[str]:
        # a stale ranking stays exact for every word not updated since the sort
        if self._ranked is None or len(self._dirty) > 512:
            unigram = self.next.get((), Counter())
            self._ranked = [w for w, _ in sorted(unigram.items(), key=lambda kv: (-kv[1], kv[0]))]
            self._dirty = set()
        top = set(self._dirty)
        found = 0
        for w in self._ranked:
            if found == k:
                break
            if w not in exclude and w not in self._dirty:
                top.add(w)
                found += 1
        return top

    # --- persistence -------------------------------------------------------

    def dumps(self) -> str:
        """Text dump: a header, then ``count<TAB>context words ... next word`` per n-gram."""
        lambdas = ",".join(repr(x) for x in self.lambdas)
        lines = [f"{MODEL_HEADER} order={self.order} lambdas={lambdas}\n"]
        for ctx in sorted(self.next, key=lambda c: (len(c), c)):
            for w, c in sorted(self.next[ctx].items()):
                lines.append(f"{c}\t{' '.join((*ctx, w))}\n")
        return "".join(lines)

    @classmethod
    def loads(cls, text: str) -> "NgramModel":
        lines = text.split("\n")
        head = lines[0].split(" ")
        if " ".join(head[:2]) != MODEL_HEADER:
            raise ValueError("not an n-gram count dump")
        fields = dict(part.split("=", 1) for part in head[2:])
        model = cls(int(fields["order"]), [float(x) for x in fields["lambdas"].split(",")])
        for line in lines[1:]:
            if not line:
                continue
            count, _, gram = line.partition("\t")
            *ctx, w = gram.split(" ")
            ctx = tuple(ctx)
            model.next.setdefault(ctx, Counter())[w] += int(count)
            model.totals[ctx] = model.totals.get(ctx, 0) + int(count)
        return model

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, path: str | Path) -> "NgramModel":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def fit(corpus: Sequence[Sequence[str]], order: int = 6, lambdas: Sequence[float] | float = 0.5) -> NgramModel:
    """Count all k-grams (k <= order) of every file; contexts never cross files."""
    model = NgramModel(order, lambdas)
    for words in corpus:
        model.add_file(words)
    if not model.totals.get(()):
        raise ValueError("cannot fit an n-gram model on an empty corpus")
    return model


def _rank(model: NgramModel, history, truth: str, cache: CacheState | None, cutoff: int) -> int | None:
    cands = model.candidates(history, cutoff)
    if cache is not None:
        cands |= set(cache.counts)
    cands.discard(START)
    chain = model._chain(history)
    unigram = model.next.get((), ())
    scored = []
    for w in cands:
        p = model._prob(w, chain) if w in unigram or w == UNK else 0.0
        if cache is not None and cache.total:
            p = (1 - cache.gamma) * p + cache.gamma * cache.prob(w)
        scored.append((-p, w))
    scored.sort()
    for r, (_, w) in enumerate(scored[:cutoff], 1):
        if w == truth:
            return r
    return None


def evaluate(
    model: NgramModel,
    test: Sequence[Sequence[str]],
    scenario: Scenario = Scenario.STATIC,
    cache: CacheState | None = None,
    unit: Unit = Unit.TOKEN,
    cutoff: int = 10,
    with_mrr: bool = True,
) -> EvalResult:
    """Mean negative log2 probability and MRR over every word of ``test``.

    The dynamic scenario adds each word to a copy of the model right after
    scoring it; the cache is emptied at every file boundary.
    """
    if scenario is Scenario.DYNAMIC:
        model = copy.deepcopy(model)
    bits = 0.0
    rr = 0.0
    n = 0
    for words in test:
        if cache is not None:
            cache.clear()
        history = [START] * (model.order - 1)
        for word in words:
            p = model.prob(word, history)
            if cache is not None and cache.total:
                p = (1 - cache.gamma) * p + cache.gamma * cache.prob(word)
            bits -= math.log2(p)
            if with_mrr:
                r = _rank(model, history, word, cache, cutoff)
                rr += 1 / r if r else 0.0
            n += 1
            if scenario is Scenario.DYNAMIC:
                model._add(history[len(history) - (model.order - 1):] if model.order > 1 else [], word)
            if cache is not None:
                cache.add(word)
            history.append(word)
            if len(history) > model.order - 1:
                del history[0]
    if cache is not None:
        cache.clear()
    if n == 0:
        return EvalResult(0.0, unit, 0.0, 0)
    return EvalResult(bits / n, unit, rr / n if with_mrr else float("nan"), n)


def entropy(
    model: NgramModel,
    test: Sequence[Sequence[str]],
    scenario: Scenario = Scenario.STATIC,
    cache: CacheState | None = None,
    unit: Unit = Unit.TOKEN,
) -> EvalResult:
    return evaluate(model, test, scenario, cache, unit)


def word_entropy(subword_entropy: float, n_subtokens: int, n_tokens: int) -> float:
    """Convert per-subtoken entropy to per-token entropy."""
    if n_tokens <= 0:
        raise ValueError("n_tokens must be >= 1")
    return subword_entropy * n_subtokens / n_tokens


def mrr(predictions: Sequence[Sequence[str]], truths: Sequence[str], cutoff: int = 10) -> float:
    """Mean of 1/rank of each truth in its candidate list; beyond ``cutoff`` scores 0."""
    if not predictions:
        raise ValueError("mrr of an empty prediction list")
    if len(predictions) != len(truths):
        raise ValueError("predictions and truths differ in length")
    total = 0.0
    for cands, truth in zip(predictions, truths):
        top = list(cands[:cutoff])
        if truth in top:
            total += 1 / (top.index(truth) + 1)
    return total / len(predictions)
