"""Time the BPE segmentation kernel: numba build against the numpy fallback.

    python3 benchmarks/bench_segment.py [--words 20000] [--merges 2000] [--repeat 3]

Both backends receive identical inputs and must return identical segmentations.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter

import numpy as np

from codevocab import _kernels, bpe


def synthetic_words(n: int, seed: int) -> Counter:
    rng = random.Random(seed)
    stems = ["".join(rng.choices("etaoinshrdlucmfw", k=rng.randint(2, 6))) for _ in range(400)]
    words: Counter = Counter()
    for _ in range(n):
        w = "".join(rng.choices(stems, k=rng.randint(1, 3)))
        words[w] += rng.randint(1, 20)
    return words


def kernel_inputs(model: bpe.BpeModel, words: list[str]):
    symbols, index, lefts, rights, merged = model._tables
    n_ids = len(symbols)
    flat = np.array([index[s] for w in words for s in (*w, bpe.END)], dtype=np.int64)
    offsets = np.cumsum([0] + [len(w) + 1 for w in words]).astype(np.int64)
    keys = lefts * n_ids + rights
    sorted_keys, first = np.unique(keys, return_index=True)
    ranks = first.astype(np.int64)
    return flat, offsets, sorted_keys.astype(np.int64), ranks, merged[ranks], np.int64(n_ids)


def best_of(fn, args, repeat: int) -> tuple[float, tuple]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--words", type=int, default=20_000)
    parser.add_argument("--merges", type=int, default=2_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    freqs = synthetic_words(args.words, args.seed)
    model = bpe.train(freqs, args.merges)
    words = sorted(freqs)
    inputs = kernel_inputs(model, words)
    print(f"{len(words)} distinct words, {len(model.merges)} merges, {len(inputs[0])} symbols")

    t_numpy, ref = best_of(_kernels.segment_numpy, inputs, args.repeat)
    print(f"numpy  {t_numpy * 1e3:9.1f} ms")
    if _kernels.segment_numba is None:
        print("numba  unavailable (not installed or disabled via CODEVOCAB_DISABLE_NUMBA)")
        return
    start = time.perf_counter()
    _kernels.segment_numba(*inputs)  # compile or load from cache
    warmup = time.perf_counter() - start
    t_numba, got = best_of(_kernels.segment_numba, inputs, args.repeat)
    assert np.array_equal(ref[0], got[0]) and np.array_equal(ref[1], got[1]), "backends disagree"
    print(f"numba  {t_numba * 1e3:9.1f} ms  (first call {warmup * 1e3:.0f} ms)")
    print(f"speedup {t_numpy / t_numba:.1f}x")


if __name__ == "__main__":
    main()
