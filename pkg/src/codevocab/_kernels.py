"""BPE segmentation kernel, compiled with numba when available.

Words arrive as one flat int64 array of symbol ids plus word offsets. Each
word is segmented by repeatedly merging every occurrence of its lowest-rank
known pair, which is the same as replaying the merge list in order.

Set ``CODEVOCAB_DISABLE_NUMBA=1`` to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

_NO_MERGE = np.iinfo(np.int64).max

try:
    if os.environ.get("CODEVOCAB_DISABLE_NUMBA", "") not in ("", "0"):
        raise ImportError("numba disabled by CODEVOCAB_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None


def _merge_occurrences(seq, n, a, b, merged):
    k = 0
    i = 0
    while i < n:
        if i + 1 < n and seq[i] == a and seq[i + 1] == b:
            seq[k] = merged
            i += 2
        else:
            seq[k] = seq[i]
            i += 1
        k += 1
    return k


def segment_numpy(symbols, offsets, pair_keys, pair_ranks, pair_merged, n_symbols):
    """Reference path: per word, vectorised pair lookup then merge."""
    out: list[np.ndarray] = []
    out_offsets = np.zeros(len(offsets), dtype=np.int64)
    for w in range(len(offsets) - 1):
        seq = symbols[offsets[w] : offsets[w + 1]].copy()
        n = len(seq)
        while n > 1 and len(pair_keys):
            keys = seq[: n - 1] * n_symbols + seq[1:n]
            j = np.searchsorted(pair_keys, keys)
            j = np.minimum(j, len(pair_keys) - 1)
            hit = pair_keys[j] == keys
            if not hit.any():
                break
            ranks = np.where(hit, pair_ranks[j], _NO_MERGE)
            best = j[np.argmin(ranks)]
            a, b = divmod(int(pair_keys[best]), n_symbols)
            n = _merge_occurrences(seq, n, a, b, pair_merged[best])
        out.append(seq[:n])
        out_offsets[w + 1] = out_offsets[w] + n
    flat = np.concatenate(out) if out else np.empty(0, dtype=np.int64)
    return flat, out_offsets


if njit is not None:
    _merge_occurrences_jit = njit(cache=True)(_merge_occurrences)

    @njit(cache=True)
    def segment_numba(symbols, offsets, pair_keys, pair_ranks, pair_merged, n_symbols):
        out = np.empty_like(symbols)
        out_offsets = np.empty_like(offsets)
        out_offsets[0] = 0
        pos = 0
        n_keys = len(pair_keys)
        for w in range(len(offsets) - 1):
            seq = symbols[offsets[w] : offsets[w + 1]].copy()
            n = len(seq)
            while n > 1:
                best_rank = _NO_MERGE
                best = -1
                for i in range(n - 1):
                    key = seq[i] * n_symbols + seq[i + 1]
                    j = np.searchsorted(pair_keys, key)
                    if j < n_keys and pair_keys[j] == key and pair_ranks[j] < best_rank:
                        best_rank = pair_ranks[j]
                        best = j
                if best < 0:
                    break
                a = pair_keys[best] // n_symbols
                b = pair_keys[best] % n_symbols
                n = _merge_occurrences_jit(seq, n, a, b, pair_merged[best])
            out[pos : pos + n] = seq[:n]
            pos += n
            out_offsets[w + 1] = pos
        return out[:pos], out_offsets

    BACKEND = "numba"
    segment = segment_numba
else:
    segment_numba = None
    BACKEND = "numpy"
    segment = segment_numpy
