"""Exact Hamming distance from a word to the two-palindrome language.

For a fixed split |u| = a, the nearest word with that shape differs from x in
exactly one position per mismatched mirror pair, so the distance is the
minimum over splits of the mismatched-pair count. The baseline evaluates
every split directly in O(n^2); the fast path gets all per-sum pair counts at
once from self-convolutions of the symbol indicator vectors in O(n log n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .words import Decomposition, Word

# baseline is plenty fast below this size; convolution wins above
FAST_PATH_MIN_N = 2048


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    best_split: Decomposition


def far_threshold(epsilon: float, n: int) -> int:
    """ceil(epsilon * n), tolerating float rounding at integer products."""
    return math.ceil(epsilon * n - 1e-9)


def _check_domain(x: Word) -> None:
    if x.n < 4 or x.n % 2:
        raise ValueError(f"distance needs even length >= 4, got n={x.n}")


def mismatched_pairs(x: Word, half_u: int) -> list[tuple[int, int]]:
    """Mirror pairs (i, j) that disagree under the split |u| = half_u."""
    n = x.n
    s = x.symbols
    pairs = []
    for i in range(half_u):
        j = 2 * half_u - 1 - i
        if s[i] != s[j]:
            pairs.append((i, j))
    h = (n - 2 * half_u) // 2
    for t in range(h):
        i, j = 2 * half_u + t, n - 1 - t
        if s[i] != s[j]:
            pairs.append((i, j))
    return pairs


def _distance_baseline(x: Word) -> DistanceResult:
    n = x.n
    arr = np.frombuffer(x.symbols, dtype=np.uint8)
    best = None
    best_a = 0
    for a in range(1, n // 2):
        left = int((arr[:a] != arr[a : 2 * a][::-1]).sum())
        block = arr[2 * a :]
        h = (n - 2 * a) // 2
        right = int((block[:h] != block[h:][::-1]).sum())
        total = left + right
        if best is None or total < best:
            best, best_a = total, a
    return DistanceResult(best, Decomposition(best_a, n // 2 - best_a))


def _distance_fast(x: Word) -> DistanceResult:
    n = x.n
    arr = np.frombuffer(x.symbols, dtype=np.uint8)
    length = 2 * n - 1
    size = 1
    while size < length:
        size <<= 1
    # equal ordered pairs per index sum, via one self-convolution per symbol
    equal = np.zeros(length)
    for sym in range(x.alphabet_size):
        ind = (arr == sym).astype(np.float64)
        if not ind.any():
            continue
        spec = np.fft.rfft(ind, size)
        equal += np.fft.irfft(spec * spec, size)[:length]
    equal_counts = np.rint(equal).astype(np.int64)
    sums = np.arange(length, dtype=np.int64)
    total_counts = np.minimum(sums, n - 1) - np.maximum(0, sums - n + 1) + 1
    # unordered mismatched pairs per sum; the i == j diagonal cancels
    unequal = (total_counts - equal_counts) // 2
    splits = np.arange(1, n // 2, dtype=np.int64)
    per_split = unequal[2 * splits - 1] + unequal[2 * splits + n - 1]
    idx = int(np.argmin(per_split))
    a = int(splits[idx])
    return DistanceResult(int(per_split[idx]), Decomposition(a, n // 2 - a))


def distance_to_language(x: Word, method: str = "auto") -> DistanceResult:
    """Minimum Hamming distance from x to any two-palindrome concatenation.

    method: "baseline" (quadratic split scan), "fast" (n log n convolution),
    or "auto" to pick by size. Both produce identical results, including the
    smallest-|u| tie-break on the reported split.
    """
    _check_domain(x)
    if method == "auto":
        method = "fast" if x.n > FAST_PATH_MIN_N else "baseline"
    if method == "baseline":
        return _distance_baseline(x)
    if method == "fast":
        return _distance_fast(x)
    raise ValueError(f"unknown method {method!r}")


def is_eps_far(x: Word, epsilon: float) -> bool:
    """True iff x is at distance >= ceil(epsilon * n) from every member."""
    _check_domain(x)
    return distance_to_language(x).distance >= far_threshold(epsilon, x.n)
