"""Meet-in-the-middle property tester for the two-palindrome language.

Every member x = u + reverse(u) + v + reverse(v) has its symbols mirrored
about an axis determined by s = 2|u| - 1: positions i and j agree whenever
i + j = s (mod n), and shifting both indices in opposite directions preserves
the identity. Writing s = alpha*step + beta with step = floor(n^(1/3)) splits
the unknown axis across two small grids: beta lands in [0, step) and
alpha*step among the multiples of step below n. The tester samples m random
shifts, stores the left-shifted fingerprint of every grid row in a trie, and
searches the column grid for a matching right-shifted fingerprint - by
simulated Grover search in the sublinear tester, by linear scan in the
classical baseline (which uses sqrt-sized grids instead).

For a member some grid pair matches on every shift, for any shift sample.
For a word epsilon-far from the language, a fixed pair matches all m random
shifts with probability at most (1 - epsilon)^m <= n^-2, so with m =
ceil((2/epsilon) * log2(n)) shifts the whole search space is empty with
probability near 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .grover import DEFAULT_GROVER_CONFIG, GroverConfig, grover_search
from .ledger import QueryLedger
from .trie import Trie
from .words import Word


def icbrt(n: int) -> int:
    """floor(n^(1/3)) in exact integer arithmetic (floats only seed the
    guess, so perfect cubes never come out off by one)."""
    if n < 0:
        raise ValueError("cube root of negative size")
    c = round(n ** (1 / 3))
    while c > 0 and c * c * c > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c


def ceil_sqrt(n: int) -> int:
    """ceil(sqrt(n)) in exact integer arithmetic."""
    if n < 0:
        raise ValueError("square root of negative size")
    r = math.isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True)
class OffsetSample:
    """The random shifts p_1..p_m shared by all fingerprints of one run."""

    offsets: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.offsets)


@dataclass(frozen=True)
class IndexGrids:
    """Row grid [0, step), column grid of multiples of step below n."""

    i_set: range
    j_set: range
    step: int


def offset_count(n: int, epsilon: float) -> int:
    """Fingerprint length m = ceil((2/epsilon) * log2(n))."""
    _check_domain(n, epsilon)
    return math.ceil((2.0 / epsilon) * math.log2(n))


def sample_offsets(n: int, epsilon: float, rng: random.Random) -> OffsetSample:
    """Draw m shifts uniformly with replacement from [0, n)."""
    m = offset_count(n, epsilon)
    return OffsetSample(tuple(rng.randrange(n) for _ in range(m)))


def cube_grids(n: int) -> IndexGrids:
    step = icbrt(n)
    return IndexGrids(range(step), range(0, n, step), step)


def sqrt_grids(n: int) -> IndexGrids:
    step = ceil_sqrt(n)
    return IndexGrids(range(step), range(0, n, step), step)


def left_string(
    x: Word, i: int, sample: OffsetSample, ledger: Optional[QueryLedger] = None
) -> bytes:
    """Fingerprint (x[(i - p) mod n] for each shift p); m reads."""
    n = x.n
    s = x.symbols
    if ledger is not None:
        ledger.read_classical(sample.m)
    return bytes(s[(i - p) % n] for p in sample.offsets)


def right_string(
    x: Word, j: int, sample: OffsetSample, ledger: Optional[QueryLedger] = None
) -> bytes:
    """Fingerprint (x[(j + p) mod n] for each shift p); m reads."""
    n = x.n
    s = x.symbols
    if ledger is not None:
        ledger.read_classical(sample.m)
    return bytes(s[(j + p) % n] for p in sample.offsets)


@dataclass(frozen=True)
class Verdict:
    accept: bool
    ledger: QueryLedger
    found_pair: Optional[tuple[int, int]] = None


def _check_domain(n: int, epsilon: float) -> None:
    if n < 4 or n % 2:
        raise ValueError(f"tester needs even length >= 4, got n={n}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")


def _build_left_table(
    x: Word, grids: IndexGrids, sample: OffsetSample, ledger: QueryLedger
) -> tuple[Trie, dict[bytes, int]]:
    trie = Trie(x.alphabet_size)
    first_row: dict[bytes, int] = {}
    for i in grids.i_set:
        s = left_string(x, i, sample, ledger)
        trie.add(s)
        first_row.setdefault(s, i)
    return trie, first_row


def quantum_test(
    x: Word,
    epsilon: float,
    rng: random.Random,
    grover_config: GroverConfig = DEFAULT_GROVER_CONFIG,
) -> Verdict:
    """Sublinear tester: cube-root grids, trie of row fingerprints, simulated
    Grover search over the column grid.

    Accepts members with the search's success probability (error <= 0.1);
    rejects far words unless some grid pair collides on all m shifts. Total
    charged queries are O((1/epsilon) * n^(1/3) * log n): step * m classical
    reads to fill the trie, then m per charged search evaluation.
    """
    _check_domain(x.n, epsilon)
    ledger = QueryLedger()
    sample = sample_offsets(x.n, epsilon, rng)
    grids = cube_grids(x.n)
    trie, first_row = _build_left_table(x, grids, sample, ledger)
    columns = grids.j_set

    def hits_trie(idx: int) -> bool:
        return trie.contains(right_string(x, columns[idx], sample))

    outcome = grover_search(
        len(columns),
        hits_trie,
        rng,
        cost_per_call=sample.m,
        ledger=ledger,
        config=grover_config,
    )
    found_pair = None
    if outcome.found is not None:
        j = columns[outcome.found]
        found_pair = (first_row[right_string(x, j, sample)], j)
    return Verdict(outcome.found is not None, ledger, found_pair)


def classical_test(x: Word, epsilon: float, rng: random.Random) -> Verdict:
    """Baseline tester with sqrt-sized grids and a full column scan.

    The scan has no search error, so members are always accepted; charged
    queries are about 2 * sqrt(n) * m, all classical.
    """
    _check_domain(x.n, epsilon)
    ledger = QueryLedger()
    sample = sample_offsets(x.n, epsilon, rng)
    grids = sqrt_grids(x.n)
    trie, first_row = _build_left_table(x, grids, sample, ledger)
    for j in grids.j_set:
        s = right_string(x, j, sample, ledger)
        if trie.contains(s):
            return Verdict(True, ledger, (first_row[s], j))
    return Verdict(False, ledger, None)
