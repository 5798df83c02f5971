"""Certified instance generators for experiments.

Members are built directly from random halves. Adversarial single-one words
and the all-zero word cover the classic hard instances. Far instances are
rejection-sampled and certified against the exact distance oracle, because
perturbing a member bounds the distance to that member only, not to the whole
language.
"""

from __future__ import annotations

import random

from .distance import distance_to_language, far_threshold
from .words import Word

_TRANSLATE_TABLES = {}


class FarInstanceError(RuntimeError):
    """No far instance found within the attempt budget."""


def _check_even_length(n: int) -> None:
    if n < 4 or n % 2:
        raise ValueError(f"membership-relevant lengths are even and >= 4, got {n}")


def random_word(n: int, rng: random.Random, alphabet_size: int = 2) -> Word:
    """Uniform random word of length n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if 256 % alphabet_size == 0:
        table = _TRANSLATE_TABLES.get(alphabet_size)
        if table is None:
            table = bytes(b % alphabet_size for b in range(256))
            _TRANSLATE_TABLES[alphabet_size] = table
        return Word(rng.randbytes(n).translate(table), alphabet_size)
    return Word(bytes(rng.randrange(alphabet_size) for _ in range(n)), alphabet_size)


def gen_member(
    half_u: int, half_v: int, rng: random.Random, alphabet_size: int = 2
) -> Word:
    """u + reverse(u) + v + reverse(v) with uniformly random u, v."""
    if half_u < 1 or half_v < 1:
        raise ValueError("both halves must be nonempty")
    u = random_word(half_u, rng, alphabet_size).symbols
    v = random_word(half_v, rng, alphabet_size).symbols
    return Word(u + u[::-1] + v + v[::-1], alphabet_size)


def gen_sigma(n: int, alphabet_size: int = 2) -> Word:
    """The all-zero word; always a member (u = 0, v = the rest)."""
    _check_even_length(n)
    return Word(bytes(n), alphabet_size)


def gen_gamma(n: int, i: int, alphabet_size: int = 2) -> Word:
    """All zeros except a single one at position i; never a member, since the
    lone one has no mirror partner under any split."""
    _check_even_length(n)
    if not 0 <= i < n:
        raise ValueError(f"position {i} out of range [0, {n})")
    symbols = bytearray(n)
    symbols[i] = 1
    return Word(bytes(symbols), alphabet_size)


def gen_far(
    n: int,
    epsilon: float,
    rng: random.Random,
    max_attempts: int = 1000,
    alphabet_size: int = 2,
) -> Word:
    """Uniform random word certified at distance >= ceil(epsilon * n).

    Raises FarInstanceError when the budget runs out, which signals that
    epsilon is too large for this n (the distance never exceeds n/2).
    """
    _check_even_length(n)
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    threshold = far_threshold(epsilon, n)
    for _ in range(max_attempts):
        w = random_word(n, rng, alphabet_size)
        if distance_to_language(w).distance >= threshold:
            return w
    raise FarInstanceError(
        f"no far instance found for n={n}, epsilon={epsilon} "
        f"after {max_attempts} attempts"
    )
