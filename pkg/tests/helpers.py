"""Enumeration helpers shared across the suite."""

import itertools

from twopal import Word


def all_words(n, alphabet_size=2):
    for tup in itertools.product(range(alphabet_size), repeat=n):
        yield Word(bytes(tup), alphabet_size)


def member_constructions(n, alphabet_size=2):
    """Every (word, half_u) built directly from the language definition."""
    for a in range(1, n // 2):
        h = n // 2 - a
        for u in itertools.product(range(alphabet_size), repeat=a):
            ub = bytes(u)
            prefix = ub + ub[::-1]
            for v in itertools.product(range(alphabet_size), repeat=h):
                vb = bytes(v)
                yield Word(prefix + vb + vb[::-1], alphabet_size), a


def member_words(n, alphabet_size=2):
    """Distinct member words of length n."""
    seen = set()
    for word, _ in member_constructions(n, alphabet_size):
        if word.symbols not in seen:
            seen.add(word.symbols)
            yield word
