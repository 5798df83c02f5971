"""Prefix tree over symbol codes: a set of strings with O(length) add/lookup."""

from __future__ import annotations

from typing import Iterable


class _Node:
    __slots__ = ("children", "terminal")

    def __init__(self, alphabet_size: int) -> None:
        # direct indexing by symbol code keeps each step O(1)
        self.children: list = [None] * alphabet_size
        self.terminal = False


class Trie:
    """Exact string set. Strings are iterables of symbol codes (e.g. bytes).

    Prefixes of stored strings are not themselves members; adds are
    idempotent and stored_count counts distinct strings.
    """

    __slots__ = ("alphabet_size", "root", "stored_count")

    def __init__(self, alphabet_size: int = 2) -> None:
        if alphabet_size < 1:
            raise ValueError("alphabet must be nonempty")
        self.alphabet_size = alphabet_size
        self.root = _Node(alphabet_size)
        self.stored_count = 0

    def add(self, s: Iterable[int]) -> None:
        node = self.root
        for sym in s:
            child = node.children[sym]
            if child is None:
                child = _Node(self.alphabet_size)
                node.children[sym] = child
            node = child
        if not node.terminal:
            node.terminal = True
            self.stored_count += 1

    def contains(self, s: Iterable[int]) -> bool:
        node = self.root
        for sym in s:
            node = node.children[sym]
            if node is None:
                return False
        return node.terminal

    def __contains__(self, s: Iterable[int]) -> bool:
        return self.contains(s)

    def __len__(self) -> int:
        return self.stored_count

    def node_count(self) -> int:
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(c for c in node.children if c is not None)
        return count
