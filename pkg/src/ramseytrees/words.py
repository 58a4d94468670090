"""Finite words over an ordered alphabet and the word successor tree.

Words are stored as tuples of indices into the alphabet, so lexicographic
comparisons come straight from tuple order.  A word's level is its length;
the successor operation appends one letter and takes no parameters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from itertools import product

from .errors import (DepthTooLarge, ForeignCharacter, NonEmptyParameters,
                     RootHasNoDecomposition)
from .stree import DEFAULT_NODE_BUDGET, STree


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite alphabet; symbol order drives all lexicographic output."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @classmethod
    def of(cls, spec) -> "Alphabet":
        """Build from a string of one-character symbols or a symbol sequence."""
        return cls(tuple(spec))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(range(len(self.symbols)))

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise ForeignCharacter(f"{symbol!r} not in alphabet {self.symbols}") from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)


@total_ordering
@dataclass(frozen=True)
class Word:
    """Immutable word; a node of the word tree."""

    alphabet: Alphabet
    indices: tuple[int, ...] = ()

    @classmethod
    def of(cls, alphabet: Alphabet, text) -> "Word":
        """Build from a string (one-char symbols) or a symbol sequence."""
        return cls(alphabet, tuple(alphabet.index(s) for s in text))

    def __len__(self) -> int:
        return len(self.indices)

    def __lt__(self, other: "Word") -> bool:
        return self.indices < other.indices

    def prefix(self, n: int) -> "Word":
        return Word(self.alphabet, self.indices[:n])

    def append(self, letter: int) -> "Word":
        return Word(self.alphabet, self.indices + (letter,))

    def concat(self, suffix: tuple[int, ...]) -> "Word":
        return Word(self.alphabet, self.indices + tuple(suffix))

    def delete_positions(self, positions) -> "Word":
        drop = set(positions)
        return Word(self.alphabet,
                    tuple(x for i, x in enumerate(self.indices) if i not in drop))

    def keep_positions(self, positions) -> "Word":
        keep = set(positions)
        return Word(self.alphabet,
                    tuple(x for i, x in enumerate(self.indices) if i in keep))

    def meet(self, other: "Word") -> "Word":
        n = 0
        for x, y in zip(self.indices, other.indices):
            if x != y:
                break
            n += 1
        return self.prefix(n)

    def symbols(self) -> tuple[str, ...]:
        return tuple(self.alphabet.symbols[i] for i in self.indices)

    def render(self) -> str:
        """Plain string for one-character alphabets, JSON array otherwise."""
        if self.alphabet.single_char:
            return "".join(self.symbols())
        return json.dumps(list(self.symbols()))

    def __str__(self) -> str:
        return self.render()


class WordTree(STree):
    """The successor tree of all finite words over a fixed alphabet."""

    successor_total = True

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def empty(self) -> Word:
        return Word(self.alphabet)

    def word(self, text) -> Word:
        return Word.of(self.alphabet, text)

    def roots(self) -> list:
        return [self.empty()]

    def level(self, node: Word) -> int:
        return len(node)

    def characters(self) -> list:
        return list(range(len(self.alphabet)))

    def successor(self, node: Word, params: tuple, char: int) -> Word:
        if params:
            raise NonEmptyParameters("word successors take no parameters")
        if not (isinstance(char, int) and 0 <= char < len(self.alphabet)):
            raise ForeignCharacter(f"letter index {char!r} outside alphabet")
        return node.append(char)

    def decompose(self, node: Word):
        if len(node) == 0:
            raise RootHasNoDecomposition("the empty word has no decomposition")
        return node.prefix(len(node) - 1), (), node.indices[-1]

    def successor_args(self, node: Word) -> list:
        return [((), c) for c in range(len(self.alphabet))]

    def restrict(self, node: Word, n: int) -> Word:
        if n > len(node):
            raise ValueError(f"cannot restrict length-{len(node)} word to {n}")
        return node.prefix(n)

    def meet(self, a: Word, b: Word) -> Word:
        return a.meet(b)

    def nodes_at_level(self, n: int, budget: int = DEFAULT_NODE_BUDGET) -> list:
        if len(self.alphabet) ** n > budget:
            raise DepthTooLarge(f"|Sigma|^{n} exceeds node budget {budget}")
        return [Word(self.alphabet, p) for p in product(range(len(self.alphabet)), repeat=n)]

    # Hooks for the one-skip definedness spot check: successors are total,
    # so the fast path in check_e1 applies; hooks are still provided for
    # uniformity with other trees.
    def skip_insertions(self, node: Word, i: int) -> list:
        if len(node) < i:
            return []
        return [Word(self.alphabet, node.indices[:i] + (c,) + node.indices[i:])
                for c in range(len(self.alphabet))]

    def skip_removal(self, node: Word, i: int) -> Word:
        if len(node) <= i:
            raise ValueError("node too short to remove a position")
        return node.delete_positions([i])


class BoundedSeqTree(STree):
    """Sequences w with w_i <= i, under appending.

    The successor of a level-n node exists only for letters c <= n, so a
    freshly inserted level widens the available letters and definedness does
    not transfer through one-level skips.  Used as a regression input for the
    one-skip definedness spot check.
    """

    successor_total = False

    def __init__(self, max_depth: int):
        self.max_depth = max_depth

    def roots(self) -> list:
        return [()]

    def level(self, node: tuple) -> int:
        return len(node)

    def characters(self) -> list:
        return list(range(self.max_depth))

    def successor(self, node: tuple, params: tuple, char: int):
        if params:
            raise NonEmptyParameters("sequence successors take no parameters")
        if char <= len(node):
            return node + (char,)
        return None

    def decompose(self, node: tuple):
        if not node:
            raise RootHasNoDecomposition("the empty sequence has no decomposition")
        return node[:-1], (), node[-1]

    def successor_args(self, node: tuple) -> list:
        return [((), c) for c in range(len(node) + 1)]

    def skip_insertions(self, node: tuple, i: int) -> list:
        if len(node) < i:
            return []
        # letters above position i shift up one slot, which keeps them legal
        return [node[:i] + (c,) + node[i:] for c in range(i + 1)]

    def skip_removal(self, node: tuple, i: int) -> tuple:
        if len(node) <= i:
            raise ValueError("node too short to remove a position")
        return node[:i] + node[i + 1:]
