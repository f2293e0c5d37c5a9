"""Words and the graphs they represent.

A word is any sequence of letters: a plain string (one letter per
character) or a tuple of string tokens when letters need longer names.
Two distinct letters are joined by an edge exactly when they alternate,
i.e. their two-letter projection never repeats a letter.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph

Word = Sequence[str]


def alphabet(word: Word) -> frozenset[str]:
    return frozenset(word)


def occurrences(word: Word) -> Counter:
    return Counter(word)


def make_word(letters: Iterable[str]) -> str | tuple[str, ...]:
    """Pack letters into a string when single characters, else a tuple."""
    seq = tuple(letters)
    if all(len(x) == 1 for x in seq):
        return "".join(seq)
    return seq


def project(word: Word, keep: Iterable[str]) -> str | tuple[str, ...]:
    """Delete every letter outside `keep`, preserving order and input kind."""
    members = frozenset(keep)
    kept = [x for x in word if x in members]
    if isinstance(word, str):
        return "".join(kept)
    return tuple(kept)


def _alternation_scan(word: Word, a: str, b: str) -> bool:
    # no two consecutive equal letters in the {a, b} projection
    last = None
    for x in word:
        if x == a or x == b:
            if x == last:
                return False
            last = x
    return True


def alternates(word: Word, a: str, b: str) -> bool:
    """Whether the projection onto {a, b} strictly switches between them."""
    if a == b:
        raise ValueError(f"letters must be distinct, got {a!r} twice")
    letters = alphabet(word)
    for x in (a, b):
        if x not in letters:
            raise ValueError(f"letter {x!r} does not occur in the word")
    return _alternation_scan(word, a, b)


def graph_of_word(word: Word) -> Graph:
    """The graph on the word's alphabet whose edges are the alternating pairs."""
    letters = sorted(alphabet(word))
    edges = [
        (a, b) for a, b in combinations(letters, 2) if _alternation_scan(word, a, b)
    ]
    return Graph(letters, edges)
