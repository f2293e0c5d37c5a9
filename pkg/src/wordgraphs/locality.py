"""Marking sequences, block structure, and word locality.

A marking sequence enumerates the alphabet of a word. At stage i every
occurrence of the first i letters is marked; a block is a maximal run of
marked positions. A word is k-local when some marking sequence never
produces more than k blocks, and its locality is the least such k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceededError
from .words import Word, alphabet

LETTER_BUDGET_DEFAULT = 12

MarkingSequence = tuple[str, ...]


class _AbsorbingLabel:
    """Label of a letter that occurs at least twice inside one block."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "2"


TWO = _AbsorbingLabel()

# a block label is either TWO or a fixed-width 0/1 tuple, one slot per block
Label = _AbsorbingLabel | tuple[int, ...]


def label_sort_key(label: Label) -> tuple:
    if label is TWO:
        return (1, ())
    return (0, tuple(label))


@dataclass(frozen=True)
class StageTrace:
    """Block structure after one marking stage.

    blocks holds 1-based inclusive position spans. profile maps every
    letter of the alphabet to its per-block occurrence counts; letters not
    yet marked are all-zero. origins lists, per block, the indices of the
    previous stage's blocks it swallowed (empty for a brand-new block).
    """

    stage_index: int
    letter: str
    blocks: tuple[tuple[int, int], ...]
    block_count: int
    marked: frozenset[str]
    profile: dict[str, tuple[int, ...]]
    origins: tuple[tuple[int, ...], ...]


def _check_sequence(word: Word, sigma: Sequence[str]) -> MarkingSequence:
    sig = tuple(sigma)
    letters = alphabet(word)
    if len(sig) != len(set(sig)):
        raise ValueError(f"marking sequence repeats a letter: {sig!r}")
    if set(sig) != set(letters):
        raise ValueError(
            f"marking sequence {sig!r} must enumerate the alphabet {sorted(letters)!r}"
        )
    return sig


def simulate_marking(word: Word, sigma: Sequence[str]) -> list[StageTrace]:
    """Run the marking stages of sigma over the word, returning all traces."""
    sig = _check_sequence(word, sigma)
    n = len(word)
    letters = sorted(alphabet(word))
    marked = [False] * n
    traces: list[StageTrace] = []
    prev: tuple[tuple[int, int], ...] = ()
    for i, c in enumerate(sig, 1):
        for p, x in enumerate(word):
            if x == c:
                marked[p] = True
        blocks: list[tuple[int, int]] = []
        p = 0
        while p < n:
            if marked[p]:
                q = p
                while q + 1 < n and marked[q + 1]:
                    q += 1
                blocks.append((p + 1, q + 1))
                p = q + 1
            else:
                p += 1
        origins = tuple(
            tuple(j for j, (s, e) in enumerate(prev) if lo <= s and e <= hi)
            for lo, hi in blocks
        )
        profile = {
            x: tuple(sum(1 for p in range(lo - 1, hi) if word[p] == x) for lo, hi in blocks)
            for x in letters
        }
        traces.append(
            StageTrace(
                stage_index=i,
                letter=c,
                blocks=tuple(blocks),
                block_count=len(blocks),
                marked=frozenset(sig[:i]),
                profile=profile,
                origins=origins,
            )
        )
        prev = tuple(blocks)
    return traces


def max_block_count(word: Word, sigma: Sequence[str]) -> int:
    """Largest block count any stage of sigma reaches on the word."""
    traces = simulate_marking(word, sigma)
    return max((t.block_count for t in traces), default=0)


def is_k_local_with(word: Word, sigma: Sequence[str], k: int) -> bool:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return max_block_count(word, sigma) <= k


def _positions_by_letter(word: Word) -> dict[str, tuple[int, ...]]:
    positions: dict[str, list[int]] = {}
    for p, x in enumerate(word):
        positions.setdefault(x, []).append(p)
    return {c: tuple(ps) for c, ps in positions.items()}


def locality(
    word: Word, *, letter_budget: int = LETTER_BUDGET_DEFAULT
) -> tuple[int, MarkingSequence]:
    """Exact locality of the word with an optimal marking sequence.

    Depth-first search over marking sequences, expanding letters in sorted
    order and pruning a branch as soon as its running block maximum reaches
    the best complete sequence so far. With that pruning rule the last
    sequence to complete is the lexicographically smallest optimum, which
    is what gets returned.
    """
    letters = sorted(alphabet(word))
    if not letters:
        raise ValueError("the empty word has no locality")
    if len(letters) > letter_budget:
        raise BudgetExceededError(
            f"alphabet has {len(letters)} letters, budget is {letter_budget}"
        )
    n = len(word)
    positions = _positions_by_letter(word)
    marked = bytearray(n)
    used = [False] * len(letters)
    order: list[str] = []
    best_k = n + 1
    best_sigma: MarkingSequence = ()

    def mark(ps: tuple[int, ...]) -> int:
        delta = 0
        for p in ps:
            left = p > 0 and marked[p - 1]
            right = p + 1 < n and marked[p + 1]
            marked[p] = 1
            delta += 1 - (1 if left else 0) - (1 if right else 0)
        return delta

    def unmark(ps: tuple[int, ...]) -> None:
        for p in ps:
            marked[p] = 0

    def dfs(blocks: int, high: int) -> None:
        nonlocal best_k, best_sigma
        if len(order) == len(letters):
            best_k = high
            best_sigma = tuple(order)
            return
        for idx, c in enumerate(letters):
            if used[idx]:
                continue
            ps = positions[c]
            nb = blocks + mark(ps)
            nh = high if high >= nb else nb
            if nh < best_k:
                used[idx] = True
                order.append(c)
                dfs(nb, nh)
                order.pop()
                used[idx] = False
            unmark(ps)

    dfs(0, 0)
    return best_k, best_sigma


def is_k_local(word: Word, k: int, *, letter_budget: int = LETTER_BUDGET_DEFAULT) -> bool:
    """Whether some marking sequence keeps the word within k blocks."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    letters = sorted(alphabet(word))
    if not letters:
        return True
    if len(letters) > letter_budget:
        raise BudgetExceededError(
            f"alphabet has {len(letters)} letters, budget is {letter_budget}"
        )
    n = len(word)
    positions = _positions_by_letter(word)
    marked = bytearray(n)
    used = [False] * len(letters)

    def mark(ps: tuple[int, ...]) -> int:
        delta = 0
        for p in ps:
            left = p > 0 and marked[p - 1]
            right = p + 1 < n and marked[p + 1]
            marked[p] = 1
            delta += 1 - (1 if left else 0) - (1 if right else 0)
        return delta

    def dfs(depth: int, blocks: int) -> bool:
        if depth == len(letters):
            return True
        for idx, c in enumerate(letters):
            if used[idx]:
                continue
            ps = positions[c]
            nb = blocks + mark(ps)
            if nb <= k:
                used[idx] = True
                if dfs(depth + 1, nb):
                    return True
                used[idx] = False
            for p in ps:
                marked[p] = 0
        return False

    return dfs(0, 0)


def block_labels(trace: StageTrace, k: int) -> dict[str, Label]:
    """Label every marked letter of the stage by its block occupancy.

    A letter twice inside one block gets TWO; otherwise a width-k 0/1
    tuple with slot j telling whether the letter sits in block j. Unmarked
    letters are left out.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if trace.block_count > k:
        raise ValueError(
            f"stage {trace.stage_index} has {trace.block_count} blocks, more than k={k}"
        )
    out: dict[str, Label] = {}
    for c in trace.marked:
        prof = trace.profile[c]
        if any(v >= 2 for v in prof):
            out[c] = TWO
        else:
            out[c] = tuple(prof) + (0,) * (k - len(prof))
    return out
