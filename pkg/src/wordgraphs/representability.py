"""Word representations of graphs: occurrence bounds and membership search.

Class "R" with parameter k holds the graphs of words using at most k
copies of each letter; class "L" holds the graphs of k-local words. For
"L" the search may cap every letter at k + 1 copies: a k-local word with
an oversized letter can always be rewritten, see `uniformize`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceededError
from .graphs import Graph, adjacency
from .locality import (
    LETTER_BUDGET_DEFAULT,
    MarkingSequence,
    is_k_local,
    is_k_local_with,
    locality,
)
from .words import Word, graph_of_word, make_word

DECIDE_NODE_BUDGET_DEFAULT = 5


def oversized_letters(
    word: Word,
    k: int,
    sigma: Sequence[str] | None = None,
    *,
    letter_budget: int = LETTER_BUDGET_DEFAULT,
) -> frozenset[str]:
    """Letters of a k-local word with more than k + 1 occurrences.

    The word must be k-local; pass a witnessing sequence or one is
    searched for. Every returned letter is checked to alternate with no
    other letter, which is forced at these occurrence counts.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if sigma is not None:
        if not is_k_local_with(word, sigma, k):
            raise ValueError(f"{sigma!r} does not witness {k}-locality")
    else:
        found, _ = locality(word, letter_budget=letter_budget)
        if found > k:
            raise ValueError(f"word has locality {found}, not {k}-local")
    counts = Counter(word)
    oversized = frozenset(c for c, m in counts.items() if m > k + 1)
    adj = adjacency(graph_of_word(word))
    for c in oversized:
        if adj[c]:
            raise RuntimeError(
                f"internal: oversized letter {c!r} alternates with {sorted(adj[c])!r}"
            )
    return oversized


def uniformize(
    word: Word, k: int, sigma: Sequence[str]
) -> tuple[str | tuple[str, ...], MarkingSequence]:
    """Rewrite a k-local word so every letter occurs at most k + 1 times.

    Oversized letters alternate with nothing, so their occurrences are
    deleted and each such letter is re-introduced as a doubled pair in
    front of the remainder. The witness marks the survivors as before,
    then the prepended letters from the innermost pair outwards; each of
    those stages only grows a single left-expanding block.
    """
    if not is_k_local_with(word, sigma, k):
        raise ValueError(f"{tuple(sigma)!r} does not witness {k}-locality")
    counts = Counter(word)
    oversized = sorted(c for c, m in counts.items() if m > k + 1)
    if not oversized:
        return make_word(word), tuple(sigma)
    over = set(oversized)
    rest = [x for x in word if x not in over]
    prefix = [c for c in oversized for _ in range(2)]
    new_sigma = tuple(c for c in sigma if c not in over) + tuple(reversed(oversized))
    return make_word(prefix + rest), new_sigma


def represent_clique_partition(
    parts: Sequence[Sequence[str]],
) -> tuple[str | tuple[str, ...], MarkingSequence]:
    """A 2-local word whose graph is the disjoint union of the given cliques.

    Lays the parts out as A1..Am Am..A1; same-part letters then alternate
    while cross-part pairs wrap around each other. The witness marks the
    innermost part first, keeping one growing centre block plus at most
    one satellite at every stage.
    """
    ordered = []
    seen: set[str] = set()
    for part in parts:
        members = sorted(part)
        if not members:
            raise ValueError("clique partition parts must be non-empty")
        if len(set(members)) != len(members):
            raise ValueError(f"part {members!r} repeats a node")
        if seen & set(members):
            raise ValueError(f"part {members!r} overlaps an earlier part")
        seen.update(members)
        ordered.append(members)
    if not ordered:
        raise ValueError("need at least one part")
    first = [x for part in ordered for x in part]
    second = [x for part in reversed(ordered) for x in part]
    sigma = tuple(x for part in reversed(ordered) for x in part)
    return make_word(first + second), sigma


@dataclass(frozen=True)
class MembershipQuery:
    """One membership question: does `graph` lie in the class?

    class_kind "R" asks for a word with at most k copies per letter;
    "L" asks for a k-local word. max_len defaults to the complete bound
    (k or k + 1 copies of each of the n letters).
    """

    graph: Graph
    class_kind: str
    k: int
    node_budget: int = DECIDE_NODE_BUDGET_DEFAULT
    max_len: int | None = None


def decide_membership(
    query: MembershipQuery,
) -> tuple[bool, str | tuple[str, ...] | None]:
    """Exhaustive bounded search for a representing word.

    Tries total lengths in ascending order and, within a length, words in
    lexicographic order, so the witness is the lexicographically smallest
    among the shortest. A prefix dies as soon as an edge pair repeats a
    letter in its projection, a non-edge pair can no longer pick up a
    repeat, some letter can no longer appear, or the length can no longer
    be reached. The search space is complete for both classes, so within
    budget the negative answer is sound; a graph over budget raises
    instead of guessing.
    """
    g = query.graph
    k = query.k
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if query.class_kind not in ("L", "R"):
        raise ValueError(f'class_kind must be "L" or "R", got {query.class_kind!r}')
    n = len(g.nodes)
    if n > query.node_budget:
        raise BudgetExceededError(f"graph has {n} nodes, budget is {query.node_budget}")
    if n == 0:
        return True, make_word(())
    letters = g.sorted_nodes()
    maxc = k if query.class_kind == "R" else k + 1
    local_k = None if query.class_kind == "R" else k
    complete_len = maxc * n
    max_len = complete_len if query.max_len is None else min(query.max_len, complete_len)
    edge = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        i, j = letters.index(u), letters.index(v)
        edge[i][j] = edge[j][i] = True
    nonedge_pairs = sum(
        1 for i in range(n) for j in range(i + 1, n) if not edge[i][j]
    )
    for length in range(n, max_len + 1):
        witness = _search_exact_length(letters, edge, maxc, length, local_k, nonedge_pairs)
        if witness is not None:
            return True, make_word(witness)
    if max_len < complete_len:
        raise BudgetExceededError(
            f"no word up to length {max_len}, but only {complete_len} is conclusive"
        )
    return False, None


def _search_exact_length(
    letters: list[str],
    edge: list[list[bool]],
    maxc: int,
    length: int,
    local_k: int | None,
    undoubled_nonedges: int,
) -> list[str] | None:
    """Depth-first lexicographic search for one representing word of the
    exact target length; see decide_membership for the pruning rules."""
    n = len(letters)
    used = [0] * n
    word: list[int] = []
    # pair state, kept in full symmetric form for O(1) access
    last = [[-1] * n for _ in range(n)]
    doubled = [[False] * n for _ in range(n)]

    def dfs(pos: int, zeros: int, capacity: int, pending: int) -> bool:
        if pos == length:
            if pending != 0:
                return False
            if local_k is not None:
                candidate = [letters[i] for i in word]
                if not is_k_local(candidate, local_k):
                    return False
            return True
        slots = length - pos - 1
        for c in range(n):
            if used[c] == maxc:
                continue
            row_last = last[c]
            row_edge = edge[c]
            ok = True
            for d in range(n):
                if d != c and row_last[d] == c and row_edge[d]:
                    ok = False
                    break
            if not ok:
                continue
            new_zeros = zeros - (1 if used[c] == 0 else 0)
            if new_zeros > slots or capacity - 1 < slots:
                continue
            saves = []
            new_pending = pending
            row_doubled = doubled[c]
            for d in range(n):
                if d == c:
                    continue
                saves.append((d, row_last[d], row_doubled[d]))
                if row_last[d] == c and not row_doubled[d]:
                    row_doubled[d] = doubled[d][c] = True
                    new_pending -= 1
                row_last[d] = last[d][c] = c
            used[c] += 1
            feasible = True
            remc = maxc - used[c]
            for d in range(n):
                if d == c or row_edge[d] or row_doubled[d]:
                    continue
                if remc < 1 and maxc - used[d] < 2:
                    feasible = False
                    break
            if feasible:
                word.append(c)
                if dfs(pos + 1, new_zeros, capacity - 1, new_pending):
                    return True
                word.pop()
            used[c] -= 1
            for d, lv, dv in saves:
                row_last[d] = lv
                last[d][c] = lv
                row_doubled[d] = dv
                doubled[d][c] = dv
        return False

    if dfs(0, n, maxc * n, undoubled_nonedges):
        return [letters[i] for i in word]
    return None
