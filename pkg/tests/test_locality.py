from __future__ import annotations

import itertools
import random

import pytest

from wordgraphs import (
    TWO,
    block_labels,
    is_k_local,
    is_k_local_with,
    label_sort_key,
    locality,
    max_block_count,
    simulate_marking,
)
from wordgraphs.errors import BudgetExceededError


def oracle_locality(word):
    """Try every marking sequence; return (best k, lexicographically
    smallest witness among the best)."""
    letters = sorted(set(word))
    if not letters:
        return 0, ()
    best = None
    for sigma in itertools.permutations(letters):
        m = max_block_count(word, sigma)
        key = (m, sigma)
        if best is None or key < best:
            best = key
    return best


def spans(trace):
    return [t.blocks for t in trace]


def counts(trace):
    return [t.block_count for t in trace]


def test_simulate_marking_reappear():
    trace = simulate_marking("reappear", ("e", "a", "r", "p"))
    assert counts(trace) == [2, 2, 2, 1]
    assert spans(trace) == [
        ((2, 2), (6, 6)),
        ((2, 3), (6, 7)),
        ((1, 3), (6, 8)),
        ((1, 8),),
    ]


def test_simulate_marking_pepper_two_sequences():
    assert counts(simulate_marking("pepper", ("r", "p", "e"))) == [1, 3, 1]
    assert max_block_count("pepper", ("p", "e", "r")) == 2


def test_simulate_marking_profile_and_origins():
    trace = simulate_marking("banana", ("n", "a", "b"))
    # stage 1: n at positions 3 and 5 -> two singleton blocks
    assert trace[0].blocks == ((3, 3), (5, 5))
    assert trace[0].profile["n"] == (1, 1)
    assert trace[0].profile["a"] == (0, 0)
    # stage 2: a joins everything from position 2 on into one block
    assert trace[1].blocks == ((2, 6),)
    assert trace[1].origins == ((0, 1),)
    assert trace[1].profile == {"a": (3,), "b": (0,), "n": (2,)}
    # stage 3: whole word
    assert trace[2].blocks == ((1, 6),)
    assert trace[2].profile == {"a": (3,), "b": (1,), "n": (2,)}


def test_simulate_marking_rejects_non_permutations():
    with pytest.raises(ValueError):
        simulate_marking("ab", ("a",))
    with pytest.raises(ValueError):
        simulate_marking("ab", ("a", "a"))
    with pytest.raises(ValueError):
        simulate_marking("ab", ("a", "b", "c"))


def test_locality_pepper():
    assert locality("pepper") == (2, ("e", "p", "r"))


def test_locality_banana_witness_is_unique():
    assert locality("banana") == (2, ("n", "a", "b"))
    others = [
        sigma
        for sigma in itertools.permutations("abn")
        if max_block_count("banana", sigma) <= 2
    ]
    assert others == [("n", "a", "b")]


def test_locality_edge_cases():
    with pytest.raises(ValueError):
        locality("")
    assert is_k_local("", 1)
    assert locality("a") == (1, ("a",))
    assert locality("aaaa") == (1, ("a",))
    assert locality("ab") == (1, ("a", "b"))


def test_locality_matches_exhaustive_oracle():
    rng = random.Random(41)
    for _ in range(400):
        n = rng.randrange(1, 11)
        word = "".join(rng.choice("abcde") for _ in range(n))
        assert locality(word) == oracle_locality(word), word


def test_locality_matches_oracle_on_all_short_words():
    for n in range(1, 7):
        for combo in itertools.product("abc", repeat=n):
            word = "".join(combo)
            assert locality(word) == oracle_locality(word), word


def test_is_k_local_agrees_with_locality():
    rng = random.Random(43)
    for _ in range(200):
        word = "".join(rng.choice("abcd") for _ in range(rng.randrange(1, 10)))
        k_min, _ = locality(word)
        assert not is_k_local(word, max(1, k_min - 1)) or k_min <= max(1, k_min - 1)
        assert is_k_local(word, k_min)
        assert is_k_local(word, k_min + 1)


def test_is_k_local_with_requires_positive_k():
    with pytest.raises(ValueError):
        is_k_local_with("ab", ("a", "b"), 0)


def test_letter_budget_enforced():
    word = "abcdefghijklm"  # 13 distinct letters
    with pytest.raises(BudgetExceededError):
        locality(word)
    with pytest.raises(BudgetExceededError):
        is_k_local(word, 1)
    assert locality(word, letter_budget=13) == (1, tuple("abcdefghijklm"))


def test_block_labels_banana():
    trace = simulate_marking("banana", ("n", "a", "b"))
    assert block_labels(trace[0], 2) == {"n": (1, 1)}
    assert block_labels(trace[1], 2) == {"a": TWO, "n": TWO}
    assert block_labels(trace[2], 2) == {"a": TWO, "b": (1, 0), "n": TWO}


def test_block_labels_single_occurrences():
    trace = simulate_marking("ab", ("a", "b"))
    assert block_labels(trace[0], 1) == {"a": (1,)}
    assert block_labels(trace[1], 1) == {"a": (1,), "b": (1,)}
    # wider k pads with zeros
    assert block_labels(trace[0], 3) == {"a": (1, 0, 0)}


def test_block_labels_rejects_too_many_blocks():
    trace = simulate_marking("aba", ("a", "b"))
    with pytest.raises(ValueError):
        block_labels(trace[0], 1)


def test_label_sort_key_orders_tuples_before_two():
    labels = [TWO, (1, 0), (0, 1), (1, 1)]
    assert sorted(labels, key=label_sort_key) == [(0, 1), (1, 0), (1, 1), TWO]
