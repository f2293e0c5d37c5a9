"""Simple undirected graphs: construction, generators, and small-scale checks.

Nodes are strings throughout; integer-named graphs use the decimal
spelling of their node numbers. Every exhaustive check takes an explicit
budget and refuses inputs beyond it rather than running without bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetExceededError

NODE_BUDGET_DEFAULT = 10
ENUMERATION_BUDGET_DEFAULT = 5


@dataclass(frozen=True)
class Graph:
    """An undirected graph without self-loops.

    Edges are stored as sorted 2-tuples, so any iterable of pairs may be
    passed and equality is independent of input order.
    """

    nodes: frozenset[str] = frozenset()
    edges: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self) -> None:
        nodes = frozenset(self.nodes)
        if not all(isinstance(v, str) for v in nodes):
            raise TypeError("node ids must be strings")
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in nodes or v not in nodes:
                raise ValueError(f"edge {u!r}-{v!r} leaves the node set")
            edges.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", frozenset(edges))

    def sorted_nodes(self) -> list[str]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)


def adjacency(g: Graph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in g.nodes}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


# ---------------------------------------------------------------------------
# serialization

def to_json_dict(g: Graph) -> dict:
    return {
        "nodes": g.sorted_nodes(),
        "edges": [list(e) for e in g.sorted_edges()],
    }


def to_json_text(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def graph_from_json_text(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "nodes" not in data or "edges" not in data:
        raise ValueError('graph JSON must be an object with "nodes" and "edges"')
    nodes = data["nodes"]
    edges = data["edges"]
    if not isinstance(nodes, list) or not isinstance(edges, list):
        raise ValueError('"nodes" and "edges" must be lists')
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ValueError(f"edge entries must be two-element lists, got {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(nodes, pairs)


def to_edge_list_text(g: Graph) -> str:
    """Edge-list form: one "u v" line per edge plus "node u" for isolated nodes."""
    if "node" in g.nodes:
        raise ValueError('the node id "node" is reserved in edge-list text; use JSON')
    covered = {v for e in g.edges for v in e}
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    lines.extend(f"node {v}" for v in sorted(g.nodes - covered))
    return "\n".join(lines)


def graph_from_edge_list_text(text: str) -> Graph:
    nodes: set[str] = set()
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "node" and len(parts) == 2:
            nodes.add(parts[1])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise ValueError(f"line {lineno}: self-loop at {parts[0]!r}")
            nodes.update(parts)
            edges.append((parts[0], parts[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v' or 'node u', got {raw!r}")
    return Graph(nodes, edges)


def graph_from_text(text: str) -> Graph:
    """Accept either the JSON or the edge-list form."""
    if text.lstrip().startswith("{"):
        return graph_from_json_text(text)
    return graph_from_edge_list_text(text)


# ---------------------------------------------------------------------------
# generators

def _int_nodes(n: int) -> list[str]:
    if n < 0:
        raise ValueError(f"need a non-negative node count, got {n}")
    return [str(i) for i in range(1, n + 1)]


def complete_graph(n: int) -> Graph:
    nodes = _int_nodes(n)
    return Graph(nodes, combinations(nodes, 2))


def empty_graph(n: int) -> Graph:
    return Graph(_int_nodes(n))


def path_graph(n: int) -> Graph:
    nodes = _int_nodes(n)
    return Graph(nodes, zip(nodes, nodes[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 nodes, got {n}")
    nodes = _int_nodes(n)
    return Graph(nodes, list(zip(nodes, nodes[1:])) + [(nodes[-1], nodes[0])])


def crown_graph(n: int) -> Graph:
    """Complete bipartite graph on [n] + [n] minus the perfect matching x-(x+n)."""
    if n < 1:
        raise ValueError(f"need at least one node per side, got {n}")
    nodes = [str(i) for i in range(1, 2 * n + 1)]
    edges = [
        (str(x), str(y + n))
        for x in range(1, n + 1)
        for y in range(1, n + 1)
        if x != y
    ]
    return Graph(nodes, edges)


def clique_partition_graph(parts: Iterable[Iterable[str]]) -> Graph:
    """Disjoint union of cliques, one per part."""
    seen: set[str] = set()
    cleaned: list[list[str]] = []
    for part in parts:
        members = sorted(part)
        if not members:
            raise ValueError("clique partition parts must be non-empty")
        if len(set(members)) != len(members):
            raise ValueError(f"part {members!r} repeats a node")
        if seen & set(members):
            raise ValueError(f"part {members!r} overlaps an earlier part")
        seen.update(members)
        cleaned.append(members)
    edges = [e for part in cleaned for e in combinations(part, 2)]
    return Graph(seen, edges)


_FIXTURE_EDGES: dict[str, tuple[tuple[str, str], ...]] = {
    # the three minimal obstructions for threshold graphs
    "C4": (("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")),
    "2K2": (("1", "2"), ("3", "4")),
    "P4": (("1", "2"), ("2", "3"), ("3", "4")),
    # complete graph used by the two-label expression example
    "K4": (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")),
    # 7-node graph splitting into the two cliques {1,2,3,4} and {5,6,7}
    "E02": (
        ("3", "4"), ("4", "5"), ("5", "6"), ("6", "2"), ("2", "3"),
        ("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("1", "6"),
        ("2", "4"), ("7", "2"), ("7", "4"), ("7", "5"), ("7", "6"),
    ),
    # 7-node graph splitting into the clique {1,2,3,4} and independent {5,6,7}
    "E11": (
        ("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("3", "4"), ("4", "2"),
        ("5", "2"), ("5", "3"), ("6", "3"), ("6", "4"), ("7", "2"), ("7", "4"),
    ),
}

_FIXTURE_NODES: dict[str, tuple[str, ...]] = {
    "C4": ("1", "2", "3", "4"),
    "2K2": ("1", "2", "3", "4"),
    "P4": ("1", "2", "3", "4"),
    "K4": ("a", "b", "c", "d"),
    "E02": ("1", "2", "3", "4", "5", "6", "7"),
    "E11": ("1", "2", "3", "4", "5", "6", "7"),
}


def fixture(name: str) -> Graph:
    key = name.upper()
    if key not in _FIXTURE_EDGES:
        known = ", ".join(sorted(_FIXTURE_EDGES))
        raise ValueError(f"unknown fixture {name!r}; known: {known}")
    return Graph(_FIXTURE_NODES[key], _FIXTURE_EDGES[key])


def fixture_names() -> list[str]:
    return sorted(_FIXTURE_EDGES)


# ---------------------------------------------------------------------------
# subgraphs and recognition

def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    members = frozenset(keep)
    if not members <= g.nodes:
        raise ValueError(f"nodes {sorted(members - g.nodes)} are not in the graph")
    return Graph(members, (e for e in g.edges if e[0] in members and e[1] in members))


def _isomorphic(g: Graph, h: Graph) -> bool:
    if len(g.nodes) != len(h.nodes) or len(g.edges) != len(h.edges):
        return False
    gadj = adjacency(g)
    hadj = adjacency(h)
    if sorted(len(ns) for ns in gadj.values()) != sorted(len(ns) for ns in hadj.values()):
        return False
    # highest degree first keeps the backtracking shallow
    hnodes = sorted(h.nodes, key=lambda v: (-len(hadj[v]), v))
    gnodes = sorted(g.nodes)
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(hnodes):
            return True
        hv = hnodes[i]
        for gv in gnodes:
            if gv in used or len(gadj[gv]) != len(hadj[hv]):
                continue
            if all((hu in hadj[hv]) == (gu in gadj[gv]) for hu, gu in mapping.items()):
                mapping[hv] = gv
                used.add(gv)
                if extend(i + 1):
                    return True
                del mapping[hv]
                used.discard(gv)
        return False

    return extend(0)


def contains_induced(g: Graph, h: Graph, *, node_budget: int = NODE_BUDGET_DEFAULT) -> bool:
    """Whether some induced subgraph of g is isomorphic to h (exhaustive)."""
    if len(g.nodes) > node_budget:
        raise BudgetExceededError(
            f"graph has {len(g.nodes)} nodes, budget is {node_budget}"
        )
    size = len(h.nodes)
    if size > len(g.nodes):
        return False
    for subset in combinations(g.sorted_nodes(), size):
        if _isomorphic(induced_subgraph(g, subset), h):
            return True
    return False


def is_threshold(g: Graph) -> bool:
    """Reduce by repeatedly deleting an isolated node, else a universal one.

    The graph is threshold exactly when this reaches the empty graph. The
    victim is the lowest-named candidate so runs are reproducible.
    """
    adj = adjacency(g)
    while adj:
        isolated = [v for v, ns in adj.items() if not ns]
        if isolated:
            victim = min(isolated)
        else:
            full = len(adj) - 1
            universal = [v for v, ns in adj.items() if len(ns) == full]
            if not universal:
                return False
            victim = min(universal)
        adj.pop(victim)
        for ns in adj.values():
            ns.discard(victim)
    return True


def is_threshold_by_obstruction(g: Graph, *, node_budget: int = NODE_BUDGET_DEFAULT) -> bool:
    """Threshold test by the forbidden induced subgraphs C4, 2K2 and P4."""
    return not any(
        contains_induced(g, fixture(name), node_budget=node_budget)
        for name in ("C4", "2K2", "P4")
    )


def partitionable_into(
    g: Graph,
    independent_parts: int,
    clique_parts: int,
    *,
    node_budget: int = NODE_BUDGET_DEFAULT,
) -> tuple[bool, tuple[tuple[str, frozenset[str]], ...] | None]:
    """Search for a split of the nodes into the requested number of
    independent sets and cliques; parts may stay empty.

    Returns (ok, certificate) where the certificate lists the non-empty
    parts as (kind, nodes) pairs. Same-kind parts are interchangeable, so
    a node only ever opens the first empty part of each kind.
    """
    if independent_parts < 0 or clique_parts < 0:
        raise ValueError("part counts must be non-negative")
    if len(g.nodes) > node_budget:
        raise BudgetExceededError(
            f"graph has {len(g.nodes)} nodes, budget is {node_budget}"
        )
    nodes = g.sorted_nodes()
    adj = adjacency(g)
    kinds = ("independent",) * independent_parts + ("clique",) * clique_parts
    parts: list[set[str]] = [set() for _ in kinds]

    def fits(v: str, p: int) -> bool:
        if kinds[p] == "independent":
            return not (adj[v] & parts[p])
        return parts[p] <= adj[v]

    def assign(i: int) -> bool:
        if i == len(nodes):
            return True
        v = nodes[i]
        opened: set[str] = set()
        for p, kind in enumerate(kinds):
            if not parts[p]:
                if kind in opened:
                    continue
                opened.add(kind)
            if fits(v, p):
                parts[p].add(v)
                if assign(i + 1):
                    return True
                parts[p].remove(v)
        return False

    if assign(0):
        certificate = tuple(
            (kinds[p], frozenset(parts[p])) for p in range(len(kinds)) if parts[p]
        )
        return True, certificate
    return False, None


# ---------------------------------------------------------------------------
# counting and enumeration

def bell_number(n: int) -> int:
    """Exact number of partitions of an n-element set, by the Bell triangle."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[-1]


def set_partitions(items: Iterable) -> Iterator[tuple[tuple, ...]]:
    """All partitions of the items, in a fixed recursive order.

    Each element either joins an existing part or opens a new one, so parts
    keep the input order of their first members.
    """
    seq = list(items)

    def rec(i: int, parts: list[list]):
        if i == len(seq):
            yield tuple(tuple(p) for p in parts)
            return
        x = seq[i]
        for p in parts:
            p.append(x)
            yield from rec(i + 1, parts)
            p.pop()
        parts.append([x])
        yield from rec(i + 1, parts)
        parts.pop()

    yield from rec(0, [])


def enumerate_labeled_graphs(
    n: int, *, node_budget: int = ENUMERATION_BUDGET_DEFAULT
) -> Iterator[Graph]:
    """All 2^(n choose 2) graphs on nodes "1".."n", in binary-counter order."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n > node_budget:
        raise BudgetExceededError(f"{n} nodes exceeds the enumeration budget {node_budget}")
    nodes = _int_nodes(n)
    pairs = sorted(combinations(sorted(nodes), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(nodes, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
