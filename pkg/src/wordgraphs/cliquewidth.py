"""Clique-width expressions and their construction from local words.

An expression builds a labeled graph from four operations: create a node,
disjoint union, connect all nodes of one label to all nodes of another,
and relabel. `build_expression` turns a word together with a k-block
marking witness into such an expression over the block labels of
`locality.block_labels` plus the reserved all-zero tuple, which tags the
single node not yet wired into the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Union as TypeUnion

from .graphs import Graph, adjacency
from .locality import (
    TWO,
    Label,
    StageTrace,
    block_labels,
    is_k_local_with,
    label_sort_key,
    simulate_marking,
)
from .words import Word, graph_of_word


class RenameCycleError(RuntimeError):
    """The per-stage relabeling map turned out cyclic; this indicates a bug."""


@dataclass(frozen=True)
class Create:
    label: Any
    node: str


@dataclass(frozen=True)
class Union:
    left: "CwdExpression"
    right: "CwdExpression"


@dataclass(frozen=True)
class Connect:
    first: Any
    second: Any
    child: "CwdExpression"

    def __post_init__(self) -> None:
        if self.first == self.second:
            raise ValueError(f"connect needs two distinct labels, got {self.first!r}")


@dataclass(frozen=True)
class Rename:
    old: Any
    new: Any
    child: "CwdExpression"


CwdExpression = TypeUnion[Create, Union, Connect, Rename]


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, Any]


def eval_expression(expr: CwdExpression) -> LabeledGraph:
    """Bottom-up evaluation. Rejects a node id created more than once."""
    nodes, edges, labels = _eval(expr)
    return LabeledGraph(Graph(nodes, edges), labels)


def _eval(expr: CwdExpression) -> tuple[set[str], set[tuple[str, str]], dict[str, Any]]:
    if isinstance(expr, Create):
        return {expr.node}, set(), {expr.node: expr.label}
    if isinstance(expr, Union):
        ln, le, ll = _eval(expr.left)
        rn, re, rl = _eval(expr.right)
        clash = ln & rn
        if clash:
            raise ValueError(f"node(s) {sorted(clash)!r} created on both sides of a union")
        ln |= rn
        le |= re
        ll.update(rl)
        return ln, le, ll
    if isinstance(expr, Connect):
        nodes, edges, labels = _eval(expr.child)
        firsts = [v for v, l in labels.items() if l == expr.first]
        seconds = [v for v, l in labels.items() if l == expr.second]
        for u in firsts:
            for v in seconds:
                edges.add((u, v) if u < v else (v, u))
        return nodes, edges, labels
    if isinstance(expr, Rename):
        nodes, edges, labels = _eval(expr.child)
        for v, l in labels.items():
            if l == expr.old:
                labels[v] = expr.new
        return nodes, edges, labels
    raise TypeError(f"not an expression node: {expr!r}")


def labels_used(expr: CwdExpression) -> frozenset:
    if isinstance(expr, Create):
        return frozenset((expr.label,))
    if isinstance(expr, Union):
        return labels_used(expr.left) | labels_used(expr.right)
    if isinstance(expr, Connect):
        return labels_used(expr.child) | {expr.first, expr.second}
    if isinstance(expr, Rename):
        return labels_used(expr.child) | {expr.old, expr.new}
    raise TypeError(f"not an expression node: {expr!r}")


# ---------------------------------------------------------------------------
# serialization
#
#   expr  := (create LABEL ID) | (union expr expr)
#          | (connect LABEL LABEL expr) | (rename LABEL LABEL expr)
#   LABEL := two | ( BIT+ )
#   ID    := double-quoted string, \" and \\ escaped

class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"parse error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _label_text(label: Any) -> str:
    if label is TWO:
        return "two"
    if (
        isinstance(label, tuple)
        and label
        and all(isinstance(b, int) and b in (0, 1) for b in label)
    ):
        return "(" + " ".join(str(b) for b in label) + ")"
    raise ValueError(f"label {label!r} does not serialize: need a 0/1 tuple or TWO")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def serialize(expr: CwdExpression) -> str:
    if isinstance(expr, Create):
        return f"(create {_label_text(expr.label)} {_quote(expr.node)})"
    if isinstance(expr, Union):
        return f"(union {serialize(expr.left)} {serialize(expr.right)})"
    if isinstance(expr, Connect):
        return (
            f"(connect {_label_text(expr.first)} {_label_text(expr.second)} "
            f"{serialize(expr.child)})"
        )
    if isinstance(expr, Rename):
        return (
            f"(rename {_label_text(expr.old)} {_label_text(expr.new)} "
            f"{serialize(expr.child)})"
        )
    raise TypeError(f"not an expression node: {expr!r}")


@dataclass(frozen=True)
class _Token:
    kind: str  # "(", ")", "atom", "string"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
        elif ch.isspace():
            column += 1
            i += 1
        elif ch in "()":
            tokens.append(_Token(ch, ch, line, column))
            column += 1
            i += 1
        elif ch == '"':
            start_line, start_col = line, column
            i += 1
            column += 1
            out = []
            while True:
                if i >= len(text):
                    raise ParseError("unterminated string", start_line, start_col)
                ch = text[i]
                if ch == "\\":
                    if i + 1 >= len(text) or text[i + 1] not in '"\\':
                        raise ParseError("bad escape in string", line, column)
                    out.append(text[i + 1])
                    i += 2
                    column += 2
                elif ch == '"':
                    i += 1
                    column += 1
                    break
                elif ch == "\n":
                    raise ParseError("newline inside string", line, column)
                else:
                    out.append(ch)
                    i += 1
                    column += 1
            tokens.append(_Token("string", "".join(out), start_line, start_col))
        else:
            start_line, start_col = line, column
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in '()"':
                j += 1
            tokens.append(_Token("atom", text[i:j], start_line, start_col))
            column += j - i
            i = j
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def error(self, message: str) -> ParseError:
        if self.pos < len(self.tokens):
            t = self.tokens[self.pos]
            return ParseError(message, t.line, t.column)
        if self.tokens:
            t = self.tokens[-1]
            return ParseError(message + " (at end of input)", t.line, t.column)
        return ParseError(message + " (empty input)", 1, 1)

    def take(self, kind: str) -> _Token:
        if self.pos >= len(self.tokens) or self.tokens[self.pos].kind != kind:
            raise self.error(f"expected {kind!r}")
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def peek_kind(self) -> str | None:
        if self.pos >= len(self.tokens):
            return None
        return self.tokens[self.pos].kind

    def label(self) -> Label:
        if self.peek_kind() == "atom":
            t = self.take("atom")
            if t.text != "two":
                raise ParseError(f"expected a label, got {t.text!r}", t.line, t.column)
            return TWO
        self.take("(")
        bits = []
        while self.peek_kind() == "atom":
            t = self.take("atom")
            if t.text not in ("0", "1"):
                raise ParseError(f"expected bit 0 or 1, got {t.text!r}", t.line, t.column)
            bits.append(int(t.text))
        self.take(")")
        if not bits:
            raise self.error("a tuple label needs at least one bit")
        return tuple(bits)

    def expr(self) -> CwdExpression:
        self.take("(")
        head = self.take("atom")
        if head.text == "create":
            label = self.label()
            node = self.take("string").text
            out: CwdExpression = Create(label, node)
        elif head.text == "union":
            out = Union(self.expr(), self.expr())
        elif head.text == "connect":
            first = self.label()
            second = self.label()
            child = self.expr()
            if first == second:
                raise ParseError(
                    "connect needs two distinct labels", head.line, head.column
                )
            out = Connect(first, second, child)
        elif head.text == "rename":
            out = Rename(self.label(), self.label(), self.expr())
        else:
            raise ParseError(
                f"expected create/union/connect/rename, got {head.text!r}",
                head.line,
                head.column,
            )
        self.take(")")
        return out


def parse(text: str) -> CwdExpression:
    parser = _Parser(_tokenize(text))
    expr = parser.expr()
    if parser.pos != len(parser.tokens):
        raise parser.error("trailing input after expression")
    return expr


# ---------------------------------------------------------------------------
# construction from a word and a marking witness

def schedule_renames(mapping: dict) -> list[tuple[Any, Any]]:
    """Order the relabelings of one stage so no target gets clobbered.

    mapping sends each present label to its replacement; self-loops are
    dropped. A rename may run only after the rename of its target label,
    so the result is in application order (first entry innermost). A cycle
    among the pending renames cannot be realized and raises.
    """
    pending = {old: new for old, new in mapping.items() if old != new}
    order: list[tuple[Any, Any]] = []
    while pending:
        ready = sorted(
            (old for old in pending if pending[old] not in pending),
            key=label_sort_key,
        )
        if not ready:
            raise RenameCycleError(f"cyclic relabeling among {sorted(pending, key=label_sort_key)!r}")
        for old in ready:
            order.append((old, pending.pop(old)))
    return order


def _merge_label(label: Label, groups: Sequence[Sequence[int]], k: int) -> Label:
    # groups lists, per surviving block, the previous-stage blocks it absorbed
    if label is TWO:
        return TWO
    sums = [sum(label[j] for j in group) for group in groups]
    if any(v >= 2 for v in sums):
        return TWO
    return tuple(sums) + (0,) * (k - len(sums))


def _shift_label(label: Label, positions: Sequence[int], k: int) -> Label:
    # positions[m] is where the m-th surviving block landed among the new blocks
    if label is TWO:
        return TWO
    if any(label[m] for m in range(len(positions), k)):
        raise RuntimeError(f"internal: label {label!r} occupies a vanished block")
    out = [0] * k
    for m, p in enumerate(positions):
        out[p] = label[m]
    return tuple(out)


def _apply_renames(
    expr: CwdExpression, current: dict[str, Label], mapping: dict
) -> tuple[CwdExpression, dict[str, Label]]:
    for old, new in schedule_renames(mapping):
        expr = Rename(old, new, expr)
    return expr, {x: mapping.get(l, l) for x, l in current.items()}


def build_expression(word: Word, sigma: Sequence[str], k: int) -> CwdExpression:
    """Compile a word with a k-block marking witness into an expression.

    Stage by stage the freshly marked letter enters with the reserved
    all-zero label, is wired to the labels of the letters it alternates
    with, and the survivors are relabeled in two passes: block merges add
    up tuple slots (overflow collapsing to TWO), then brand-new blocks
    shift the slots rightwards. Letters sharing a label behave identically
    at every step, which is what keeps the label count at 2^k + 1.

    The result is checked before returning: it must evaluate to the graph
    of the word with the final stage's block labels.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not len(word):
        raise ValueError("the empty word has no expression")
    traces = simulate_marking(word, sigma)
    worst = max(t.block_count for t in traces)
    if worst > k:
        raise ValueError(f"{tuple(sigma)!r} reaches {worst} blocks, more than k={k}")
    target = graph_of_word(word)
    adj = adjacency(target)
    zero = (0,) * k

    expr: CwdExpression | None = None
    current: dict[str, Label] = {}
    for trace in traces:
        a = trace.letter
        piece: CwdExpression = Create(zero, a)
        expr = piece if expr is None else Union(piece, expr)
        neighbour_labels = {current[x] for x in current if x in adj[a]}
        for label in sorted(neighbour_labels, key=label_sort_key):
            holders = [x for x in current if current[x] == label]
            if not all(x in adj[a] for x in holders):
                raise RuntimeError(
                    f"internal: label {label!r} mixes neighbours and non-neighbours of {a!r}"
                )
            expr = Connect(label, zero, expr)
        groups = [org for org in trace.origins if org]
        if current:
            merge_map = {l: _merge_label(l, groups, k) for l in set(current.values())}
            expr, current = _apply_renames(expr, current, merge_map)
            positions = [j for j, org in enumerate(trace.origins) if org]
            shift_map = {l: _shift_label(l, positions, k) for l in set(current.values())}
            expr, current = _apply_renames(expr, current, shift_map)
        stage_labels = block_labels(trace, k)
        expr = Rename(zero, stage_labels[a], expr)
        current[a] = stage_labels[a]
        if current != stage_labels:
            raise RuntimeError(
                f"internal: tracked labels {current!r} disagree with stage {trace.stage_index}"
            )
    assert expr is not None

    outcome = eval_expression(expr)
    if outcome.graph != target:
        raise RuntimeError("internal: expression does not evaluate to the word's graph")
    if outcome.labels != current:
        raise RuntimeError("internal: evaluated labels disagree with the final stage")
    if len(labels_used(expr)) > 2 ** k + 1:
        raise RuntimeError("internal: expression uses more labels than allowed")
    return expr
