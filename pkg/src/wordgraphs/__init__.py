"""Words, the graphs they represent, marking-based locality, and
clique-width expressions built from marking witnesses."""

from .cliquewidth import (
    Connect,
    Create,
    CwdExpression,
    LabeledGraph,
    ParseError,
    Rename,
    RenameCycleError,
    Union,
    build_expression,
    eval_expression,
    labels_used,
    parse,
    schedule_renames,
    serialize,
)
from .errors import BudgetExceededError
from .graphs import (
    Graph,
    adjacency,
    bell_number,
    clique_partition_graph,
    complete_graph,
    contains_induced,
    crown_graph,
    cycle_graph,
    empty_graph,
    enumerate_labeled_graphs,
    fixture,
    fixture_names,
    graph_from_edge_list_text,
    graph_from_json_text,
    graph_from_text,
    induced_subgraph,
    is_threshold,
    is_threshold_by_obstruction,
    partitionable_into,
    path_graph,
    set_partitions,
    to_edge_list_text,
    to_json_dict,
    to_json_text,
)
from .locality import (
    TWO,
    Label,
    MarkingSequence,
    StageTrace,
    block_labels,
    is_k_local,
    is_k_local_with,
    label_sort_key,
    locality,
    max_block_count,
    simulate_marking,
)
from .representability import (
    MembershipQuery,
    decide_membership,
    oversized_letters,
    represent_clique_partition,
    uniformize,
)
from .words import alphabet, alternates, graph_of_word, make_word, occurrences, project

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Connect",
    "Create",
    "CwdExpression",
    "Graph",
    "Label",
    "LabeledGraph",
    "MarkingSequence",
    "MembershipQuery",
    "ParseError",
    "Rename",
    "RenameCycleError",
    "StageTrace",
    "TWO",
    "Union",
    "adjacency",
    "alphabet",
    "alternates",
    "bell_number",
    "block_labels",
    "build_expression",
    "clique_partition_graph",
    "complete_graph",
    "contains_induced",
    "crown_graph",
    "cycle_graph",
    "decide_membership",
    "empty_graph",
    "enumerate_labeled_graphs",
    "eval_expression",
    "fixture",
    "fixture_names",
    "graph_from_edge_list_text",
    "graph_from_json_text",
    "graph_from_text",
    "graph_of_word",
    "induced_subgraph",
    "is_k_local",
    "is_k_local_with",
    "is_threshold",
    "is_threshold_by_obstruction",
    "label_sort_key",
    "labels_used",
    "locality",
    "make_word",
    "max_block_count",
    "occurrences",
    "oversized_letters",
    "parse",
    "partitionable_into",
    "path_graph",
    "project",
    "represent_clique_partition",
    "schedule_renames",
    "serialize",
    "set_partitions",
    "simulate_marking",
    "to_edge_list_text",
    "to_json_dict",
    "to_json_text",
    "uniformize",
]
