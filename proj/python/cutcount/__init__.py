"""Connected subgraph counting, cut-vertex decomposition and extremal search."""

import json

from ._core import (
    Graph,
    blocks,
    closed_form_F,
    closed_form_f,
    complete,
    count,
    count_containing,
    count_decomposed,
    cut_vertices,
    cycle,
    distance,
    family,
    from_edge_list,
    from_graph6,
    girth,
    is_connected,
    path,
    search_json,
    star,
    subgraph_number,
    subgraph_number_decomposed,
    to_edge_list,
    to_graph6,
    verify,
)


def search(n, k=None, girth=None, subset="all", objective="F", jobs=1):
    """Exhaustive minimizer search; returns the JSON report as a dict."""
    return json.loads(search_json(n, k, girth, subset, objective, jobs))


__all__ = [
    "Graph",
    "blocks",
    "closed_form_F",
    "closed_form_f",
    "complete",
    "count",
    "count_containing",
    "count_decomposed",
    "cut_vertices",
    "cycle",
    "distance",
    "family",
    "from_edge_list",
    "from_graph6",
    "girth",
    "is_connected",
    "path",
    "search",
    "search_json",
    "star",
    "subgraph_number",
    "subgraph_number_decomposed",
    "to_edge_list",
    "to_graph6",
    "verify",
]
