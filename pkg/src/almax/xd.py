"""Partial presimplicial set attached to a loopless connected multigraph.

For a graph with edges v_0 < ... < v_{n} (n = c-1, edge order = crossing
order) the top cells in dimension n are the vertices; a k-cell for k < n
is a strictly increasing (k+1)-tuple of edges whose complement is a
parallel class (all remaining edges join one common vertex pair).  Face
maps drop one edge when doing so stays inside that rule.  The construction
works for any loopless graph, not only state graphs of diagrams.
"""

from __future__ import annotations

from itertools import combinations

from .presimplicial import EMPTY_PPS, PartialPresimplicialSet
from .state_graph import StateGraph, GraphError, format_vertex, is_connected_graph


def _pair(edge) -> frozenset:
    return frozenset(edge)


def tuple_cell_id(edge_indices) -> str:
    """Canonical id of the cell given by a strictly increasing edge tuple."""
    return "(" + ",".join(f"v{i}" for i in edge_indices) + ")"


def build_xd(graph: StateGraph) -> PartialPresimplicialSet:
    """Build the partial presimplicial set of a loopless connected multigraph.

    The zero-edge graph (single vertex, from the unknot) yields the empty
    set, whose pointed realization plays the role of a (-1)-sphere.
    """
    if graph.loop_edges():
        raise GraphError(f"graph has loop edges at indices {graph.loop_edges()}")
    if not is_connected_graph(graph):
        raise GraphError("graph must be connected")
    c = graph.edge_count
    if c == 0:
        return EMPTY_PPS
    n = c - 1
    pairs = [_pair(e) for e in graph.edges]

    cells: dict[int, tuple[str, ...]] = {}
    members: dict[int, set[tuple[int, ...]]] = {}
    cells[n] = tuple(format_vertex(v) for v in graph.vertices)
    for k in range(n):
        level = []
        for combo in combinations(range(c), k + 1):
            rest = {pairs[i] for i in range(c) if i not in combo}
            if len(rest) <= 1:
                level.append(combo)
        members[k] = set(level)
        cells[k] = tuple(tuple_cell_id(t) for t in level)

    faces: dict[int, dict[str, dict[int, str]]] = {}
    if n >= 1:
        top: dict[str, dict[int, str]] = {}
        all_edges = tuple(range(c))
        for vi, vertex in enumerate(graph.vertices):
            fmap = {}
            for i in range(c):
                if vertex in graph.edges[i]:
                    fmap[i] = tuple_cell_id(all_edges[:i] + all_edges[i + 1:])
            if fmap:
                top[cells[n][vi]] = fmap
        if top:
            faces[n] = top
    for k in range(1, n):
        per_cell: dict[str, dict[int, str]] = {}
        for combo in sorted(members[k]):
            rest_pairs = {pairs[i] for i in range(c) if i not in combo}
            common = next(iter(rest_pairs))  # single class by membership rule
            fmap = {}
            for i, edge_index in enumerate(combo):
                if pairs[edge_index] == common:
                    target = combo[:i] + combo[i + 1:]
                    fmap[i] = tuple_cell_id(target)
            if fmap:
                per_cell[tuple_cell_id(combo)] = fmap
        if per_cell:
            faces[k] = per_cell

    return PartialPresimplicialSet(top_dim=n, cells=cells, faces=faces)


def khovanov_degree(cell_dim: int, crossing_count: int) -> int:
    """Homological degree carried by a cell of the given dimension.

    A cell of dimension k stands for states with crossing_count - (k+1)
    B-labels, hence degree 2k - crossing_count + 2.  Dimension -1 (the
    reduced-homology slot below the cells) is allowed so the dictionary
    covers the full degree range of the almost-extreme column.
    """
    if not -1 <= cell_dim <= max(crossing_count - 1, -1):
        raise ValueError(f"cell dimension {cell_dim} outside -1..{crossing_count - 1}")
    return 2 * cell_dim - crossing_count + 2
