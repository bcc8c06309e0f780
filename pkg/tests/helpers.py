"""Shared test machinery: independent oracles and fixture generators.

The circle-count oracle traces circles through the smoothings as cycles of
a permutation, with no union-find involved; the SNF oracle recovers
invariant factors from gcds of k x k minors.  Both are deliberately
different algorithms from the ones inside the package.
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement, permutations

from almax.diagram import Diagram, State


# --- independent circle counting --------------------------------------------

_A_MATCH = {0: 1, 1: 0, 2: 3, 3: 2}
_B_MATCH = {0: 3, 3: 0, 1: 2, 2: 1}


def trace_circle_count(diagram: Diagram, state: State) -> int:
    """Count resolution circles as permutation cycles.

    The arc pairing and the smoothing pairing are two perfect matchings on
    arc ends; every circle is an alternating cycle of the two and splits
    into exactly two cycles of their composition, so the circle count is
    half the cycle count of the composed permutation.
    """
    c = diagram.crossing_count
    if c == 0:
        return 1
    arc_partner = {}
    occ = {}
    for ci, quad in enumerate(diagram.crossings):
        for slot, arc in enumerate(quad):
            occ.setdefault(arc, []).append((ci, slot))
    for ends in occ.values():
        arc_partner[ends[0]] = ends[1]
        arc_partner[ends[1]] = ends[0]

    def smooth_partner(end):
        ci, slot = end
        match = _A_MATCH if state.labels[ci] == "A" else _B_MATCH
        return (ci, match[slot])

    seen = set()
    cycles = 0
    for start in arc_partner:
        if start in seen:
            continue
        cycles += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = arc_partner[smooth_partner(cur)]
    assert cycles % 2 == 0
    return cycles // 2


# --- fixture generators ------------------------------------------------------


def braid_pd(word, strands: int) -> Diagram:
    """Trace closure of a braid word; +k is sigma_k (left strand under)."""
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0]

    top = [fresh() for _ in range(strands)]
    cur = list(top)
    crossings = []
    for g in word:
        k = abs(g) - 1
        in_left, in_right = cur[k], cur[k + 1]
        out_left, out_right = fresh(), fresh()
        if g > 0:
            crossings.append((in_left, out_left, out_right, in_right))
        else:
            crossings.append((in_right, in_left, out_left, out_right))
        cur[k], cur[k + 1] = out_left, out_right
    ident = {cur[s]: top[s] for s in range(strands)}

    def rep(a):
        while a in ident:
            a = ident[a]
        return a

    return Diagram(tuple(tuple(rep(e) for e in q) for q in crossings))


def rotation_pd(rotation: dict) -> Diagram:
    """Alternating-style diagram from a rotation system; its all-A graph is the input graph.

    rotation maps vertex -> cyclic list of edge ids; each edge id occurs at
    exactly two positions overall.  Crossings come in sorted edge-id order.
    """
    arc_ids: dict = {}

    def arc(vertex, gap):
        return arc_ids.setdefault((vertex, gap), len(arc_ids) + 1)

    incidences: dict = {}
    for v, rot in rotation.items():
        for pos, e in enumerate(rot):
            incidences.setdefault(e, []).append((v, pos))
    quads = []
    for e in sorted(incidences):
        (u, pu), (v, pv) = incidences[e]
        du, dv = len(rotation[u]), len(rotation[v])
        quads.append(
            (arc(u, (pu - 1) % du), arc(u, pu), arc(v, (pv - 1) % dv), arc(v, pv))
        )
    return Diagram(tuple(quads))


def torus_two_strand(q: int) -> Diagram:
    """Standard diagram of the (2, q) torus link: two vertices, q parallel edges."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return rotation_pd({"u": list(range(q)), "w": list(reversed(range(q)))})


def component_count(diagram: Diagram) -> int:
    """Link components, by following strands straight through each crossing."""
    if diagram.crossing_count == 0:
        return 1
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for (a, b, c, d) in diagram.crossings:
        union(a, c)
        union(b, d)
    return len({find(a) for a in diagram.arc_ids()})


# --- exhaustive multigraph enumeration ---------------------------------------


def connected_multigraphs(max_edges: int):
    """All loopless connected multigraphs with at most max_edges edges, up to iso.

    Yields (vertex_count, edges) with vertices 0..v-1 and edges as a sorted
    tuple of sorted pairs.  Includes the single-vertex edgeless graph.
    """
    yield (1, ())
    for v in range(2, max_edges + 2):
        pairs = list(combinations(range(v), 2))
        seen = set()
        for e in range(max(1, v - 1), max_edges + 1):
            for multi in combinations_with_replacement(pairs, e):
                if not _spanning_connected(v, multi):
                    continue
                canon = _canonical_form(v, multi)
                if canon in seen:
                    continue
                seen.add(canon)
                yield (v, canon)


def _spanning_connected(v: int, edges) -> bool:
    adj = {i: set() for i in range(v)}
    touched = set()
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
        touched.update((a, b))
    if len(touched) != v:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == v


def _canonical_form(v: int, edges) -> tuple:
    best = None
    for perm in permutations(range(v)):
        relabeled = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


# --- SNF oracle ---------------------------------------------------------------


def _det(matrix) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for col in range(n):
        if matrix[0][col]:
            minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
            total += (-1) ** col * matrix[0][col] * _det(minor)
    return total


def snf_minor_gcd(dense) -> tuple[int, ...]:
    """Invariant factors via gcds of k x k minors: d_1...d_k = gcd(minors_k).

    Exponential in the matrix size; use on small matrices only.
    """
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    gcds = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = [[dense[r][c] for c in csel] for r in rsel]
                g = math.gcd(g, _det(sub))
        if g == 0:
            break
        gcds.append(g)
    factors = []
    prev = 1
    for g in gcds:
        factors.append(g // prev)
        prev = g
    return tuple(factors)
