"""Minimal proper edge coloring of bipartite graphs.

By Koenig's theorem the chromatic index of a bipartite (multi)graph equals
its maximum degree Delta, and this module always returns a coloring with
exactly Delta colors.

The algorithm pads the graph with dummy edges to a Delta-regular bipartite
multigraph and then recursively splits it:

* even degree d: an Euler partition splits the edge set into two
  d/2-regular halves colored with disjoint palettes;
* odd degree d: a perfect matching (Hopcroft-Karp) is peeled off as one
  color class, leaving a (d-1)-regular graph.

Everything is deterministic: ties are broken by edge/vertex index order,
so the same graph always yields the same coloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class BipartiteGraph:
    """A simple bipartite graph; edges are (left_vertex, right_vertex)."""

    left_count: int
    right_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.left_count and 0 <= v < self.right_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def max_degree(self) -> int:
        if not self.edges:
            return 0
        dl = [0] * self.left_count
        dr = [0] * self.right_count
        for u, v in self.edges:
            dl[u] += 1
            dr[v] += 1
        return max(max(dl), max(dr))


@dataclass(frozen=True)
class EdgeColoring:
    """A proper edge coloring; colors are 0 .. num_colors-1."""

    color_of: dict
    num_colors: int

    def layers(self, graph: BipartiteGraph) -> list[list[tuple[int, int]]]:
        """Edges grouped by color, each layer in input edge order."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_colors)]
        for e in graph.edges:
            out[self.color_of[e]].append(e)
        return out


def color_edges(graph: BipartiteGraph) -> EdgeColoring:
    """Properly color the edges with exactly max_degree colors."""
    if not graph.edges:
        return EdgeColoring({}, 0)

    # Compact away isolated vertices so padding cost scales with the
    # number of edges, not the declared vertex counts.
    lmap: dict[int, int] = {}
    rmap: dict[int, int] = {}
    for u, v in graph.edges:
        lmap.setdefault(u, len(lmap))
        rmap.setdefault(v, len(rmap))

    dl = [0] * len(lmap)
    dr = [0] * len(rmap)
    eu = []
    ev = []
    for u, v in graph.edges:
        cu, cv = lmap[u], rmap[v]
        eu.append(cu)
        ev.append(cv)
        dl[cu] += 1
        dr[cv] += 1
    delta = max(max(dl), max(dr))

    # Pad with dummy vertices/edges to a delta-regular bipartite multigraph.
    nside = max(len(lmap), len(rmap))
    dl += [0] * (nside - len(dl))
    dr += [0] * (nside - len(dr))
    li, ri = 0, 0
    while True:
        while li < nside and dl[li] == delta:
            li += 1
        if li == nside:
            break
        while dr[ri] == delta:
            ri += 1
        take = min(delta - dl[li], delta - dr[ri])
        for _ in range(take):
            eu.append(li)
            ev.append(ri)
        dl[li] += take
        dr[ri] += take

    colors = [-1] * len(eu)
    _color_regular(eu, ev, nside, list(range(len(eu))), delta, 0, colors)

    color_of = {graph.edges[k]: colors[k] for k in range(len(graph.edges))}
    return EdgeColoring(color_of, delta)


def _color_regular(eu, ev, nside, edge_ids, d, base, colors):
    """Color a d-regular bipartite multigraph (given by edge ids) with
    colors base .. base+d-1."""
    if d == 1:
        for k in edge_ids:
            colors[k] = base
        return
    if d % 2 == 0:
        half_a, half_b = _euler_split(eu, ev, nside, edge_ids)
        _color_regular(eu, ev, nside, half_a, d // 2, base, colors)
        _color_regular(eu, ev, nside, half_b, d // 2, base + d // 2, colors)
        return
    matched = _perfect_matching(eu, ev, nside, edge_ids)
    rest = []
    for k in edge_ids:
        if k in matched:
            colors[k] = base
        else:
            rest.append(k)
    _color_regular(eu, ev, nside, rest, d - 1, base + 1, colors)


def _euler_split(eu, ev, nside, edge_ids):
    """Split an even-regular bipartite multigraph into two halves with
    equal degrees, by alternating along Euler circuits."""
    # Vertex encoding: left u -> u, right v -> nside + v.
    adj: list[list[int]] = [[] for _ in range(2 * nside)]
    for k in edge_ids:
        adj[eu[k]].append(k)
        adj[nside + ev[k]].append(k)
    used = set()
    ptr = [0] * (2 * nside)
    half_a, half_b = [], []
    for k0 in edge_ids:
        if k0 in used:
            continue
        # Walk a closed trail starting from this edge's left endpoint.
        # All degrees are even, so the walk can only get stuck back at
        # the start, and bipartiteness makes its length even.
        pos = eu[k0]
        side = 0
        while True:
            lst = adj[pos]
            i = ptr[pos]
            while i < len(lst) and lst[i] in used:
                i += 1
            ptr[pos] = i
            if i == len(lst):
                break
            k = lst[i]
            used.add(k)
            (half_a if side == 0 else half_b).append(k)
            side ^= 1
            pos = nside + ev[k] if pos < nside else eu[k]
    return half_a, half_b


def _perfect_matching(eu, ev, nside, edge_ids):
    """Perfect matching in a regular bipartite multigraph, as a set of
    edge ids, via Hopcroft-Karp."""
    adj: list[list[int]] = [[] for _ in range(nside)]
    for k in edge_ids:
        adj[eu[k]].append(k)
    match_l = [-1] * nside  # edge id matched at left vertex
    match_r = [-1] * nside
    # Greedy warm start.
    for k in edge_ids:
        if match_l[eu[k]] == -1 and match_r[ev[k]] == -1:
            match_l[eu[k]] = k
            match_r[ev[k]] = k

    inf = float("inf")
    while True:
        # BFS layers over free left vertices.
        dist = [inf] * nside
        q = deque()
        for u in range(nside):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
        found = False
        while q:
            u = q.popleft()
            for k in adj[u]:
                mk = match_r[ev[k]]
                if mk == -1:
                    found = True
                elif dist[eu[mk]] is inf:
                    dist[eu[mk]] = dist[u] + 1
                    q.append(eu[mk])
        if not found:
            break

        # Layered augmentation (iterative DFS).
        it = [0] * nside
        for u0 in range(nside):
            if match_l[u0] != -1:
                continue
            stack = [u0]
            path = []  # edge ids along the alternating path
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < len(adj[u]):
                    k = adj[u][it[u]]
                    it[u] += 1
                    mk = match_r[ev[k]]
                    if mk == -1:
                        # Augment along path + k.
                        path.append(k)
                        for pk in path:
                            match_l[eu[pk]] = pk
                            match_r[ev[pk]] = pk
                        stack = []
                        path = []
                        advanced = True
                        break
                    nxt = eu[mk]
                    if dist[nxt] == dist[u] + 1:
                        stack.append(nxt)
                        path.append(k)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf  # dead end; prune
                    stack.pop()
                    if path:
                        path.pop()
    matched = {k for k in match_l if k != -1}
    if len(matched) != nside:
        raise AssertionError("regular bipartite graph must have a perfect matching")
    return matched


def graph_of_matrix(matrix) -> BipartiteGraph:
    """Bipartite graph of a bit matrix: inputs (columns) on the left,
    outputs (rows) on the right, one edge per nonzero entry."""
    edges = []
    for j, r in enumerate(matrix.rows):
        while r:
            low = r & -r
            edges.append((low.bit_length() - 1, j))
            r ^= low
    return BipartiteGraph(matrix.n, matrix.n, tuple(edges))
