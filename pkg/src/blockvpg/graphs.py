"""Core graph type and small-graph utilities used by every other module."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations


class GraphInputError(ValueError):
    """Structurally invalid input to a graph operation."""


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Edges are normalized to sorted pairs and deduplicated; adjacency sets are
    derived once at construction. Instances are treated as immutable values.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        self.n = n
        edge_set: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            edge_set.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.edges = frozenset(edge_set)
        self.adj = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by `vertices`, relabeled 0..k-1 in sorted order.

    Returns the subgraph together with the relabeling map: entry i holds the
    original identifier of new vertex i.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(keep), edges), keep


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        out.append(sorted(comp))
    return out


def find_induced_copy(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """Search for an induced copy of `pattern` inside `host`.

    Returns an injection phi with (u, v) an edge of the pattern iff
    (phi(u), phi(v)) is an edge of the host, or None when no copy exists.
    Backtracking over host candidates in ascending order, pruned by degree
    and by adjacency consistency with already-mapped pattern vertices, so the
    returned injection is deterministic. Intended for small patterns.
    """
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return None
    if np_ == 0:
        return {}

    pdeg = [pattern.degree(v) for v in range(np_)]
    # Order pattern vertices so each one (after the first) touches the already
    # ordered prefix as much as possible; connectivity drives the pruning.
    first = max(range(np_), key=lambda v: (pdeg[v], -v))
    order = [first]
    placed = {first}
    while len(order) < np_:
        best = max(
            (v for v in range(np_) if v not in placed),
            key=lambda v: (sum(1 for u in pattern.adj[v] if u in placed), pdeg[v], -v),
        )
        order.append(best)
        placed.add(best)

    hadj = [0] * nh
    for u in range(nh):
        for w in host.adj[u]:
            hadj[u] |= 1 << w
    hdeg = [host.degree(u) for u in range(nh)]
    full = (1 << nh) - 1
    assignment = [-1] * np_

    def backtrack(i: int, used: int) -> bool:
        if i == np_:
            return True
        pv = order[i]
        cand = full & ~used
        for j in range(i):
            pu = order[j]
            hu = assignment[pu]
            if pattern.has_edge(pv, pu):
                cand &= hadj[hu]
            else:
                cand &= ~hadj[hu]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            hv = low.bit_length() - 1
            if hdeg[hv] < pdeg[pv]:
                continue
            assignment[pv] = hv
            if backtrack(i + 1, used | low):
                return True
            assignment[pv] = -1
        return False

    if backtrack(0, 0):
        return {v: assignment[v] for v in range(np_)}
    return None


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism test for small graphs via induced-copy search."""
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degree(v) for v in range(a.n)) != sorted(b.degree(v) for v in range(b.n)):
        return False
    return find_induced_copy(a, b) is not None
