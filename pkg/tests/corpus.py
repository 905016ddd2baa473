"""Graph corpora shared by the test suite: exhaustive small block graphs,
random block graphs, and graphs with planted forbidden members."""

from __future__ import annotations

import random
from itertools import combinations

from blockvpg.blocks import bc_canonical_form
from blockvpg.family import enumerate_family
from blockvpg.graphs import Graph, connected_components, induced_subgraph


def attach_clique(g: Graph, at: int, size: int) -> Graph:
    """New graph with a clique of `size` glued to vertex `at` (size-1 new vertices)."""
    new = list(range(g.n, g.n + size - 1))
    members = [at] + new
    edges = list(g.edges) + [(u, v) for u, v in combinations(members, 2)]
    return Graph(g.n + size - 1, edges)


def all_connected_block_graphs(max_n: int) -> dict[int, list[Graph]]:
    """Every unlabeled connected block graph with up to max_n vertices.

    Closure construction: every connected block graph arises from a single
    vertex by repeatedly gluing a clique onto one existing vertex (peel an
    endblock to see the converse). Deduplication is by canonical form.
    """
    by_n: dict[int, dict[str, Graph]] = {1: {bc_canonical_form(Graph(1)): Graph(1)}}
    frontier = [Graph(1)]
    while frontier:
        nxt = []
        for g in frontier:
            for at in range(g.n):
                for size in range(2, max_n - g.n + 2):
                    h = attach_clique(g, at, size)
                    form = bc_canonical_form(h)
                    bucket = by_n.setdefault(h.n, {})
                    if form not in bucket:
                        bucket[form] = h
                        if h.n < max_n:
                            nxt.append(h)
        frontier = nxt
    return {n: [g for _, g in sorted(bucket.items())] for n, bucket in sorted(by_n.items())}


def random_connected_block_graph(
    n: int, rng: random.Random, max_block: int = 5
) -> Graph:
    """Uniform-ish random connected block graph on exactly n vertices."""
    g = Graph(1)
    while g.n < n:
        at = rng.randrange(g.n)
        size = rng.randint(2, min(max_block, n - g.n + 1))
        g = attach_clique(g, at, size)
    return g


def random_planted_graph(
    n: int, rng: random.Random, member_k_max: int = 2
) -> tuple[Graph, int]:
    """Random block graph on <= n vertices containing a forbidden member.

    Starts from a family member (k chosen at random) and pads with random
    blocks; new blocks only add vertices, so the member stays induced.
    Returns the graph and the planted member's k.
    """
    members = enumerate_family(n)
    ks = [k for k in range(member_k_max + 1) if 9 * (k + 1) + 1 <= n]
    k = rng.choice(ks)
    base = [m for m in members if m.n == 9 * (k + 1) + 1]
    g = rng.choice(base)
    target = rng.randint(g.n, n)
    while g.n < target:
        at = rng.randrange(g.n)
        size = rng.randint(2, min(4, target - g.n + 1))
        g = attach_clique(g, at, size)
    return g, k


def brute_force_connected_block_graphs_upto(max_n: int) -> dict[int, int]:
    """Counts of unlabeled connected block graphs by brute force (small n only).

    Independent cross-check for `all_connected_block_graphs`: enumerate all
    labeled graphs, filter, and count isomorphism classes via exhaustive
    isomorphism tests.
    """
    from blockvpg.blocks import validate_block_graph
    from blockvpg.graphs import graphs_isomorphic

    counts: dict[int, int] = {}
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        reps: list[Graph] = []
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph(n, edges)
            if len(connected_components(g)) != 1:
                continue
            if validate_block_graph(g) is not None:
                continue
            if not any(graphs_isomorphic(g, r) for r in reps):
                reps.append(g)
        counts[n] = len(reps)
    return counts
