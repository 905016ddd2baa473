"""Blocks, cutpoints, the block-cutpoint tree, and block-graph validation."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, GraphInputError, connected_components


class BlockClass(enum.Enum):
    ENDBLOCK = "endblock"
    ALMOST_ENDBLOCK = "almost_endblock"
    INTERNAL = "internal"


@dataclass(frozen=True)
class NotBlockGraphWitness:
    """A block whose induced subgraph is not complete, with one missing pair."""

    block_index: int
    block: tuple[int, ...]
    nonadjacent: tuple[int, int]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cutpoints and their incidence (the block-cutpoint tree).

    Blocks are maximal 2-connected vertex sets; a bridge edge is a block of
    size 2, and a single-vertex graph has the one block {0}. `blocks_of`
    lists, for every vertex, the indices of the blocks containing it; a
    vertex is a cutpoint exactly when that list has length >= 2.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    cutpoints: tuple[int, ...]
    block_cutpoints: tuple[tuple[int, ...], ...]
    blocks_of: tuple[tuple[int, ...], ...]

    def is_cutpoint(self, v: int) -> bool:
        return len(self.blocks_of[v]) >= 2

    def bc_edges(self) -> list[tuple[int, int]]:
        """Edges of the block-cutpoint tree as (block index, cutpoint) pairs."""
        return [(b, c) for b in range(len(self.blocks)) for c in self.block_cutpoints[b]]


def decompose(g: Graph) -> BlockDecomposition:
    """Biconnected components of a connected graph, in deterministic order.

    Single-pass lowpoint depth-first traversal rooted at vertex 0; the block
    list is sorted by (smallest contained vertex, size) so downstream results
    are reproducible.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        raise GraphInputError(
            "graph is disconnected: separate components contain vertices "
            f"{comps[0][0]} and {comps[1][0]}"
        )
    if g.n == 0:
        raise GraphInputError("empty graph has no block decomposition")
    if g.n == 1:
        return BlockDecomposition(1, ((0,),), (), ((),), ((0,),))

    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[set[int]] = []

    # Iterative DFS; neighbors explored in ascending order.
    nbrs = [sorted(g.adj[v]) for v in range(g.n)]
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # (vertex, parent, next index)
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, parent, idx = stack.pop()
        advanced = False
        while idx < len(nbrs[v]):
            w = nbrs[v][idx]
            idx += 1
            if w == parent:
                continue
            if disc[w] == -1:
                edge_stack.append((v, w))
                stack.append((v, parent, idx))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, 0))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        # v is finished; propagate lowpoint and pop its block if v closes one.
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                members: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    members.update(e)
                    if e == (parent, v):
                        break
                raw_blocks.append(members)

    blocks = tuple(
        tuple(sorted(b))
        for b in sorted(raw_blocks, key=lambda b: (min(b), len(b), tuple(sorted(b))))
    )
    blocks_of: list[list[int]] = [[] for _ in range(g.n)]
    for i, b in enumerate(blocks):
        for v in b:
            blocks_of[v].append(i)
    cutpoints = tuple(v for v in range(g.n) if len(blocks_of[v]) >= 2)
    cutset = set(cutpoints)
    block_cutpoints = tuple(tuple(v for v in b if v in cutset) for b in blocks)
    return BlockDecomposition(
        g.n,
        blocks,
        cutpoints,
        block_cutpoints,
        tuple(tuple(bs) for bs in blocks_of),
    )


def validate_block_graph(g: Graph) -> NotBlockGraphWitness | None:
    """None when every block induces a complete graph, else a concrete witness."""
    d = decompose(g)
    for i, b in enumerate(d.blocks):
        for j, u in enumerate(b):
            for v in b[j + 1:]:
                if not g.has_edge(u, v):
                    return NotBlockGraphWitness(i, b, (u, v))
    return None


def classify_block(d: BlockDecomposition, block_index: int) -> BlockClass:
    """Endblock / almost endblock / internal classification of one block.

    A graph consisting of a single block has no cutpoints; that block counts
    as an endblock so the one-block base case stays uniform.
    """
    cps = d.block_cutpoints[block_index]
    if len(cps) <= 1:
        return BlockClass.ENDBLOCK
    touching = 0
    for c in cps:
        if any(
            len(d.block_cutpoints[b]) != 1
            for b in d.blocks_of[c]
            if b != block_index
        ):
            touching += 1
    if touching == 1:
        return BlockClass.ALMOST_ENDBLOCK
    return BlockClass.INTERNAL


def cutpoint_multiplicity(d: BlockDecomposition, c: int) -> int:
    """Number of blocks containing the cutpoint c."""
    if not (0 <= c < d.n) or not d.is_cutpoint(c):
        raise GraphInputError(f"vertex {c} is not a cutpoint")
    return len(d.blocks_of[c])


def is_two_cutpoint(d: BlockDecomposition, c: int) -> bool:
    """Cutpoint in exactly two blocks, one of which is an endblock."""
    if not d.is_cutpoint(c):
        return False
    bs = d.blocks_of[c]
    return len(bs) == 2 and any(len(d.block_cutpoints[b]) == 1 for b in bs)


def pendant_endblock(d: BlockDecomposition, c: int) -> int:
    """Index of the unique endblock at a 2-cutpoint c."""
    if not is_two_cutpoint(d, c):
        raise GraphInputError(f"vertex {c} is not a 2-cutpoint")
    ends = [b for b in d.blocks_of[c] if len(d.block_cutpoints[b]) == 1]
    if len(ends) != 1:
        raise GraphInputError(f"vertex {c} has no unique endblock")
    return ends[0]


def bc_canonical_form(g: Graph) -> str:
    """Canonical string for a connected block graph.

    A connected block graph is determined up to isomorphism by its
    block-cutpoint tree with each block node labeled by the block size:
    blocks are cliques, so any label-preserving tree isomorphism lifts to a
    graph isomorphism by matching cutpoints along the tree and pairing the
    interchangeable non-cutpoint vertices within each block arbitrarily.
    The string is the minimal rooted encoding over the tree's center(s).
    """
    if validate_block_graph(g) is not None:
        raise GraphInputError("canonical form is defined for block graphs only")
    d = decompose(g)
    nb = len(d.blocks)
    # bc-tree node ids: blocks are 0..nb-1, cutpoint c becomes nb + rank(c).
    cut_id = {c: nb + i for i, c in enumerate(d.cutpoints)}
    total = nb + len(d.cutpoints)
    adj: list[list[int]] = [[] for _ in range(total)]
    for b in range(nb):
        for c in d.block_cutpoints[b]:
            adj[b].append(cut_id[c])
            adj[cut_id[c]].append(b)
    labels = [f"B{len(d.blocks[b])}" for b in range(nb)] + ["C"] * len(d.cutpoints)

    centers = _tree_centers(adj)

    def encode(root: int) -> str:
        # Post-order with explicit stack; children encodings sorted.
        enc: dict[int, str] = {}
        todo: list[tuple[int, int, bool]] = [(root, -1, False)]
        while todo:
            node, parent, expanded = todo.pop()
            if expanded:
                kids = sorted(enc[k] for k in adj[node] if k != parent)
                enc[node] = "(" + labels[node] + "".join(kids) + ")"
            else:
                todo.append((node, parent, True))
                for k in adj[node]:
                    if k != parent:
                        todo.append((k, node, False))
        return enc[root]

    body = min(encode(c) for c in centers)
    return f"{g.n}:{g.m}:{body}"


def _tree_centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = 0
    while n - removed > 2:
        nxt = []
        for v in layer:
            removed += 1
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)
