"""Certificate extraction for rejected graphs, and certificate validation.

When a decision condition fails, the graph must contain a family member as
an induced subgraph. The extractor locates it constructively: the last
B-labeled cutpoint in traversal order either directly anchors a small member
(assembled from blocks with four cutpoints around it), or the graph is
reduced by a local surgery and the search recurses; synthetic vertices
introduced by the surgery are translated back to original vertices at the
end, growing the member by one procedure application when both synthetic
cutpoints appear in the recursive witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockDecomposition, bc_canonical_form, decompose, validate_block_graph
from .family import family_canonical_forms
from .graphs import Graph, connected_components, induced_subgraph
from .ordering import (
    LABEL_B,
    BlockOrder,
    ClaimViolation,
    bfs_block_order,
    block_qualifies,
    check_claim_conditions,
    label_cutpoints,
)


@dataclass(frozen=True)
class Certificate:
    """Vertex set inducing a family member; k counts procedure applications."""

    vertices: tuple[int, ...]
    family_k: int


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise RuntimeError(f"certificate extraction invariant failed: {msg}")


def extract_certificate(
    g: Graph,
    d: BlockDecomposition,
    order: BlockOrder,
    labels: dict[int, str],
    violation: ClaimViolation,
) -> Certificate:
    """Vertex set of g inducing a family member, derived from the violation."""
    vertices = _extract(g, d, order, labels, violation)
    k = (len(vertices) - 1) // 9 - 1
    _require(9 * (k + 1) + 1 == len(vertices), f"witness size {len(vertices)}")
    return Certificate(tuple(sorted(vertices)), k)


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """True iff the certificate's vertex set induces a family member in g."""
    vs = set(cert.vertices)
    if not vs or any(not (0 <= v < g.n) for v in vs):
        return False
    if 9 * (cert.family_k + 1) + 1 != len(vs):
        return False
    sub, _ = induced_subgraph(g, vs)
    if len(connected_components(sub)) != 1:
        return False
    if validate_block_graph(sub) is not None:
        return False
    return bc_canonical_form(sub) in family_canonical_forms(len(vs))


def _extract(
    g: Graph,
    d: BlockDecomposition,
    order: BlockOrder,
    labels: dict[int, str],
    violation: ClaimViolation,
) -> set[int]:
    if violation.condition == "i":
        _require(violation.block is not None, "condition i without a block")
        return _spider_from_wide_block(g, d, violation.block)

    b_cuts = [c for c, lab in labels.items() if lab == LABEL_B]
    _require(bool(b_cuts), "violation of ii/iii/iv without B labels")
    v = max(b_cuts, key=lambda c: order.cutpoint_pos[c])

    children = [b for b in d.blocks_of[v] if b != order.h_of[v]]
    qualifying = sorted(b for b in children if block_qualifies(d, b, v, labels))
    _require(len(qualifying) >= 2, f"B cutpoint {v} with {len(qualifying)} qualifying blocks")
    for q in qualifying:
        _require(
            len(d.block_cutpoints[q]) == 4,
            f"qualifying block {q} of the last B cutpoint has "
            f"{len(d.block_cutpoints[q])} cutpoints",
        )

    hv = order.h_of[v]
    hv_cuts = d.block_cutpoints[hv]

    if len(qualifying) >= 3:
        return _one_step_member(g, d, v, qualifying[:3])
    if len(hv_cuts) == 4:
        return _one_step_member(g, d, v, [hv] + qualifying[:2])
    if len(hv_cuts) == 3:
        siblings = [c for c in hv_cuts if c != v and order.h_of.get(c) == hv]
        _require(len(siblings) in (1, 2), f"parent block {hv} has {len(siblings)} owned siblings")
        b_siblings = [w for w in siblings if labels[w] == LABEL_B]
        if b_siblings:
            w = min(b_siblings)
            third = [c for c in hv_cuts if c not in (v, w)]
            _require(len(third) == 1, "parent block of size 3 without a third cutpoint")
            w_children = [b for b in d.blocks_of[w] if b != order.h_of[w]]
            w_qual = sorted(
                b
                for b in w_children
                if len(d.block_cutpoints[b]) == 4
            )
            _require(len(w_qual) >= 2, f"sibling B cutpoint {w} has {len(w_qual)} wide blocks")
            return _two_step_member(g, d, v, qualifying[:2], w, w_qual[:2], third[0], hv)
        return _reduce_replacing_cutpoint(g, d, order, v, hv, qualifying[:2])
    if len(hv_cuts) == 2:
        return _reduce_dropping_far_side(g, d, v, hv)
    raise RuntimeError(
        f"certificate extraction invariant failed: parent block {hv} has "
        f"{len(hv_cuts)} cutpoints for B cutpoint {v}"
    )


def _private_neighbor(g: Graph, block_vertices: tuple[int, ...], c: int) -> int:
    """Least neighbor of c outside the given block."""
    inside = set(block_vertices)
    outside = sorted(w for w in g.adj[c] if w not in inside)
    _require(bool(outside), f"cutpoint {c} has no neighbor outside its block")
    return outside[0]


def _spider_from_wide_block(g: Graph, d: BlockDecomposition, block: int) -> set[int]:
    # A block with >= 5 cutpoints yields the base member directly: five
    # cutpoints plus one outside neighbor each. Outside neighbors are
    # pairwise distinct and nonadjacent because any chord would close a
    # short cycle through the block and merge two distinct blocks.
    cuts = sorted(d.block_cutpoints[block])[:5]
    _require(len(cuts) == 5, "condition i block with fewer than 5 cutpoints")
    chosen = set(cuts)
    for c in cuts:
        chosen.add(_private_neighbor(g, d.blocks[block], c))
    _require(len(chosen) == 10, "base member assembly collided")
    return chosen


def _spider_leg(g: Graph, d: BlockDecomposition, block: int, hub: int) -> set[int]:
    """The three non-hub cutpoints of a 4-cutpoint block, each with a pendant."""
    others = [c for c in d.block_cutpoints[block] if c != hub]
    _require(len(others) == 3, f"block {block} does not have 3 cutpoints besides {hub}")
    out = set(others)
    for c in others:
        out.add(_private_neighbor(g, d.blocks[block], c))
    return out


def _one_step_member(g: Graph, d: BlockDecomposition, v: int, blocks3: list[int]) -> set[int]:
    out = {v}
    for b in blocks3:
        _require(v in d.blocks[b], f"hub {v} missing from block {b}")
        out |= _spider_leg(g, d, b, v)
    _require(len(out) == 19, f"one-step member has {len(out)} vertices")
    return out


def _two_step_member(
    g: Graph,
    d: BlockDecomposition,
    v: int,
    v_blocks: list[int],
    w: int,
    w_blocks: list[int],
    third: int,
    hv: int,
) -> set[int]:
    out = {v, w, third, _private_neighbor(g, d.blocks[hv], third)}
    for b in v_blocks:
        out |= _spider_leg(g, d, b, v)
    for b in w_blocks:
        out |= _spider_leg(g, d, b, w)
    _require(len(out) == 28, f"two-step member has {len(out)} vertices")
    return out


def _kept_component(g: Graph, d: BlockDecomposition, v: int, hv: int) -> list[int]:
    """Vertices of the component of g - v containing the parent block minus v."""
    rest = [u for u in range(g.n) if u != v]
    remainder, back = induced_subgraph(g, rest)
    anchor = next(u for u in d.blocks[hv] if u != v)
    for comp in connected_components(remainder):
        mapped = [back[u] for u in comp]
        if anchor in mapped:
            return sorted(mapped)
    raise RuntimeError("certificate extraction invariant failed: anchor component missing")


def _recurse(g2: Graph) -> set[int]:
    d2 = decompose(g2)
    order2 = bfs_block_order(d2, 0)
    labels2 = label_cutpoints(d2, order2)
    violation2 = check_claim_conditions(d2, order2, labels2)
    _require(violation2 is not None, "reduced graph unexpectedly satisfies all conditions")
    return _extract(g2, d2, order2, labels2, violation2)


def _reduce_replacing_cutpoint(
    g: Graph,
    d: BlockDecomposition,
    order: BlockOrder,
    v: int,
    hv: int,
    v_blocks: list[int],
) -> set[int]:
    # Drop v and everything on its far side; stand in two fresh cutpoints
    # v1, v2 (adjacent to each other and to the parent block) with one fresh
    # pendant each, so the parent block gains a fourth cutpoint.
    kept = _kept_component(g, d, v, hv)
    index = {old: new for new, old in enumerate(kept)}
    n2 = len(kept)
    v1, v2, p1, p2 = n2, n2 + 1, n2 + 2, n2 + 3
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    hv_rest = [index[u] for u in d.blocks[hv] if u != v]
    edges.append((v1, v2))
    edges += [(v1, u) for u in hv_rest]
    edges += [(v2, u) for u in hv_rest]
    edges += [(v1, p1), (v2, p2)]
    g2 = Graph(n2 + 4, edges)

    witness = _recurse(g2)
    synth_cuts = witness & {v1, v2}
    original = {kept[u] for u in witness if u < n2}
    if not synth_cuts:
        _require(not (witness & {p1, p2}), "pendant used without its cutpoint")
        return original
    if len(synth_cuts) == 1:
        out = original | {v}
        if witness & {p1, p2}:
            out.add(_far_neighbor(g, v, set(kept)))
        return out
    _require({p1, p2} <= witness, "both synthetic cutpoints used without their pendants")
    out = original | {v}
    for b in v_blocks:
        out |= _spider_leg(g, d, b, v)
    return out


def _reduce_dropping_far_side(g: Graph, d: BlockDecomposition, v: int, hv: int) -> set[int]:
    kept = set(_kept_component(g, d, v, hv)) | {v}
    sub, back = induced_subgraph(g, kept)
    witness = _recurse(sub)
    return {back[u] for u in witness}


def _far_neighbor(g: Graph, v: int, kept: set[int]) -> int:
    outside = sorted(w for w in g.adj[v] if w not in kept)
    _require(bool(outside), f"cutpoint {v} has no neighbor outside the kept component")
    return outside[0]
