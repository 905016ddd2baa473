"""Breadth-first block order, cutpoint labeling, and the four decision checks."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .blocks import BlockDecomposition
from .graphs import GraphInputError

LABEL_A = "A"
LABEL_B = "B"


@dataclass(frozen=True)
class BlockOrder:
    """BFS traversal of the block-cutpoint tree starting at a block.

    `block_seq` lists block indices in visit order. For every cutpoint c,
    `h_of[c]` is the unique block containing c that precedes c in the
    traversal (its BFS parent); for every non-start block b, `parent_cut[b]`
    is the unique cutpoint of b that precedes b. `cutpoint_pos` / `block_pos`
    give positions within the full interleaved node sequence.
    """

    start_block: int
    block_seq: tuple[int, ...]
    block_pos: dict[int, int]
    cutpoint_pos: dict[int, int]
    h_of: dict[int, int]
    parent_cut: dict[int, int]


def bfs_block_order(
    d: BlockDecomposition,
    start_block: int = 0,
    rng: random.Random | None = None,
) -> BlockOrder:
    """Traverse the block-cutpoint tree breadth-first from a block node.

    Neighbor exploration is ascending by default; `rng` shuffles the
    tie-breaking for order-invariance experiments. Blocks that share a parent
    cutpoint come out consecutively, which later stages rely on.
    """
    nb = len(d.blocks)
    if not (0 <= start_block < nb):
        raise GraphInputError(f"start block {start_block} out of range")

    block_seq: list[int] = []
    block_pos: dict[int, int] = {}
    cutpoint_pos: dict[int, int] = {}
    h_of: dict[int, int] = {}
    parent_cut: dict[int, int] = {}
    seen_blocks = {start_block}
    seen_cuts: set[int] = set()
    pos = 0
    queue: deque[tuple[str, int]] = deque([("block", start_block)])
    while queue:
        kind, item = queue.popleft()
        if kind == "block":
            block_pos[item] = pos
            block_seq.append(item)
            children = [c for c in d.block_cutpoints[item] if c not in seen_cuts]
            if rng is not None:
                rng.shuffle(children)
            for c in children:
                seen_cuts.add(c)
                h_of[c] = item
                queue.append(("cut", c))
        else:
            cutpoint_pos[item] = pos
            children = [b for b in d.blocks_of[item] if b not in seen_blocks]
            if rng is not None:
                rng.shuffle(children)
            for b in children:
                seen_blocks.add(b)
                parent_cut[b] = item
                queue.append(("block", b))
        pos += 1

    if len(block_seq) != nb:
        raise GraphInputError("block-cutpoint tree is not connected")
    order = BlockOrder(
        start_block,
        tuple(block_seq),
        block_pos,
        cutpoint_pos,
        h_of,
        parent_cut,
    )
    _check_consecutive_groups(order)
    return order


def _check_consecutive_groups(order: BlockOrder) -> None:
    # All blocks hanging off one cutpoint must occupy a contiguous run.
    runs: dict[int, list[int]] = {}
    for i, b in enumerate(order.block_seq):
        c = order.parent_cut.get(b)
        if c is not None:
            runs.setdefault(c, []).append(i)
    for c, idxs in runs.items():
        if idxs != list(range(idxs[0], idxs[0] + len(idxs))):
            raise RuntimeError(f"blocks at cutpoint {c} are not consecutive in the order")


def block_qualifies(
    d: BlockDecomposition,
    block: int,
    c: int,
    labels: dict[int, str],
) -> bool:
    """Whether `block` counts toward giving cutpoint c the second label.

    A block counts when it has at least four cutpoints, or exactly three of
    which some cutpoint other than c carries the second label.
    """
    cps = d.block_cutpoints[block]
    if len(cps) >= 4:
        return True
    if len(cps) == 3:
        for other in cps:
            if other == c:
                continue
            if other not in labels:
                raise RuntimeError(
                    f"cutpoint {other} of block {block} is unlabeled while labeling {c}"
                )
            if labels[other] == LABEL_B:
                return True
    return False


def label_cutpoints(d: BlockDecomposition, order: BlockOrder) -> dict[int, str]:
    """Assign A or B to every cutpoint, processed in reverse traversal order.

    A cutpoint becomes B when at least two blocks containing it, other than
    its parent block, qualify under `block_qualifies`; otherwise A. Reverse
    order guarantees the qualification lookups only touch already-labeled
    cutpoints, which is asserted rather than silently defaulted.
    """
    labels: dict[int, str] = {}
    for c in sorted(order.cutpoint_pos, key=lambda v: -order.cutpoint_pos[v]):
        children = [b for b in d.blocks_of[c] if b != order.h_of[c]]
        qualifying = sum(1 for b in children if block_qualifies(d, b, c, labels))
        labels[c] = LABEL_B if qualifying >= 2 else LABEL_A
    return labels


@dataclass(frozen=True)
class ClaimViolation:
    """Which decision condition failed, with the offending block/cutpoints."""

    condition: str  # "i" | "ii" | "iii" | "iv"
    block: int | None
    cutpoints: tuple[int, ...]


def check_claim_conditions(
    d: BlockDecomposition,
    order: BlockOrder,
    labels: dict[int, str],
) -> ClaimViolation | None:
    """First failing condition in fixed order i, ii, iii, iv; None when clean.

    (i) no block has five or more cutpoints; (ii) a B cutpoint lies in
    exactly two qualifying blocks other than its parent block; (iii) a B
    cutpoint's parent block has at most three cutpoints; (iv) no block with
    three or more cutpoints is the parent block of two B cutpoints.
    Ties are broken by traversal position.
    """
    for b in order.block_seq:
        if len(d.block_cutpoints[b]) >= 5:
            return ClaimViolation("i", b, tuple(d.block_cutpoints[b]))

    b_cuts = sorted(
        (c for c, lab in labels.items() if lab == LABEL_B),
        key=lambda c: order.cutpoint_pos[c],
    )
    for c in b_cuts:
        children = [b for b in d.blocks_of[c] if b != order.h_of[c]]
        qualifying = [b for b in children if block_qualifies(d, b, c, labels)]
        if len(qualifying) < 2:
            raise RuntimeError(f"B-labeled cutpoint {c} has {len(qualifying)} qualifying blocks")
        if len(qualifying) != 2:
            return ClaimViolation("ii", None, (c,))
    for c in b_cuts:
        if len(d.block_cutpoints[order.h_of[c]]) >= 4:
            return ClaimViolation("iii", order.h_of[c], (c,))
    for b in order.block_seq:
        if len(d.block_cutpoints[b]) < 3:
            continue
        owners = [
            c
            for c in d.block_cutpoints[b]
            if order.h_of.get(c) == b and labels.get(c) == LABEL_B
        ]
        if len(owners) >= 2:
            owners.sort(key=lambda c: order.cutpoint_pos[c])
            return ClaimViolation("iv", b, tuple(owners[:2]))
    return None
