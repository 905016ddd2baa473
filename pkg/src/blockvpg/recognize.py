"""Top-level certifying recognition: decide, build, or extract a witness."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .blocks import NotBlockGraphWitness, decompose, validate_block_graph
from .build import build_representation
from .certify import Certificate, extract_certificate
from .graphs import Graph, connected_components, induced_subgraph
from .grid import HORIZONTAL, GridPath, GridRepresentation, compact
from .ordering import bfs_block_order, check_claim_conditions, label_cutpoints
from .verify import check_cardinal_lemmas, verify_representation


@dataclass(frozen=True)
class Accept:
    representation: GridRepresentation


@dataclass(frozen=True)
class Reject:
    certificate: Certificate


@dataclass(frozen=True)
class NotBlockGraph:
    witness: NotBlockGraphWitness


RecognitionResult = Accept | Reject | NotBlockGraph


def recognize(
    g: Graph,
    *,
    seed: int | None = None,
    start_block: int | None = None,
) -> RecognitionResult:
    """Decide whether g has a bend-free grid-path representation.

    Every outcome carries an independently checkable witness: an accepted
    graph comes with a representation (validated before returning), a
    rejected block graph with a vertex set inducing a forbidden member, and
    anything else with a non-complete block. Disconnected inputs are handled
    per component; all components must accept, and their representations are
    placed on disjoint grid regions.

    `seed` randomizes traversal tie-breaking and `start_block` overrides the
    starting block (per component, modulo its block count); the verdict is
    invariant under both.
    """
    if g.n == 0:
        return Accept(GridRepresentation((), rows=1, cols=1))
    pieces: list[tuple[list[int], GridRepresentation]] = []
    for comp in connected_components(g):
        sub, back = induced_subgraph(g, comp)
        outcome = _component_outcome(sub, seed, start_block, build=True)
        if isinstance(outcome, NotBlockGraph):
            w = outcome.witness
            return NotBlockGraph(
                NotBlockGraphWitness(
                    w.block_index,
                    tuple(back[v] for v in w.block),
                    (back[w.nonadjacent[0]], back[w.nonadjacent[1]]),
                )
            )
        if isinstance(outcome, Reject):
            cert = outcome.certificate
            return Reject(
                Certificate(tuple(sorted(back[v] for v in cert.vertices)), cert.family_k)
            )
        pieces.append((back, outcome.representation))

    merged = _merge_components(pieces)
    _assert_valid(g, merged)
    return Accept(merged)


def decide(
    g: Graph,
    *,
    seed: int | None = None,
    start_block: int | None = None,
) -> str:
    """Verdict only: "accept", "reject" or "not_block_graph"."""
    if g.n == 0:
        return "accept"
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        outcome = _component_outcome(sub, seed, start_block, build=False)
        if not isinstance(outcome, Accept):
            return "not_block_graph" if isinstance(outcome, NotBlockGraph) else "reject"
    return "accept"


def _component_outcome(
    sub: Graph,
    seed: int | None,
    start_block: int | None,
    build: bool,
) -> RecognitionResult:
    witness = validate_block_graph(sub)
    if witness is not None:
        return NotBlockGraph(witness)
    d = decompose(sub)
    start = 0 if start_block is None else start_block % len(d.blocks)
    rng = random.Random(seed) if seed is not None else None
    order = bfs_block_order(d, start, rng)
    labels = label_cutpoints(d, order)
    violation = check_claim_conditions(d, order, labels)
    if violation is not None:
        if not build:
            return Reject(Certificate((), -1))
        return Reject(extract_certificate(sub, d, order, labels, violation))
    if not build:
        return Accept(GridRepresentation((), rows=1, cols=1))
    rep = build_representation(sub, d, order, labels)
    return Accept(rep)


def _merge_components(
    pieces: list[tuple[list[int], GridRepresentation]],
) -> GridRepresentation:
    # Diagonal placement: each component gets fresh rows and columns, so no
    # path of one component can meet a path of another.
    paths: list[GridPath] = []
    dx = 0
    dy = 0
    for back, rep in pieces:
        for p in rep.paths:
            if p.orient == HORIZONTAL:
                paths.append(GridPath(back[p.v], p.orient, p.line + dy, p.lo + dx, p.hi + dx))
            else:
                paths.append(GridPath(back[p.v], p.orient, p.line + dx, p.lo + dy, p.hi + dy))
        dx += rep.cols
        dy += rep.rows
    merged = GridRepresentation(
        tuple(sorted(paths, key=lambda p: p.v)),
        rows=max(dy, 1),
        cols=max(dx, 1),
    )
    return compact(merged)


def _assert_valid(g: Graph, rep: GridRepresentation) -> None:
    report = verify_representation(g, rep)
    if not report.ok:
        raise RuntimeError(f"constructed representation failed verification: {report}")
    for comp in connected_components(g):
        sub, back = induced_subgraph(g, comp)
        sub_paths = []
        for i in range(sub.n):
            p = rep.path_of(back[i])
            sub_paths.append(GridPath(i, p.orient, p.line, p.lo, p.hi))
        sub_rep = GridRepresentation(tuple(sub_paths), rows=rep.rows, cols=rep.cols)
        failures = check_cardinal_lemmas(sub, decompose(sub), sub_rep)
        if failures:
            raise RuntimeError(f"constructed representation failed checks: {failures}")
