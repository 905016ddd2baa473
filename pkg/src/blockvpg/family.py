"""The forbidden family: thin spiders, the growth procedure, enumeration.

Members are generated from the size-5 thin spider by repeatedly picking a
complete size-4 subgraph with two 2-cutpoints, contracting those cutpoints
into one vertex and replacing their pendant endblocks by two size-3 thin
spiders whose cliques attach to the contracted vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .blocks import (
    BlockClass,
    bc_canonical_form,
    classify_block,
    decompose,
    is_two_cutpoint,
    pendant_endblock,
    validate_block_graph,
)
from .graphs import Graph, GraphInputError, induced_subgraph, connected_components


def thin_spider(n: int) -> Graph:
    """Clique 0..n-1 plus a pendant leaf n+i attached to each clique vertex i."""
    if n < 2:
        raise GraphInputError(f"thin spider needs size >= 2, got {n}")
    edges = list(combinations(range(n), 2))
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


@dataclass(frozen=True)
class ProcedureStep:
    """One application: target complete 4-set `h`, chosen 2-cutpoints v1 < v2."""

    h: tuple[int, int, int, int]
    v1: int
    v2: int


def apply_procedure(g: Graph, step: ProcedureStep) -> Graph:
    """Contract step.v1/step.v2 into a new vertex and graft two size-3 spiders.

    Structural preconditions are checked here (complete 4-set, both chosen
    vertices 2-cutpoints of it with pendant endblocks); semantic membership
    of `g` in the family is the caller's responsibility. The result is
    relabeled: surviving vertices keep their sorted order, then the
    contracted vertex, then the two spiders.
    """
    h = tuple(sorted(set(step.h)))
    if len(h) != 4:
        raise GraphInputError("procedure target must have 4 distinct vertices")
    for u, v in combinations(h, 2):
        if not g.has_edge(u, v):
            raise GraphInputError(f"procedure target not complete: {u} !~ {v}")
    v1, v2 = step.v1, step.v2
    if v1 == v2 or v1 not in h or v2 not in h:
        raise GraphInputError("chosen cutpoints must be two distinct target vertices")
    d = decompose(g)
    for v in (v1, v2):
        if not is_two_cutpoint(d, v):
            raise GraphInputError(f"vertex {v} is not a 2-cutpoint")
    b1 = set(d.blocks[pendant_endblock(d, v1)])
    b2 = set(d.blocks[pendant_endblock(d, v2)])

    dropped = b1 | b2 | {v1, v2}
    keep = [v for v in range(g.n) if v not in dropped]
    index = {old: new for new, old in enumerate(keep)}
    x = len(keep)
    x_neighbors = {
        index[w] for w in (g.adj[v1] | g.adj[v2]) if w in index
    }

    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    edges += [(x, w) for w in sorted(x_neighbors)]
    for base in (x + 1, x + 7):  # two spiders of size 3: clique then leaves
        clique = [base, base + 1, base + 2]
        edges += list(combinations(clique, 2))
        edges += [(c, c + 3) for c in clique]
        edges += [(x, c) for c in clique]
    return Graph(x + 13, edges)


_levels: list[list[tuple[str, Graph]]] = []


def _family_level(k: int) -> list[tuple[str, Graph]]:
    """Members reachable with exactly k applications, as (canonical form, graph)."""
    while len(_levels) <= k:
        depth = len(_levels)
        if depth == 0:
            n5 = thin_spider(5)
            _levels.append([(bc_canonical_form(n5), n5)])
            continue
        seen: dict[str, Graph] = {}
        for _, g in _levels[depth - 1]:
            for step in _candidate_steps(g):
                result = apply_procedure(g, step)
                form = bc_canonical_form(result)
                if form not in seen:
                    seen[form] = result
        _levels.append(sorted(seen.items()))
    return _levels[k]


def _candidate_steps(g: Graph):
    d = decompose(g)
    two_cuts = {c for c in d.cutpoints if is_two_cutpoint(d, c)}
    for block in d.blocks:
        if len(block) < 4:
            continue
        for h in combinations(block, 4):
            eligible = sorted(two_cuts.intersection(h))
            for v1, v2 in combinations(eligible, 2):
                yield ProcedureStep(h, v1, v2)


def enumerate_family(max_vertices: int) -> list[Graph]:
    """All members with at most `max_vertices` vertices, pairwise non-isomorphic.

    A member built with k applications has 9*(k+1)+1 vertices. Output order
    is deterministic: ascending vertex count, then canonical form.
    """
    out: list[Graph] = []
    k = 0
    while 9 * (k + 1) + 1 <= max_vertices:
        out.extend(g for _, g in _family_level(k))
        k += 1
    return out


def family_canonical_forms(max_vertices: int) -> set[str]:
    forms: set[str] = set()
    k = 0
    while 9 * (k + 1) + 1 <= max_vertices:
        forms.update(form for form, _ in _family_level(k))
        k += 1
    return forms


@dataclass
class PropositionReport:
    """Structural audit of a member built with k >= 1 applications."""

    k: int
    failures: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_proposition(g: Graph, k: int) -> PropositionReport:
    """Check the six structural properties of a k-application member.

    Covers block sizes, the vertex taxonomy (leaf / 2-cutpoint / 3-cutpoint),
    the per-class block shapes, and the closed-form counts in k. Failures
    name the item and a witness; k = 0 is outside the audited range.
    """
    if k < 1:
        raise GraphInputError("proposition audit applies to k >= 1 members only")
    report = PropositionReport(k=k)
    d = decompose(g)
    fail = report.failures.append

    for i, b in enumerate(d.blocks):
        if len(b) > 4:
            fail(f"item i: block {i} has size {len(b)}")

    two_cuts = {c for c in d.cutpoints if is_two_cutpoint(d, c)}
    three_cuts = {c for c in d.cutpoints if len(d.blocks_of[c]) == 3}
    for v in range(g.n):
        if g.degree(v) == 1 or v in two_cuts or v in three_cuts:
            continue
        fail(f"item ii: vertex {v} is neither a leaf nor a 2-/3-cutpoint")

    classes = [classify_block(d, i) for i in range(len(d.blocks))]
    for i, b in enumerate(d.blocks):
        cps = d.block_cutpoints[i]
        n2 = sum(1 for c in cps if c in two_cuts)
        n3 = sum(1 for c in cps if c in three_cuts)
        cls = classes[i]
        if cls is BlockClass.ENDBLOCK:
            if len(b) != 2 or n2 != 1:
                fail(f"item iii: endblock {i} has size {len(b)} with {n2} 2-cutpoints")
        elif cls is BlockClass.ALMOST_ENDBLOCK:
            if len(b) != 4 or n2 != 3 or n3 != 1:
                fail(
                    f"item iv: almost endblock {i} has size {len(b)} "
                    f"with {n2} 2-cutpoints and {n3} 3-cutpoints"
                )
        else:
            if len(b) != 3 or n2 != 1 or n3 != 2:
                fail(
                    f"item v: internal block {i} has size {len(b)} "
                    f"with {n2} 2-cutpoints and {n3} 3-cutpoints"
                )

    counts = {
        "blocks": len(d.blocks),
        "endblocks": sum(1 for c in classes if c is BlockClass.ENDBLOCK),
        "almost_endblocks": sum(1 for c in classes if c is BlockClass.ALMOST_ENDBLOCK),
        "internal_blocks": sum(1 for c in classes if c is BlockClass.INTERNAL),
        "cutpoints": len(d.cutpoints),
        "cutpoints_3": len(three_cuts),
        "cutpoints_2": len(two_cuts),
        "vertices": g.n,
    }
    report.counts = counts
    expected = {
        "blocks": 6 * (k + 1),
        "endblocks": 4 * (k + 1) + 1,
        "almost_endblocks": k + 2,
        "internal_blocks": k - 1,
        "cutpoints": 5 * (k + 1),
        "cutpoints_3": k,
        "cutpoints_2": 4 * (k + 1) + 1,
        "vertices": 9 * (k + 1) + 1,
    }
    for key, want in expected.items():
        if counts[key] != want:
            fail(f"item vi: {key} = {counts[key]}, expected {want}")
    return report


def check_minimality(f: Graph, f_member_finder: Callable[[Graph], object]) -> bool:
    """True when no proper induced subgraph of a member is itself a member.

    Deleting any single vertex must leave components that are all free of
    family members; `f_member_finder` is the independent search (returns a
    truthy witness when a member is found).
    """
    if validate_block_graph(f) is not None:
        raise GraphInputError("minimality check expects a block graph")
    for v in range(f.n):
        rest = [u for u in range(f.n) if u != v]
        remainder, _ = induced_subgraph(f, rest)
        for comp in connected_components(remainder):
            sub, _ = induced_subgraph(remainder, comp)
            if f_member_finder(sub):
                return False
    return True
