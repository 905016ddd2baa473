"""Independent validation: representation checks, clique classification,
cardinal-direction checks, and brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .blocks import BlockDecomposition, decompose, validate_block_graph
from .family import enumerate_family
from .graphs import Graph, GraphInputError, connected_components, find_induced_copy, induced_subgraph
from .grid import HORIZONTAL, VERTICAL, GridPath, GridRepresentation, compact, paths_intersect


@dataclass
class VerificationReport:
    """Mismatched pairs plus structural check failures; ok iff all empty."""

    adjacent_disjoint: list[tuple[int, int]] = field(default_factory=list)
    nonadjacent_intersecting: list[tuple[int, int]] = field(default_factory=list)
    lemma_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.adjacent_disjoint
            or self.nonadjacent_intersecting
            or self.lemma_failures
        )


def verify_representation(g: Graph, rep: GridRepresentation) -> VerificationReport:
    """Exact pairwise check: paths share a point iff the vertices are adjacent."""
    if len(rep.paths) != g.n:
        raise GraphInputError(
            f"representation has {len(rep.paths)} paths for {g.n} vertices"
        )
    by_vertex = {p.v: p for p in rep.paths}
    if len(by_vertex) != g.n or any(v not in by_vertex for v in range(g.n)):
        raise GraphInputError("representation does not cover each vertex exactly once")
    report = VerificationReport()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            crossing = paths_intersect(by_vertex[u], by_vertex[v])
            if crossing and not g.has_edge(u, v):
                report.nonadjacent_intersecting.append((u, v))
            elif not crossing and g.has_edge(u, v):
                report.adjacent_disjoint.append((u, v))
    return report


class CliqueLemmaViolation(RuntimeError):
    """A clique's paths pairwise intersect but share no common grid point."""


@dataclass(frozen=True)
class CliqueRepKind:
    kind: str  # "line" | "cross"
    axis: str | None = None  # for line: H (common row) or V (common column)
    line: int | None = None
    center: tuple[int, int] | None = None


def classify_clique_rep(rep: GridRepresentation, clique: list[int]) -> CliqueRepKind:
    """Classify how a clique is drawn: along one line, or crossing at a center.

    The paths of a clique always share a common grid point in a valid
    representation; an empty intersection raises CliqueLemmaViolation. The
    clique is a line clique when every path lies entirely on one common row
    or column, otherwise a cross with the unique shared point as center.
    """
    paths = [rep.path_of(v) for v in clique]
    if not paths:
        raise GraphInputError("cannot classify an empty clique")
    xlo = max(p.rect()[0] for p in paths)
    xhi = min(p.rect()[1] for p in paths)
    ylo = max(p.rect()[2] for p in paths)
    yhi = min(p.rect()[3] for p in paths)
    if xlo > xhi or ylo > yhi:
        raise CliqueLemmaViolation(
            f"clique {sorted(clique)} has no common grid point"
        )
    y_ints = {p.rect()[2:] for p in paths}
    if len(y_ints) == 1:
        lo, hi = next(iter(y_ints))
        if lo == hi:
            return CliqueRepKind("line", axis=HORIZONTAL, line=lo)
    x_ints = {p.rect()[:2] for p in paths}
    if len(x_ints) == 1:
        lo, hi = next(iter(x_ints))
        if lo == hi:
            return CliqueRepKind("line", axis=VERTICAL, line=lo)
    if (xlo, ylo) != (xhi, yhi):
        raise CliqueLemmaViolation(
            f"clique {sorted(clique)} shares a segment but not a single line"
        )
    return CliqueRepKind("cross", center=(xlo, ylo))


def check_cardinal_lemmas(
    g: Graph,
    d: BlockDecomposition,
    rep: GridRepresentation,
) -> list[str]:
    """Check cross-and-farthest constraints on blocks with 3 or 4 cutpoints.

    Each such block must be drawn as a cross whose cutpoints are strictly
    farthest in pairwise distinct cardinal directions.
    """
    failures: list[str] = []
    for i, block in enumerate(d.blocks):
        cps = d.block_cutpoints[i]
        if len(cps) not in (3, 4):
            continue
        try:
            kind = classify_clique_rep(rep, list(block))
        except CliqueLemmaViolation as exc:
            failures.append(f"block {i}: {exc}")
            continue
        if kind.kind != "cross":
            failures.append(f"block {i}: {len(cps)} cutpoints but drawn as a line clique")
            continue
        rects = {v: rep.path_of(v).rect() for v in block}
        holders: dict[str, int | None] = {}
        for direction, coord, best in (
            ("E", 1, max), ("W", 0, min), ("N", 3, max), ("S", 2, min),
        ):
            extremes = [v for v in block if rects[v][coord] == best(r[coord] for r in rects.values())]
            holders[direction] = extremes[0] if len(extremes) == 1 else None
        if not _distinct_direction_matching(holders, list(cps)):
            failures.append(
                f"block {i}: cutpoints {list(cps)} are not farthest in "
                f"{len(cps)} distinct directions (holders {holders})"
            )
    return failures


def _distinct_direction_matching(holders: dict[str, int | None], cps: list[int]) -> bool:
    return any(
        all(holders[d] == c for d, c in zip(perm, cps))
        for perm in permutations(holders, len(cps))
    )


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, deterministically ordered (Bron-Kerbosch with pivot)."""
    out: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: (len(g.adj[v] & p), -v))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(range(g.n)), set())
    return sorted(out)


ORACLE_MAX_VERTICES = 7


def brute_force_b0vpg(g: Graph) -> GridRepresentation | None:
    """Exhaustive search for a representation, independent of the recognizer.

    Search space: each vertex gets an orientation, a line in [0, 2n) and a
    span [lo, hi] within [0, 2n), placed one vertex at a time (descending
    degree) with the partial intersection matrix checked after each
    placement.

    Why 2n coordinates per axis suffice: in any representation, horizontal
    paths contribute at most two distinct x-values each (their span ends)
    and vertical paths one (their column), so at most 2n distinct x-values
    are ever relevant, and likewise for y. Every intersection test only
    compares coordinates by order, so rank-compressing each axis maps any
    representation into the [0, 2n) x [0, 2n) grid unchanged. Restricting
    the first placed vertex to horizontal orientation is also safe:
    transposing the grid maps representations to representations while
    flipping every orientation.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise GraphInputError(
            f"oracle is capped at {ORACLE_MAX_VERTICES} vertices, got {g.n}"
        )
    if g.n == 0:
        return GridRepresentation((), rows=1, cols=1)
    all_paths: list[GridPath] = []
    x_off = 0
    y_off = 0
    for comp in connected_components(g):
        sub, back = induced_subgraph(g, comp)
        placed = _search_component(sub)
        if placed is None:
            return None
        for i, (orient, line, lo, hi) in enumerate(placed):
            if orient == HORIZONTAL:
                all_paths.append(GridPath(back[i], orient, line + y_off, lo + x_off, hi + x_off))
            else:
                all_paths.append(GridPath(back[i], orient, line + x_off, lo + y_off, hi + y_off))
        x_off += 2 * sub.n + 1
        y_off += 2 * sub.n + 1
    extent = max(x_off, y_off)
    rep = GridRepresentation(tuple(sorted(all_paths, key=lambda p: p.v)), rows=extent, cols=extent)
    return compact(rep)


def _search_component(sub: Graph) -> list[tuple[str, int, int, int]] | None:
    n = sub.n
    limit = 2 * n
    if n == 1:
        return [(HORIZONTAL, 0, 0, 0)]
    adj = [[sub.has_edge(u, v) for v in range(n)] for u in range(n)]
    # Pairwise nonadjacent neighbors of v touch v's path at pairwise
    # distinct points (a shared point would make them intersect), so a
    # placement of v needs at least as many grid points as the largest
    # independent set among v's neighbors.
    min_points = [_neighborhood_independence(sub, v) for v in range(n)]
    # Twins (identical neighborhoods apart from each other) are
    # interchangeable: any solution can be permuted within a twin class, so
    # demanding placements in id order within each class loses nothing.
    twins = [
        [u for u in range(n) if u != v and sub.adj[u] - {v} == sub.adj[v] - {u}]
        for v in range(n)
    ]

    placement: list[tuple[str, int, int, int] | None] = [None] * n
    rect_of: list[tuple[int, int, int, int] | None] = [None] * n

    def anchored_candidates(v: int, a: int) -> list[tuple[str, int, int, int]]:
        # Placements of v's path that touch the placed path of its neighbor a.
        a_orient, a_line, a_lo, a_hi = placement[a]  # type: ignore[misc]
        same, perp = (
            (HORIZONTAL, VERTICAL) if a_orient == HORIZONTAL else (VERTICAL, HORIZONTAL)
        )
        minpts = min_points[v]
        out = []
        for lo in range(a_hi + 1):
            for hi in range(max(lo, a_lo, lo + minpts - 1), limit):
                out.append((same, a_line, lo, hi))
        for line in range(a_lo, a_hi + 1):
            for lo in range(a_line + 1):
                for hi in range(max(a_line, lo + minpts - 1), limit):
                    out.append((perp, line, lo, hi))
        return out

    def consistent(v: int, cand: tuple[str, int, int, int]) -> bool:
        orient, line, lo, hi = cand
        rect = (lo, hi, line, line) if orient == HORIZONTAL else (line, line, lo, hi)
        for u in range(n):
            other = rect_of[u]
            if other is None:
                continue
            crossing = (
                rect[0] <= other[1]
                and other[0] <= rect[1]
                and rect[2] <= other[3]
                and other[2] <= rect[3]
            )
            if crossing != adj[v][u]:
                return False
        for t in twins[v]:
            p = placement[t]
            if p is None:
                continue
            if (t < v and cand < p) or (t > v and cand > p):
                return False
        return True

    def extend(domains: dict[int, list[tuple[str, int, int, int]]]) -> bool:
        if all(p is not None for p in placement):
            return True
        # Fail-first: take the constrained vertex with the fewest options.
        v = min(domains, key=lambda u: (len(domains[u]), u))
        if not domains[v]:
            return False
        for cand in domains[v]:
            orient, line, lo, hi = cand
            placement[v] = cand
            rect_of[v] = (lo, hi, line, line) if orient == HORIZONTAL else (line, line, lo, hi)
            new_domains: dict[int, list] = {}
            dead = False
            for u in range(n):
                if placement[u] is not None or u == v:
                    continue
                if u in domains:
                    filtered = [c for c in domains[u] if consistent(u, c)]
                elif adj[u][v]:
                    filtered = [c for c in anchored_candidates(u, v) if consistent(u, c)]
                else:
                    continue
                if not filtered:
                    dead = True
                    break
                new_domains[u] = filtered
            if not dead and extend(new_domains):
                return True
            placement[v] = None
            rect_of[v] = None
        return False

    first = max(range(n), key=lambda v: (sub.degree(v), -v))
    # Root symmetry breaking: reflecting the grid in either axis maps
    # representations to representations, so the first path's row may be
    # confined to the lower half and its span to left-leaning positions.
    for line in range((limit + 1) // 2):
        for lo in range(limit):
            for hi in range(lo + min_points[first] - 1, limit):
                if lo > limit - 1 - hi:
                    continue
                cand = (HORIZONTAL, line, lo, hi)
                placement[first] = cand
                rect_of[first] = (lo, hi, line, line)
                domains: dict[int, list] = {}
                dead = False
                for u in range(n):
                    if u == first or not adj[u][first]:
                        continue
                    filtered = [c for c in anchored_candidates(u, first) if consistent(u, c)]
                    if not filtered:
                        dead = True
                        break
                    domains[u] = filtered
                if not dead and extend(domains):
                    return placement  # type: ignore[return-value]
                placement[first] = None
                rect_of[first] = None
    return None


def _neighborhood_independence(g: Graph, v: int) -> int:
    nbrs = sorted(g.adj[v])
    best = 0
    for mask in range(1 << len(nbrs)):
        members = [nbrs[i] for i in range(len(nbrs)) if mask >> i & 1]
        if len(members) <= best:
            continue
        if all(not g.has_edge(a, b) for i, a in enumerate(members) for b in members[i + 1:]):
            best = len(members)
    return best


def _consistent(rect: tuple[int, int, int, int], rects: list, want_row: list[bool]) -> int:
    """0 = consistent, 1 = missing required contact, 2 = unwanted contact."""
    for j, other in enumerate(rects):
        crossing = (
            rect[0] <= other[1]
            and other[0] <= rect[1]
            and rect[2] <= other[3]
            and other[2] <= rect[3]
        )
        if crossing != want_row[j]:
            return 2 if crossing else 1
    return 0


def find_induced_f_member(g: Graph) -> list[int] | None:
    """Image vertex set of the first family member induced in g, if any."""
    if g.n < 10:
        return None
    host_degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    for member in enumerate_family(g.n):
        pat_degrees = sorted((member.degree(v) for v in range(member.n)), reverse=True)
        if any(h < p for h, p in zip(host_degrees, pat_degrees)):
            continue
        phi = find_induced_copy(member, g)
        if phi is not None:
            return sorted(phi.values())
    return None


def is_f_free(g: Graph) -> bool:
    return find_induced_f_member(g) is None


def representation_matches(g: Graph, rep: GridRepresentation) -> bool:
    return verify_representation(g, rep).ok


def full_structural_check(g: Graph, rep: GridRepresentation) -> VerificationReport:
    """Pairwise verification plus clique and cardinal checks.

    Cardinal checks apply per connected component that is a block graph;
    components that are not block graphs only get the pairwise and
    common-point checks.
    """
    report = verify_representation(g, rep)
    for comp in connected_components(g):
        sub, back = induced_subgraph(g, comp)
        sub_paths = tuple(
            GridPath(i, rep.path_of(back[i]).orient, rep.path_of(back[i]).line,
                     rep.path_of(back[i]).lo, rep.path_of(back[i]).hi)
            for i in range(sub.n)
        )
        sub_rep = GridRepresentation(sub_paths, rows=rep.rows, cols=rep.cols)
        if validate_block_graph(sub) is None:
            d = decompose(sub)
            for failure in check_cardinal_lemmas(sub, d, sub_rep):
                report.lemma_failures.append(
                    f"component at {comp[0]}: {failure}"
                )
    for clique in maximal_cliques(g):
        try:
            classify_clique_rep(rep, list(clique))
        except CliqueLemmaViolation as exc:
            report.lemma_failures.append(str(exc))
    return report
