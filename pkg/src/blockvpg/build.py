"""Grid representation construction for accepted block graphs.

Blocks are placed in traversal order. The first block becomes a line or
cross clique according to its label multiset; every later group of blocks
hangs off its shared cutpoint v inside the reserved free part(s) of v's
path. Coordinates are exact fractions from an order-dense allocator: a new
value is always minted strictly between two adjacent existing values (or
immediately past an extreme), so every new path stays inside a virgin
corridor and never touches a foreign line. The finished layout is
rank-compressed to integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .blocks import BlockDecomposition
from .graphs import Graph
from .grid import HORIZONTAL, VERTICAL, GridPath, GridRepresentation
from .ordering import LABEL_A, LABEL_B, BlockOrder


class BuildError(RuntimeError):
    """Internal construction invariant failed; indicates a bug, not bad input."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BuildError(msg)


class _Axis:
    """Sorted pool of coordinates supporting order-dense fresh allocation."""

    def __init__(self) -> None:
        self.values: list[Fraction] = []

    def _insert(self, val: Fraction) -> Fraction:
        import bisect

        i = bisect.bisect_left(self.values, val)
        _require(i == len(self.values) or self.values[i] != val, f"coordinate {val} reused")
        self.values.insert(i, val)
        return val

    def extreme(self, sign: int) -> Fraction:
        if not self.values:
            return self._insert(Fraction(0))
        base = self.values[-1] + 1 if sign > 0 else self.values[0] - 1
        return self._insert(base)

    def between(self, a: Fraction, b: Fraction) -> Fraction:
        """Fresh value strictly between a and b, before any existing one."""
        import bisect

        lo, hi = (a, b) if a < b else (b, a)
        _require(lo < hi, f"empty interval ({a}, {b})")
        i = bisect.bisect_right(self.values, lo)
        bound = self.values[i] if i < len(self.values) and self.values[i] < hi else hi
        return self._insert((lo + bound) / 2)

    def just_beyond(self, a: Fraction, sign: int) -> Fraction:
        """Fresh value immediately past a: between a and its neighbor."""
        import bisect

        if sign > 0:
            i = bisect.bisect_right(self.values, a)
            if i == len(self.values):
                return self._insert(a + 1)
            return self._insert((a + self.values[i]) / 2)
        i = bisect.bisect_left(self.values, a)
        if i == 0:
            return self._insert(a - 1)
        return self._insert((a + self.values[i - 1]) / 2)


@dataclass
class _Path:
    orient: str
    line: Fraction
    lo: Fraction
    hi: Fraction

    def rect(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        if self.orient == HORIZONTAL:
            return (self.lo, self.hi, self.line, self.line)
        return (self.line, self.line, self.lo, self.hi)


@dataclass
class _FreeSeg:
    """Unclaimed part of a cutpoint's path, from inner (exclusive) to end."""

    vertex: int
    orient: str
    line: Fraction
    inner: Fraction
    end: Fraction

    @property
    def sign(self) -> int:
        return 1 if self.end > self.inner else -1


@dataclass
class BuildContext:
    g: Graph
    d: BlockDecomposition
    order: BlockOrder
    labels: dict[int, str]
    xs: _Axis = field(default_factory=_Axis)
    ys: _Axis = field(default_factory=_Axis)
    paths: dict[int, _Path] = field(default_factory=dict)
    free: dict[int, list[_FreeSeg]] = field(default_factory=dict)
    done_blocks: list[int] = field(default_factory=list)

    def place(self, v: int, orient: str, line: Fraction, a: Fraction, b: Fraction) -> None:
        _require(v not in self.paths, f"vertex {v} placed twice")
        lo, hi = (a, b) if a <= b else (b, a)
        self.paths[v] = _Path(orient, line, lo, hi)

    def register_free(self, seg: _FreeSeg) -> None:
        self.free.setdefault(seg.vertex, []).append(seg)

    def label_of(self, v: int) -> str | None:
        return self.labels.get(v)


def build_representation(
    g: Graph,
    d: BlockDecomposition,
    order: BlockOrder,
    labels: dict[int, str],
) -> GridRepresentation:
    """Place every block of a connected graph that passed the decision checks."""
    ctx = BuildContext(g, d, order, labels)
    represent_first_block(ctx)
    seq = order.block_seq
    i = 1
    while i < len(seq):
        v = order.parent_cut[seq[i]]
        j = i
        while j < len(seq) and order.parent_cut.get(seq[j]) == v:
            j += 1
        attach_blocks(ctx, v, list(seq[i:j]))
        i = j
    return finalize(ctx)


def represent_first_block(ctx: BuildContext) -> BuildContext:
    """Lay out the start block and reserve free segments for its cutpoints."""
    b0 = ctx.order.block_seq[0]
    verts = ctx.d.blocks[b0]
    cps = sorted(ctx.d.block_cutpoints[b0])
    labs = tuple(sorted(ctx.labels[c] for c in cps))
    _require(
        labs in {(), ("A",), ("B",), ("A", "A"), ("A", "B"), ("B", "B"),
                 ("A", "A", "A"), ("A", "A", "B"), ("A", "A", "A", "A")},
        f"start block has disallowed label multiset {labs}",
    )
    plain = [v for v in verts if v not in cps]

    if len(verts) == 1:
        x = ctx.xs.extreme(1)
        y = ctx.ys.extreme(1)
        ctx.place(verts[0], HORIZONTAL, y, x, x)
    elif len(labs) <= 2 and LABEL_B not in labs or labs == ("B",):
        _first_block_line(ctx, cps, plain)
    else:
        _first_block_cross(ctx, cps, plain)
    ctx.done_blocks.append(b0)
    audit(ctx)
    return ctx


def _first_block_line(ctx: BuildContext, cps: list[int], plain: list[int]) -> None:
    y = ctx.ys.extreme(1)
    x0 = ctx.xs.extreme(1)
    x1 = ctx.xs.extreme(1)
    for v in plain:
        ctx.place(v, HORIZONTAL, y, x0, x1)
    if not cps:
        return
    east = ctx.xs.extreme(1)
    if len(cps) == 1:
        c = cps[0]
        if ctx.labels[c] == LABEL_B:
            west = ctx.xs.extreme(-1)
            ctx.place(c, HORIZONTAL, y, west, east)
            ctx.register_free(_FreeSeg(c, HORIZONTAL, y, x1, east))
            ctx.register_free(_FreeSeg(c, HORIZONTAL, y, x0, west))
        else:
            ctx.place(c, HORIZONTAL, y, x0, east)
            ctx.register_free(_FreeSeg(c, HORIZONTAL, y, x1, east))
    else:  # ("A", "A")
        c1, c2 = cps
        west = ctx.xs.extreme(-1)
        ctx.place(c1, HORIZONTAL, y, x0, east)
        ctx.place(c2, HORIZONTAL, y, west, x1)
        ctx.register_free(_FreeSeg(c1, HORIZONTAL, y, x1, east))
        ctx.register_free(_FreeSeg(c2, HORIZONTAL, y, x0, west))


def _first_block_cross(ctx: BuildContext, cps: list[int], plain: list[int]) -> None:
    cy = ctx.ys.extreme(1)
    cx = ctx.xs.extreme(1)
    for v in plain:
        ctx.place(v, HORIZONTAL, cy, cx, cx)
    by_label = sorted(cps, key=lambda c: (ctx.labels[c], c))
    a_cuts = [c for c in by_label if ctx.labels[c] == LABEL_A]
    b_cuts = [c for c in by_label if ctx.labels[c] == LABEL_B]

    def vertical_pair(c: int, register_both: bool) -> None:
        north = ctx.ys.just_beyond(cy, 1)
        south = ctx.ys.just_beyond(cy, -1)
        ctx.place(c, VERTICAL, cx, south, north)
        ctx.register_free(_FreeSeg(c, VERTICAL, cx, cy, north))
        if register_both:
            ctx.register_free(_FreeSeg(c, VERTICAL, cx, cy, south))

    def horizontal_pair(c: int, register_both: bool) -> None:
        east = ctx.xs.just_beyond(cx, 1)
        west = ctx.xs.just_beyond(cx, -1)
        ctx.place(c, HORIZONTAL, cy, west, east)
        ctx.register_free(_FreeSeg(c, HORIZONTAL, cy, cx, east))
        if register_both:
            ctx.register_free(_FreeSeg(c, HORIZONTAL, cy, cx, west))

    def single_arm(c: int, orient: str, sign: int) -> None:
        axis = ctx.ys if orient == VERTICAL else ctx.xs
        anchor = cy if orient == VERTICAL else cx
        tip = axis.just_beyond(anchor, sign)
        line = cx if orient == VERTICAL else cy
        ctx.place(c, orient, line, anchor, tip)
        ctx.register_free(_FreeSeg(c, orient, line, anchor, tip))

    if len(cps) == 2:
        # One cutpoint spans the column, the other the row; any B cutpoint
        # needs the full pair of opposite arms.
        first, second = (b_cuts + a_cuts)[:2]
        vertical_pair(first, ctx.labels[first] == LABEL_B)
        horizontal_pair(second, ctx.labels[second] == LABEL_B)
    elif len(cps) == 3:
        distinguished = b_cuts[0] if b_cuts else a_cuts[0]
        rest = sorted(c for c in cps if c != distinguished)
        vertical_pair(distinguished, ctx.labels[distinguished] == LABEL_B)
        single_arm(rest[0], HORIZONTAL, 1)
        single_arm(rest[1], HORIZONTAL, -1)
    else:  # four cutpoints, all A
        c_n, c_s, c_e, c_w = sorted(cps)
        single_arm(c_n, VERTICAL, 1)
        single_arm(c_s, VERTICAL, -1)
        single_arm(c_e, HORIZONTAL, 1)
        single_arm(c_w, HORIZONTAL, -1)


_ALLOWED_OTHERS = {(), ("A",), ("B",), ("A", "A"), ("A", "B"), ("A", "A", "A")}
_HEAVY_OTHERS = {("A", "B"), ("A", "A", "A")}


def attach_blocks(ctx: BuildContext, v: int, blocks: list[int]) -> BuildContext:
    """Attach all blocks sharing the cutpoint v onto v's free segment(s).

    Blocks whose own cutpoints need an endpoint of v's path (one extra label
    beyond the opposite pair) are heavy and receive the endpoint-adjacent
    zone, where their distinguished vertex pokes past v's endpoint; the rest
    are laid out on interior zones in ascending block order.
    """
    segs = ctx.free.pop(v, [])
    v_label = ctx.labels[v]
    _require(len(segs) == (2 if v_label == LABEL_B else 1),
             f"cutpoint {v} has {len(segs)} free segments for label {v_label}")

    infos: dict[int, tuple[tuple[str, ...], list[int]]] = {}
    for b in blocks:
        others = sorted(c for c in ctx.d.block_cutpoints[b] if c != v)
        labs = tuple(sorted(ctx.labels[c] for c in others))
        _require(labs in _ALLOWED_OTHERS, f"block {b} at {v} has sibling labels {labs}")
        infos[b] = (labs, others)

    heavies = sorted(b for b in blocks if infos[b][0] in _HEAVY_OTHERS)
    lights = sorted(b for b in blocks if infos[b][0] not in _HEAVY_OTHERS)
    _require(len(heavies) <= len(segs), f"cutpoint {v}: {len(heavies)} heavy blocks")

    plan: list[tuple[_FreeSeg, list[int], int | None]] = []
    plan.append((segs[0], lights, heavies[0] if heavies else None))
    if len(segs) == 2:
        plan.append((segs[1], [], heavies[1] if len(heavies) == 2 else None))

    for seg, seg_lights, seg_heavy in plan:
        along = ctx.xs if seg.orient == HORIZONTAL else ctx.ys
        cursor = seg.inner
        for b in seg_lights:
            labs, others = infos[b]
            if not others:
                a = along.between(cursor, seg.end)
                bb = along.between(a, seg.end)
                for w in ctx.d.blocks[b]:
                    if w != v:
                        ctx.place(w, seg.orient, seg.line, a, bb)
                cursor = bb
            else:
                gamma = along.between(cursor, seg.end)
                _attach_cross(ctx, v, seg, b, gamma, others, with_poke=False)
                cursor = gamma
            ctx.done_blocks.append(b)
        if seg_heavy is not None:
            labs, others = infos[seg_heavy]
            gamma = along.between(cursor, seg.end)
            _attach_cross(ctx, v, seg, seg_heavy, gamma, others, with_poke=True)
            ctx.done_blocks.append(seg_heavy)
    audit(ctx)
    return ctx


def _attach_cross(
    ctx: BuildContext,
    v: int,
    seg: _FreeSeg,
    block: int,
    gamma: Fraction,
    others: list[int],
    with_poke: bool,
) -> None:
    horizontal_parent = seg.orient == HORIZONTAL
    cx, cy = (gamma, seg.line) if horizontal_parent else (seg.line, gamma)
    perp_orient = VERTICAL if horizontal_parent else HORIZONTAL
    perp_axis = ctx.ys if horizontal_parent else ctx.xs
    anchor = cy if horizontal_parent else cx  # perp-axis value of the center

    def arm_pair(c: int, register_both: bool) -> None:
        plus = perp_axis.just_beyond(anchor, 1)
        minus = perp_axis.just_beyond(anchor, -1)
        ctx.place(c, perp_orient, gamma, minus, plus)
        ctx.register_free(_FreeSeg(c, perp_orient, gamma, anchor, plus))
        if register_both:
            ctx.register_free(_FreeSeg(c, perp_orient, gamma, anchor, minus))

    def arm_single(c: int, sign: int) -> None:
        tip = perp_axis.just_beyond(anchor, sign)
        ctx.place(c, perp_orient, gamma, anchor, tip)
        ctx.register_free(_FreeSeg(c, perp_orient, gamma, anchor, tip))

    def poke(c: int) -> None:
        _require(with_poke, f"block {block} needs an endpoint zone but got an interior one")
        along = ctx.xs if horizontal_parent else ctx.ys
        tip = along.just_beyond(seg.end, seg.sign)
        ctx.place(c, seg.orient, seg.line, gamma, tip)
        ctx.register_free(_FreeSeg(c, seg.orient, seg.line, seg.end, tip))

    labs = [ctx.labels[c] for c in others]
    if len(others) == 1:
        arm_pair(others[0], labs[0] == LABEL_B)
    elif len(others) == 2 and labs.count(LABEL_B) == 0:
        arm_single(others[0], 1)
        arm_single(others[1], -1)
    elif len(others) == 2:
        b_vertex = others[labs.index(LABEL_B)]
        a_vertex = others[labs.index(LABEL_A)]
        arm_pair(b_vertex, True)
        poke(a_vertex)
    else:
        arm_single(others[0], 1)
        arm_single(others[1], -1)
        poke(others[2])

    for w in ctx.d.blocks[block]:
        if w != v and w not in others:
            ctx.place(w, HORIZONTAL, cy, cx, cx)


def finalize(ctx: BuildContext) -> GridRepresentation:
    """Rank-compress the fractional layout onto a dense integer grid."""
    _require(len(ctx.paths) == ctx.g.n, f"placed {len(ctx.paths)} of {ctx.g.n} vertices")
    xs: set[Fraction] = set()
    ys: set[Fraction] = set()
    for p in ctx.paths.values():
        xlo, xhi, ylo, yhi = p.rect()
        xs.update((xlo, xhi))
        ys.update((ylo, yhi))
    xrank = {val: i for i, val in enumerate(sorted(xs))}
    yrank = {val: i for i, val in enumerate(sorted(ys))}
    paths = []
    for v in range(ctx.g.n):
        p = ctx.paths[v]
        if p.orient == HORIZONTAL:
            paths.append(GridPath(v, HORIZONTAL, yrank[p.line], xrank[p.lo], xrank[p.hi]))
        else:
            paths.append(GridPath(v, VERTICAL, xrank[p.line], yrank[p.lo], yrank[p.hi]))
    return GridRepresentation(tuple(paths), rows=max(len(yrank), 1), cols=max(len(xrank), 1))


def audit(ctx: BuildContext) -> None:
    """Check the inductive invariants on the partial layout.

    Every placed cutpoint must be the strictly farthest line of its parent
    block's clique in at least one direction (two opposite directions when
    labeled B), and reserved free segments must not touch foreign paths.
    """
    for b in ctx.done_blocks:
        rects = {w: ctx.paths[w].rect() for w in ctx.d.blocks[b] if w in ctx.paths}
        for c in ctx.d.block_cutpoints[b]:
            if ctx.order.h_of.get(c) != b or c not in rects:
                continue
            dirs = _strict_extremes(rects, c)
            if ctx.labels[c] == LABEL_B:
                _require(
                    {"N", "S"} <= dirs or {"E", "W"} <= dirs,
                    f"B cutpoint {c} is extreme in {sorted(dirs)} within block {b}",
                )
            else:
                _require(bool(dirs), f"A cutpoint {c} is not extreme within block {b}")
    for vertex, segs in ctx.free.items():
        for seg in segs:
            for w, p in ctx.paths.items():
                if w != vertex and _seg_touches(seg, p):
                    raise BuildError(
                        f"free segment of {vertex} intersects the path of {w}"
                    )


def _strict_extremes(rects: dict[int, tuple], c: int) -> set[str]:
    xlo, xhi, ylo, yhi = rects[c]
    others = [r for w, r in rects.items() if w != c]
    dirs = set()
    if all(r[1] < xhi for r in others):
        dirs.add("E")
    if all(r[0] > xlo for r in others):
        dirs.add("W")
    if all(r[3] < yhi for r in others):
        dirs.add("N")
    if all(r[2] > ylo for r in others):
        dirs.add("S")
    return dirs


def _seg_touches(seg: _FreeSeg, p: _Path) -> bool:
    xlo, xhi, ylo, yhi = p.rect()
    if seg.orient == HORIZONTAL:
        if not (ylo <= seg.line <= yhi):
            return False
        span_lo, span_hi = xlo, xhi
    else:
        if not (xlo <= seg.line <= xhi):
            return False
        span_lo, span_hi = ylo, yhi
    if seg.sign > 0:
        return span_hi > seg.inner and span_lo <= seg.end
    return span_lo < seg.inner and span_hi >= seg.end
