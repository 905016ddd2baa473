"""Axis-aligned grid paths and representations."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphInputError

HORIZONTAL = "H"
VERTICAL = "V"


@dataclass(frozen=True)
class GridPath:
    """One axis-aligned path: a row segment (H) or a column segment (V).

    For H the fixed `line` is the row and the closed span [lo, hi] runs over
    columns; for V the line is the column and the span runs over rows. A
    single-point path (lo == hi) intersects anything covering that point
    regardless of its nominal orientation.
    """

    v: int
    orient: str
    line: int
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.orient not in (HORIZONTAL, VERTICAL):
            raise GraphInputError(f"orientation must be H or V, got {self.orient!r}")
        if self.lo > self.hi:
            raise GraphInputError(f"span [{self.lo}, {self.hi}] is empty")

    def rect(self) -> tuple[int, int, int, int]:
        """Covered points as (xlo, xhi, ylo, yhi)."""
        if self.orient == HORIZONTAL:
            return (self.lo, self.hi, self.line, self.line)
        return (self.line, self.line, self.lo, self.hi)

    def points(self):
        xlo, xhi, ylo, yhi = self.rect()
        for x in range(xlo, xhi + 1):
            for y in range(ylo, yhi + 1):
                yield (x, y)


@dataclass(frozen=True)
class GridRepresentation:
    """One path per vertex, plus the grid extent bounding every path."""

    paths: tuple[GridPath, ...]
    rows: int
    cols: int

    def __post_init__(self) -> None:
        for p in self.paths:
            xlo, xhi, ylo, yhi = p.rect()
            if xlo < 0 or ylo < 0 or xhi >= self.cols or yhi >= self.rows:
                raise GraphInputError(
                    f"path for vertex {p.v} exceeds the {self.rows}x{self.cols} grid"
                )

    def path_of(self, v: int) -> GridPath:
        for p in self.paths:
            if p.v == v:
                return p
        raise GraphInputError(f"no path for vertex {v}")


def paths_intersect(p: GridPath, q: GridPath) -> bool:
    """True iff the two point sets share at least one grid point."""
    axlo, axhi, aylo, ayhi = p.rect()
    bxlo, bxhi, bylo, byhi = q.rect()
    return axlo <= bxhi and bxlo <= axhi and aylo <= byhi and bylo <= ayhi


def compact(rep: GridRepresentation) -> GridRepresentation:
    """Rank-compress row and column coordinates independently.

    Only the used coordinate values (span endpoints and fixed lines) matter
    for intersection, and every intersection test compares those values by
    order, so a strictly monotone remapping of each axis preserves the whole
    pairwise intersection relation.
    """
    xs: set[int] = set()
    ys: set[int] = set()
    for p in rep.paths:
        xlo, xhi, ylo, yhi = p.rect()
        xs.update((xlo, xhi))
        ys.update((ylo, yhi))
    xrank = {v: i for i, v in enumerate(sorted(xs))}
    yrank = {v: i for i, v in enumerate(sorted(ys))}
    new_paths = []
    for p in rep.paths:
        if p.orient == HORIZONTAL:
            new_paths.append(
                GridPath(p.v, p.orient, yrank[p.line], xrank[p.lo], xrank[p.hi])
            )
        else:
            new_paths.append(
                GridPath(p.v, p.orient, xrank[p.line], yrank[p.lo], yrank[p.hi])
            )
    return GridRepresentation(tuple(new_paths), rows=max(len(yrank), 1), cols=max(len(xrank), 1))


def intersection_matrix(rep: GridRepresentation) -> dict[tuple[int, int], bool]:
    """Pairwise intersection relation keyed by sorted vertex pairs."""
    out: dict[tuple[int, int], bool] = {}
    ps = rep.paths
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            a, b = ps[i], ps[j]
            key = (a.v, b.v) if a.v < b.v else (b.v, a.v)
            out[key] = paths_intersect(a, b)
    return out
