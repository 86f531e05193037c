"""Domino tilings of colored regions and their edge-path families.

Cells are unit squares indexed by (level, column); a cell is black when its
coordinates have equal parity.  Vertical edges are identified with the cell
to their right.  The edges of a region split into entries (black cell, no
white region cell to the left), interior edges (white region cell to the
left) and exits (white region cell to the left, black cell outside the
region).  Tilings of the region correspond bijectively to families of
disjoint paths routing every entry to an exit through interior edges, with
steps (1,1), (0,2), (-1,1).

Specialised to the Aztec diamond of order m (placed here with rows 1..2m
centred on column -1/2), these edge paths are exactly the images of the
disjoint order-(m+1) path families under the shear (level, column) ->
(level+column, column-level), with the empty path P_0 carried by the
virtual edge at (0, 0) just outside the region.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Iterable, Sequence

from .combing import NotDisjoint
from .enumeration import CapExceeded
from .families import (
    ExplicitPath,
    InvalidFamily,
    ParseError,
    PathFamily,
    explicit_paths,
    family_from_paths,
    is_disjoint,
)

Cell = tuple[int, int]

EDGE_STEPS = ((1, 1), (0, 2), (-1, 1))


class NotATiling(ValueError):
    """The given dominoes do not tile the expected region."""


def is_black(cell: Cell) -> bool:
    return (cell[0] - cell[1]) % 2 == 0


@dataclass(frozen=True)
class Region:
    """A finite set of cells; colors follow from coordinate parity."""

    cells: frozenset[Cell]

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Region":
        return cls(frozenset((int(i), int(j)) for i, j in cells))

    def black_cells(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if is_black(c))

    def white_cells(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if not is_black(c))

    def to_text(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in sorted(self.cells))

    @classmethod
    def from_text(cls, text: str) -> "Region":
        cells = []
        for ln, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError("region line must hold two integers", line=ln)
            try:
                cells.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise ParseError("non-integer cell coordinate", line=ln) from None
        return cls(frozenset(cells))


@dataclass(frozen=True)
class EdgeSets:
    """Entries, interior edges and exits of a region."""

    entries: frozenset[Cell]
    interior: frozenset[Cell]
    exits: frozenset[Cell]


@dataclass(frozen=True)
class DominoTiling:
    """A partition of a region into adjacent cell pairs (each pair sorted)."""

    dominoes: frozenset[tuple[Cell, Cell]]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Cell, Cell]]) -> "DominoTiling":
        return cls(frozenset(tuple(sorted(((int(a), int(b)), (int(c), int(d)))))
                             for (a, b), (c, d) in pairs))

    def cells(self) -> frozenset[Cell]:
        return frozenset(c for pair in self.dominoes for c in pair)

    def to_text(self) -> str:
        lines = sorted(f"{a} {b} {c} {d}" for (a, b), (c, d) in self.dominoes)
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str) -> "DominoTiling":
        pairs = []
        for ln, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            fields = line.split()
            if len(fields) != 4:
                raise ParseError("tiling line must hold four integers", line=ln)
            try:
                a, b, c, d = (int(x) for x in fields)
            except ValueError:
                raise ParseError("non-integer cell coordinate", line=ln) from None
            pairs.append(((a, b), (c, d)))
        return cls.from_pairs(pairs)


@dataclass(frozen=True)
class EdgePathFamily:
    """Paths over vertical edges, each from an entry to an exit."""

    paths: tuple[tuple[Cell, ...], ...]

    @classmethod
    def from_paths(cls, paths: Iterable[Sequence[Cell]]) -> "EdgePathFamily":
        return cls(tuple(sorted(tuple(p) for p in paths)))


def region_edges(s: Region) -> EdgeSets:
    """Classify the vertical edges of s into entries, interior edges, exits."""
    cells = s.cells
    entries, interior, exits = set(), set(), set()
    for c in cells:
        left = (c[0], c[1] - 1)
        if is_black(c):
            if left in cells:
                interior.add(c)
            else:
                entries.add(c)
        else:
            right = (c[0], c[1] + 1)
            if right not in cells:
                exits.add(right)
    return EdgeSets(frozenset(entries), frozenset(interior), frozenset(exits))


def _check_tiles(s: Region, t: DominoTiling) -> None:
    seen: set[Cell] = set()
    for c1, c2 in t.dominoes:
        if abs(c1[0] - c2[0]) + abs(c1[1] - c2[1]) != 1:
            raise NotATiling(f"cells {c1} and {c2} are not adjacent")
        for c in (c1, c2):
            if c in seen:
                raise NotATiling(f"cell {c} covered twice")
            seen.add(c)
    if seen != s.cells:
        raise NotATiling("dominoes do not cover exactly the region")


def tiling_to_paths(s: Region, t: DominoTiling) -> EdgePathFamily:
    """The edge-path family of a tiling.

    Each domino contributes the pair (left edge of its black cell, right
    edge of its white cell); the pairs with distinct edges chain into
    maximal paths from entries to exits.
    """
    _check_tiles(s, t)
    step_from: dict[Cell, Cell] = {}
    for c1, c2 in t.dominoes:
        black, white = (c1, c2) if is_black(c1) else (c2, c1)
        e, e2 = black, (white[0], white[1] + 1)
        if e != e2:
            step_from[e] = e2
    targets = set(step_from.values())
    paths = []
    for start in step_from:
        if start in targets:
            continue
        seq = [start]
        while seq[-1] in step_from:
            seq.append(step_from[seq[-1]])
        paths.append(tuple(seq))
    fam = EdgePathFamily.from_paths(paths)
    edges = region_edges(s)
    assert {p[0] for p in fam.paths} == edges.entries
    assert {p[-1] for p in fam.paths} == edges.exits
    return fam


def paths_to_tiling(s: Region, p: EdgePathFamily) -> DominoTiling:
    """Rebuild the tiling of s from an edge-path family; inverse of
    tiling_to_paths.

    A black cell pairs with the white cell across its left edge when that
    edge is off every path, and otherwise with the white cell one path step
    forward.
    """
    edges = region_edges(s)
    seen_edges: set[Cell] = set()
    next_edge: dict[Cell, Cell] = {}
    for path in p.paths:
        if len(path) < 2:
            raise InvalidFamily(f"path {path} must contain at least one step")
        if path[0] not in edges.entries:
            raise InvalidFamily(f"path start {path[0]} is not an entry")
        if path[-1] not in edges.exits:
            raise InvalidFamily(f"path end {path[-1]} is not an exit")
        for mid in path[1:-1]:
            if mid not in edges.interior:
                raise InvalidFamily(f"edge {mid} is not interior")
        for a, b in zip(path, path[1:]):
            if (b[0] - a[0], b[1] - a[1]) not in EDGE_STEPS:
                raise InvalidFamily(f"bad step {a} -> {b}")
            next_edge[a] = b
        for e in path:
            if e in seen_edges:
                raise InvalidFamily(f"edge {e} lies on two paths")
            seen_edges.add(e)
    if {path[0] for path in p.paths} != edges.entries:
        raise InvalidFamily("every entry must lie on a path")
    if {path[-1] for path in p.paths} != edges.exits:
        raise InvalidFamily("every exit must lie on a path")
    whites = s.white_cells()
    used: set[Cell] = set()
    pairs = []
    for black in s.black_cells():
        if black in next_edge:
            nxt = next_edge[black]
            white = (nxt[0], nxt[1] - 1)
        else:
            white = (black[0], black[1] - 1)
        if white not in whites or white in used:
            raise InvalidFamily(f"black cell {black} cannot pair with {white}")
        used.add(white)
        pairs.append((black, white))
    if used != whites:
        raise InvalidFamily("some white cells stay uncovered")
    return DominoTiling.from_pairs(pairs)


def aztec_region(order: int) -> Region:
    """The Aztec diamond of the given order: 2*order*(order+1) cells in rows
    1..2*order, centred on column -1/2."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    cells = []
    for i in range(1, 2 * order + 1):
        half = i if i <= order else 2 * order - i + 1
        cells.extend((i, j) for j in range(-half, half))
    return Region(frozenset(cells))


def enumerate_tilings(s: Region, cap: int = 40) -> set[DominoTiling]:
    """All domino tilings of s, by backtracking on the first uncovered cell."""
    if len(s.cells) > cap:
        raise CapExceeded(f"{len(s.cells)} cells exceed cap {cap}")
    cells = sorted(s.cells)
    cellset = s.cells
    out: set[DominoTiling] = set()
    covered: set[Cell] = set()
    pairs: list[tuple[Cell, Cell]] = []

    def rec(start: int) -> None:
        idx = start
        while idx < len(cells) and cells[idx] in covered:
            idx += 1
        if idx == len(cells):
            out.add(DominoTiling(frozenset(pairs)))
            return
        c = cells[idx]
        covered.add(c)
        for di, dj in ((0, 1), (1, 0)):
            nb = (c[0] + di, c[1] + dj)
            if nb in cellset and nb not in covered:
                covered.add(nb)
                pairs.append((c, nb))
                rec(idx + 1)
                pairs.pop()
                covered.remove(nb)
        covered.remove(c)

    rec(0)
    return out


def _shear(point: Cell) -> Cell:
    lev, col = point
    return (lev + col, col - lev)


def _unshear(edge: Cell) -> Cell:
    s, u = edge
    if (s - u) % 2:
        raise NotATiling(f"edge {edge} is not the image of a lattice point")
    return ((s - u) // 2, (s + u) // 2)


def family_to_tiling(f: PathFamily) -> DominoTiling:
    """The tiling of the order n-1 Aztec diamond carried by a disjoint
    order-n family.

    Paths P_1, ..., P_{n-1} shear onto edge paths of the region; P_0 sits
    on the virtual edge (0, 0) outside the region and is dropped.
    """
    if f.n < 1:
        raise ValueError("need at least one path")
    if not is_disjoint(f):
        raise NotDisjoint("only disjoint families correspond to tilings")
    region = aztec_region(f.n - 1)
    paths = explicit_paths(f)
    edge_paths = [tuple(_shear(pt) for pt in paths[i].points()) for i in range(1, f.n)]
    return paths_to_tiling(region, EdgePathFamily.from_paths(edge_paths))


def _aztec_order_of(t: DominoTiling) -> int:
    count = len(t.cells())
    order = 0
    while 2 * order * (order + 1) < count:
        order += 1
    if 2 * order * (order + 1) != count:
        raise NotATiling(f"{count} cells is not an Aztec diamond cell count")
    if t.cells() != aztec_region(order).cells:
        raise NotATiling("cells do not form the Aztec diamond in standard placement")
    return order


def tiling_to_family(t: DominoTiling) -> PathFamily:
    """The disjoint order m+1 family of a tiling of the order-m Aztec
    diamond; inverse of family_to_tiling."""
    order = _aztec_order_of(t)
    fam = tiling_to_paths(aztec_region(order), t)
    by_index: dict[int, ExplicitPath] = {0: ExplicitPath((0, 0), ())}
    for edge_path in fam.paths:
        points = [_unshear(e) for e in edge_path]
        i = points[0][0]
        if points[0] != (i, 0) or i in by_index:
            raise NotATiling(f"edge path starting at {edge_path[0]} is misplaced")
        by_index[i] = ExplicitPath.from_points(points)
    if sorted(by_index) != list(range(order + 1)):
        raise NotATiling("edge paths do not form a complete family")
    return family_from_paths([by_index[i] for i in range(order + 1)])


def _rotate_cell(order: int) -> Callable[[Cell], Cell]:
    return lambda c: (2 * order + 1 - c[0], -1 - c[1])


def dual_family(f: PathFamily) -> PathFamily:
    """The family extracted from the same tiling under the opposite edge
    convention, in reflected coordinates.

    Implemented as the tiling round trip through the half-turn of the
    diamond.  An involution; every horizontal step of f is crossed at its
    midpoint by a vertical step of the dual and vice versa.
    """
    if f.n == 0:
        return f
    tiling = family_to_tiling(f)
    rot = _rotate_cell(f.n - 1)
    rotated = DominoTiling.from_pairs((rot(a), rot(b)) for a, b in tiling.dominoes)
    return tiling_to_family(rotated)


class Convention(IntEnum):
    """The four edge conventions for extracting paths from one tiling."""

    CANONICAL = 0
    HALF_TURN = 1
    TRANSPOSE = 2
    ANTITRANSPOSE = 3


def _cell_symmetry(conv: Convention, m: int) -> Callable[[Cell], Cell]:
    if conv == Convention.CANONICAL:
        return lambda c: c
    if conv == Convention.HALF_TURN:
        return _rotate_cell(m)
    if conv == Convention.TRANSPOSE:
        return lambda c: (c[1] + m + 1, c[0] - m - 1)
    return lambda c: (m - c[1], m - c[0])


def _point_symmetry(conv: Convention, m: int) -> Callable[[tuple[float, float]], tuple[float, float]]:
    # Continuous counterparts of _cell_symmetry; each is an involution.
    if conv == Convention.CANONICAL:
        return lambda p: p
    if conv == Convention.HALF_TURN:
        return lambda p: (2 * m + 2 - p[0], -p[1])
    if conv == Convention.TRANSPOSE:
        return lambda p: (p[1] + m + 1, p[0] - m - 1)
    return lambda p: (m + 1 - p[1], m + 1 - p[0])


def convention_paths(t: DominoTiling, conv: Convention) -> list[list[tuple[float, float]]]:
    """Edge-midpoint polylines of an Aztec tiling under one of the four
    conventions, in (level, column) drawing coordinates.

    The first polyline is the single-point carrier of the empty path, so an
    order-m tiling always yields m+1 polylines.
    """
    m = _aztec_order_of(t)
    sym = _cell_symmetry(conv, m)
    unsym = _point_symmetry(conv, m)
    mapped = DominoTiling.from_pairs((sym(a), sym(b)) for a, b in t.dominoes)
    fam = tiling_to_paths(aztec_region(m), mapped)
    polylines = [[unsym((0.5, 0.0))]]
    for path in fam.paths:
        polylines.append([unsym((e[0] + 0.5, float(e[1]))) for e in path])
    return polylines
