"""Lattice path families with horizontal, diagonal and vertical steps.

An order-n family consists of paths P_0, ..., P_{n-1}, where P_i runs from
(i, 0) to (0, i).  Coordinates are (level, column) with the level increasing
upward, and the basic steps are (0, +1) horizontal, (-1, +1) diagonal and
(-1, 0) vertical.  A family is encoded by a pair of ragged triangular
matrices (B, D): B[i][j] in {0, 1} is the direction of the step of P_i from
column j to column j+1 (0 horizontal, 1 diagonal), and D[i][j] counts the
vertical steps of P_i in column j.  Vertical steps inside one column are
necessarily consecutive (any other step leaves the column), so the encoding
is lossless.

A family is "cliff-shaped" when every vertical step sits in the final
column of its path, so it is determined by a triangular array of n(n-1)/2
free bits.  It is "disjoint" when the supports of all paths are pairwise
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

H_STEP = (0, 1)
D_STEP = (-1, 1)
V_STEP = (-1, 0)
STEP_VECTORS = (H_STEP, D_STEP, V_STEP)


class InvalidFamily(ValueError):
    """A PathFamily violates its structural invariants."""


class MalformedPath(ValueError):
    """An explicit path has bad endpoints or step vectors."""


class ParseError(ValueError):
    """A text serialization could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class BitTriangle:
    """A strictly lower triangular array of bits: rows 0..n-1, row i has i bits."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for i, row in enumerate(self.bits):
            if not isinstance(row, tuple) or len(row) != i:
                raise ValueError(f"triangle row {i} must be a tuple of length {i}")
            for b in row:
                if b not in (0, 1):
                    raise ValueError(f"triangle entries must be bits, got {b!r} in row {i}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitTriangle":
        return cls(tuple(tuple(int(b) for b in row) for row in rows))

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines.extend(" ".join(str(b) for b in row) for row in self.bits[1:])
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitTriangle":
        lines = text.splitlines()
        if not lines or not lines[0].split():
            raise ParseError("missing order header", line=1)
        try:
            n = int(lines[0])
        except ValueError:
            raise ParseError(f"bad order header {lines[0]!r}", line=1) from None
        if n < 0:
            raise ParseError("order must be nonnegative", line=1)
        rows: list[tuple[int, ...]] = [()]
        for i in range(1, n):
            if i >= len(lines):
                raise ParseError(f"missing row {i}", line=i + 1)
            fields = lines[i].split()
            if len(fields) != i:
                raise ParseError(f"row {i} must hold {i} bits", line=i + 1)
            row = []
            for col, field in enumerate(fields):
                if field not in ("0", "1"):
                    raise ParseError(f"bad bit {field!r}", line=i + 1, column=col)
                row.append(int(field))
            rows.append(tuple(row))
        for offset, extra in enumerate(lines[max(n, 1):]):
            if extra.strip():
                raise ParseError("trailing content after triangle",
                                 line=max(n, 1) + offset + 1)
        return cls(tuple(rows[:n]) if n else ())


@dataclass(frozen=True)
class ExplicitPath:
    """A concrete path: a start point and a sequence of step vectors."""

    start: tuple[int, int]
    steps: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for s in self.steps:
            if s not in STEP_VECTORS:
                raise MalformedPath(f"bad step vector {s!r}")

    @property
    def end(self) -> tuple[int, int]:
        lev, col = self.start
        for dl, dc in self.steps:
            lev += dl
            col += dc
        return (lev, col)

    def points(self) -> list[tuple[int, int]]:
        pts = [self.start]
        lev, col = self.start
        for dl, dc in self.steps:
            lev += dl
            col += dc
            pts.append((lev, col))
        return pts

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.points())

    @classmethod
    def from_points(cls, points: Sequence[tuple[int, int]]) -> "ExplicitPath":
        if not points:
            raise MalformedPath("a path needs at least its start point")
        steps = []
        for (al, ac), (bl, bc) in zip(points, points[1:]):
            steps.append((bl - al, bc - ac))
        return cls(tuple(points[0]), tuple(steps))


@dataclass(frozen=True)
class PathFamily:
    """The (B, D) encoding of an order-n family.

    The constructor performs no validation so that diagnostics can be
    produced for arbitrary input; see validate_family.
    """

    B: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.B)

    @classmethod
    def from_rows(cls, B: Iterable[Iterable[int]], D: Iterable[Iterable[int]]) -> "PathFamily":
        return cls(
            tuple(tuple(int(x) for x in row) for row in B),
            tuple(tuple(int(x) for x in row) for row in D),
        )

    def to_text(self) -> str:
        lines = [str(self.n)]
        for i in range(self.n):
            tokens = ["B:"]
            tokens.extend(str(b) for b in self.B[i])
            tokens.append("|")
            tokens.append("D:")
            tokens.extend(str(d) for d in self.D[i])
            lines.append(" ".join(tokens))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PathFamily":
        lines = text.splitlines()
        if not lines or not lines[0].split():
            raise ParseError("missing order header", line=1)
        try:
            n = int(lines[0])
        except ValueError:
            raise ParseError(f"bad order header {lines[0]!r}", line=1) from None
        if n < 0:
            raise ParseError("order must be nonnegative", line=1)
        B, D = [], []
        for i in range(n):
            if i + 1 >= len(lines):
                raise ParseError(f"missing row {i}", line=i + 2)
            line = lines[i + 1]
            if "|" not in line:
                raise ParseError("row must contain '|'", line=i + 2)
            left, _, right = line.partition("|")
            lfields = left.split()
            rfields = right.split()
            if not lfields or lfields[0] != "B:":
                raise ParseError("row must start with 'B:'", line=i + 2)
            if not rfields or rfields[0] != "D:":
                raise ParseError("second half must start with 'D:'", line=i + 2)
            try:
                brow = tuple(int(x) for x in lfields[1:])
                drow = tuple(int(x) for x in rfields[1:])
            except ValueError:
                raise ParseError("non-integer entry", line=i + 2) from None
            if len(brow) != i or len(drow) != i + 1:
                raise ParseError(f"row {i} must hold {i} B entries and {i + 1} D entries",
                                 line=i + 2)
            B.append(brow)
            D.append(drow)
        for offset, extra in enumerate(lines[n + 1:]):
            if extra.strip():
                raise ParseError("trailing content after family", line=n + offset + 2)
        return cls(tuple(B), tuple(D))


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by validate_family."""

    kind: str
    i: int | None
    j: int | None
    message: str


def validate_family(f: PathFamily) -> list[Violation]:
    """Report every violated invariant of the (B, D) encoding.

    Checks triangular shape and entry domains, the descent balance
    sum(B[i]) + sum(D[i]) = i, and the staying-above condition
    sum_{j'<j}(B[i][j'] + D[i][j']) + D[i][j] <= j for all j <= i.
    """
    out: list[Violation] = []
    if len(f.B) != len(f.D):
        out.append(Violation("triangularity", None, None,
                             f"B has {len(f.B)} rows but D has {len(f.D)}"))
        return out
    n = len(f.B)
    shape_ok = True
    for i in range(n):
        if len(f.B[i]) != i:
            out.append(Violation("triangularity", i, None,
                                 f"B row {i} has length {len(f.B[i])}, expected {i}"))
            shape_ok = False
        if len(f.D[i]) != i + 1:
            out.append(Violation("triangularity", i, None,
                                 f"D row {i} has length {len(f.D[i])}, expected {i + 1}"))
            shape_ok = False
    if not shape_ok:
        return out
    for i in range(n):
        for j, b in enumerate(f.B[i]):
            if b not in (0, 1):
                out.append(Violation("domain", i, j, f"B[{i}][{j}] = {b!r} is not a bit"))
                shape_ok = False
        for j, d in enumerate(f.D[i]):
            if not isinstance(d, int) or d < 0:
                out.append(Violation("domain", i, j, f"D[{i}][{j}] = {d!r} is not a count"))
                shape_ok = False
    if not shape_ok:
        return out
    for i in range(n):
        if sum(f.B[i]) + sum(f.D[i]) != i:
            out.append(Violation("descent-balance", i, None,
                                 f"row {i} steps descend {sum(f.B[i]) + sum(f.D[i])} levels, "
                                 f"expected {i}"))
        pre = 0
        for j in range(i + 1):
            if pre + f.D[i][j] > j:
                out.append(Violation("schroder", i, j,
                                     f"path {i} drops below its anti-diagonal in column {j}"))
            pre += f.D[i][j] + (f.B[i][j] if j < i else 0)
    return out


def family_from_bits(t: BitTriangle) -> PathFamily:
    """Build the cliff-shaped family whose free step directions are t.

    Row i of D is zero except for the diagonal entry, which balances the
    horizontal steps: D[i][i] = i - sum(t.bits[i]).
    """
    D = tuple((0,) * i + (i - sum(t.bits[i]),) for i in range(t.n))
    return PathFamily(t.bits, D)


def explicit_paths(f: PathFamily) -> list[ExplicitPath]:
    """Reconstruct the n explicit paths encoded by f.

    In column j, path i performs its D[i][j] vertical steps on entering the
    column, then (if j < i) the step selected by B[i][j].
    """
    problems = validate_family(f)
    if problems:
        raise InvalidFamily("; ".join(v.message for v in problems[:3]))
    paths = []
    for i in range(f.n):
        steps: list[tuple[int, int]] = []
        for j in range(i + 1):
            steps.extend([V_STEP] * f.D[i][j])
            if j < i:
                steps.append(D_STEP if f.B[i][j] else H_STEP)
        paths.append(ExplicitPath((i, 0), tuple(steps)))
    return paths


def family_from_paths(paths: Sequence[ExplicitPath]) -> PathFamily:
    """Encode explicit paths as a (B, D) pair; inverse of explicit_paths.

    Path i must run from (i, 0) to (0, i).
    """
    n = len(paths)
    B, D = [], []
    for i, path in enumerate(paths):
        if path.start != (i, 0):
            raise MalformedPath(f"path {i} starts at {path.start}, expected {(i, 0)}")
        if path.end != (0, i):
            raise MalformedPath(f"path {i} ends at {path.end}, expected {(0, i)}")
        brow = [0] * i
        drow = [0] * (i + 1)
        col = 0
        for step in path.steps:
            if step == V_STEP:
                drow[col] += 1
            else:
                if col >= i:
                    raise MalformedPath(f"path {i} advances beyond column {i}")
                brow[col] = 1 if step == D_STEP else 0
                col += 1
        B.append(tuple(brow))
        D.append(tuple(drow))
    return PathFamily(tuple(B), tuple(D))


def is_cliff_shaped(f: PathFamily) -> bool:
    """True when no path has a vertical step outside its final column."""
    return all(f.D[i][j] == 0 for i in range(f.n) for j in range(i))


def is_disjoint(f: PathFamily) -> bool:
    """True when the supports of the n paths are pairwise disjoint."""
    seen: set[tuple[int, int]] = set()
    for path in explicit_paths(f):
        for pt in path.points():
            if pt in seen:
                return False
            seen.add(pt)
    return True


def entry_levels(f: PathFamily, k: int) -> tuple[int, ...]:
    """Level at which each path enters column k: i - sum(B[i][:k]).

    Meaningful for paths without vertical steps before column k; rows that
    end before column k get the level past their last step.
    """
    return tuple(i - sum(f.B[i][:k]) for i in range(f.n))
