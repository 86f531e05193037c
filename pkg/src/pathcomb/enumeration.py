"""Brute-force ground truth for small orders.

Exhaustive enumeration of disjoint families (and of all families, for the
stage sets of combing), the step statistics, and an end-to-end check that
combing and uncombing realise a bijection.  Everything here is independent
of the combing code paths it is used to verify.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Hashable, Iterator

from .combing import comb, uncomb
from .families import (
    BitTriangle,
    ExplicitPath,
    H_STEP,
    PathFamily,
    explicit_paths,
    family_from_paths,
)


class CapExceeded(ValueError):
    """An enumeration was requested beyond its configured size cap."""


def all_bit_triangles(n: int) -> Iterator[BitTriangle]:
    """All 2^(n(n-1)/2) bit triangles of order n, row-major bit order."""
    row_choices = [list(product((0, 1), repeat=i)) for i in range(n)]
    for rows in product(*row_choices):
        yield BitTriangle(rows)


def _schroder_paths(i: int, occupied: set[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Point sequences of paths from (i, 0) to (0, i) staying on or above the
    anti-diagonal and avoiding occupied points."""
    if (i, 0) in occupied:
        return
    path = [(i, 0)]

    def rec(lev: int, col: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if lev == 0 and col == i:
            yield tuple(path)
            return
        moves = []
        if col < i:
            moves.append((lev, col + 1))
            if lev > 0:
                moves.append((lev - 1, col + 1))
        if lev > 0:
            moves.append((lev - 1, col))
        for nxt in moves:
            if nxt[0] + nxt[1] < i or nxt in occupied:
                continue
            path.append(nxt)
            yield from rec(*nxt)
            path.pop()

    yield from rec(i, 0)


def enumerate_disjoint(n: int, cap: int = 5) -> set[PathFamily]:
    """All disjoint order-n families, by backtracking from the top path down
    with an occupancy set.  Exactly 2^(n(n-1)/2) results."""
    if n > cap:
        raise CapExceeded(f"order {n} exceeds cap {cap}")
    out: set[PathFamily] = set()
    occupied: set[tuple[int, int]] = set()
    chosen: list[tuple[tuple[int, int], ...]] = [()] * n

    def place(i: int) -> None:
        if i < 0:
            out.add(family_from_paths([ExplicitPath.from_points(p) for p in chosen]))
            return
        for pts in _schroder_paths(i, occupied):
            chosen[i] = pts
            occupied.update(pts)
            place(i - 1)
            occupied.difference_update(pts)

    place(n - 1)
    return out


def _row_options(i: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for brow in product((0, 1), repeat=i):
        residual = i - sum(brow)

        def rec(j: int, pre: int, left: int, acc: tuple[int, ...]
                ) -> Iterator[tuple[int, ...]]:
            if j == i:
                yield acc + (left,)
                return
            for dj in range(min(left, j - pre) + 1):
                yield from rec(j + 1, pre + dj + brow[j], left - dj, acc + (dj,))

        for drow in rec(0, 0, residual, ()):
            yield brow, drow


def enumerate_schroder(n: int, cap: int = 5) -> set[PathFamily]:
    """All valid order-n families, intersecting or not (the combing domain
    before any disjointness is imposed)."""
    if n > cap:
        raise CapExceeded(f"order {n} exceeds cap {cap}")
    out: set[PathFamily] = set()
    for rows in product(*[list(_row_options(i)) for i in range(n)]):
        B = tuple(r[0] for r in rows)
        D = tuple(r[1] for r in rows)
        out.add(PathFamily(B, D))
    return out


def column_counts(f: PathFamily) -> tuple[int, ...]:
    """Total vertical steps in each column."""
    return tuple(sum(f.D[i][k] for i in range(k, f.n)) for k in range(f.n))


def intercolumn_counts(f: PathFamily) -> tuple[int, ...]:
    """Total horizontal steps between column j and j+1, for j = 0..n-2."""
    return tuple(sum(1 for i in range(j + 1, f.n) if f.B[i][j] == 0)
                 for j in range(f.n - 1))


def row_counts(f: PathFamily) -> tuple[int, ...]:
    """Total horizontal steps on each level."""
    counts = [0] * f.n
    for path in explicit_paths(f):
        lev, col = path.start
        for dl, dc in path.steps:
            if (dl, dc) == H_STEP:
                counts[lev] += 1
            lev += dl
            col += dc
    return tuple(counts)


def diagonal_step_count(f: PathFamily) -> int:
    """Total diagonal steps of the family."""
    return sum(sum(row) for row in f.B)


def joint_distribution(n: int, statistic: Callable[[PathFamily], Hashable],
                       cap: int = 5) -> Counter:
    """Exact frequency table of a statistic over all disjoint order-n families."""
    return Counter(statistic(f) for f in enumerate_disjoint(n, cap))


@dataclass(frozen=True)
class VerificationReport:
    n: int
    triangles: int
    disjoint_families: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_bijection(n: int, cap: int = 5,
                     comb_fn: Callable[[BitTriangle], PathFamily] = comb,
                     uncomb_fn: Callable[[PathFamily], BitTriangle] = uncomb,
                     ) -> VerificationReport:
    """Check that combing is a bijection onto the disjoint families.

    Verifies injectivity over all triangles, that the image equals the
    independently enumerated set, and both round trips.  Failures carry the
    offending serializations.  comb_fn/uncomb_fn are injectable so harness
    defects can be demonstrated against a broken implementation.
    """
    if n > cap:
        raise CapExceeded(f"order {n} exceeds cap {cap}")
    failures: list[str] = []
    image: dict[PathFamily, BitTriangle] = {}
    count = 0
    for t in all_bit_triangles(n):
        count += 1
        try:
            g = comb_fn(t)
            if g in image:
                failures.append(f"not injective: {t.to_text()!r} and "
                                f"{image[g].to_text()!r} comb to the same family")
            else:
                image[g] = t
            if uncomb_fn(g) != t:
                failures.append(f"uncomb(comb(t)) != t for t = {t.to_text()!r}")
        except Exception as exc:  # a broken comb_fn may throw; report, not crash
            failures.append(f"round trip raised {exc!r} for t = {t.to_text()!r}")
    disjoint = enumerate_disjoint(n, cap)
    for extra in set(image) - disjoint:
        failures.append(f"comb image not disjoint: {extra.to_text()!r}")
    for missing in disjoint - set(image):
        failures.append(f"disjoint family not reached: {missing.to_text()!r}")
    for g in disjoint:
        try:
            if comb_fn(uncomb_fn(g)) != g:
                failures.append(f"comb(uncomb(f)) != f for f = {g.to_text()!r}")
        except Exception as exc:  # a broken uncomb_fn may throw; report, not crash
            failures.append(f"round trip raised {exc!r} for f = {g.to_text()!r}")
    return VerificationReport(n=n, triangles=count, disjoint_families=len(disjoint),
                              failures=tuple(failures))
