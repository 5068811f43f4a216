"""Cyclic row/column orderings of an array's entries.

An ordering assigns each row (and each column) a cyclic order of its filled
entries; together these induce two permutations of the entry set, mapping
each entry to its successor inside its own row or column cycle.  Entries of
a valid (quasi-)Heffter array are pairwise distinct, so the permutations can
be stored as plain value-to-value successor maps.

The pair is "compatible" when column-successor composed after row-successor
is a single cycle through all entries; this is exactly what makes the derived
vertex rotation of the embedding a full cycle.  An ordering of a set of group
elements is "simple" when its partial sums are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Field
from .arrays import PartiallyFilledArray


def _successor_map(cycles: Iterable[Sequence[int]]) -> dict[int, int]:
    succ: dict[int, int] = {}
    for cycle in cycles:
        for idx, x in enumerate(cycle):
            if x in succ:
                raise ValueError(f"entry {x} appears in two cycles")
            succ[x] = cycle[(idx + 1) % len(cycle)]
    return succ


@dataclass(frozen=True)
class OrderingPair:
    row_cycles: tuple[tuple[int, ...], ...]
    col_cycles: tuple[tuple[int, ...], ...]
    row_successor: dict[int, int]
    col_successor: dict[int, int]

    @classmethod
    def from_cycles(
        cls,
        row_cycles: Iterable[Sequence[int]],
        col_cycles: Iterable[Sequence[int]],
    ) -> "OrderingPair":
        rows = tuple(tuple(c) for c in row_cycles)
        cols = tuple(tuple(c) for c in col_cycles)
        row_succ = _successor_map(rows)
        col_succ = _successor_map(cols)
        if set(row_succ) != set(col_succ):
            raise ValueError("row and column orderings cover different entry sets")
        return cls(rows, cols, row_succ, col_succ)

    @property
    def entries(self) -> set[int]:
        return set(self.row_successor)


def natural_orderings(array: PartiallyFilledArray, ell: int = 0) -> OrderingPair:
    """Natural orderings: columns top to bottom; rows left to right except the
    last `ell` rows, which run right to left."""
    if not array.is_totally_filled():
        raise ValueError("natural orderings need a totally filled array")
    if not 0 <= ell < array.m:
        raise ValueError(f"need 0 <= ell < m, got ell={ell}, m={array.m}")
    row_cycles = []
    for i in range(array.m):
        entries = array.row_entries(i)
        row_cycles.append(entries if i < array.m - ell else entries[::-1])
    col_cycles = [array.col_entries(j) for j in range(array.n)]
    return OrderingPair.from_cycles(row_cycles, col_cycles)


def is_simple(group: Field, ordering: Sequence[int]) -> bool:
    """True iff all partial sums of the ordering are pairwise distinct."""
    if not ordering:
        raise ValueError("empty ordering")
    sums = set()
    s = 0
    for x in ordering:
        s = group.add(s, x)
        if s in sums:
            return False
        sums.add(s)
    return True


def check_globally_simple(array: PartiallyFilledArray) -> bool:
    """True iff every row (left to right) and column (top to bottom) is simple."""
    g = array.group
    for i in range(array.m):
        if not is_simple(g, array.row_entries(i)):
            return False
    for j in range(array.n):
        if not is_simple(g, array.col_entries(j)):
            return False
    return True


def is_compatible(pair: OrderingPair) -> bool:
    """True iff (row-successor then column-successor) is one full cycle."""
    if set(pair.row_successor) != set(pair.col_successor):
        raise ValueError("orderings are defined on different entry sets")
    entries = pair.entries
    start = next(iter(entries))
    x = start
    seen = 0
    while True:
        x = pair.col_successor[pair.row_successor[x]]
        seen += 1
        if x == start:
            break
    return seen == len(entries)


def composition_cycles(pair: OrderingPair) -> list[tuple[int, ...]]:
    """Cycle decomposition of (row-successor then column-successor)."""
    remaining = set(pair.entries)
    cycles = []
    while remaining:
        start = min(remaining)
        cycle = [start]
        remaining.discard(start)
        x = pair.col_successor[pair.row_successor[start]]
        while x != start:
            cycle.append(x)
            remaining.discard(x)
            x = pair.col_successor[pair.row_successor[x]]
        cycles.append(tuple(cycle))
    return cycles
