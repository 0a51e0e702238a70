"""Robinson-Schensted row insertion and its shape invariants."""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass
from itertools import accumulate

from .core import Partition, Word, partition_transpose
from .errors import BoundExceeded, LengthMismatch


@dataclass(frozen=True)
class Tableau:
    """Insertion tableau.  ``rows[0]`` is the bottom (longest) row.

    Rows increase weakly to the right and columns decrease strictly going
    down, so reading ``rows`` from the last one back to ``rows[0]`` gives
    the tableau in its drawn orientation.
    """

    rows: tuple

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def word(self) -> tuple:
        """Entries read top to bottom, left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


def _keys(w):
    if isinstance(w, Word) and w.tiebreak is not None:
        return w.sort_keys(), True
    return list(w), False


def insert_all(keys) -> list:
    """Row-insert ``keys`` into an empty tableau; returns bottom-first rows."""
    rows: list = []
    for x in keys:
        for row in rows:
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return rows


def shape_of(keys) -> tuple:
    """Row lengths of RS(keys), longest first.  Hot-path helper."""
    rows: list = []
    for x in keys:
        for row in rows:
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return tuple(len(r) for r in rows)


def rs(w) -> Tableau:
    keys, tagged = _keys(w)
    rows = insert_all(keys)
    if tagged:
        rows = [[v for v, _ in row] for row in rows]
    return Tableau(tuple(tuple(r) for r in rows))


def rs_shape(w) -> Partition:
    keys, _ = _keys(w)
    return Partition(shape_of(keys))


def _prefix(parts, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return sum(parts[:k])


def greene_increasing(w, k: int) -> int:
    """Largest total length of ``k`` disjoint weakly increasing subsequences."""
    return _prefix(rs_shape(w).parts, k)


def greene_decreasing(w, k: int) -> int:
    """Largest total length of ``k`` disjoint strictly decreasing subsequences."""
    return _prefix(partition_transpose(rs_shape(w)).parts, k)


def greene_profile(w) -> tuple:
    """All prefix sums of the RS shape."""
    return tuple(accumulate(rs_shape(w).parts))


def knuth_moves(w: tuple):
    """Words one elementary Knuth move away from ``w``.

    For letters at positions i, i+1, i+2 with values a, b, c:
      y z x <-> y x z   when x < y <= z
      x z y <-> z x y   when x <= y < z
    For distinct letters these are the usual moves with x < y < z.
    """
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        # yzx -> yxz  (a=y, b=z, c=x)
        if c < a <= b:
            yield w[:i + 1] + (c, b) + w[i + 3:]
        # yxz -> yzx  (a=y, b=x, c=z)
        if b < a <= c:
            yield w[:i + 1] + (c, b) + w[i + 3:]
        # xzy -> zxy  (a=x, b=z, c=y)
        if a <= c < b:
            yield w[:i] + (b, a) + w[i + 2:]
        # zxy -> xzy  (a=z, b=x, c=y)
        if b <= c < a:
            yield w[:i] + (b, a) + w[i + 2:]


def knuth_class(w, bound: int = 12) -> set:
    w = tuple(w)
    if len(w) > bound:
        raise BoundExceeded(f"|w| = {len(w)} exceeds bound {bound}")
    seen = {w}
    todo = deque([w])
    while todo:
        for v in knuth_moves(todo.popleft()):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def knuth_equivalent(w1, w2, bound: int = 12) -> bool:
    """Breadth-first search over Knuth moves from ``w1`` looking for ``w2``."""
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        raise LengthMismatch(f"lengths {len(w1)} and {len(w2)} differ")
    if len(w1) > bound:
        raise BoundExceeded(f"|w| = {len(w1)} exceeds bound {bound}")
    if sorted(w1) != sorted(w2):
        return False
    seen = {w1}
    todo = deque([w1])
    while todo:
        u = todo.popleft()
        if u == w2:
            return True
        for v in knuth_moves(u):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return False
