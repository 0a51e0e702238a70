"""The sharp element, the middle-row flip c and the generators c_k."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import (
    LieType,
    STable,
    as_partition,
    from_twice,
    to_twice,
    _parity,
)
from .errors import SharpUndefined, SwapUndefined
from .rowops import _swap_sym_raw


# -------------------------------------------------------------- sharp element


def _sharp(vals):
    """Sharp element of a list of doubled values (uniform parity assumed).

    A pair sums to an integer iff its doubled sum is even; that only bites
    when a zero has been added to a half-integral list.
    """
    vals = sorted(vals)
    if len(vals) % 2 == 0:
        vals.append(0)
        vals.sort()
    m = len(vals)
    tried = None
    for i in range(m - 1, -1, -1):
        x = vals[i]
        if x == tried:
            continue
        tried = x
        b = vals[:i] + vals[i + 1:]
        if all(b[j] + b[m - 2 - j] > 0 and (b[j] + b[m - 2 - j]) % 2 == 0
               for j in range((m - 1) // 2)):
            return x
    return None


def sharp_element(vals):
    """The largest possible last element of an arrangement whose remaining
    entries pair off, first with last and so on inwards, into positive
    integers.  A zero is added first to lists of even length.

    Returns None when no element qualifies.
    """
    twice = [to_twice(v) for v in vals]
    _parity((twice,))
    t = _sharp(twice)
    return None if t is None else from_twice(t)


# ------------------------------------------------------------- generators


def generator_rows(p, lt) -> tuple:
    """Row indices i_1 < ... < i_d of the generators for ``p`` in type ``lt``.

    ``p = (p_1^2, ..., p_r^2)``; ``i_k`` is the smallest i with p_i equal to
    the k-th distinct part of the right parity (even in type C, odd in D).
    """
    half = as_partition(p).parts[::2]
    want = 0 if LieType.of(lt) is LieType.C else 1
    out = []
    seen = set()
    for i, x in enumerate(half, start=1):
        if x % 2 == want and x not in seen:
            seen.add(x)
            out.append(i)
    return tuple(out)


def _c_middle_raw(rows):
    r = len(rows) // 2
    upper, lower = rows[r - 1], rows[r]
    a = _sharp(upper)
    if a is None:
        return None
    if a == 0:
        return rows
    up = list(upper)
    up[up.index(a)] = -a
    low = list(lower)
    low[low.index(-a)] = a
    return rows[:r - 1] + (tuple(sorted(up)), tuple(sorted(low))) + rows[r + 1:]


def c_middle(A: STable):
    """The flip c on rows -1 and 1, or None when the sharp element is undefined."""
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    out = _c_middle_raw(rows)
    if out is None:
        return None
    return STable(out, A.offsets, A.kind)


def _apply_generator_raw(rows, i):
    """c_k with i = i_k on sorted rows; raises on undefined steps."""
    for j in range(i - 1, 0, -1):
        res = _swap_sym_raw(rows, None, j)
        if res is None:
            raise SwapUndefined(f"s-bar_{j} is not defined", step=f"s_{j}")
        rows = res[0]
    out = _c_middle_raw(rows)
    if out is None:
        raise SharpUndefined("sharp element of row -1 is undefined")
    rows = out
    for j in range(1, i):
        res = _swap_sym_raw(rows, None, j)
        if res is None:
            raise SwapUndefined(f"s-bar_{j} is not defined on the way back",
                                step=f"s_{j}")
        rows = res[0]
    return rows


def apply_generator(A: STable, k: int) -> STable:
    """c_k . A for a table on the symmetric pyramid (k is 1-based)."""
    gens = generator_rows(A.part, A.kind)
    if not 1 <= k <= len(gens):
        raise IndexError(f"generator index {k} outside 1..{len(gens)}")
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    return STable(_apply_generator_raw(rows, gens[k - 1]), A.offsets, A.kind)


# ------------------------------------------------------------------ orbits


@dataclass
class OrbitElement:
    """A table reached from the base point.

    ``parities`` holds the lengths mod 2 (0 = even) of generator words that
    reach it and ``words`` one shortest word for each of them.
    """

    table: STable
    parities: frozenset
    words: dict = field(default_factory=dict)

    @property
    def word(self) -> tuple:
        return min(self.words.values(), key=len)


@dataclass
class OrbitFailure:
    table: STable
    generator: int
    reason: str


def _orbit_raw(rows, gens):
    """Breadth-first closure over (rows, parity) states.

    Returns (order, words, failures) where ``order`` lists tables in
    discovery order and ``words`` maps (rows, parity) to a shortest word.
    """
    start = (rows, 0)
    words = {start: ()}
    order = [rows]
    seen_rows = {rows}
    failures = {}
    todo = deque([start])
    while todo:
        state = todo.popleft()
        cur, par = state
        for k, i in enumerate(gens, start=1):
            try:
                nxt = _apply_generator_raw(cur, i)
            except (SwapUndefined, SharpUndefined) as exc:
                failures.setdefault((cur, k), str(exc))
                continue
            ns = (nxt, 1 - par)
            if ns not in words:
                words[ns] = words[state] + (k,)
                todo.append(ns)
                if nxt not in seen_rows:
                    seen_rows.add(nxt)
                    order.append(nxt)
    return order, words, [(t, k, why) for (t, k), why in failures.items()]


def orbit(A: STable, with_failures: bool = False):
    """All tables reachable from ``A`` by words in the generators.

    With ``with_failures`` a second list reports generator applications
    that were undefined.
    """
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    gens = generator_rows(A.part, A.kind)
    order, words, failures = _orbit_raw(rows, gens)
    out = []
    for t in order:
        ws = {p: words[(t, p)] for p in (0, 1) if (t, p) in words}
        out.append(OrbitElement(STable(t, A.offsets, A.kind), frozenset(ws), ws))
    if with_failures:
        fails = [OrbitFailure(STable(t, A.offsets, A.kind), k, why) for t, k, why in failures]
        return out, fails
    return out
