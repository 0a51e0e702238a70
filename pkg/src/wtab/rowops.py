"""Row swaps, column strictness and the column-strict search.

Most functions here have two layers.  The public ones take and return
:class:`~wtab.core.Table` / :class:`~wtab.core.STable` values.  The private
``_``-prefixed helpers work on plain tuples of sorted rows.  The classifier
calls them directly in its enumeration loops.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import lru_cache
from itertools import groupby

from .core import Frame, LieType, STable, Table, is_row_sorted
from .errors import BadIndex, MixedRowParity, NotConvex, NotJustified, NotRowSorted


# ------------------------------------------------------------------ row swaps


def swap_pair(c, d):
    """Swap a sorted upper row ``c`` with the sorted row ``d`` below it.

    Returns ``(new_upper, new_lower)`` or ``None`` when the swap is not
    defined.  Equal lengths give back the rows unchanged when ``d_j < c_j``
    for all j (a convenience extension).
    """
    s, t = len(c), len(d)
    if s <= t:
        for j in range(s):
            if not d[j] < c[j]:
                return None
        if s == t:
            return tuple(c), tuple(d)
        # Case 1: pick e_j < c_j from d, as large as possible, top c first.
        avail = list(d)
        e = []
        for cj in reversed(c):
            k = bisect_left(avail, cj) - 1
            e.append(avail.pop(k))
        e.reverse()
        return tuple(sorted(tuple(c) + tuple(avail))), tuple(e)
    # Case 2: rows aligned on the right.
    for j in range(1, t + 1):
        if not d[t - j] < c[s - j]:
            return None
    avail = list(c)
    e = []
    for dj in d:
        k = bisect_right(avail, dj)
        e.append(avail.pop(k))
    return tuple(e), tuple(sorted(tuple(d) + tuple(avail)))


def _swap_rows_raw(rows, offsets, t):
    """Swap rows at positions ``t`` and ``t+1``."""
    res = swap_pair(rows[t], rows[t + 1])
    if res is None:
        return None
    new_rows = rows[:t] + res + rows[t + 2:]
    new_off = offsets[:t] + (offsets[t + 1], offsets[t]) + offsets[t + 2:]
    return new_rows, new_off


def swap_rows(A: Table, i: int):
    """s_i(A) for rows ``i`` and ``i+1`` (1-based, top to bottom), or None."""
    if not is_row_sorted(A):
        raise NotRowSorted("swap_rows needs weakly increasing rows")
    if not 1 <= i < len(A):
        raise BadIndex(f"row index {i} out of range 1..{len(A) - 1}")
    res = _swap_rows_raw(A.twice_rows, A.offsets, i - 1)
    if res is None:
        return None
    return Table(*res)


def _mirror_row(row):
    return tuple(-x for x in reversed(row))


def _swap_sym_raw(rows, offsets, i):
    """s-bar_i on the rows of an s-table (``1 <= i < r``); None if undefined."""
    r = len(rows) // 2
    t = r + i - 1  # rows i, i+1 sit at positions t, t+1
    res = swap_pair(rows[t], rows[t + 1])
    if res is None:
        return None
    up, low = res
    m = 2 * r - 2 - t  # rows -(i+1), -i sit at positions m, m+1
    rows = list(rows)
    rows[t], rows[t + 1] = up, low
    rows[m], rows[m + 1] = _mirror_row(low), _mirror_row(up)
    if offsets is None:
        return tuple(rows), None
    off = list(offsets)
    off[t], off[t + 1] = offsets[t + 1], offsets[t]
    off[m], off[m + 1] = offsets[m + 1], offsets[m]
    return tuple(rows), tuple(off)


def swap_rows_sym(A: STable, i: int):
    """s-bar_i(A) = s_i s_{-i}(A), or None when undefined."""
    if not is_row_sorted(A):
        raise NotRowSorted("swap_rows_sym needs weakly increasing rows")
    if not 1 <= i < A.r:
        raise BadIndex(f"row index {i} out of range 1..{A.r - 1}")
    res = _swap_sym_raw(A.twice_rows, A.offsets, i)
    if res is None:
        return None
    return STable(res[0], res[1], A.kind)


# ------------------------------------------------------------- column strict


def _columns(offsets, lengths):
    cols: dict = {}
    for t, (o, L) in enumerate(zip(offsets, lengths)):
        for k in range(L):
            cols.setdefault(o + 2 * k + 1, []).append((t, k))
    return cols


def _zero_variant_ok(rows, offsets):
    """Strict except one column whose two middle boxes both hold 0."""
    R = len(rows)
    if R % 2:
        return False
    mid = R // 2 - 1
    exceptions = 0
    for boxes in _columns(offsets, tuple(map(len, rows))).values():
        for (t1, k1), (t2, k2) in zip(boxes, boxes[1:]):
            a, b = rows[t1][k1], rows[t2][k2]
            if a > b:
                continue
            if t1 == mid and t2 == mid + 1 and a == 0 and b == 0:
                exceptions += 1
            else:
                return False
    return exceptions <= 1


def _is_cs_raw(rows, offsets) -> bool:
    for boxes in _columns(offsets, tuple(map(len, rows))).values():
        for (t1, k1), (t2, k2) in zip(boxes, boxes[1:]):
            if not rows[t1][k1] > rows[t2][k2]:
                return False
    return True


def is_column_strict(A: Table, mode: str = "plain") -> bool:
    """Columns strictly decrease going down, gaps included.

    ``mode="typeD_zero"`` also accepts a single column whose two middle
    boxes (rows -1 and 1) both hold 0.
    """
    if not A.frame.is_justified:
        raise NotJustified("column strictness needs a justified frame")
    if mode == "plain":
        return _is_cs_raw(A.twice_rows, A.offsets)
    if mode == "typeD_zero":
        return _zero_variant_ok(A.twice_rows, A.offsets)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------- Algorithm findcs


@lru_cache(maxsize=4096)
def _geometry(lengths, offsets):
    """Per box: index of the box below (or -1), of the box above, and the
    number of boxes above it in its column."""
    cols = _columns(offsets, lengths)
    below = [[-1] * L for L in lengths]
    above = [[-1] * L for L in lengths]
    n_above = [[0] * L for L in lengths]
    for boxes in cols.values():
        for h, (t, k) in enumerate(boxes):
            n_above[t][k] = h
            if h + 1 < len(boxes):
                t2, k2 = boxes[h + 1]
                below[t][k] = k2 if t2 == t + 1 else -2  # -2: below over a gap
            if h > 0:
                t0, k0 = boxes[h - 1]
                above[t][k] = k0 if t0 == t - 1 else -2
    return (tuple(map(tuple, below)), tuple(map(tuple, above)),
            tuple(map(tuple, n_above)))


def _is_convex(lengths, offsets) -> bool:
    return Frame(lengths, offsets).is_convex


def _findcs(rows, offsets):
    """Algorithm findcs on a convex frame.

    ``rows`` holds comparable keys (any order within a row).  Returns the
    filled rows or None.  Equal keys are inserted as one batch; a box may
    take a key only if the box below already holds a strictly smaller one.
    """
    lengths = tuple(map(len, rows))
    below, _, n_above = _geometry(lengths, offsets)
    filled = [[None] * L for L in lengths]
    items = sorted((x, t) for t, row in enumerate(rows) for x in row)
    for x, batch in groupby(items, key=lambda it: it[0]):
        batch = list(batch)
        ready = {}
        for _, t in batch:
            if t in ready:
                continue
            nxt = filled[t + 1] if t + 1 < len(rows) else None
            ready[t] = [k for k in range(lengths[t])
                        if filled[t][k] is None
                        and (below[t][k] == -1 or nxt[below[t][k]] is not None)]
        for _, t in batch:
            cand = ready[t]
            if not cand:
                return None
            best = max(cand, key=lambda k: (n_above[t][k], k))
            cand.remove(best)
            filled[t][best] = x
    return filled


def find_column_strict(A: Table):
    """A column-strict member of the row class of ``A`` (None if there is none)."""
    if not A.frame.is_convex:
        raise NotConvex("Algorithm findcs needs a convex frame")
    filled = _findcs(A.twice_rows, A.offsets)
    if filled is None:
        return None
    return A.replace_rows(tuple(map(tuple, filled)))


def _findcs_sym(rows, offsets):
    """Symmetric variant: place each negative key by the findcs rule and its
    negative at the centrally opposite box.

    Zeros in the lower half count as slightly negative.  The caller checks
    the unperturbed result.
    """
    lengths = tuple(map(len, rows))
    R = len(rows)
    below, above, n_above = _geometry(lengths, offsets)

    def key(x, t):
        if x:
            return (x, 0)
        return (0, -1) if t >= R // 2 else (0, 1)

    filled = [[None] * L for L in lengths]
    items = sorted((key(x, t), t) for t, row in enumerate(rows) for x in row)
    items = [it for it in items if it[0] < (0, 0)]
    for x, batch in groupby(items, key=lambda it: it[0]):
        batch = list(batch)
        for _, t in batch:
            cand = []
            for k in range(lengths[t]):
                if filled[t][k] is not None:
                    continue
                b = below[t][k]
                if b == -2:
                    continue
                if b >= 0 and not (filled[t + 1][b] is not None and filled[t + 1][b] < x):
                    continue
                a = above[t][k]
                if a >= 0 and filled[t - 1][a] is not None and not filled[t - 1][a] > x:
                    continue
                cand.append(k)
            if not cand:
                return None
            best = max(cand, key=lambda k: (n_above[t][k], k))
            m = R - 1 - t
            mk = lengths[t] - 1 - best
            if filled[m][mk] is not None:
                return None
            filled[t][best] = x
            filled[m][mk] = (-x[0], -x[1])
    out = tuple(tuple(v[0] for v in row) for row in filled)
    return out


def find_column_strict_sym(A: STable):
    """A column-strict s-table in the symmetric row class of ``A``, or None."""
    if len({L % 2 for L in map(len, A.twice_rows)}) > 1:
        raise MixedRowParity("row lengths of mixed parity")
    if not A.frame.is_convex:
        raise NotConvex("the symmetric search needs a convex frame")
    out = _findcs_sym(A.twice_rows, A.offsets)
    if out is None or not _is_cs_raw(out, A.offsets):
        return None
    return STable(out, A.offsets, A.kind)


# --------------------------------------------------------- exhaustive search


def _distinct_perms(row):
    """Distinct arrangements of a multiset, in lexicographic order."""
    row = sorted(row)
    n = len(row)
    out = []
    used = [False] * n
    cur = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        prev = None
        for i in range(n):
            if used[i] or row[i] == prev:
                continue
            prev = row[i]
            used[i] = True
            cur.append(row[i])
            rec()
            cur.pop()
            used[i] = False

    rec()
    return out


def _search_cs(rows, offsets, forced=None, waived=None):
    """Depth-first search for a column-strict arrangement.

    ``forced`` maps (row, position) to a required value; ``waived`` is a
    column x whose comparison across the two middle rows is skipped.
    Returns the arrangement or None.
    """
    R = len(rows)
    forced = forced or {}
    mid = R // 2 - 1
    xs = [[o + 2 * k + 1 for k in range(len(row))] for o, row in zip(offsets, rows)]
    last: dict = {}
    last_row: dict = {}
    chosen = []

    def rec(t):
        if t == R:
            return True
        row = rows[t]
        fixed = {k: v for (tt, k), v in forced.items() if tt == t}
        rest = list(row)
        for v in fixed.values():
            rest.remove(v)
        free = [k for k in range(len(row)) if k not in fixed]
        for perm in _distinct_perms(rest):
            arr = [None] * len(row)
            for k, v in fixed.items():
                arr[k] = v
            for k, v in zip(free, perm):
                arr[k] = v
            ok = True
            for k, v in enumerate(arr):
                x = xs[t][k]
                if x in last:
                    if waived == x and t == mid + 1 and last_row[x] == mid:
                        continue
                    if not last[x] > v:
                        ok = False
                        break
            if not ok:
                continue
            saved = [(x, last.get(x), last_row.get(x)) for x in xs[t]]
            for k, v in enumerate(arr):
                last[xs[t][k]] = v
                last_row[xs[t][k]] = t
            chosen.append(tuple(arr))
            if rec(t + 1):
                return True
            chosen.pop()
            for x, v, tr in saved:
                if v is None:
                    last.pop(x, None)
                    last_row.pop(x, None)
                else:
                    last[x] = v
                    last_row[x] = tr
        return False

    return tuple(chosen) if rec(0) else None


def search_column_strict(A: Table):
    """A column-strict member of the class of ``A`` by exhaustive search.

    Works on any justified frame, convex or not; slow on big tables.
    """
    if not A.frame.is_justified:
        raise NotJustified("column strictness needs a justified frame")
    rows = tuple(tuple(sorted(r)) for r in A.twice_rows)
    found = _search_cs(rows, A.offsets)
    return None if found is None else A.replace_rows(found)


# ------------------------------------------------------------------- jrecs


def _recs_left(rows) -> bool:
    """Row equivalent to column strict after left justification."""
    offsets = (0,) * len(rows)
    lengths = tuple(map(len, rows))
    if _lj_convex(lengths):
        return _findcs(rows, offsets) is not None
    return _search_cs(rows, offsets) is not None


@lru_cache(maxsize=4096)
def _lj_convex(lengths) -> bool:
    return _is_convex(lengths, (0,) * len(lengths))


def _zero_variant_left(rows) -> bool:
    """The type D variant: one middle column may hold 0 over 0."""
    R = len(rows)
    mid = R // 2 - 1
    if R < 2 or 0 not in rows[mid] or 0 not in rows[mid + 1]:
        return False
    lengths = tuple(map(len, rows))
    offsets = (0,) * R
    if _lj_convex(lengths):
        # Perturb one zero in row -1 up and one in row 1 down.  The variant
        # implies the perturbed table is row equivalent to column strict.
        keys = [[(x, 0) for x in row] for row in rows]
        keys[mid][keys[mid].index((0, 0))] = (0, 1)
        keys[mid + 1][keys[mid + 1].index((0, 0))] = (0, -1)
        filled = _findcs(keys, offsets)
        if filled is None:
            return False
        j = filled[mid].index((0, 1))
        j2 = filled[mid + 1].index((0, -1))
        if j == j2:
            return True
        # Otherwise an exchange inside row -1 or row 1 lines them up, unless
        # both partners are unperturbed zeros.
        if j < len(filled[mid + 1]) and filled[mid + 1][j] != (0, 0):
            return True
        if j2 < len(filled[mid]) and filled[mid][j2] != (0, 0):
            return True
    return _zero_variant_search(rows)


def _zero_variant_search(rows) -> bool:
    R = len(rows)
    mid = R // 2 - 1
    width = min(len(rows[mid]), len(rows[mid + 1]))
    offsets = (0,) * R
    for j in range(width):
        forced = {(mid, j): 0, (mid + 1, j): 0}
        if _search_cs(rows, offsets, forced, waived=2 * j + 1) is not None:
            return True
    return False


def is_jrecs(A: STable, lt=None) -> bool:
    """Justified row equivalent to column strict (with the type D variant)."""
    lt = A.kind if lt is None else LieType.of(lt)
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    return _jrecs_raw(rows, lt is LieType.D)


def _jrecs_raw(rows, type_d: bool) -> bool:
    if _recs_left(rows):
        return True
    return type_d and _zero_variant_left(rows)
