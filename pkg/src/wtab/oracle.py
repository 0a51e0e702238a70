"""Slow reference implementations, written straight from the definitions.

Nothing here calls the production algorithms in schensted, rowops,
component_group or barbasch_vogan.  The only imports from the package are
the error types and the plain data classes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .core import Partition
from .errors import BoundExceeded, NonIntegralWeight

SHAPE_BOUND = 12
RECS_BOUND = 10
SHARP_BOUND = 7


# ------------------------------------------------------------ Greene oracle


@lru_cache(maxsize=None)
def _submask_pairs(m: int):
    """All (mask, sub) with sub a subset of mask, as two int arrays sorted by mask."""
    masks, subs = [], []
    for mask in range(1 << m):
        sub = mask
        while True:
            masks.append(mask)
            subs.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
    masks = np.array(masks, dtype=np.int64)
    subs = np.array(subs, dtype=np.int64)
    popcount = np.array([bin(s).count("1") for s in range(1 << m)], dtype=np.int16)
    starts = np.searchsorted(masks, np.arange(1 << m))
    return masks, subs, popcount, starts


def _chain_masks(keys: np.ndarray, strict_decreasing: bool) -> np.ndarray:
    """ok[b, mask]: positions in ``mask`` read left to right form a weakly
    increasing (or strictly decreasing) sequence of ``keys[b]``."""
    B, m = keys.shape
    ok = np.zeros((B, 1 << m), dtype=bool)
    ok[:, 0] = True
    last = np.zeros((B, 1 << m), dtype=keys.dtype)
    for mask in range(1, 1 << m):
        top = mask.bit_length() - 1
        rest = mask & ~(1 << top)
        v = keys[:, top]
        if rest == 0:
            ok[:, mask] = True
        else:
            prev = last[:, rest]
            good = prev > v if strict_decreasing else prev <= v
            ok[:, mask] = ok[:, rest] & good
        last[:, mask] = v
    return ok


def greene_table(keys, strict_decreasing: bool = False) -> np.ndarray:
    """Exhaustive Greene numbers for a batch of equal-length words.

    Returns ``g`` with ``g[b, k-1]`` the largest total size of ``k`` disjoint
    subsequences of word ``b``, each weakly increasing (or each strictly
    decreasing), for k = 1..m.
    """
    keys = np.asarray(keys)
    if keys.ndim == 1:
        keys = keys[None, :]
    B, m = keys.shape
    if m > SHAPE_BOUND:
        raise BoundExceeded(f"word length {m} exceeds {SHAPE_BOUND}")
    if m == 0:
        return np.zeros((B, 0), dtype=np.int16)
    masks, subs, popcount, starts = _submask_pairs(m)
    ok = _chain_masks(keys, strict_decreasing)
    size = popcount[subs]
    comp = masks ^ subs
    g = np.zeros((B, 1 << m), dtype=np.int16)
    out = np.zeros((B, m), dtype=np.int16)
    neg = np.int16(-1)
    for k in range(m):
        cand = np.where(ok[:, subs], size[None, :] + g[:, comp], neg)
        g = np.maximum.reduceat(cand, starts, axis=1)
        out[:, k] = g[:, -1]
    return out


def _scaled_keys(w, tiebreak=None) -> list:
    """Integer keys preserving the order of ``w``; the tiebreak pair (if any)
    is split so that the earlier zero is the larger."""
    vals = [int(round(4 * float(x))) for x in w]
    if tiebreak is None:
        tiebreak = getattr(w, "tiebreak", None)
    if tiebreak is not None:
        i, j = tiebreak
        if vals[i] != 0 or vals[j] != 0:
            raise ValueError("tiebreak positions must hold zeros")
        vals[i], vals[j] = 1, -1
    return vals


def _shape_from_profile(prof) -> Partition:
    prof = [int(x) for x in prof]
    parts = [b - a for a, b in zip([0] + prof, prof)]
    return Partition(tuple(x for x in parts if x > 0))


def brute_shape(w, tiebreak=None) -> Partition:
    """Partition whose prefix sums are the exhaustive Greene numbers of ``w``."""
    if len(w) > SHAPE_BOUND:
        raise BoundExceeded(f"word length {len(w)} exceeds {SHAPE_BOUND}")
    if len(w) == 0:
        return Partition(())
    keys = np.array([_scaled_keys(w, tiebreak)], dtype=np.int64)
    return _shape_from_profile(greene_table(keys)[0])


def brute_decreasing(w, tiebreak=None) -> tuple:
    """Exhaustive strictly-decreasing Greene numbers (k = 1..|w|)."""
    if len(w) > SHAPE_BOUND:
        raise BoundExceeded(f"word length {len(w)} exceeds {SHAPE_BOUND}")
    if len(w) == 0:
        return ()
    keys = np.array([_scaled_keys(w, tiebreak)], dtype=np.int64)
    return tuple(int(x) for x in greene_table(keys, strict_decreasing=True)[0])


# ------------------------------------------------------ column strict oracle


def _columns(offsets, lengths):
    cols = {}
    for t, (o, L) in enumerate(zip(offsets, lengths)):
        for k in range(L):
            cols.setdefault(o + 2 * k + 1, []).append((t, k))
    return list(cols.values())


def _column_strict(arr, cols) -> bool:
    for boxes in cols:
        vals = [arr[t][k] for t, k in boxes]
        if any(not a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def brute_recs(A) -> bool:
    """Some arrangement of the rows of ``A`` has strictly decreasing columns.

    Tries the distinct permutations of each row in turn, discarding a
    partial choice as soon as a column already fails.
    """
    rows = [list(r) for r in A.twice_rows]
    if sum(map(len, rows)) > RECS_BOUND:
        raise BoundExceeded(f"more than {RECS_BOUND} boxes")
    lengths = [len(r) for r in rows]
    cols = _columns(A.offsets, lengths)
    col_of = {}
    for c, boxes in enumerate(cols):
        for h, (t, k) in enumerate(boxes):
            col_of[(t, k)] = (c, h)
    choice = [None] * len(rows)

    def ok_so_far(t):
        for k in range(lengths[t]):
            c, h = col_of[(t, k)]
            if h:
                t0, k0 = cols[c][h - 1]
                if not choice[t0][k0] > choice[t][k]:
                    return False
        return True

    def rec(t):
        if t == len(rows):
            return True
        for perm in sorted(set(permutations(rows[t]))):
            choice[t] = perm
            if ok_so_far(t) and rec(t + 1):
                return True
        choice[t] = None
        return False

    return rec(0)


def brute_jrecs(rows, type_d: bool, bound: int = RECS_BOUND + 2) -> bool:
    """The left-justified rows have a column-strict arrangement.

    For type D, one column may instead hold 0 in both middle boxes; only
    that single comparison is waived.  ``rows`` are the rows of an
    s-table, top to bottom.
    """
    rows = [list(r) for r in rows]
    if sum(map(len, rows)) > bound:
        raise BoundExceeded(f"more than {bound} boxes")
    mid = len(rows) // 2 - 1
    choice = [None] * len(rows)

    def good(t, zero_col):
        """Row t against row t-1; returns the updated zero column or False."""
        if t == 0:
            return zero_col
        up, low = choice[t - 1], choice[t]
        for k in range(min(len(up), len(low))):
            if up[k] > low[k]:
                continue
            if type_d and t - 1 == mid and zero_col is None and up[k] == 0 == low[k]:
                zero_col = k
                continue
            return False
        # a row longer than the one above still sits under earlier rows
        for k in range(len(up), len(low)):
            above = [choice[u][k] for u in range(t - 1) if len(choice[u]) > k]
            if above and not above[-1] > low[k]:
                return False
        return zero_col

    def rec(t, zero_col):
        if t == len(rows):
            return True
        for perm in set(permutations(rows[t])):
            choice[t] = perm
            z = good(t, zero_col)
            if z is not False and rec(t + 1, z):
                return True
        return False

    return rec(0, None)


def recs_classes(lengths, offsets) -> set:
    """Row classes with a column-strict member, for entries 1..m.

    Values are placed in decreasing order m, m-1, ..., 1.  A value may go
    into a box once the box above it is filled, or if it has none.  Each
    class is a tuple of sorted rows.  The search carries the set of
    reachable fillings for every row sequence, so each class is produced
    once.
    """
    lengths = tuple(lengths)
    offsets = tuple(offsets)
    m = sum(lengths)
    cols = _columns(offsets, lengths)
    # boxes of each row as (column, height in column)
    per_row = [[] for _ in lengths]
    for c, boxes in enumerate(cols):
        for h, (t, _) in enumerate(boxes):
            per_row[t].append((c, h))
    out = set()
    rows_of = [[] for _ in lengths]
    start = frozenset([tuple([0] * len(cols))])

    def rec(v, states):
        if v == 0:
            out.add(tuple(tuple(sorted(r)) for r in rows_of))
            return
        for t in range(len(lengths)):
            if len(rows_of[t]) == lengths[t]:
                continue
            nxt = set()
            for st in states:
                for c, h in per_row[t]:
                    if st[c] == h:
                        nxt.add(st[:c] + (h + 1,) + st[c + 1:])
            if nxt:
                rows_of[t].append(v)
                rec(v - 1, frozenset(nxt))
                rows_of[t].pop()

    if m:
        rec(m, start)
    else:
        out.add(tuple(() for _ in lengths))
    return out


# ------------------------------------------------------------ sharp oracle


def _pairs_up(vals) -> bool:
    """``vals`` splits into pairs, each summing to a positive integer."""
    if not vals:
        return True
    first, rest = vals[0], vals[1:]
    for j, v in enumerate(rest):
        s = first + v
        if s > 0 and s == int(s) and _pairs_up(rest[:j] + rest[j + 1:]):
            return True
    return False


def brute_sharp(vals):
    """Largest last entry over all arrangements whose consecutive pairs
    (1st+2nd, 3rd+4th, ...) are positive integers; None if there is none.

    An arrangement is a choice of last entry plus an ordered pairing of
    the rest.  Neither order matters to the condition, so every last entry
    is tried against every pairing of what remains.
    """
    vals = [Fraction(v) for v in vals]
    if len(vals) > SHARP_BOUND:
        raise BoundExceeded(f"list length {len(vals)} exceeds {SHARP_BOUND}")
    if len(vals) % 2 == 0:
        vals.append(Fraction(0))
    best = None
    for i, last in enumerate(vals):
        if best is not None and last <= best:
            continue
        if _pairs_up(vals[:i] + vals[i + 1:]):
            best = last
    if best is None:
        return None
    return int(best) if best.denominator == 1 else best


# --------------------------------------------------------------- BV oracle


def _rs_shape_by_greene(word, tiebreak):
    return brute_shape(word, tiebreak)


def bv_with_step2a(coeffs, lt) -> Partition:
    """The associated variety partition with the original Step 2a.

    ``coeffs`` lists a_1..a_n.  In type D this always pads to an odd number
    of parts and then applies Step 2a.  Step 1 uses the exhaustive Greene
    oracle rather than insertion.
    """
    kind = getattr(lt, "value", lt)
    a = [x for x in coeffs]
    if any((2 * x) % 1 for x in a):
        raise NonIntegralWeight("coefficients must lie in Z/2")
    parity = {int(2 * x) % 2 for x in a}
    if len(parity) > 1:
        raise NonIntegralWeight("coefficients mix integers and half-integers")
    if kind == "C" and parity == {1}:
        raise NonIntegralWeight("half-integral weights only occur in type D")
    n = len(a)
    word = [a[i] for i in range(n - 1, -1, -1)] + [-a[i] for i in range(n)]
    tiebreak = None
    if kind == "D":
        for k in range(n):
            if word[n - 1 - k] == 0:
                tiebreak = (n - 1 - k, n + k)
                break
    q = list(_rs_shape_by_greene(word, tiebreak).parts) if word else []
    q = sorted(q)
    if len(q) % 2 == 0:
        q = [0] + q
    r = [q[i] + i for i in range(len(q))]
    s = [x // 2 for x in r if x % 2 == 0]
    t = [(x - 1) // 2 for x in r if x % 2 == 1]
    if kind == "D":
        if s[0] != 0:
            t = [0] + [x + 1 for x in t]
        else:
            s = [x - 1 for x in s[1:]]
    u = sorted(s + t)
    s2 = [u[i] for i in range(0, len(u), 2)]
    t2 = [u[i] for i in range(1, len(u), 2)]
    if kind == "C":
        r2 = sorted([2 * x for x in s2] + [2 * x + 1 for x in t2])
    else:
        r2 = sorted([2 * x + 1 for x in s2] + [2 * x for x in t2])
    q2 = [r2[i] - i for i in range(len(r2))]
    return Partition(tuple(x for x in q2 if x))


# ----------------------------------------------------- table enumeration


def brute_tables(lengths, entries):
    """Every skew-symmetric filling (rows sorted, de-duplicated) of the
    pyramid with the given row lengths, using exactly ``entries``.

    Literal: try every arrangement of the upper half and keep those whose
    mirror completes the multiset.
    """
    entries = sorted(entries)
    R = len(lengths)
    top = lengths[:R // 2]
    n = sum(top)
    found = set()
    for upper in set(permutations(entries, n)):
        rows, k = [], 0
        for L in top:
            rows.append(tuple(sorted(upper[k:k + L])))
            k += L
        full = rows + [tuple(sorted(-x for x in r)) for r in reversed(rows)]
        if sorted(x for r in full for x in r) == entries:
            found.add(tuple(full))
    return sorted(found)


def brute_weighted(lams, n: int):
    """All weights (a_1..a_n) with entries from ``lams``."""
    return product(lams, repeat=n)
