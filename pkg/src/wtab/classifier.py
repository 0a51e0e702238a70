"""Finite-dimensionality of L(A) by two independent routes.

The orbit route searches the component-group orbit of ``A`` for a table
that is justified row equivalent to column strict.  The BV route checks
that the associated variety partition of λ_A equals ``p``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product

from .barbasch_vogan import _check_rule, bv_from_shape
from .component_group import _apply_generator_raw, _orbit_raw, generator_rows
from .core import (
    LieType,
    Partition,
    STable,
    as_partition,
    format_value,
    from_twice,
    has_even_multiplicity,
    is_very_even,
    middle_zero_pair,
    pyramid_lengths,
    to_twice,
)
from .errors import (
    NonIntegralWeight,
    NotEvenMultiplicity,
    NotNegationClosed,
    SharpUndefined,
    SizeMismatch,
    SwapUndefined,
    VeryEvenUnsupported,
    MixedParity,
)
from .rowops import _jrecs_raw
from .schensted import shape_of


# --------------------------------------------------------- central character


@dataclass(frozen=True)
class CentralCharacter:
    """A negation-closed multiset of entries, stored doubled and sorted."""

    twice: tuple

    def __post_init__(self):
        tw = tuple(sorted(int(x) for x in self.twice))
        object.__setattr__(self, "twice", tw)
        c = Counter(tw)
        if any(c[x] != c[-x] for x in c):
            raise NotNegationClosed(f"{self} is not closed under negation")
        if len({x & 1 for x in tw}) > 1:
            raise MixedParity("central character mixes integers and half-integers")

    @classmethod
    def of(cls, entries) -> "CentralCharacter":
        return cls(tuple(to_twice(x) for x in entries))

    @property
    def entries(self) -> tuple:
        return tuple(from_twice(x) for x in self.twice)

    @property
    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.twice)

    def __len__(self):
        return len(self.twice)

    def __str__(self):
        return "{" + ",".join(format_value(x) for x in self.entries) + "}"


def central_character(A: STable) -> CentralCharacter:
    return CentralCharacter(tuple(x for row in A.twice_rows for x in row))


# ------------------------------------------------------------- enumeration


def _splits(counts, sizes):
    """Ways to cut the multiset ``counts`` (sorted (value, mult) list) into
    sorted rows of the given sizes, in lexicographic order."""
    if not sizes:
        yield ()
        return
    size, rest = sizes[0], sizes[1:]
    vals = [v for v, _ in counts]
    mults = [m for _, m in counts]

    def pick(i, need, chosen):
        if need == 0:
            left = [(v, m) for v, m in zip(vals, mults) if m]
            for tail in _splits(left, rest):
                yield (tuple(chosen),) + tail
            return
        if i == len(vals):
            return
        for take in range(min(need, mults[i]), -1, -1):
            mults[i] -= take
            chosen.extend([vals[i]] * take)
            yield from pick(i + 1, need - take, chosen)
            del chosen[len(chosen) - take:]
            mults[i] += take

    yield from pick(0, size, [])


def _halves(chi: CentralCharacter):
    """Multisets T with T + (-T) = chi, as sorted (value, mult) lists."""
    c = Counter(chi.twice)
    pos = sorted(x for x in c if x > 0)
    zero = c.get(0, 0) // 2
    for takes in product(*[range(c[x] + 1) for x in pos]):
        half = Counter()
        if zero:
            half[0] = zero
        for x, k in zip(pos, takes):
            if k:
                half[x] = k
            if c[x] - k:
                half[-x] = c[x] - k
        yield sorted(half.items())


def _mirror(rows):
    return tuple(tuple(-x for x in reversed(row)) for row in reversed(rows))


def enumerate_rows(p, chi: CentralCharacter):
    """Sorted doubled rows of every pyramid s-table with entries ``chi``."""
    p = as_partition(p)
    lengths = pyramid_lengths(p)
    top = lengths[:len(lengths) // 2]
    out = []
    for half in _halves(chi):
        for upper in _splits(half, top):
            out.append(upper + _mirror(upper))
    out.sort()
    return out


def _check_enum_args(p, chi, lt):
    p = as_partition(p)
    lt = LieType.of(lt)
    if not isinstance(chi, CentralCharacter):
        chi = CentralCharacter.of(chi)
    if not has_even_multiplicity(p):
        raise NotEvenMultiplicity(f"{p} does not have even multiplicity")
    if len(chi) != p.size:
        raise SizeMismatch(f"|chi| = {len(chi)} but |p| = {p.size}")
    if not chi.is_integral and lt is LieType.C:
        raise NonIntegralWeight("half-integral entries need type D")
    return p, chi, lt


def enumerate_tables(p, chi, lt) -> list:
    """All A in Pyr^<=(p) whose entries form the multiset ``chi``."""
    p, chi, lt = _check_enum_args(p, chi, lt)
    return [STable(rows, None, lt) for rows in enumerate_rows(p, chi)]


def enumerate_pyr_c(p, chi, lt) -> list:
    p, chi, lt = _check_enum_args(p, chi, lt)
    type_d = lt is LieType.D
    return [STable(rows, None, lt) for rows in enumerate_rows(p, chi)
            if _jrecs_raw(rows, type_d)]


# ---------------------------------------------------------------- decisions


def _bv_parts(rows, lt, zero_rule="middle") -> tuple:
    """bv(λ_A) straight from the sorted rows; word(A) is the BV word."""
    word = [x for row in rows for x in row]
    keys = word
    if lt is LieType.D and zero_rule == "middle":
        pair = middle_zero_pair(word)
        if pair is not None:
            keys = [(x, 0) for x in word]
            keys[pair[0]] = (0, 1)
            keys[pair[1]] = (0, -1)
    return bv_from_shape(shape_of(keys), lt)


def _bv_decision(rows, p_parts, lt, zero_rule="middle") -> bool:
    return _bv_parts(rows, lt, zero_rule) == p_parts


def _orbit_search(rows, gens, type_d):
    """Breadth-first search of the orbit for a jrecs table.

    Returns (word, rows) for the first one found, or None, plus the list
    of undefined generator applications met on the way.
    """
    failures = []
    if _jrecs_raw(rows, type_d):
        return ((), rows), failures
    words = {rows: ()}
    todo = deque([rows])
    while todo:
        cur = todo.popleft()
        for k, i in enumerate(gens, start=1):
            try:
                nxt = _apply_generator_raw(cur, i)
            except (SwapUndefined, SharpUndefined) as exc:
                failures.append((cur, k, str(exc)))
                continue
            if nxt in words:
                continue
            words[nxt] = words[cur] + (k,)
            if _jrecs_raw(nxt, type_d):
                return (words[nxt], nxt), failures
            todo.append(nxt)
    return None, failures


def _check_table(A: STable, p, lt):
    p = as_partition(p)
    lt = LieType.of(lt)
    if A.part != p:
        raise SizeMismatch(f"table has shape {A.part}, expected {p}")
    if not A.is_pyramid:
        raise ValueError("the classifier works on symmetric pyramid tables")
    if not A.is_integral and lt is LieType.C:
        raise NonIntegralWeight("half-integral entries need type D")
    return p, lt


def is_finite_dim_bv(A: STable, p, lt, zero_rule: str = "middle") -> bool:
    """bv(λ_A) = p.  ``zero_rule`` is passed on to :func:`bv_word`."""
    p, lt = _check_table(A, p, lt)
    _check_rule(zero_rule)
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    return _bv_decision(rows, p.parts, lt, zero_rule)


@dataclass
class ClassificationResult:
    finite_dimensional: bool
    witness: tuple | None
    bv_partition: Partition
    bv_finite: bool
    routes_agree: bool
    failures: list = field(default_factory=list)

    @property
    def witness_word(self):
        return None if self.witness is None else self.witness[0]

    def record(self, A: STable) -> dict:
        w = self.witness
        return {
            "table": _table_json(A),
            "finite_dimensional": self.finite_dimensional,
            "bv_partition": list(self.bv_partition.parts),
            "witness_word": None if w is None else list(w[0]),
            "witness_table": None if w is None else _rows_json(w[1]),
            "routes_agree": self.routes_agree,
        }


def _rows_json(A: STable):
    return [[x if isinstance(x, int) else format_value(x) for x in row] for row in A.rows]


def _table_json(A: STable) -> dict:
    return {"type": A.kind.value, "partition": list(A.part.parts), "rows": _rows_json(A)}


def classify(A: STable, p, lt) -> ClassificationResult:
    """Run both routes.  The witness is a (generator word, table) pair."""
    p, lt = _check_table(A, p, lt)
    if A.kind is not lt:
        A = STable(A.twice_rows, A.offsets, lt)
    type_d = lt is LieType.D
    rows = tuple(tuple(sorted(row)) for row in A.twice_rows)
    found, failures = _orbit_search(rows, generator_rows(p, lt), type_d)
    witness = None if found is None else (found[0], STable(found[1], A.offsets, lt))
    q = Partition(_bv_parts(rows, lt))
    bv_fin = q == p
    fin = witness is not None
    return ClassificationResult(fin, witness, q, bv_fin, fin == bv_fin,
                                [(STable(t, A.offsets, lt), k, why) for t, k, why in failures])


# ----------------------------------------------------------- primitive ideals


@dataclass(frozen=True)
class PrimitiveLabel:
    table: STable
    tag: str  # "pyr_c", "fixed", "non_fixed" or "c1_image"


def primitive_ideal_labels(p, chi, lt) -> list:
    """Labels of the primitive ideals with associated variety the closure of
    the orbit of ``p`` and central character ``chi``.

    Type D builds three disjoint parts: tables fixed by an odd word
    (``fixed``), the other jrecs tables (``non_fixed``), and c_1 applied to
    those (``c1_image``).
    """
    p, chi, lt = _check_enum_args(p, chi, lt)
    pyr_c = enumerate_pyr_c(p, chi, lt)
    if lt is LieType.C:
        return [PrimitiveLabel(A, "pyr_c") for A in pyr_c]
    if is_very_even(p.parts, lt):
        raise VeryEvenUnsupported("type D with every part even has no c_1")
    gens = generator_rows(p, lt)
    fixed, non_fixed, images = [], [], []
    for A in pyr_c:
        rows = A.twice_rows
        _, words, _ = _orbit_raw(rows, gens)
        if (rows, 1) in words:
            fixed.append(PrimitiveLabel(A, "fixed"))
        else:
            non_fixed.append(PrimitiveLabel(A, "non_fixed"))
            img = _apply_generator_raw(rows, gens[0])
            images.append(PrimitiveLabel(STable(img, None, lt), "c1_image"))
    return fixed + non_fixed + images
