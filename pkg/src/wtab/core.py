"""Partitions, frames, tables and weights.

Entries are stored doubled: a table entry ``x`` is kept as the integer
``2x``.  This keeps half-integers exact and makes comparisons cheap.  The
public accessors (``Table.rows``, ``word_of``, ``Weight.coeffs``) hand back
ordinary ``int`` values, or ``Fraction`` values for half-integral tables.

Horizontal geometry uses half-box units: a box is two units wide and a row
is described by the x coordinate of its left edge.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import (
    InvalidForType,
    InvalidFrame,
    MixedParity,
    NotEvenMultiplicity,
    SizeMismatch,
)

Number = "int | Fraction"


# --------------------------------------------------------------- half-integers


def to_twice(x) -> int:
    """Return ``2*x`` as an int, rejecting anything that is not in Z/2."""
    if isinstance(x, HalfInt):
        return x.twice_value
    if isinstance(x, bool):
        raise TypeError("booleans are not table entries")
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, str):
        return HalfInt.parse(x).twice_value
    if isinstance(x, float):
        if not (2 * x).is_integer():
            raise ValueError(f"{x!r} is not a half-integer")
        return int(2 * x)
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise ValueError(f"{x!r} is not a half-integer")
    return int(2 * f)


def from_twice(t: int):
    """Inverse of :func:`to_twice`: an int if ``t`` is even, else a Fraction."""
    return t // 2 if t % 2 == 0 else Fraction(t, 2)


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of Z/2 stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, x) -> "HalfInt":
        return cls(to_twice(x))

    @classmethod
    def parse(cls, s: str) -> "HalfInt":
        s = s.strip().replace("−", "-")
        if "/" in s:
            num, den = s.split("/", 1)
            if den.strip() != "2":
                raise ValueError(f"bad half-integer {s!r}")
            return cls(int(num))
        return cls(2 * int(s))

    @property
    def value(self):
        return from_twice(self.twice_value)

    @property
    def is_integral(self) -> bool:
        return self.twice_value % 2 == 0

    def __neg__(self):
        return HalfInt(-self.twice_value)

    def __add__(self, other):
        return HalfInt(self.twice_value + HalfInt.of(other).twice_value)

    def __str__(self):
        t = self.twice_value
        return str(t // 2) if t % 2 == 0 else f"{t}/2"


def format_value(x) -> str:
    """Render an entry as ``3`` or ``-5/2``."""
    return str(HalfInt.of(x))


# ------------------------------------------------------------------ partitions


class LieType(enum.Enum):
    C = "C"
    D = "D"

    @property
    def phi(self) -> str:
        return "-" if self is LieType.C else "+"

    @classmethod
    def of(cls, x) -> "LieType":
        if isinstance(x, LieType):
            return x
        return cls(str(x).upper())


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        return partition_transpose(self)

    def multiplicities(self) -> dict:
        return dict(Counter(self.parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def has_even_multiplicity(p) -> bool:
    return all(m % 2 == 0 for m in Counter(p).values())


def is_orbit_partition(p, lt) -> bool:
    """Whether ``p`` is the Jordan type of a nilpotent orbit of type ``lt``.

    Type C (symplectic): odd parts have even multiplicity.  Type D
    (orthogonal): even parts have even multiplicity.
    """
    bad_parity = 1 if LieType.of(lt) is LieType.C else 0
    return all(m % 2 == 0 for x, m in Counter(p).items() if x % 2 == bad_parity)


def is_very_even(p, lt) -> bool:
    p = tuple(p)
    return (LieType.of(lt) is LieType.D and bool(p)
            and all(x % 2 == 0 for x in p) and has_even_multiplicity(p))


def validate_partition(parts: Iterable[int], lt) -> Partition:
    """Check that ``parts`` is an even-multiplicity orbit partition for ``lt``.

    Use :func:`is_very_even` for the type D splitting flag.
    """
    lt = LieType.of(lt)
    parts = tuple(parts)
    if not parts:
        raise ValueError("empty partition")
    p = Partition(parts)
    if not has_even_multiplicity(p):
        bad = sorted(x for x, m in Counter(p).items() if m % 2)
        raise NotEvenMultiplicity(f"parts {bad} of {p} have odd multiplicity")
    if not is_orbit_partition(p, lt):
        raise InvalidForType(f"{p} is not an orbit partition in type {lt.value}")
    return p


def partition_transpose(p) -> Partition:
    parts = as_partition(p).parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def dominance_leq(p, q) -> bool:
    """``p <= q`` in the dominance order."""
    p, q = as_partition(p), as_partition(q)
    if p.size != q.size:
        raise SizeMismatch(f"|{p}| = {p.size} but |{q}| = {q.size}")
    k = max(len(p), len(q))
    ps = accumulate(p.parts + (0,) * (k - len(p)))
    qs = accumulate(q.parts + (0,) * (k - len(q)))
    return all(a <= b for a, b in zip(ps, qs))


# ---------------------------------------------------------------------- frames


@dataclass(frozen=True)
class Frame:
    """Rows of boxes, top to bottom, each given by its length and left edge."""

    row_lengths: tuple
    offsets: tuple

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.row_lengths)
        offsets = tuple(int(x) for x in self.offsets)
        object.__setattr__(self, "row_lengths", lengths)
        object.__setattr__(self, "offsets", offsets)
        if len(lengths) != len(offsets):
            raise InvalidFrame("row_lengths and offsets differ in length")
        if any(x <= 0 for x in lengths):
            raise InvalidFrame("rows must be nonempty")
        for t in range(len(lengths) - 1):
            lo = max(offsets[t], offsets[t + 1])
            hi = min(offsets[t] + 2 * lengths[t], offsets[t + 1] + 2 * lengths[t + 1])
            if hi <= lo:
                raise InvalidFrame(f"rows {t + 1} and {t + 2} do not touch")

    @classmethod
    def left_justified(cls, lengths) -> "Frame":
        return cls(tuple(lengths), (0,) * len(lengths))

    def __len__(self):
        return len(self.row_lengths)

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    @property
    def part(self) -> Partition:
        return Partition(self.row_lengths)

    def box_centers(self, t: int) -> range:
        o = self.offsets[t]
        return range(o + 1, o + 2 * self.row_lengths[t], 2)

    def columns(self) -> dict:
        """Map each column's x coordinate to the list of rows it meets."""
        cols: dict = {}
        for t in range(len(self)):
            for x in self.box_centers(t):
                cols.setdefault(x, []).append(t)
        return dict(sorted(cols.items()))

    @property
    def is_justified(self) -> bool:
        return len({o % 2 for o in self.offsets}) <= 1

    @property
    def is_left_justified(self) -> bool:
        return len(set(self.offsets)) <= 1

    @property
    def is_preconvex(self) -> bool:
        if not self.is_justified:
            return False
        cols = [set(rows) for rows in self.columns().values()]
        return all(a <= b or b <= a for i, a in enumerate(cols) for b in cols[i + 1:])

    @property
    def has_connected_columns(self) -> bool:
        return all(rows[-1] - rows[0] == len(rows) - 1 for rows in self.columns().values())

    @property
    def is_convex(self) -> bool:
        return self.is_preconvex and self.has_connected_columns

    def left_justify(self) -> "Frame":
        return Frame.left_justified(self.row_lengths)


class SFrame(Frame):
    """A centrally symmetric frame with an even number of rows.

    Rows are labelled ``-r..-1, 1..r`` from top to bottom.
    """

    def __post_init__(self):
        super().__post_init__()
        n = len(self.row_lengths)
        if n % 2:
            raise InvalidFrame("an s-frame needs an even number of rows")
        for t in range(n):
            m = n - 1 - t
            if (self.row_lengths[t] != self.row_lengths[m]
                    or self.offsets[t] != -(self.offsets[m] + 2 * self.row_lengths[m])):
                raise InvalidFrame("frame is not centrally symmetric")

    @property
    def r(self) -> int:
        return len(self.row_lengths) // 2

    def index(self, label: int) -> int:
        """Position (0 = top) of the row labelled ``label``."""
        r = self.r
        if label == 0 or abs(label) > r:
            raise IndexError(f"no row labelled {label}")
        return label + r if label < 0 else label + r - 1

    def label(self, t: int) -> int:
        r = self.r
        return t - r if t < r else t - r + 1


def frame_predicates(F: Frame) -> dict:
    return {
        "justified": F.is_justified,
        "left_justified": F.is_left_justified,
        "preconvex": F.is_preconvex,
        "convex": F.is_convex,
    }


def pyramid_lengths(p) -> tuple:
    """Row lengths, top to bottom, of the symmetric pyramid of ``p``."""
    half = as_partition(p).parts[::2]
    return tuple(reversed(half)) + half


def symmetric_pyramid(p) -> SFrame:
    p = as_partition(p)
    if not has_even_multiplicity(p):
        raise NotEvenMultiplicity(f"{p} does not have even multiplicity")
    lengths = pyramid_lengths(p)
    return SFrame(lengths, tuple(-x for x in lengths))


# ---------------------------------------------------------------------- tables


def _twice_rows(rows) -> tuple:
    return tuple(tuple(to_twice(x) for x in row) for row in rows)


def _parity(rows2) -> int | None:
    ps = {x & 1 for row in rows2 for x in row}
    if len(ps) > 1:
        raise MixedParity("entries mix integers and half-integers")
    return ps.pop() if ps else None


@dataclass(frozen=True)
class Table:
    """A frame filled with half-integers of one parity.

    ``twice_rows`` holds the doubled entries row by row, top to bottom.
    """

    twice_rows: tuple
    offsets: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.twice_rows)
        object.__setattr__(self, "twice_rows", rows)
        object.__setattr__(self, "offsets", tuple(int(o) for o in self.offsets))
        self._check()

    def _check(self):
        if len(self.twice_rows) != len(self.offsets):
            raise InvalidFrame("one offset per row is required")
        if self.twice_rows:
            self.frame_class()(tuple(map(len, self.twice_rows)), self.offsets)
        _parity(self.twice_rows)

    @classmethod
    def frame_class(cls):
        return Frame

    @classmethod
    def from_values(cls, rows, offsets=None, **kw):
        rows2 = _twice_rows(rows)
        if offsets is None:
            offsets = (0,) * len(rows2)
        return cls(rows2, tuple(offsets), **kw)

    @property
    def rows(self) -> tuple:
        return tuple(tuple(from_twice(x) for x in row) for row in self.twice_rows)

    @property
    def frame(self) -> Frame:
        return self.frame_class()(tuple(map(len, self.twice_rows)), self.offsets)

    @property
    def part(self) -> Partition:
        return Partition(tuple(map(len, self.twice_rows)))

    @property
    def is_integral(self) -> bool:
        return all(x % 2 == 0 for row in self.twice_rows for x in row)

    def __len__(self):
        return len(self.twice_rows)

    def entries(self) -> list:
        return [from_twice(x) for row in self.twice_rows for x in row]

    def replace_rows(self, twice_rows, offsets=None):
        """Same kind of table with new (doubled) rows."""
        return _rebuild(self, twice_rows, self.offsets if offsets is None else offsets)

    def __str__(self):
        return " / ".join("[" + ",".join(format_value(x) for x in row) + "]" for row in self.rows)


class STable(Table):
    """A skew-symmetric filling of an s-frame.

    ``kind`` is the Lie type; half-integral entries are only allowed in
    type D.
    """

    def __init__(self, twice_rows, offsets=None, kind=LieType.C):
        rows = tuple(tuple(int(x) for x in row) for row in twice_rows)
        if offsets is None:
            offsets = tuple(-len(row) for row in rows)
        object.__setattr__(self, "kind", LieType.of(kind))
        super().__init__(rows, tuple(offsets))

    def _check(self):
        super()._check()
        rows = self.twice_rows
        if not rows:
            raise InvalidFrame("an s-table needs at least two rows")
        n = len(rows)
        for t in range(n):
            if tuple(-x for x in reversed(rows[n - 1 - t])) != rows[t]:
                raise InvalidFrame("entries are not skew-symmetric about the centre")
        if not self.is_integral and self.kind is not LieType.D:
            raise MixedParity("half-integral entries are only allowed in type D")

    @classmethod
    def frame_class(cls):
        return SFrame

    @classmethod
    def from_values(cls, rows, offsets=None, kind=LieType.C):
        return cls(_twice_rows(rows), offsets, kind)

    @classmethod
    def from_upper(cls, upper, kind=LieType.C, offsets=None):
        """Build from rows ``-r..-1`` (top half); the bottom half is implied."""
        top = _twice_rows(upper)
        rows = top + tuple(tuple(-x for x in reversed(row)) for row in reversed(top))
        if offsets is not None and len(offsets) == len(top):
            offsets = tuple(offsets) + tuple(
                -(o + 2 * len(row)) for o, row in zip(reversed(offsets), reversed(top)))
        return cls(rows, offsets, kind)

    def __eq__(self, other):
        if not isinstance(other, STable):
            return NotImplemented
        return (self.twice_rows, self.offsets, self.kind) == (
            other.twice_rows, other.offsets, other.kind)

    def __hash__(self):
        return hash((self.twice_rows, self.offsets, self.kind))

    def __repr__(self):
        return f"STable({self}, kind={self.kind.value})"

    @property
    def r(self) -> int:
        return len(self.twice_rows) // 2

    def row(self, label: int) -> tuple:
        return self.rows[self.frame.index(label)]

    @property
    def is_pyramid(self) -> bool:
        lengths = tuple(map(len, self.twice_rows))
        return (lengths == pyramid_lengths(lengths)
                and self.offsets == tuple(-x for x in lengths))


def _rebuild(A: Table, twice_rows, offsets):
    if isinstance(A, STable):
        return STable(twice_rows, offsets, A.kind)
    return type(A)(twice_rows, offsets)


def sort_rows(A: Table) -> Table:
    return A.replace_rows(tuple(tuple(sorted(row)) for row in A.twice_rows))


def left_justify(A: Table) -> Table:
    """l(A): same rows, every row starting in column 0.  Always a plain Table."""
    return Table(A.twice_rows, (0,) * len(A))


def is_row_sorted(A: Table) -> bool:
    return all(list(row) == sorted(row) for row in A.twice_rows)


# ----------------------------------------------------------------------- words


class Word(tuple):
    """A tuple of entries, optionally carrying a type D zero tiebreak.

    ``tiebreak`` is a pair of positions holding 0 that straddle the
    midpoint; the first of them counts as the larger one.
    """

    def __new__(cls, values=(), tiebreak=None):
        w = super().__new__(cls, values)
        if tiebreak is not None:
            i, j = tiebreak
            if not (0 <= i < j < len(w)) or w[i] != 0 or w[j] != 0:
                raise ValueError(f"bad tiebreak {tiebreak} for {tuple(w)}")
            if not (i < len(w) / 2 <= j):
                raise ValueError("tiebreak positions must straddle the midpoint")
        w.tiebreak = tiebreak
        return w

    def sort_keys(self) -> list:
        """Totally ordered stand-ins: ``(value, bias)`` pairs."""
        keys = [(v, 0) for v in self]
        if self.tiebreak is not None:
            i, j = self.tiebreak
            keys[i] = (0, 1)
            keys[j] = (0, -1)
        return keys


def word_of(A: Table) -> Word:
    return Word(from_twice(x) for row in A.twice_rows for x in row)


def middle_zero_pair(w: Sequence) -> tuple | None:
    """Positions of the zeros nearest the midpoint of an even-length symmetric word."""
    n = len(w) // 2
    for k in range(n):
        if w[n - 1 - k] == 0:
            return (n - 1 - k, n + k)
    return None


def word_with_tiebreak(A: STable) -> Word:
    """word(A^<=), carrying the type D zero tiebreak where it applies."""
    w = word_of(sort_rows(A))
    if A.kind is LieType.D:
        return Word(w, middle_zero_pair(w))
    return w


# ------------------------------------------------------------------- coord / λ


def coordinate_table(F: SFrame, kind=LieType.C) -> STable:
    """coord(F): fill with -n..-1, 1..n as the frame's geometry dictates.

    Start from coord(p) of the symmetric pyramid and hand its rows, grouped
    by length and kept in top-to-bottom order, to the rows of ``F`` of the
    same length, again top to bottom.
    """
    if not isinstance(F, SFrame):
        try:
            F = SFrame(F.row_lengths, F.offsets)
        except InvalidFrame:
            raise
    p = F.part
    if not has_even_multiplicity(p):
        raise InvalidFrame(f"part(F) = {p} does not have even multiplicity")
    lengths = pyramid_lengths(p)
    n = p.size // 2
    vals = list(range(-n, 0)) + list(range(1, n + 1))
    pyr_rows = []
    k = 0
    for L in lengths:
        pyr_rows.append(vals[k:k + L])
        k += L
    by_len: dict = {}
    for row in pyr_rows:
        by_len.setdefault(len(row), []).append(row)
    rows = [by_len[L].pop(0) for L in F.row_lengths]
    return STable.from_values(rows, F.offsets, kind)


@dataclass(frozen=True)
class Weight:
    """λ = Σ a_i ε_i, stored as doubled coefficients ``(2a_1, ..., 2a_n)``."""

    twice: tuple

    def __post_init__(self):
        object.__setattr__(self, "twice", tuple(int(x) for x in self.twice))
        _parity((self.twice,))

    @classmethod
    def of(cls, coeffs) -> "Weight":
        return cls(tuple(to_twice(c) for c in coeffs))

    @property
    def coeffs(self) -> tuple:
        return tuple(from_twice(x) for x in self.twice)

    @property
    def n(self) -> int:
        return len(self.twice)

    @property
    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.twice)

    def __str__(self):
        terms = []
        for i in range(self.n, 0, -1):
            t = self.twice[i - 1]
            if t == 0:
                continue
            c = from_twice(abs(t))
            sign = "-" if t < 0 else "+"
            coef = "" if c == 1 else format_value(c)
            terms.append((sign, f"{coef}e{i}"))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def weight_positions(F: SFrame) -> list:
    """``pos[i-1]`` = (row, column) of the box holding ``-i`` in coord(F)."""
    coord = coordinate_table(F).twice_rows
    pos = {}
    for t, row in enumerate(coord):
        for k, x in enumerate(row):
            if x < 0:
                pos[-x // 2] = (t, k)
    return [pos[i] for i in range(1, len(pos) + 1)]


def weight_of(A: STable) -> Weight:
    rows = A.twice_rows
    _parity(rows)
    return Weight(tuple(rows[t][k] for t, k in weight_positions(A.frame)))
