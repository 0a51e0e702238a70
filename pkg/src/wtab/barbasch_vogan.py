"""Associated variety partition of Ann L(λ), and Lusztig symbols."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    LieType,
    Partition,
    Weight,
    Word,
    from_twice,
    is_very_even,
    middle_zero_pair,
)
from .errors import NonIntegralWeight
from .schensted import shape_of


@dataclass(frozen=True)
class Symbol:
    top: tuple
    bottom: tuple

    @property
    def content(self) -> tuple:
        return tuple(sorted(self.top + self.bottom))

    def __str__(self):
        return f"({' '.join(map(str, self.top))} / {' '.join(map(str, self.bottom))})"


@dataclass(frozen=True)
class BvTrace:
    q: Partition
    q_padded: tuple
    r_list: tuple
    s_list: tuple
    t_list: tuple
    u: tuple
    s_prime: tuple
    t_prime: tuple
    r_prime: tuple
    q_prime: Partition
    very_even: bool

    def lines(self) -> list:
        return [
            f"step 1: q = {self.q}",
            f"step 2: ascending {self.q_padded}, r = {self.r_list}, "
            f"s = {self.s_list}, t = {self.t_list}",
            f"step 3: u = {self.u}, s' = {self.s_prime}, t' = {self.t_prime}, "
            f"r' = {self.r_prime}",
            f"result: q' = {self.q_prime}" + (" (very even)" if self.very_even else ""),
        ]


def _step2(q_desc, lt):
    asc = sorted(q_desc)
    want_odd = lt is LieType.C
    if (len(asc) % 2 == 1) != want_odd:
        asc.insert(0, 0)
    r = [x + i for i, x in enumerate(asc)]
    s = tuple(x // 2 for x in r if x % 2 == 0)
    t = tuple(x // 2 for x in r if x % 2 == 1)
    return tuple(asc), tuple(r), s, t


def _step3(s, t, lt):
    u = tuple(sorted(s + t))
    sp, tp = u[0::2], u[1::2]
    if lt is LieType.C:
        rp = tuple(sorted([2 * x for x in sp] + [2 * x + 1 for x in tp]))
    else:
        rp = tuple(sorted([2 * x + 1 for x in sp] + [2 * x for x in tp]))
    qp = tuple(x - i for i, x in enumerate(rp))
    return u, sp, tp, rp, Partition(tuple(x for x in qp if x))


def symbol_of(q, lt) -> Symbol:
    lt = LieType.of(lt)
    _, _, s, t = _step2(tuple(q), lt)
    return Symbol(s, t)


def content_of(q, lt) -> tuple:
    return symbol_of(q, lt).content


ZERO_RULES = ("middle", "plain")


def _check_rule(zero_rule):
    if zero_rule not in ZERO_RULES:
        raise ValueError(f"zero_rule must be one of {ZERO_RULES}")


def bv_word(twice_coeffs, lt, zero_rule: str = "middle") -> Word:
    """(a_n, ..., a_1, -a_1, ..., -a_n), with the type D zero tiebreak.

    ``zero_rule="middle"`` marks the two zeros nearest the middle, the
    first one counting as larger.  ``"plain"`` leaves every zero equal.
    """
    _check_rule(zero_rule)
    a = list(twice_coeffs)
    w = [from_twice(x) for x in reversed(a)] + [from_twice(-x) for x in a]
    tb = None
    if LieType.of(lt) is LieType.D and zero_rule == "middle":
        tb = middle_zero_pair(w)
    return Word(w, tb)


def _check_weight(lam, lt) -> Weight:
    if not isinstance(lam, Weight):
        lam = Weight.of(lam)
    if not lam.is_integral and lt is LieType.C:
        raise NonIntegralWeight("half-integral weights only occur in type D")
    return lam


def bv(lam, lt, zero_rule: str = "middle"):
    """Algorithm BV2.  Returns ``(q', trace)``."""
    lt = LieType.of(lt)
    lam = _check_weight(lam, lt)
    w = bv_word(lam.twice, lt, zero_rule)
    q = Partition(shape_of(w.sort_keys()))
    asc, r, s, t = _step2(q.parts, lt)
    u, sp, tp, rp, qp = _step3(s, t, lt)
    trace = BvTrace(q, asc, r, s, t, u, sp, tp, rp, qp, is_very_even(qp.parts, lt))
    return qp, trace


@lru_cache(maxsize=None)
def bv_from_shape(q_desc: tuple, lt: LieType) -> tuple:
    """Steps 2 and 3 only, as a tuple; cached for the enumeration loops."""
    _, _, s, t = _step2(q_desc, lt)
    return _step3(s, t, lt)[4].parts


def bv_partition(lam, lt, zero_rule: str = "middle") -> Partition:
    return bv(lam, lt, zero_rule)[0]
