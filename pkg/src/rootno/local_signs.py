"""Local sign w_p* of a fibre (s, t): closed-form case tables.

The global root number of the fibre at (s, t) is W = -prod_p w_p*(t) over the
primes of the factor base (p | 6 s (t^2-s)); w_p* = +1 for every other prime.
Each w_p* is given by one of twelve case tables, selected by the prime class
and the valuation pattern of s and t:

  T3   p >= 5
  T4   p = 3, nu3(s) odd
  T5   p = 3, nu3(s) == 0 mod 4, 2 nu3(t) == nu3(s)
  T6a  p = 3, nu3(s) == 0 mod 4, 2 nu3(t) != nu3(s)
  T6b  p = 3, nu3(s) == 2 mod 4, 2 nu3(t) != nu3(s)
  T7   p = 3, nu3(s) == 2 mod 4, 2 nu3(t) == nu3(s)
  T8   p = 2, nu2(s) == 0 mod 4, 2 nu2(t) != nu2(s)
  T9   p = 2, nu2(s) == 0 mod 4, 2 nu2(t) == nu2(s)
  T10a p = 2, nu2(s) == 1 mod 4
  T10b p = 2, nu2(s) == 3 mod 4
  T11  p = 2, nu2(s) == 2 mod 4, 2 nu2(t) != nu2(s)
  T12  p = 2, nu2(s) == 2 mod 4, 2 nu2(t) == nu2(s)

Tables are literal row lists: (guard, value) over a LocalProfile, first match
wins, and a fall-through raises (every table is total over its dispatch
domain; the totality fuzz test exercises this). Row keys name the first
column of the table ("diff" is nu(s) - 2 nu(t) in T4..T12, the table's own
m = nu(t^2-s) - 2 nu(t) in the equal-valuation tables T5/T7/T9/T12, and
k = 2 nu(t) - nu(s) in T3).

Known divergences between these tables and other published claims are
deliberately NOT patched here: the rows are kept exactly as transcribed, and
the errata overlay below stays empty so that discrepancies are reported by
the audit machinery instead of silently fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from rootno.arith import legendre, valuation, valuation_or_inf
from rootno.families import is_singular

Sign = int
INF = math.inf


class TableFallthrough(Exception):
    """A dispatch table matched no row: transcription bug, never expected."""


class LocalProfile:
    """Valuations and unit parts of s, t and t^2 - s at one prime.

    nu_t is math.inf and t_u is None when t = 0; every table row that
    consults t_u is unreachable in that case (guards test the valuation
    columns first).
    """

    __slots__ = ("p", "s", "t", "nu_s", "s_u", "nu_t", "t_u", "nu_d", "d_u")

    def __init__(self, p: int, s: int, t: int):
        if s == 0 or is_singular(s, t):
            raise ValueError(f"fibre (s={s}, t={t}) is singular")
        self.p = p
        self.s = s
        self.t = t
        self.nu_s, self.s_u = valuation(p, s)
        self.nu_t, self.t_u = valuation_or_inf(p, t)
        if self.t_u == 0:
            self.t_u = None
        self.nu_d, self.d_u = valuation(p, t * t - s)

    # key columns
    @property
    def k(self) -> Union[int, float]:
        """2 nu(t) - nu(s): the first column of T3."""
        return 2 * self.nu_t - self.nu_s

    @property
    def diff(self) -> Union[int, float]:
        """nu(s) - 2 nu(t): the first column of T4, T6, T8, T10, T11."""
        return self.nu_s - 2 * self.nu_t

    @property
    def m(self) -> int:
        """nu(t^2-s) - 2 nu(t): the first column of T5, T7, T9, T12."""
        return self.nu_d - 2 * self.nu_t

    def leg(self, a: int) -> Sign:
        return legendre(a, self.p)


def profile(p: int, s: int, t: int) -> LocalProfile:
    return LocalProfile(p, s, t)


def _sgn4(x: int) -> Sign:
    """'x mod 4' as a sign: +1 when x == 1 mod 4, -1 when x == 3 mod 4."""
    return 1 if x % 4 == 1 else -1


@dataclass(frozen=True)
class Row:
    cell: str                                  # printed first-column key
    sub: str                                   # distinguishing unit condition
    guard: Callable[[LocalProfile], bool]
    value: Callable[[LocalProfile], Sign]
    vdesc: str                                 # printed value, for records

    @property
    def row_id(self) -> str:
        return f"{self.cell} & {self.sub}" if self.sub else self.cell


# --------------------------------------------------------------------- T3

T3 = [
    # nu(s) odd
    Row("s odd & k<0", "nu(t) even",
        lambda q: q.nu_s % 2 == 1 and q.k < 0 and q.nu_t % 2 == 0,
        lambda q: -q.leg(3 * q.t_u), "-(3t_p/p)"),
    Row("s odd & k<0", "nu(t) odd",
        lambda q: q.nu_s % 2 == 1 and q.k < 0,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s odd & k>0", "",
        lambda q: q.nu_s % 2 == 1 and q.k > 0,
        lambda q: q.leg(2), "(2/p)"),
    # nu(s) == 0 mod 4
    Row("s 0mod4 & k<0", "nu(t) even",
        lambda q: q.nu_s % 4 == 0 and q.k < 0 and q.nu_t % 2 == 0,
        lambda q: -q.leg(3 * q.t_u), "-(3t_p/p)"),
    Row("s 0mod4 & k<0", "nu(t) odd",
        lambda q: q.nu_s % 4 == 0 and q.k < 0,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s 0mod4 & k>0", "",
        lambda q: q.nu_s % 4 == 0 and q.k > 0,
        lambda q: 1, "+1"),
    Row("s 0mod4 & k=0", "nu(t)=0 mod 6, nu(d)=2,4 mod 6",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 0
        and q.nu_d % 6 in (2, 4),
        lambda q: q.leg(-3), "(-3/p)"),
    Row("s 0mod4 & k=0", "nu(t)=0 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 0,
        lambda q: 1, "+1"),
    Row("s 0mod4 & k=0", "nu(t)=2 mod 6, nu(d)=0,2 mod 6",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 2
        and q.nu_d % 6 in (0, 2),
        lambda q: q.leg(-3), "(-3/p)"),
    Row("s 0mod4 & k=0", "nu(t)=2 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 2,
        lambda q: 1, "+1"),
    Row("s 0mod4 & k=0", "nu(t)=4 mod 6, nu(d)=0,4 mod 6",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 4
        and q.nu_d % 6 in (0, 4),
        lambda q: q.leg(-3), "(-3/p)"),
    Row("s 0mod4 & k=0", "nu(t)=4 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 0 and q.k == 0 and q.nu_t % 6 == 4,
        lambda q: 1, "+1"),
    # nu(s) == 2 mod 4
    Row("s 2mod4 & k<0", "nu(t) even",
        lambda q: q.nu_s % 4 == 2 and q.k < 0 and q.nu_t % 2 == 0,
        lambda q: -q.leg(3 * q.t_u), "-(3t_p/p)"),
    Row("s 2mod4 & k<0", "nu(t) odd",
        lambda q: q.nu_s % 4 == 2 and q.k < 0,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s 2mod4 & k>0", "",
        lambda q: q.nu_s % 4 == 2 and q.k > 0,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s 2mod4 & k=0", "nu(t)=1 mod 6, nu(d)=1,3 mod 6",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 1
        and q.nu_d % 6 in (1, 3),
        lambda q: q.leg(3), "(3/p)"),
    Row("s 2mod4 & k=0", "nu(t)=1 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 1,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s 2mod4 & k=0", "nu(t)=3 mod 6, nu(d)=1,5 mod 6",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 3
        and q.nu_d % 6 in (1, 5),
        lambda q: q.leg(3), "(3/p)"),
    Row("s 2mod4 & k=0", "nu(t)=3 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 3,
        lambda q: q.leg(-1), "(-1/p)"),
    Row("s 2mod4 & k=0", "nu(t)=5 mod 6, nu(d)=3,5 mod 6",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 5
        and q.nu_d % 6 in (3, 5),
        lambda q: q.leg(3), "(3/p)"),
    Row("s 2mod4 & k=0", "nu(t)=5 mod 6, otherwise",
        lambda q: q.nu_s % 4 == 2 and q.k == 0 and q.nu_t % 6 == 5,
        lambda q: q.leg(-1), "(-1/p)"),
]

# --------------------------------------------------------------------- T4

T4 = [
    # nu3(s) == 1 mod 4
    Row("s 1mod4 & diff<-1", "",
        lambda q: q.nu_s % 4 == 1 and q.diff < -1,
        lambda q: 1, "+1"),
    Row("s 1mod4 & diff=-1", "",
        lambda q: q.nu_s % 4 == 1 and q.diff == -1,
        lambda q: -q.leg(q.s_u), "-(s_3/3)"),
    Row("s 1mod4 & diff=1,3", "",
        lambda q: q.nu_s % 4 == 1 and q.diff in (1, 3),
        lambda q: 1, "+1"),
    Row("s 1mod4 & diff=1mod4>1", "",
        lambda q: q.nu_s % 4 == 1 and q.diff > 1 and q.diff % 4 == 1,
        lambda q: -1, "-1"),
    Row("s 1mod4 & diff=3mod4>3", "",
        lambda q: q.nu_s % 4 == 1 and q.diff > 3 and q.diff % 4 == 3,
        lambda q: -q.leg(q.t_u), "-(t_3/3)"),
    # nu3(s) == 3 mod 4
    Row("s 3mod4 & diff=1", "",
        lambda q: q.nu_s % 4 == 3 and q.diff == 1,
        lambda q: q.leg(q.s_u), "(s_3/3)"),
    Row("s 3mod4 & diff=1mod4>1", "",
        lambda q: q.nu_s % 4 == 3 and q.diff > 1 and q.diff % 4 == 1,
        lambda q: -q.leg(q.t_u), "-(t_3/3)"),
    Row("s 3mod4 & otherwise", "",
        lambda q: q.nu_s % 4 == 3,
        lambda q: -1, "-1"),
]

# --------------------------------------------------------------------- T5

def _u3(q: LocalProfile) -> int:
    return q.t_u * q.d_u % 3


def _u9(q: LocalProfile) -> int:
    return q.t_u * q.d_u % 9


T5 = [
    Row("diff=0", "s_3=2 mod 3, s_3 t_3 != 2,4 mod 9",
        lambda q: q.m == 0 and q.s_u % 3 == 2
        and q.s_u * q.t_u % 9 not in (2, 4),
        lambda q: 1, "+1"),
    Row("diff=0mod6>0", "t_3 d_3 != 7,8 mod 9",
        lambda q: q.m > 0 and q.m % 6 == 0 and _u9(q) not in (7, 8),
        lambda q: 1, "+1"),
    Row("diff=1mod6", "t_3 d_3 = 2 mod 3",
        lambda q: q.m % 6 == 1 and _u3(q) == 2,
        lambda q: 1, "+1"),
    Row("diff=2mod6", "t_3 d_3 = 1 mod 3",
        lambda q: q.m % 6 == 2 and _u3(q) == 1,
        lambda q: 1, "+1"),
    Row("diff=3mod6", "t_3 d_3 = 1,2 mod 9",
        lambda q: q.m % 6 == 3 and _u9(q) in (1, 2),
        lambda q: 1, "+1"),
    Row("diff=4mod6", "t_3 d_3 = 2 mod 3",
        lambda q: q.m % 6 == 4 and _u3(q) == 2,
        lambda q: 1, "+1"),
    Row("diff=5mod6", "t_3 d_3 = 1 mod 3",
        lambda q: q.m % 6 == 5 and _u3(q) == 1,
        lambda q: 1, "+1"),
    Row("otherwise", "",
        lambda q: True,
        lambda q: -1, "-1"),
]

# -------------------------------------------------------------------- T6a

T6a = [
    Row("diff<-2", "",
        lambda q: q.diff < -2,
        lambda q: 1, "+1"),
    Row("diff=-2", "",
        lambda q: q.diff == -2,
        lambda q: q.leg(q.t_u), "(t_3/3)"),
    Row("diff>0", "nu(t) even",
        lambda q: q.diff > 0 and q.nu_t % 2 == 0,
        lambda q: -1, "-1"),
    Row("diff>0", "nu(t) odd",
        lambda q: q.diff > 0 and q.nu_t % 2 == 1,
        lambda q: -q.leg(q.t_u), "-(t_3/3)"),
]

# -------------------------------------------------------------------- T6b

T6b = [
    Row("diff<-2", "",
        lambda q: q.diff < -2,
        lambda q: 1, "+1"),
    Row("diff=-2", "t_3 = s_3 mod 3",
        lambda q: q.diff == -2 and q.t_u % 3 == q.s_u % 3,
        lambda q: 1, "+1"),
    Row("diff=-2", "t_3 = -s_3 mod 3",
        lambda q: q.diff == -2 and q.t_u % 3 == -q.s_u % 3,
        lambda q: -1, "-1"),
    Row("diff=2", "t_3 = s_3 mod 3",
        lambda q: q.diff == 2 and q.t_u % 3 == q.s_u % 3,
        lambda q: 1, "+1"),
    Row("diff=2", "t_3 = -s_3 mod 3",
        lambda q: q.diff == 2 and q.t_u % 3 == -q.s_u % 3,
        lambda q: -1, "-1"),
    Row("diff=0mod4>0", "",
        lambda q: q.diff > 0 and q.diff % 4 == 0,
        lambda q: -q.leg(q.t_u), "-(t_3/3)"),
    Row("diff=2mod4>2", "",
        lambda q: q.diff > 2 and q.diff % 4 == 2,
        lambda q: -1, "-1"),
]

# --------------------------------------------------------------------- T7

T7 = [
    Row("diff=0", "s_3=2 mod 3, s_3 t_3 != 2,4 mod 9",
        lambda q: q.m == 0 and q.s_u % 3 == 2
        and q.s_u * q.t_u % 9 not in (2, 4),
        lambda q: 1, "+1"),
    Row("diff=0mod6>0", "t_3 d_3 != 1,2 mod 9",
        lambda q: q.m > 0 and q.m % 6 == 0 and _u9(q) not in (1, 2),
        lambda q: 1, "+1"),
    Row("diff=1mod6", "t_3 d_3 = 1 mod 3",
        lambda q: q.m % 6 == 1 and _u3(q) == 1,
        lambda q: 1, "+1"),
    Row("diff=2mod6", "t_3 d_3 = 2 mod 3",
        lambda q: q.m % 6 == 2 and _u3(q) == 2,
        lambda q: 1, "+1"),
    Row("diff=3mod6", "t_3 d_3 = 7,8 mod 9",
        lambda q: q.m % 6 == 3 and _u9(q) in (7, 8),
        lambda q: 1, "+1"),
    Row("diff=4mod6", "t_3 d_3 = 1 mod 3",
        lambda q: q.m % 6 == 4 and _u3(q) == 1,
        lambda q: 1, "+1"),
    Row("diff=5mod6", "t_3 d_3 = 2 mod 3",
        lambda q: q.m % 6 == 5 and _u3(q) == 2,
        lambda q: 1, "+1"),
    Row("otherwise", "",
        lambda q: True,
        lambda q: -1, "-1"),
]

# --------------------------------------------------------------------- T8

T8 = [
    Row("diff<-4", "s_2 = 1,3,7,13,15 mod 16",
        lambda q: q.diff < -4 and q.s_u % 16 in (1, 3, 7, 13, 15),
        lambda q: -1, "-1"),
    Row("diff<-4", "s_2 = 5,9,11 mod 16",
        lambda q: q.diff < -4 and q.s_u % 16 in (5, 9, 11),
        lambda q: 1, "+1"),
    Row("diff=-4", "s_2 = 3,5,7,9,11,15 mod 16",
        lambda q: q.diff == -4 and q.s_u % 16 in (3, 5, 7, 9, 11, 15),
        lambda q: -1, "-1"),
    Row("diff=-4", "s_2 = 1,13 mod 16",
        lambda q: q.diff == -4 and q.s_u % 16 in (1, 13),
        lambda q: 1, "+1"),
    Row("diff=-2", "s_2 = 3 mod 4",
        lambda q: q.diff == -2 and q.s_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-2", "s_2 = 1,13 mod 16, t_2 = 1 mod 4",
        lambda q: q.diff == -2 and q.s_u % 16 in (1, 13) and q.t_u % 4 == 1,
        lambda q: 1, "+1"),
    Row("diff=-2", "s_2 = 5,9 mod 16, t_2 = 3 mod 4",
        lambda q: q.diff == -2 and q.s_u % 16 in (5, 9) and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-2", "otherwise",
        lambda q: q.diff == -2,
        lambda q: -1, "-1"),
    Row("diff=2", "t_2 = s_2 mod 4",
        lambda q: q.diff == 2 and q.t_u % 4 == q.s_u % 4,
        lambda q: 1, "+1"),
    Row("diff=2", "t_2 = -s_2 mod 4",
        lambda q: q.diff == 2 and q.t_u % 4 == -q.s_u % 4,
        lambda q: -1, "-1"),
    Row("diff=2mod4>2", "t_2 = 3 mod 4",
        lambda q: q.diff > 2 and q.diff % 4 == 2 and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=2mod4>2", "t_2 = 1 mod 4",
        lambda q: q.diff > 2 and q.diff % 4 == 2 and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=4", "t_2 = 1,5 mod 8",
        lambda q: q.diff == 4 and q.t_u % 8 in (1, 5),
        lambda q: 1, "+1"),
    Row("diff=4", "s_2 = 1 mod 4, t_2 = 3 mod 8",
        lambda q: q.diff == 4 and q.s_u % 4 == 1 and q.t_u % 8 == 3,
        lambda q: 1, "+1"),
    Row("diff=4", "s_2 = 3 mod 4, t_2 = 7 mod 8",
        lambda q: q.diff == 4 and q.s_u % 4 == 3 and q.t_u % 8 == 7,
        lambda q: 1, "+1"),
    Row("diff=4", "otherwise",
        lambda q: q.diff == 4,
        lambda q: -1, "-1"),
    Row("diff=0mod4>4", "t_2 = 7 mod 8",
        lambda q: q.diff > 4 and q.diff % 4 == 0 and q.t_u % 8 == 7,
        lambda q: 1, "+1"),
    Row("diff=0mod4>4", "otherwise",
        lambda q: q.diff > 4 and q.diff % 4 == 0,
        lambda q: -1, "-1"),
]

# --------------------------------------------------------------------- T9

T9 = [
    Row("diff=1", "(t_2, d_2) mod 8 in {(1;1,7),(3;5,7),(5;3,5),(7;1,3)}",
        lambda q: q.m == 1 and (q.t_u % 8, q.d_u % 8) in
        {(1, 1), (1, 7), (3, 5), (3, 7), (5, 3), (5, 5), (7, 1), (7, 3)},
        lambda q: 1, "+1"),
    Row("diff=1", "otherwise",
        lambda q: q.m == 1,
        lambda q: -1, "-1"),
    Row("diff=2", "t_2 d_2 = 3 mod 4",
        lambda q: q.m == 2 and q.t_u * q.d_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=2", "otherwise",
        lambda q: q.m == 2,
        lambda q: -1, "-1"),
    Row("diff=3", "(t_2, d_2) mod 8 in {(1;3,5),(3;1,3),(5;1,7),(7;5,7)}",
        lambda q: q.m == 3 and (q.t_u % 8, q.d_u % 8) in
        {(1, 3), (1, 5), (3, 1), (3, 3), (5, 1), (5, 7), (7, 5), (7, 7)},
        lambda q: 1, "+1"),
    Row("diff=3", "otherwise",
        lambda q: q.m == 3,
        lambda q: -1, "-1"),
    Row("diff=5", "(d_2, t_2) mod 8 in {(1;1,3,7),(3;1,3,5),(5;1,3,5),(7;1,5,7)}",
        lambda q: q.m == 5 and (q.d_u % 8, q.t_u % 8) in
        {(1, 1), (1, 3), (1, 7), (3, 1), (3, 3), (3, 5),
         (5, 1), (5, 3), (5, 5), (7, 1), (7, 5), (7, 7)},
        lambda q: 1, "+1"),
    Row("diff=5", "otherwise",
        lambda q: q.m == 5,
        lambda q: -1, "-1"),
    Row("otherwise", "",
        lambda q: True,
        lambda q: _sgn4(q.t_u), "t_2 mod 4"),
]

# -------------------------------------------------------------------- T10a

T10a = [
    Row("diff<=-2", "s_2 = 3,5 mod 8",
        lambda q: q.diff <= -2 and q.s_u % 8 in (3, 5),
        lambda q: -1, "-1"),
    Row("diff<=-2", "s_2 = 1,7 mod 8",
        lambda q: q.diff <= -2 and q.s_u % 8 in (1, 7),
        lambda q: 1, "+1"),
    Row("diff=-1", "s_2 = 1,7 mod 8, t_2 = 1 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (1, 7) and q.t_u % 4 == 1,
        lambda q: 1, "+1"),
    Row("diff=-1", "s_2 = 3,5 mod 8, t_2 = 3 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (3, 5) and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-1", "otherwise",
        lambda q: q.diff == -1,
        lambda q: -1, "-1"),
    Row("diff=1", "s_2 = 1 mod 4, t_2 = 1,7 mod 8",
        lambda q: q.diff == 1 and q.s_u % 4 == 1 and q.t_u % 8 in (1, 7),
        lambda q: 1, "+1"),
    Row("diff=1", "s_2 = 3 mod 4, t_2 = 1,3 mod 8",
        lambda q: q.diff == 1 and q.s_u % 4 == 3 and q.t_u % 8 in (1, 3),
        lambda q: 1, "+1"),
    Row("diff=1", "otherwise",
        lambda q: q.diff == 1,
        lambda q: -1, "-1"),
    Row("diff=5", "t_2 = 1,5,7 mod 8",
        lambda q: q.diff == 5 and q.t_u % 8 in (1, 5, 7),
        lambda q: 1, "+1"),
    Row("diff=5", "otherwise",
        lambda q: q.diff == 5,
        lambda q: -1, "-1"),
    Row("diff=1mod4>5", "t_2 = 7 mod 8",
        lambda q: q.diff > 5 and q.diff % 4 == 1 and q.t_u % 8 == 7,
        lambda q: 1, "+1"),
    Row("diff=1mod4>5", "otherwise",
        lambda q: q.diff > 5 and q.diff % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=3", "s_2 = 3 mod 4",
        lambda q: q.diff == 3 and q.s_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=3", "s_2 = 1 mod 4",
        lambda q: q.diff == 3 and q.s_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=3mod4>3", "t_2 = 3 mod 4",
        lambda q: q.diff > 3 and q.diff % 4 == 3 and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=3mod4>3", "t_2 = 1 mod 4",
        lambda q: q.diff > 3 and q.diff % 4 == 3 and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
]

# -------------------------------------------------------------------- T11

T11 = [
    Row("diff<-4", "s_2 = 1,3,5,9,13,15 mod 16",
        lambda q: q.diff < -4 and q.s_u % 16 in (1, 3, 5, 9, 13, 15),
        lambda q: 1, "+1"),
    Row("diff<-4", "s_2 = 7,11 mod 16",
        lambda q: q.diff < -4 and q.s_u % 16 in (7, 11),
        lambda q: -1, "-1"),
    Row("diff=-4", "s_2 = 1,5,7,9,11,13 mod 16",
        lambda q: q.diff == -4 and q.s_u % 16 in (1, 5, 7, 9, 11, 13),
        lambda q: 1, "+1"),
    Row("diff=-4", "s_2 = 3,15 mod 16",
        lambda q: q.diff == -4 and q.s_u % 16 in (3, 15),
        lambda q: -1, "-1"),
    Row("diff=-2", "s_2 = 3,7 mod 16, t_2 = 1 mod 4",
        lambda q: q.diff == -2 and q.s_u % 16 in (3, 7) and q.t_u % 4 == 1,
        lambda q: 1, "+1"),
    Row("diff=-2", "s_2 = 11,15 mod 16, t_2 = 3 mod 4",
        lambda q: q.diff == -2 and q.s_u % 16 in (11, 15) and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-2", "otherwise",
        lambda q: q.diff == -2,
        lambda q: -1, "-1"),
    Row("diff=0mod4>0", "t_2 = 3 mod 4",
        lambda q: q.diff > 0 and q.diff % 4 == 0 and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=0mod4>0", "t_2 = 1 mod 4",
        lambda q: q.diff > 0 and q.diff % 4 == 0 and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=2", "s_2 = 1 mod 8, t_2 = 3,5,7 mod 8",
        lambda q: q.diff == 2 and q.s_u % 8 == 1 and q.t_u % 8 in (3, 5, 7),
        lambda q: 1, "+1"),
    Row("diff=2", "s_2 = 5 mod 8, t_2 = 1,3,7 mod 8",
        lambda q: q.diff == 2 and q.s_u % 8 == 5 and q.t_u % 8 in (1, 3, 7),
        lambda q: 1, "+1"),
    Row("diff=2", "otherwise",
        lambda q: q.diff == 2,
        lambda q: -1, "-1"),
    Row("diff=6", "t_2 = 3 mod 4",
        lambda q: q.diff == 6 and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=6", "t_2 = 1 mod 4",
        lambda q: q.diff == 6 and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=2mod4>6", "t_2 = 7 mod 8",
        lambda q: q.diff > 6 and q.diff % 4 == 2 and q.t_u % 8 == 7,
        lambda q: 1, "+1"),
    Row("diff=2mod4>6", "otherwise",
        lambda q: q.diff > 6 and q.diff % 4 == 2,
        lambda q: -1, "-1"),
]

# -------------------------------------------------------------------- T12

T12 = [
    Row("diff=0,1,3,5mod6 !=1,3", "",
        lambda q: q.m > 4 and q.m % 6 in (0, 1, 3, 5),
        lambda q: _sgn4(q.t_u), "t_2 mod 4"),
    Row("diff=1", "t_2 = 1 mod 8",
        lambda q: q.m == 1 and q.t_u % 8 == 1,
        lambda q: 1, "+1"),
    Row("diff=1", "t_2 = 3 mod 8",
        lambda q: q.m == 1 and q.t_u % 8 == 3,
        lambda q: _sgn4(q.d_u), "d_2 mod 4"),
    Row("diff=1", "t_2 = 5 mod 8",
        lambda q: q.m == 1 and q.t_u % 8 == 5,
        lambda q: -1, "-1"),
    Row("diff=1", "t_2 = 7 mod 8",
        lambda q: q.m == 1 and q.t_u % 8 == 7,
        lambda q: -_sgn4(q.d_u), "-(d_2 mod 4)"),
    Row("diff=2", "t_2 = 1 mod 4",
        lambda q: q.m == 2 and q.t_u % 4 == 1,
        lambda q: 1, "+1"),
    Row("diff=2", "t_2 = 3 mod 8",
        lambda q: q.m == 2 and q.t_u % 8 == 3,
        lambda q: -_sgn4(q.d_u), "-(d_2 mod 4)"),
    Row("diff=2", "t_2 = 7 mod 8",
        lambda q: q.m == 2 and q.t_u % 8 == 7,
        lambda q: -1, "-1"),
    Row("diff=2,4mod6>4", "",
        lambda q: q.m > 4 and q.m % 6 in (2, 4),
        lambda q: -_sgn4(q.d_u), "-(d_2 mod 4)"),
    Row("diff=3", "",
        lambda q: q.m == 3,
        lambda q: -1, "-1"),
    Row("diff=4", "(t_2, d_2) mod 8 in {(1;5),(5;1),(3;1,5,7),(7;1,3,5)}",
        lambda q: q.m == 4 and (q.t_u % 8, q.d_u % 8) in
        {(1, 5), (5, 1), (3, 1), (3, 5), (3, 7), (7, 1), (7, 3), (7, 5)},
        lambda q: 1, "+1"),
    Row("diff=4", "otherwise",
        lambda q: q.m == 4,
        lambda q: -1, "-1"),
]

# -------------------------------------------------------------------- T10b

T10b = [
    Row("diff<=-2", "s_2 = 1,7 mod 8",
        lambda q: q.diff <= -2 and q.s_u % 8 in (1, 7),
        lambda q: -1, "-1"),
    Row("diff<=-2", "s_2 = 3,5 mod 8",
        lambda q: q.diff <= -2 and q.s_u % 8 in (3, 5),
        lambda q: 1, "+1"),
    Row("diff=-1", "s_2 = 1,3 mod 8, t_2 = 1 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (1, 3) and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=-1", "s_2 = 1,3 mod 8, t_2 = 3 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (1, 3) and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-1", "s_2 = 5,7 mod 8, t_2 = 3 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (5, 7) and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=-1", "s_2 = 5,7 mod 8, t_2 = 1 mod 4",
        lambda q: q.diff == -1 and q.s_u % 8 in (5, 7) and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=1", "t_2 = s_2, s_2+2 mod 8",
        lambda q: q.diff == 1 and q.t_u % 8 in (q.s_u % 8, (q.s_u + 2) % 8),
        lambda q: 1, "+1"),
    Row("diff=1", "otherwise",
        lambda q: q.diff == 1,
        lambda q: -1, "-1"),
    Row("diff=1mod4>1", "t_2 = 3 mod 4",
        lambda q: q.diff > 1 and q.diff % 4 == 1 and q.t_u % 4 == 3,
        lambda q: 1, "+1"),
    Row("diff=1mod4>1", "t_2 = 1 mod 4",
        lambda q: q.diff > 1 and q.diff % 4 == 1 and q.t_u % 4 == 1,
        lambda q: -1, "-1"),
    Row("diff=3", "s_2 = 1 mod 4, t_2 = 3,5 mod 8",
        lambda q: q.diff == 3 and q.s_u % 4 == 1 and q.t_u % 8 in (3, 5),
        lambda q: 1, "+1"),
    Row("diff=3", "s_2 = 3 mod 4, t_2 = 1,3 mod 8",
        lambda q: q.diff == 3 and q.s_u % 4 == 3 and q.t_u % 8 in (1, 3),
        lambda q: 1, "+1"),
    Row("diff=3", "otherwise",
        lambda q: q.diff == 3,
        lambda q: -1, "-1"),
    Row("diff=3mod4>3", "t_2 = 7 mod 8",
        lambda q: q.diff > 3 and q.diff % 4 == 3 and q.t_u % 8 == 7,
        lambda q: 1, "+1"),
    Row("diff=3mod4>3", "otherwise",
        lambda q: q.diff > 3 and q.diff % 4 == 3,
        lambda q: -1, "-1"),
]


TABLES: dict[str, list[Row]] = {
    "T3": T3, "T4": T4, "T5": T5, "T6a": T6a, "T6b": T6b, "T7": T7,
    "T8": T8, "T9": T9, "T10a": T10a, "T10b": T10b, "T11": T11, "T12": T12,
}

# Empty on purpose: corrections would go here as (table id, row ordinal) ->
# replacement Row, but divergences are reported by audit, never patched.
ERRATA_OVERLAY: dict[tuple[str, int], Row] = {}


def table_rows(table_id: str) -> list[Row]:
    rows = TABLES[table_id]
    if not ERRATA_OVERLAY:
        return rows
    return [
        ERRATA_OVERLAY.get((table_id, i), row) for i, row in enumerate(rows)
    ]


def transcription() -> dict[str, list[tuple[int, str, str]]]:
    """(ordinal, row id, printed value) per table, for audit references."""
    return {
        tid: [(i, row.row_id, row.vdesc) for i, row in enumerate(rows)]
        for tid, rows in TABLES.items()
    }


def dispatch_table(q: LocalProfile) -> str:
    p = q.p
    eq = q.nu_t != INF and q.nu_s == 2 * q.nu_t
    if p >= 5:
        return "T3"
    if p == 3:
        if q.nu_s % 2 == 1:
            return "T4"
        if q.nu_s % 4 == 0:
            return "T5" if eq else "T6a"
        return "T7" if eq else "T6b"
    if p == 2:
        r = q.nu_s % 4
        if r == 0:
            return "T9" if eq else "T8"
        if r == 1:
            return "T10a"
        if r == 2:
            return "T12" if eq else "T11"
        return "T10b"
    raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class RowHit:
    table: str
    cell: str
    row_id: str
    sign: Sign


def w_star_hit(p: int, s: int, t: int) -> RowHit:
    """Like w_star but reports which table row produced the sign."""
    q = profile(p, s, t)
    tid = dispatch_table(q)
    for row in table_rows(tid):
        if row.guard(q):
            return RowHit(tid, row.cell, row.row_id, row.value(q))
    raise TableFallthrough(
        f"no row of {tid} matched p={p}, s={s}, t={t} "
        f"(nu_s={q.nu_s}, nu_t={q.nu_t}, nu_d={q.nu_d})"
    )


def w_star(p: int, s: int, t: int) -> Sign:
    """The local sign w_p*(t) on the fibre at (s, t); always +1 or -1."""
    return w_star_hit(p, s, t).sign
