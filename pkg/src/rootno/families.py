"""The two fibre families and their standard invariants.

F family: y^2 = x^3 + 3t x^2 + 3s x + s t, parameters (s, t).
L family: w y^2 = x^3 + 3(t^2+v) x^2 + 3s x + s(t^2+v), parameters (w, s, v),
fibre variable t. Multiplying the L model through by w^3 and absorbing w into
the coordinates turns the fibre at t into the F fibre at
(S, T) = (s w^2, w (t^2 + v)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def invariants_from_weierstrass(a2: Number, a4: Number, a6: Number):
    """(c4, c6, disc) of y^2 = x^3 + a2 x^2 + a4 x + a6."""
    b2 = 4 * a2
    b4 = 2 * a4
    b6 = 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc, rem = divmod(c4**3 - c6**2, 1728) if isinstance(c4, int) else (
        (c4**3 - c6**2) / 1728,
        0,
    )
    assert rem == 0
    return c4, c6, disc


def f_invariants(s: Number, t: Number):
    """(c4, c6, disc) of the fibre at (s, t), in closed form.

    c6 carries no factor of s: it is -1728 * t * (t^2 - s) exactly, which is
    what the generic Weierstrass computation on (a2, a4, a6) = (3t, 3s, st)
    yields (see the oracle test).
    """
    d = t * t - s
    return 144 * d, -1728 * t * d, -1728 * s * d * d


def l_to_f(w: Number, s: Number, v: Number, t: Number):
    """Reduce the L fibre (w, s, v; t) to F-family parameters (S, T)."""
    return s * w * w, w * (t * t + v)


def is_singular(s: Number, t: Number) -> bool:
    """True when the fibre at (s, t) is not an elliptic curve (disc = 0)."""
    return s == 0 or t * t == s
