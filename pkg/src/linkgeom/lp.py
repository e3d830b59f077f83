"""Exact linear programming front end.

``maximize`` accepts rational (or Q(sqrt 3)) data.  Rational problems are
scaled row by row to integers and handed to the integer tableau kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import _accel
from .scalar import QuadSqrt3

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"
_STATUS = {_accel.OPTIMAL: OPTIMAL, _accel.INFEASIBLE: INFEASIBLE, _accel.UNBOUNDED: UNBOUNDED}


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: object = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _int_row(row):
    """Integer multiple of a rational row and the (positive) factor used."""
    fr = [Fraction(v) for v in row]
    s = lcm(*(v.denominator for v in fr)) if fr else 1
    return [int(v * s) for v in fr], s


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x  subject to  A x = b, x >= 0, solved exactly (Bland's rule)."""
    quad = any(isinstance(v, QuadSqrt3) for v in c) or any(
        isinstance(v, QuadSqrt3) for row in A for v in row) or any(isinstance(v, QuadSqrt3) for v in b)
    if quad:
        st, x, D, z = _accel.lp_max_field(
            [list(r) for r in A], list(b), list(c))
        if st != _accel.OPTIMAL:
            return LPResult(_STATUS[st])
        return LPResult(OPTIMAL, tuple(v / D for v in x), z / D)
    rows = [_int_row(list(r) + [bi])[0] for r, bi in zip(A, b)]
    cc, cscale = _int_row(c)
    st, x, D, z = _accel.lp_max_int([r[:-1] for r in rows], [r[-1] for r in rows], cc)
    if st != _accel.OPTIMAL:
        return LPResult(_STATUS[st])
    return LPResult(OPTIMAL, tuple(Fraction(v, D) for v in x), Fraction(z, D) / cscale)


def feasible_point(A: Sequence[Sequence], b: Sequence):
    """Some x >= 0 with A x = b, or None."""
    n = len(A[0]) if A else 0
    res = maximize([0] * n, A, b)
    return res.x if res.status == OPTIMAL else None
