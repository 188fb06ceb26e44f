"""Poincaré polynomials of symmetric products of a genus ``g`` curve.

``P_t(S^m X)`` is the coefficient of ``x^m`` in Macdonald's generating
function ``(1 + x t)^(2g) / ((1 - x)(1 - x t^2))``.
"""
from __future__ import annotations

import dataclasses
import math
import threading

from .poly import T, LaurentPoly, SeriesX


@dataclasses.dataclass(frozen=True)
class SymProdQuery:
    m: int
    g: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"symmetric product order must be >= 0, got {self.m}")
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k`` is outside ``[0, n]``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def macdonald_series(g: int, trunc: int) -> SeriesX:
    """The generating function expanded to ``x**trunc``."""
    return (
        SeriesX.binom_power(T, 2 * g, trunc)
        * SeriesX.geometric(LaurentPoly.one(), trunc)
        * SeriesX.geometric(T**2, trunc)
    )


class _MacdonaldTable:
    # per-genus list of P_t(S^m X) for m = 0..len-1, grown on demand
    def __init__(self):
        self._lock = threading.Lock()
        self._rows: dict[int, tuple[LaurentPoly, ...]] = {}

    def get(self, m: int, g: int) -> LaurentPoly:
        row = self._rows.get(g, ())
        if m < len(row):
            return row[m]
        with self._lock:
            row = self._rows.get(g, ())
            if m >= len(row):
                trunc = max(m, 2 * len(row), 8)
                row = macdonald_series(g, trunc).coeffs
                self._rows[g] = row
        return row[m]

    def clear(self):
        with self._lock:
            self._rows.clear()


_table = _MacdonaldTable()


def macdonald_poincare(m: int | SymProdQuery, g: int | None = None) -> LaurentPoly:
    """
    Poincaré polynomial of the ``m``-th symmetric product of a genus ``g`` curve.

    >>> macdonald_poincare(2, 2)
    LaurentPoly('1 + 4t + 7t^2 + 4t^3 + t^4')
    """
    q = m if isinstance(m, SymProdQuery) else SymProdQuery(m, g)
    return _table.get(q.m, q.g)


def macdonald_euler_check(m: int | SymProdQuery, g: int | None = None) -> bool:
    """Whether ``P_t(S^m X)`` at ``t = -1`` equals ``(-1)^m C(2g-2, m)``."""
    q = m if isinstance(m, SymProdQuery) else SymProdQuery(m, g)
    lhs = macdonald_poincare(q).eval_int(-1)
    return lhs == (-1) ** q.m * binom(2 * q.g - 2, q.m)
