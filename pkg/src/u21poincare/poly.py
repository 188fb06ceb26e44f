"""Exact Laurent polynomials in ``t`` and truncated power series in ``x``.

Coefficients are Python ints, so nothing overflows.  Both types are
immutable; all operations return new values.
"""
from __future__ import annotations

import dataclasses
import json
from math import comb
from typing import Any, Iterable, Mapping, Sequence

from .errors import NonZeroRemainder, TruncationExceeded


@dataclasses.dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    An integer Laurent polynomial stored densely from its lowest exponent.

    ``coeffs[k]`` is the coefficient of ``t**(min_exp + k)``.  The zero
    polynomial is ``min_exp == 0`` with no coefficients.

    >>> LaurentPoly(-2, [1, 0, 1]) * LaurentPoly.monomial(2)
    LaurentPoly('1 + t^2')
    >>> LaurentPoly(3, [0, 0])
    LaurentPoly('0')
    """

    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, min_exp: int = 0, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            min_exp, cs = 0, []
        else:
            min_exp, cs = int(min_exp) + lo, cs[lo:hi]
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(exp, (coeff,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from ``{exponent: coefficient}``; repeated keys are impossible, zeros are dropped."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def binomial_power(cls, n: int) -> LaurentPoly:
        """``(1 + t)**n`` for ``n >= 0``."""
        if n < 0:
            raise ValueError(f"negative exponent {n}")
        return cls(0, [comb(n, k) for k in range(n + 1)])

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        """Highest exponent present; ``-1`` for the zero polynomial."""
        if not self.coeffs:
            return -1
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        k = exp - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending order."""
        return [(self.min_exp + k, c) for k, c in enumerate(self.coeffs) if c]

    def to_dict(self) -> dict[int, int]:
        return dict(self.terms())

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs, self.min_exp - lo):
            out[k] += c
        for k, c in enumerate(other.coeffs, other.min_exp - lo):
            out[k] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return LaurentPoly(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly(self.min_exp * n, (self.coeffs[0] ** -n,))
            raise ValueError("only monomial units have negative powers")
        result, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """
        Divide exactly, raising :class:`NonZeroRemainder` if ``den`` does not divide.

        >>> LaurentPoly(0, [1, 0, 0, -1]).exact_div(LaurentPoly(0, [1, -1]))
        LaurentPoly('1 + t + t^2')
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        n, d = len(self.coeffs), len(den.coeffs)
        if n < d:
            raise NonZeroRemainder(f"{self} is not divisible by {den}")
        rem = list(self.coeffs)
        lead = den.coeffs[0]
        q = [0] * (n - d + 1)
        # eliminate from the low end; the lowest coefficient of den is nonzero
        for k in range(n - d + 1):
            c = rem[k]
            if c == 0:
                continue
            qk, r = divmod(c, lead)
            if r:
                raise NonZeroRemainder(f"{self} is not divisible by {den}")
            q[k] = qk
            for j, dj in enumerate(den.coeffs):
                rem[k + j] -= qk * dj
        if any(rem[n - d + 1:]):
            raise NonZeroRemainder(f"{self} is not divisible by {den}")
        return LaurentPoly(self.min_exp - den.min_exp, q)

    def eval_int(self, t0: int) -> int:
        """
        Exact integer value at ``t = t0``.

        Negative exponents only have integer values at ``t0 = +-1``.
        """
        if self.min_exp < 0 and t0 not in (1, -1):
            raise ValueError(f"cannot evaluate a Laurent polynomial with negative exponents at t={t0}")
        if t0 == 1:
            return sum(self.coeffs)
        if t0 == -1:
            s = sum(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))
            return -s if self.min_exp % 2 else s
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc * t0 ** self.min_exp

    # -- rendering and serialization -------------------------------------

    def __str__(self) -> str:
        return self.render("text")

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def render(self, style: str = "text") -> str:
        """Ascending-power rendering, ``style`` is ``"text"`` or ``"latex"``."""
        if style not in ("text", "latex"):
            raise ValueError(f"unknown style {style!r}")
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if style == "latex":
                    var = "t" if e == 1 else f"t^{{{e}}}"
                    body = var if mag == 1 else f"{mag}\\,{var}"
                else:
                    var = "t" if e == 1 else f"t^{e}"
                    body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> dict[str, Any]:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> LaurentPoly:
        coeffs = [int(c) for c in obj["coeffs"]]
        p = cls(obj["min_exp"], coeffs)
        if p.min_exp != obj["min_exp"] or list(p.coeffs) != coeffs:
            raise ValueError(f"non-canonical polynomial encoding: {obj!r}")
        return p

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))


def _coerce(x: Any) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(0, (x,))
    return NotImplemented


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


@dataclasses.dataclass(frozen=True, init=False)
class SeriesX:
    """
    A power series in ``x`` truncated after ``x**trunc``, with Laurent
    polynomial coefficients.

    Products keep the smaller of the two truncations, so a value never
    claims more precision than it actually has.
    """

    trunc: int
    coeffs: tuple[LaurentPoly, ...]

    def __init__(self, trunc: int, coeffs: Sequence[LaurentPoly | int] = ()):
        if trunc < 0:
            raise ValueError(f"negative truncation {trunc}")
        cs = [_coerce(c) for c in coeffs[: trunc + 1]]
        if any(c is NotImplemented for c in cs):
            raise TypeError("series coefficients must be LaurentPoly or int")
        cs += [ZERO] * (trunc + 1 - len(cs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, p: LaurentPoly | int, trunc: int) -> SeriesX:
        return cls(trunc, [p])

    @classmethod
    def geometric(cls, ratio: LaurentPoly, trunc: int) -> SeriesX:
        """Expansion of ``1 / (1 - x * ratio)``."""
        cs, p = [], ONE
        for _ in range(trunc + 1):
            cs.append(p)
            p = p * ratio
        return cls(trunc, cs)

    @classmethod
    def binom_power(cls, inner: LaurentPoly, n: int, trunc: int) -> SeriesX:
        """Expansion of ``(1 + x * inner) ** n`` for ``n >= 0``."""
        if n < 0:
            raise ValueError(f"negative exponent {n}")
        cs, p = [], ONE
        for k in range(min(n, trunc) + 1):
            cs.append(comb(n, k) * p)
            p = p * inner
        return cls(trunc, cs)

    def coeff(self, i: int) -> LaurentPoly:
        if i < 0:
            raise ValueError(f"negative x-power {i}")
        if i > self.trunc:
            raise TruncationExceeded(f"x^{i} requested from a series truncated at x^{self.trunc}")
        return self.coeffs[i]

    def __neg__(self) -> SeriesX:
        return SeriesX(self.trunc, [-c for c in self.coeffs])

    def __add__(self, other: SeriesX) -> SeriesX:
        if not isinstance(other, SeriesX):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return SeriesX(n, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    def __sub__(self, other: SeriesX) -> SeriesX:
        if not isinstance(other, SeriesX):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: SeriesX | LaurentPoly | int) -> SeriesX:
        if isinstance(other, (LaurentPoly, int)):
            return SeriesX(self.trunc, [c * other for c in self.coeffs])
        if not isinstance(other, SeriesX):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            acc = ZERO
            for j in range(i + 1):
                if not a[j].is_zero() and not b[i - j].is_zero():
                    acc = acc + a[j] * b[i - j]
            out.append(acc)
        return SeriesX(n, out)

    def __rmul__(self, other: LaurentPoly | int) -> SeriesX:
        if isinstance(other, (LaurentPoly, int)):
            return self * other
        return NotImplemented
