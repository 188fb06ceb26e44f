"""Critical submanifolds of the Higgs field norm on a U(2,1) component.

A critical point is a chain ``F_1 -> F_2 -> ... -> F_m`` of holomorphic
bundles, described here only by the ranks and degrees of the ``F_i``.
For U(2,1) with ``(d, 3) = 1`` the chains have length 2 (a single
submanifold, a moduli space of triples) or length 3 (one submanifold per
admissible ``m2``, a product of two symmetric products and a Jacobian).

All functions expect normalized parameters: ``3*d2 - d > 0`` and
``d/3 <= d2 <= d/3 + g - 1``.
"""
from __future__ import annotations

import dataclasses
from typing import Any, Sequence

from .errors import InternalError, NegativeCoefficient, NotCoprime, NotNormalized
from .poly import T, LaurentPoly, SeriesX
from .symprod import binom, macdonald_poincare, macdonald_series


@dataclasses.dataclass(frozen=True)
class ChainType:
    """Ranks and degrees of the pieces of a chain on a genus ``g`` curve."""

    steps: tuple[tuple[int, int], ...]
    g: int

    def __post_init__(self):
        steps = tuple((int(r), int(d)) for r, d in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) < 2:
            raise ValueError(f"a chain has length >= 2, got {len(steps)}")
        if any(r <= 0 for r, _ in steps):
            raise ValueError(f"chain ranks must be positive: {steps}")
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")

    @classmethod
    def from_lists(cls, ranks: Sequence[int], degrees: Sequence[int], g: int) -> ChainType:
        if len(ranks) != len(degrees):
            raise ValueError("ranks and degrees differ in length")
        return cls(tuple(zip(ranks, degrees)), g)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def total_rank(self) -> int:
        return sum(r for r, _ in self.steps)

    def to_json_obj(self) -> list[list[int]]:
        return [[r, d] for r, d in self.steps]


def u_rank_deg(c: ChainType, k: int) -> tuple[int, int]:
    """Rank and degree of ``U_k``, the sum of ``Hom(F_j, F_i)`` over ``i - j = k``."""
    rank = deg = 0
    for j, (rj, dj) in enumerate(c.steps):
        i = j + k
        if 0 <= i < c.length:
            ri, di = c.steps[i]
            rank += rj * ri
            deg += rj * di - ri * dj
    return rank, deg


def _weighted(c: ChainType, k: int) -> int:
    rank, deg = u_rank_deg(c, k)
    sign = 1 if (k + 1) % 2 == 0 else -1
    return (c.g - 1) * rank + sign * deg


def morse_index(c: ChainType) -> int:
    return 2 * sum(_weighted(c, k) for k in range(2, c.length))


def dim_critical(c: ChainType) -> int:
    """Complex dimension of the critical submanifold through the chain."""
    r0, d0 = u_rank_deg(c, 0)
    r1, d1 = u_rank_deg(c, 1)
    return 1 + (c.g - 1) * (r1 + r0) + d1 - d0


def dim_downflow(c: ChainType) -> int:
    """Complex dimension of the downward Morse flow from the critical submanifold."""
    return 1 + sum(_weighted(c, k) for k in range(c.length))


def length3_bound(g: int, d: int, d2: int) -> int:
    """Largest admissible ``m2``; the length-3 submanifolds are ``m2 = 0..bound``."""
    return (2 * d) // 3 - 2 * d2 + 2 * g - 2


def check_normalized(g: int, d: int, d2: int) -> None:
    if d % 3 == 0:
        raise NotCoprime(f"degree d={d} is divisible by 3")
    if 3 * d2 - d <= 0:
        raise NotNormalized(f"3*d2 - d = {3 * d2 - d} is not positive")
    if 3 * d2 > d + 3 * (g - 1):
        raise NotNormalized(f"d2={d2} exceeds d/3 + g - 1 for d={d}, g={g}")


@dataclasses.dataclass(frozen=True)
class Length3Invariants:
    """Degrees of the three line bundles of a length-3 chain and the two divisor degrees."""

    delta1: int
    delta2: int
    delta3: int
    m1: int
    m2: int
    g: int
    d: int
    d2: int

    def chain(self) -> ChainType:
        return ChainType(((1, self.delta1), (1, self.delta2), (1, self.delta3)), self.g)


def enumerate_length3(g: int, d: int, d2: int) -> list[Length3Invariants]:
    """
    All length-3 critical submanifolds of the normalized component ``(g, d, d2)``.

    >>> [(x.m1, x.m2, x.delta1, x.delta3) for x in enumerate_length3(2, 1, 1)]
    [(2, 0, 1, -1)]
    """
    check_normalized(g, d, d2)
    out = []
    for m2 in range(length3_bound(g, d, d2) + 1):
        m1 = m2 + 3 * d2 - d
        delta1 = 2 * g - 2 + d2 - m1
        delta3 = m2 - 2 * g + 2 + d2
        inv = Length3Invariants(delta1, d2, delta3, m1, m2, g, d, d2)
        _check_length3(inv)
        out.append(inv)
    return out


def _check_length3(inv: Length3Invariants) -> None:
    # implied inequalities, kept as consistency checks
    g = inv.g
    problems = []
    if inv.m1 != 2 * g - 2 + inv.delta2 - inv.delta1 or inv.m2 != 2 * g - 2 + inv.delta3 - inv.delta2:
        problems.append("divisor degrees disagree with line bundle degrees")
    if inv.delta1 + inv.delta2 + inv.delta3 != inv.d:
        problems.append("degrees do not sum to d")
    if inv.m1 < 0 or inv.m2 < 0:
        problems.append("negative divisor degree")
    if not 3 * (inv.delta2 + inv.delta3) < 2 * inv.d:
        problems.append("F2 + F3 destabilizes")
    if not 3 * inv.delta3 < inv.d:
        problems.append("F3 destabilizes")
    if problems:
        raise InternalError(f"inadmissible length-3 chain {inv}: {'; '.join(problems)}")


def morse_index_length3(g: int, d: int, d2: int, m2: int) -> int:
    return 2 * (5 * g - 5 + d - 3 * d2 - 2 * m2)


def _require_nonnegative(p: LaurentPoly, what: str) -> LaurentPoly:
    if p.min_exp < 0 or any(c < 0 for c in p.coeffs):
        raise NegativeCoefficient(f"{what} has a negative exponent or coefficient: {p}")
    return p


def n2_bracket(g: int, exponent: int, i: int) -> SeriesX:
    """
    ``t^exponent/(x t^4 - 1) - t^(2i+2)/(x - t^2)`` expanded about ``x = 0`` to ``x**i``.

    The first term is ``-t^exponent * sum (x t^4)^k`` and the second is
    ``t^(2i) * sum (x t^-2)^k``.
    """
    first = SeriesX.geometric(T**4, i) * LaurentPoly.monomial(exponent, -1)
    second = SeriesX.geometric(LaurentPoly.monomial(-2), i) * LaurentPoly.monomial(2 * i)
    return first + second


def n2_poincare(g: int, d: int, d2: int, fixed: bool = False) -> LaurentPoly:
    """
    Poincaré polynomial of the length-2 critical submanifold.

    >>> n2_poincare(2, 1, 1, fixed=True)
    LaurentPoly('1 + 4t + 7t^2 + 8t^3 + 8t^4 + 8t^5 + 7t^6 + 4t^7 + t^8')
    """
    check_normalized(g, d, d2)
    i = length3_bound(g, d, d2)
    if fixed:
        exponent = 10 * g - 10 + 2 * d - 6 * d2 - 4 * i
        prefactor = LaurentPoly.binomial_power(2 * g)
    else:
        deg_v = 4 * g - 4 + d - 3 * d2
        exponent = 2 * deg_v + 2 * g - 2 - 4 * i
        prefactor = LaurentPoly.binomial_power(4 * g)
    if i < 0:
        raise NotNormalized(f"x-power {i} is negative")
    series = n2_bracket(g, exponent, i) * macdonald_series(g, i)
    numerator = prefactor * series.coeff(i)
    result = numerator.exact_div(1 - T**2)
    return _require_nonnegative(result, "length-2 Poincaré polynomial")


def n3_poincare(g: int, inv: Length3Invariants, fixed: bool = False) -> LaurentPoly:
    """Poincaré polynomial of the length-3 critical submanifold ``inv``."""
    sym = macdonald_poincare(inv.m1, g) * macdonald_poincare(inv.m2, g)
    if not fixed:
        return LaurentPoly.binomial_power(2 * g) * sym
    cover = binom(2 * g - 2, inv.m1) * binom(2 * g - 2, inv.m2) * (3 ** (2 * g) - 1)
    return sym + LaurentPoly.monomial(inv.m1 + inv.m2, cover)


@dataclasses.dataclass(frozen=True)
class CriticalReport:
    """Everything known about one critical submanifold."""

    kind: str  # "N2" or "N3"
    m1: int | None
    m2: int | None
    chain: ChainType
    morse_index: int
    dim_critical: int
    dim_downflow: int
    poincare: LaurentPoly
    triple: dict[str, int] | None = None

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "m1": self.m1,
            "m2": self.m2,
            "chain": self.chain.to_json_obj(),
            "morse_index": self.morse_index,
            "dim_critical": self.dim_critical,
            "dim_downflow": self.dim_downflow,
            "poincare": self.poincare.to_json_obj(),
            "triple": self.triple,
        }

    @classmethod
    def from_json_obj(cls, obj: dict[str, Any], g: int) -> CriticalReport:
        return cls(
            kind=obj["kind"],
            m1=obj["m1"],
            m2=obj["m2"],
            chain=ChainType(tuple(tuple(s) for s in obj["chain"]), g),
            morse_index=obj["morse_index"],
            dim_critical=obj["dim_critical"],
            dim_downflow=obj["dim_downflow"],
            poincare=LaurentPoly.from_json_obj(obj["poincare"]),
            triple=obj["triple"],
        )


def length2_chain(g: int, d: int, d2: int) -> ChainType:
    # F1 = E2 (the line bundle), F2 = E1 (rank 2), Higgs field b: E2 -> E1 K
    return ChainType(((1, d2), (2, d - d2)), g)


def length2_report(g: int, d: int, d2: int, fixed: bool = False) -> CriticalReport:
    chain = length2_chain(g, d, d2)
    triple = {
        "alpha": 2 * g - 2,
        "rank_e1": 2,
        "rank_e2": 1,
        "deg_e1": 4 * g - 4 + d - d2,
        "deg_e2": d2,
    }
    return CriticalReport(
        kind="N2",
        m1=None,
        m2=None,
        chain=chain,
        morse_index=morse_index(chain),
        dim_critical=dim_critical(chain),
        dim_downflow=dim_downflow(chain),
        poincare=n2_poincare(g, d, d2, fixed),
        triple=triple,
    )


def length3_report(inv: Length3Invariants, fixed: bool = False) -> CriticalReport:
    chain = inv.chain()
    return CriticalReport(
        kind="N3",
        m1=inv.m1,
        m2=inv.m2,
        chain=chain,
        morse_index=morse_index_length3(inv.g, inv.d, inv.d2, inv.m2),
        dim_critical=dim_critical(chain),
        dim_downflow=dim_downflow(chain),
        poincare=n3_poincare(inv.g, inv, fixed),
    )


def critical_reports(g: int, d: int, d2: int, fixed: bool = False) -> list[CriticalReport]:
    """The length-2 submanifold followed by the length-3 ones in increasing ``m2``."""
    reports = [length2_report(g, d, d2, fixed)]
    reports += [length3_report(inv, fixed) for inv in enumerate_length3(g, d, d2)]
    return reports
