"""Components of the U(2,1) and SU(2,1) representation spaces.

A component is labelled by the genus ``g`` and the degrees ``d1`` (rank 2
part) and ``d2`` (line part) of the corresponding Higgs bundle.  Inputs
with ``3*d2 - d < 0`` are dualized and tensored into the normalized range
before computing; reports keep the caller's labels.
"""
from __future__ import annotations

import dataclasses
from typing import Any

from . import critical
from .critical import CriticalReport
from .errors import EulerMismatch, GenusTooSmall, NegativeCoefficient, NotCoprime, ToledoViolated
from .poly import LaurentPoly
from .symprod import binom


@dataclasses.dataclass(frozen=True)
class ModuliParams:
    g: int
    d1: int
    d2: int
    fixed_det: bool = False

    @property
    def d(self) -> int:
        return self.d1 + self.d2

    def to_json_obj(self) -> dict[str, Any]:
        return {"g": self.g, "d1": self.d1, "d2": self.d2, "fixed_det": self.fixed_det}


@dataclasses.dataclass(frozen=True)
class NormalizedParams:
    """Parameters with ``3*d2 - d > 0`` and the transformation that produced them."""

    g: int
    d: int
    d2: int
    dualized: bool = False
    tensor_shift: int = 0

    @property
    def d1(self) -> int:
        return self.d - self.d2

    @property
    def length3_bound(self) -> int:
        return critical.length3_bound(self.g, self.d, self.d2)

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "g": self.g,
            "d": self.d,
            "d2": self.d2,
            "dualized": self.dualized,
            "tensor_shift": self.tensor_shift,
        }


def validate(p: ModuliParams) -> NormalizedParams:
    """
    Check that ``p`` labels a smooth non-empty component and normalize it.

    >>> validate(ModuliParams(2, 1, 0))
    NormalizedParams(g=2, d=2, d2=1, dualized=True, tensor_shift=1)
    """
    if p.g < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {p.g}")
    d = p.d
    if d % 3 == 0:
        raise NotCoprime(f"d = d1 + d2 = {d} is divisible by 3")
    if abs(p.d1 - 2 * p.d2) > 3 * p.g - 3:
        raise ToledoViolated(f"|d1 - 2*d2| = {abs(p.d1 - 2 * p.d2)} exceeds 3g - 3 = {3 * p.g - 3}")
    if 3 * p.d2 - d > 0:
        n = NormalizedParams(p.g, d, p.d2)
    else:
        # dual has degrees (-d, -d2); tensor by degree k to bring d into {1, 2}
        k = -((-d - 1) // 3)
        n = NormalizedParams(p.g, -d + 3 * k, -p.d2 + k, dualized=True, tensor_shift=k)
    critical.check_normalized(n.g, n.d, n.d2)
    return n


def component_range(g: int, d: int) -> tuple[int, int]:
    lo = -((3 * g - 3 - d) // 3)  # ceil((d - 3g + 3) / 3)
    hi = (d + 3 * g - 3) // 3
    return lo, hi


def enumerate_components(g: int, d: int) -> list[int]:
    """
    The values of ``d2`` labelling the components of total degree ``d``.

    >>> enumerate_components(3, 1)
    [-1, 0, 1, 2]
    """
    if g < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {g}")
    if d % 3 == 0:
        raise NotCoprime(f"degree d={d} is divisible by 3")
    lo, hi = component_range(g, d)
    return list(range(lo, hi + 1))


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    passed: bool

    def to_json_obj(self) -> dict[str, Any]:
        return {"name": self.name, "pass": self.passed}


@dataclasses.dataclass(frozen=True)
class ComponentReport:
    params: ModuliParams
    normalized: NormalizedParams
    criticals: tuple[CriticalReport, ...]
    poincare: LaurentPoly
    euler: int
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "params": self.params.to_json_obj(),
            "normalized": self.normalized.to_json_obj(),
            "criticals": [c.to_json_obj() for c in self.criticals],
            "poincare": self.poincare.to_json_obj(),
            "euler": str(self.euler),
            "checks": [c.to_json_obj() for c in self.checks],
        }

    @classmethod
    def from_json_obj(cls, obj: dict[str, Any]) -> ComponentReport:
        params = ModuliParams(**obj["params"])
        return cls(
            params=params,
            normalized=NormalizedParams(**obj["normalized"]),
            criticals=tuple(CriticalReport.from_json_obj(c, params.g) for c in obj["criticals"]),
            poincare=LaurentPoly.from_json_obj(obj["poincare"]),
            euler=int(obj["euler"]),
            checks=tuple(Check(c["name"], c["pass"]) for c in obj["checks"]),
        )


def assemble(criticals: list[CriticalReport] | tuple[CriticalReport, ...]) -> LaurentPoly:
    """Sum of ``t**morse_index * P_t(N)`` over the critical submanifolds."""
    total = LaurentPoly()
    for c in criticals:
        total = total + c.poincare.shift(c.morse_index)
    return total


def euler_fixed_closed_form(p: ModuliParams | NormalizedParams) -> int:
    """
    Euler characteristic of a fixed determinant component, summed over the
    length-3 submanifolds.

    >>> euler_fixed_closed_form(ModuliParams(2, 1, 0, fixed_det=True))
    -324
    """
    n = validate(p) if isinstance(p, ModuliParams) else p
    g, d, d2 = n.g, n.d, n.d2
    total = sum(
        binom(2 * g - 2, m2 + 3 * d2 - d) * binom(2 * g - 2, m2)
        for m2 in range(n.length3_bound + 1)
    )
    return 3 ** (2 * g) * (-1) ** ((d + d2) % 2) * total


def _component_checks(n: NormalizedParams, fixed: bool, crits: list[CriticalReport],
                      poincare: LaurentPoly, euler: int) -> list[Check]:
    g = n.g
    checks = [
        Check("constant_term_one", poincare.coeff(0) == 1 and poincare.min_exp == 0),
        Check("nonnegative_coefficients", all(c >= 0 for c in poincare.coeffs)),
        Check("resummation", assemble(crits) == poincare),
        Check("length2_index_zero", crits[0].morse_index == 0),
    ]
    chains_ok = index_ok = dim_ok = flow_ok = True
    # fixed determinant critical sets are fibres over the Jacobian
    fibre_drop = g if fixed else 0
    for c in crits:
        flow_ok &= c.dim_downflow - c.dim_critical == critical.morse_index(c.chain) // 2
        dim_ok &= c.poincare.max_exp == 2 * (c.dim_critical - fibre_drop)
        chains_ok &= c.chain.total_rank == 3 and c.chain.length in (2, 3)
        if c.kind == "N3":
            index_ok &= critical.morse_index(c.chain) == c.morse_index
            dim_ok &= c.dim_critical == c.m1 + c.m2 + g
    checks += [
        Check("chain_shape", chains_ok),
        Check("morse_index_chain_vs_m2", index_ok),
        Check("dim_critical", dim_ok),
        Check("downflow_identity", flow_ok),
    ]
    if fixed:
        checks.append(Check("euler_closed_form", euler == euler_fixed_closed_form(n)))
    else:
        checks.append(Check("euler_zero", euler == 0))
    return checks


def component_from_normalized(p: ModuliParams, n: NormalizedParams) -> ComponentReport:
    crits = critical.critical_reports(n.g, n.d, n.d2, p.fixed_det)
    poincare = assemble(crits)
    euler = poincare.eval_int(-1)
    checks = _component_checks(n, p.fixed_det, crits, poincare, euler)
    return ComponentReport(p, n, tuple(crits), poincare, euler, tuple(checks))


def component_poincare(p: ModuliParams) -> ComponentReport:
    """
    Poincaré polynomial and critical data of one component.

    Raises a validation error for labels that are not a smooth non-empty
    component, and an internal error when a result breaks a hard identity
    (negative coefficients, the two Euler characteristic routes disagreeing).
    """
    n = validate(p)
    report = component_from_normalized(p, n)
    if any(c < 0 for c in report.poincare.coeffs) or report.poincare.min_exp < 0:
        raise NegativeCoefficient(f"component {p} has Poincaré polynomial {report.poincare}")
    if p.fixed_det and report.euler != euler_fixed_closed_form(n):
        raise EulerMismatch(
            f"component {p}: t=-1 gives {report.euler}, closed form gives {euler_fixed_closed_form(n)}"
        )
    return report


def jacobian_poincare(g: int) -> LaurentPoly:
    return LaurentPoly.binomial_power(2 * g)


def torsion_action_defect(g: int, d1: int, d2: int) -> LaurentPoly:
    """
    ``P_t`` of the component minus ``(1 + t)^(2g)`` times ``P_t`` of its
    fixed determinant fibre.  Nonzero exactly when the 3-torsion of the
    Jacobian acts non-trivially on the fibre's rational cohomology.
    """
    full = component_poincare(ModuliParams(g, d1, d2, fixed_det=False)).poincare
    fibre = component_poincare(ModuliParams(g, d1, d2, fixed_det=True)).poincare
    return full - jacobian_poincare(g) * fibre


def torsion_defect_by_critical(g: int, d1: int, d2: int) -> list[tuple[str, int | None, LaurentPoly]]:
    """The torsion defect split over the critical submanifolds, as ``(kind, m2, defect)``."""
    n = validate(ModuliParams(g, d1, d2))
    full = critical.critical_reports(n.g, n.d, n.d2, fixed=False)
    fibre = critical.critical_reports(n.g, n.d, n.d2, fixed=True)
    jac = jacobian_poincare(g)
    return [
        (a.kind, a.m2, (a.poincare - jac * b.poincare).shift(a.morse_index))
        for a, b in zip(full, fibre)
    ]
