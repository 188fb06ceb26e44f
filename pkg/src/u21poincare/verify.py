"""Sweeps of the consistency checks over ranges of genus and degree."""
from __future__ import annotations

import concurrent.futures
import dataclasses
import os
from collections import Counter

from . import critical
from .errors import U21Error
from .moduli import ComponentReport, ModuliParams, component_from_normalized, enumerate_components, validate
from .poly import LaurentPoly
from .symprod import binom, macdonald_euler_check, macdonald_poincare

THREADS_ENV = "U21_THREADS"
MACDONALD_MAX_M = 20


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    g_range: tuple[int, int]
    d_range: tuple[int, int]
    fixed_det: bool = False

    def __post_init__(self):
        for name, (lo, hi) in (("genus", self.g_range), ("degree", self.d_range)):
            if lo > hi:
                raise ValueError(f"empty {name} range {lo}..{hi}")
        if self.g_range[0] < 2:
            raise ValueError(f"genus range must start at >= 2, got {self.g_range[0]}")


@dataclasses.dataclass
class SweepResult:
    spec: SweepSpec
    counts: dict[str, Counter] = dataclasses.field(default_factory=dict)
    failures: list[tuple[int, int | None, int | None, str]] = dataclasses.field(default_factory=list)
    skipped: list[tuple[int, int]] = dataclasses.field(default_factory=list)
    components: list[ComponentReport] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, g: int, d: int | None = None, d2: int | None = None):
        self.counts.setdefault(name, Counter())["pass" if passed else "fail"] += 1
        if not passed:
            self.failures.append((g, d, d2, name))


def default_threads() -> int:
    value = os.environ.get(THREADS_ENV)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def macdonald_checks(g: int, max_m: int = MACDONALD_MAX_M) -> list[tuple[str, bool]]:
    out = []
    for m in range(max(max_m, 4 * g - 4) + 1):
        p = macdonald_poincare(m, g)
        shape = (
            p.min_exp == 0
            and p.max_exp == 2 * m
            and p.is_palindromic()
            and all(c > 0 for c in p.coeffs)
        )
        out.append(("macdonald_palindromic", shape))
        out.append(("macdonald_euler", macdonald_euler_check(m, g)))
    return out


def component_checks(g: int, d: int, d2: int, fixed: bool) -> tuple[ComponentReport | None, list[tuple[str, bool]]]:
    """Run every check for one component; internal errors become failed checks."""
    p = ModuliParams(g, d - d2, d2, fixed)
    n = validate(p)
    try:
        report = component_from_normalized(p, n)
    except U21Error as exc:
        return None, [(f"internal:{type(exc).__name__}", False)]
    out = [(c.name, c.passed) for c in report.checks]

    # relabelling by duality or by tensoring must not change anything
    dual = component_from_normalized(ModuliParams(g, -p.d1, -p.d2, fixed), validate(ModuliParams(g, -p.d1, -p.d2, fixed)))
    shifted_p = ModuliParams(g, p.d1 + 2, p.d2 + 1, fixed)
    shifted = component_from_normalized(shifted_p, validate(shifted_p))
    out.append(("duality_invariance", dual.poincare == report.poincare))
    out.append(("tensor_invariance", shifted.poincare == report.poincare))

    jac = LaurentPoly.binomial_power(2 * g)
    try:
        n2_full = critical.n2_poincare(n.g, n.d, n.d2, fixed=False)
        n2_fibre = critical.n2_poincare(n.g, n.d, n.d2, fixed=True)
        out.append(("n2_exact_division", True))
        out.append(("length2_torsion_trivial", n2_full == jac * n2_fibre))
        out.append(("n2_fixed_euler_zero", n2_fibre.eval_int(-1) == 0))
    except U21Error:
        out.append(("n2_exact_division", False))

    for c in report.criticals:
        if c.kind != "N3":
            continue
        out.append(("length3_index_positive", c.morse_index >= 2))
        if fixed:
            expected = 3 ** (2 * g) * (-1) ** (c.m1 + c.m2) * binom(2 * g - 2, c.m1) * binom(2 * g - 2, c.m2)
            out.append(("n3_fixed_euler", c.poincare.eval_int(-1) == expected))
        else:
            out.append(("n3_palindromic", c.poincare.is_palindromic()))
            out.append(("n3_euler_zero", c.poincare.eval_int(-1) == 0))
    return report, out


def _unit(g: int, d: int, fixed: bool):
    rows = []
    for d2 in enumerate_components(g, d):
        report, checks = component_checks(g, d, d2, fixed)
        rows.append((d2, report, checks))
    return rows


def run_sweep(spec: SweepSpec, threads: int | None = None) -> SweepResult:
    """Check every component in the sweep; results come back in (g, d, d2) order."""
    result = SweepResult(spec)
    g_lo, g_hi = spec.g_range
    d_lo, d_hi = spec.d_range
    units = []
    for g in range(g_lo, g_hi + 1):
        for d in range(d_lo, d_hi + 1):
            if d % 3 == 0:
                result.skipped.append((g, d))
            else:
                units.append((g, d))

    workers = threads or default_threads()
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        macdonald = {g: pool.submit(macdonald_checks, g) for g in range(g_lo, g_hi + 1)}
        futures = {u: pool.submit(_unit, u[0], u[1], spec.fixed_det) for u in units}
        for g in range(g_lo, g_hi + 1):
            for name, passed in macdonald[g].result():
                result.record(name, passed, g)
        for g, d in units:
            for d2, report, checks in futures[(g, d)].result():
                for name, passed in checks:
                    result.record(name, passed, g, d, d2)
                if report is not None:
                    result.components.append(report)
    return result
