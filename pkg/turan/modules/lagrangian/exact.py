"""
精确闭式与符号推导 (sympy)

至多两个非平凡轨道的集族可以化为单变量问题：t 为轨道 A (含最小顶点) 上的总权重，
轨道内均分，λ = max_{t∈[0,1]} p(t)。候选点为 p′(t) 在 (0,1) 内的实根与两个端点。
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import sympy as sp

from ...core.config import settings
from ...core.errors import PreconditionError
from ...core.report import build_check
from ..families.catalog import build_named, get_entry
from ..hypergraph.canonical import automorphism_orbits
from ..hypergraph.structures import Family
from .optimizer import LagrangianOptions, default_options, maximize

DEFAULT_DIGITS = 40


def evaluate_exact(expr: Any, digits: int = DEFAULT_DIGITS) -> sp.Float:
    """任意精度求值 (有理数目标保持精确直到最后一步)"""
    return sp.N(sp.sympify(expr), digits)


@dataclass
class OrbitReduction:
    orbits: List[List[int]]
    variable: sp.Symbol
    polynomial: sp.Expr
    critical_points: List[sp.Expr]
    critical_values: List[sp.Expr]
    maximum: sp.Expr
    argmax: sp.Expr

    def to_dict(self) -> Dict[str, Any]:
        return {
            "orbits": self.orbits,
            "polynomial": sp.sstr(self.polynomial),
            "critical_points": [sp.sstr(c) for c in self.critical_points],
            "critical_values": [sp.sstr(v) for v in self.critical_values],
            "maximum": sp.sstr(self.maximum),
            "maximum_float": float(self.maximum),
            "argmax": sp.sstr(self.argmax),
        }


def symbolic_lagrangian(family: Family) -> OrbitReduction:
    active = set(family.non_isolated())
    orbits = [sorted(p) for p in automorphism_orbits(family).parts if active & p]
    if not orbits:
        raise PreconditionError("family has no members")
    if len(orbits) > 2:
        raise PreconditionError(f"symbolic reduction supports at most 2 orbits, got {len(orbits)}")
    t = sp.Symbol("t", nonnegative=True)
    if len(orbits) == 1:
        weight = {v: sp.Rational(1, len(orbits[0])) for v in orbits[0]}
    else:
        a, b = orbits
        weight = {v: t / len(a) for v in a}
        weight.update({v: (1 - t) / len(b) for v in b})
    poly = sp.expand(sum(sp.Mul(*(weight.get(v, 0) for v in m)) for m in family.members))

    if len(orbits) == 1:
        return OrbitReduction(orbits, t, poly, [], [poly], poly, sp.Integer(1))

    critical = []
    for root in sp.solve(sp.diff(poly, t), t):
        approx = complex(sp.N(root))
        if abs(approx.imag) > 1e-12 or not 0 < approx.real < 1:
            continue
        critical.append(sp.radsimp(sp.simplify(sp.re(root))))
    candidates = critical + [sp.Integer(0), sp.Integer(1)]
    values = [sp.radsimp(sp.simplify(poly.subs(t, c))) for c in candidates]
    best = max(range(len(candidates)), key=lambda k: float(values[k]))
    return OrbitReduction(
        orbits=orbits,
        variable=t,
        polynomial=poly,
        critical_points=critical,
        critical_values=values[: len(critical)],
        maximum=values[best],
        argmax=candidates[best],
    )


def derive_critical_values(name: str, n: Optional[int] = None) -> OrbitReduction:
    """对目录中的族做单变量推导 (K5_3_minus / F6 / star / gen_K3 ...)"""
    return symbolic_lagrangian(build_named(name, n))


def exact_catalog_check(
    name: str,
    n: Optional[int] = None,
    options: Optional[LagrangianOptions] = None,
    digits: int = DEFAULT_DIGITS,
) -> Dict[str, Any]:
    """
    数值 λ 与目录中的闭式 / 上界比较，误差在扩展精度下计算

    Returns:
        build_check 结构，附带 error / certified / kind
    """
    entry = get_entry(name)
    if entry.expected_kind is None:
        raise PreconditionError(f"family '{name}' has no expected lagrangian")
    family = entry.build(n)
    result = maximize(family, options or default_options(family))
    found = sp.Float(result.value, digits)
    label = f"lambda:{name}" + (f"(n={n})" if n is not None else "")

    if entry.bound_ref:
        ref = build_named(entry.bound_ref)
        bound = sp.Float(maximize(ref, options or default_options(ref)).value, digits)
        ref_expected = get_entry(entry.bound_ref).expected_lambda()
        if ref_expected is not None:
            bound = sp.Min(bound, evaluate_exact(ref_expected, digits))
        passed = found <= bound + sp.Float(entry.tolerance)
        return build_check(
            label, bool(passed), expected=f"≤ λ({entry.bound_ref}) = {float(bound):.12g}",
            found=result.value, kind="bound", certified=result.certified,
            error=max(0.0, float(found - bound)),
        )

    expected = evaluate_exact(entry.expected_lambda(n), digits)
    if entry.expected_kind == "bound":
        passed = found <= expected + sp.Float(entry.tolerance)
        error = max(0.0, float(found - expected))
        shown = f"≤ {sp.sstr(entry.expected_lambda(n))}"
    else:
        error = float(abs(found - expected))
        passed = error <= entry.tolerance
        shown = sp.sstr(entry.expected_lambda(n))
    return build_check(
        label, bool(passed), expected=shown, found=result.value,
        kind=entry.expected_kind, certified=result.certified, error=error,
        expected_value=float(expected),
    )


def theorem_gap(value: float) -> float:
    """λ(K₅³) − value；主定理要求非 K₅³ 的相交族此差值 ≥ THEOREM_GAP"""
    return float(settings.K53_LAMBDA) - value
