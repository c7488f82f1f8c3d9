"""
Lagrangian 模块
边多项式、单纯形上的最大化与认证、保值归约、精确闭式
"""

from .polynomial import (
    EdgePolynomial,
    WeightVector,
    kkt_residual,
    lagrange_multiplier,
    poly_eval,
    poly_grad,
    poly_hessian,
)
from .optimizer import (
    LagrangianOptions,
    LagrangianResult,
    default_options,
    lagrangian,
    maximize,
    project_simplex,
)
from .reductions import dominate_reduce, dominates, symmetric_average
from .exact import (
    OrbitReduction,
    derive_critical_values,
    evaluate_exact,
    exact_catalog_check,
    symbolic_lagrangian,
    theorem_gap,
)

from .service import LagrangianService, evaluate_named

__all__ = [
    "LagrangianService",
    "evaluate_named",
    "EdgePolynomial",
    "WeightVector",
    "kkt_residual",
    "lagrange_multiplier",
    "poly_eval",
    "poly_grad",
    "poly_hessian",
    "LagrangianOptions",
    "LagrangianResult",
    "default_options",
    "lagrangian",
    "maximize",
    "project_simplex",
    "dominate_reduce",
    "dominates",
    "symmetric_average",
    "OrbitReduction",
    "derive_critical_values",
    "evaluate_exact",
    "exact_catalog_check",
    "symbolic_lagrangian",
    "theorem_gap",
]
