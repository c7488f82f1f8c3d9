"""
Blow-up 密度 b(G) = r!·λ(G) 与稠密性判定
"""

from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional, Tuple

from ...core.config import settings
from ...core.errors import GuardExceededError
from ...core.logger import logger
from .structures import Hypergraph, Member


def _lagrangian_value(graph: Hypergraph, options=None) -> float:
    from ..lagrangian.optimizer import default_options, maximize

    if graph.m == 0:
        return 0.0
    if options is None:
        options = default_options(graph, restarts=32)
    return maximize(graph, options).value


def blowup_density(graph: Hypergraph, options=None) -> float:
    """b(G) = r!·λ(G)"""
    return factorial(graph.r) * _lagrangian_value(graph, options)


@dataclass
class DensityReport:
    dense: bool
    density: float
    deletions: List[Tuple[Member, float]] = field(default_factory=list)
    ambiguous: List[Member] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "dense": self.dense,
            "density": self.density,
            "deletions": [{"edge": list(e), "density": d} for e, d in self.deletions],
            "ambiguous": [list(e) for e in self.ambiguous],
        }


def density_report(graph: Hypergraph, tol: float = 1e-9, options=None) -> DensityReport:
    """
    逐条删边比较 b(G∖e) 与 b(G)。λ 对子族单调，所以只需检查删一条边的子图。
    差值落在 [tol, 2·tol) 时记为 ambiguous。
    """
    if graph.m > settings.DENSE_MAX_EDGES:
        raise GuardExceededError(f"is_dense limited to {settings.DENSE_MAX_EDGES} edges, got {graph.m}")
    base = blowup_density(graph, options)
    report = DensityReport(dense=graph.m > 0, density=base)
    for e in graph.edges:
        reduced = blowup_density(graph.without_edge(e), options)
        report.deletions.append((e, reduced))
        gap = base - reduced
        if gap < tol:
            report.dense = False
        elif gap < 2 * tol:
            report.ambiguous.append(e)
    if report.ambiguous:
        logger.warning(f"is_dense: {len(report.ambiguous)} 条边的密度差接近容差 {tol}")
    return report


def is_dense(graph: Hypergraph, tol: float = 1e-9, options: Optional[object] = None) -> bool:
    return density_report(graph, tol, options).dense
