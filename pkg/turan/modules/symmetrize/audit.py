"""
对称化日志的性质审计

P1  对每个 j ≤ i，U_j ∩ V_i 是 {P_{j,u} ∩ V_i} 的横截
P2  H_i[U_i] = F[U_i]
P3  每条边与每个部分至多交于一个顶点
P4  同一部分中的 u, v 满足 {e∖{v}} = {e∖{u}}
P5  U_i ⊆ U_{i−1}，V_i ⊆ V_{i−1}

另外检查：合并后 P′_u 与 ℱ_sym 不交则 P′_v 也不交；初始图 𝒦³₃,₃-hom-free 时每一步都保持；
每次 Merging 的边数满足 e(H_i) = e(H′_i) + (deg u − deg v)·|P′_v| ≥ e(H′_i)。
"""

from typing import Any, Dict, List, Optional

from ...core.errors import VerificationError
from ...core.logger import logger
from ...core.report import build_check
from ..hypergraph.homomorphism import contains_k333_hom
from ..hypergraph.operations import restrict
from .structures import AuditReport, PointedPartitionedHypergraph, SymmetrizationLog


def _p1(history: List[PointedPartitionedHypergraph], i: int) -> Optional[str]:
    current = history[i]
    problems = current.violations()
    if problems:
        return problems[0]
    alive = current.vertices
    for j in range(i + 1):
        old = history[j]
        points = set(old.parts)
        for u, part in old.parts.items():
            rest = part & alive
            if rest and len(rest & points) != 1:
                return f"U_{j} ∩ V_{i} meets part of {u} in {sorted(rest & points)}"
    return None


def _p2(initial: PointedPartitionedHypergraph, state: PointedPartitionedHypergraph) -> Optional[str]:
    points = state.points
    if not points:
        return None
    now = restrict(state.graph, points, reindex=False).member_set
    then = restrict(initial.graph, points, reindex=False).member_set
    if now != then:
        return f"H[U] differs from F[U] on {len(now ^ then)} triples"
    return None


def _p3(state: PointedPartitionedHypergraph) -> Optional[str]:
    owner = state.owner()
    for e in state.graph.edges:
        if len({owner.get(v, -v) for v in e}) < len(e):
            return f"edge {e} meets a part twice"
    return None


def _p4(state: PointedPartitionedHypergraph) -> Optional[str]:
    # P3 成立时 {e∖{v}} = {e∖{u}} 等价于 u 与 v 的 link 相同
    links: Dict[int, set] = {v: set() for v in state.vertices}
    for e in state.graph.edges:
        for v in e:
            links[v].add(tuple(w for w in e if w != v))
    for u, part in state.parts.items():
        for v in part:
            if v != u and links[v] != links[u]:
                return f"links of {u} and {v} differ"
    return None


def _p5(prev: PointedPartitionedHypergraph, state: PointedPartitionedHypergraph) -> Optional[str]:
    if not set(state.parts) <= set(prev.parts):
        return "U grew"
    if not state.vertices <= prev.vertices:
        return "V grew"
    return None


def audit_properties(log: SymmetrizationLog, strict: bool = False, check_hom: bool = True) -> AuditReport:
    """
    逐个快照检查 P1–P5 与合并相关性质

    Args:
        strict: 第一个失败项抛出 VerificationError，record 为失败时的快照
        check_hom: 初始图不是 hom-free 时自动跳过并记录 notice
    """
    history = log.states
    checks: List[Dict[str, Any]] = []
    notices: List[str] = []
    failure: Optional[Dict[str, Any]] = None

    def record(name: str, problem: Optional[str], state: PointedPartitionedHypergraph, **extra) -> None:
        nonlocal failure
        check = build_check(name, problem is None, detail=problem, **extra)
        checks.append(check)
        if problem is not None and failure is None:
            failure = {**check, "snapshot": state.to_dict()}
            if strict:
                raise VerificationError(name, problem, failure)

    for i, state in enumerate(history):
        record(f"P1[{i}]", _p1(history, i), state)
        record(f"P2[{i}]", _p2(log.initial, state), state)
        record(f"P3[{i}]", _p3(state), state)
        record(f"P4[{i}]", _p4(state), state)
        if i:
            record(f"P5[{i}]", _p5(history[i - 1], state), state)

    final_vertices = log.final.vertices
    for event in log.merges:
        cleaned = log.cleaned[event.step - 1]
        expected = event.edges_before + (event.degree_kept - event.degree_merged) * len(event.merged_part)
        problem = None
        if event.edges_after != expected:
            problem = f"merge {event.merged}→{event.kept}: {event.edges_after} edges, identity gives {expected}"
        elif event.edges_after < event.edges_before:
            problem = f"merge {event.merged}→{event.kept} lost edges"
        record(f"merge-edges[{event.step}]", problem, cleaned,
               before=event.edges_before, after=event.edges_after)
        empty_kept = not (event.kept_part & final_vertices)
        problem = None
        if empty_kept and event.merged_part & final_vertices:
            problem = f"P′_{event.kept} misses ℱ_sym but P′_{event.merged} does not"
        record(f"merge-survival[{event.step}]", problem, cleaned)

    if check_hom:
        if contains_k333_hom(log.initial.graph):
            notices.append("initial graph contains a K333 homomorphic image; hom-freeness check skipped")
        else:
            for name, state in log.snapshots():
                problem = "K333 homomorphic image appeared" if contains_k333_hom(state.graph) else None
                record(f"hom-free[{name}]", problem, state)

    ratio = log.ratio
    checks.append(build_check("ratio", True, found=ratio, detail="|V(F_sym)|/n (logged only)"))
    n = log.initial.graph.n
    record("merge-count", None if len(log.merges) <= max(n - 1, 0) else f"{len(log.merges)} merges on {n} vertices",
           log.final)

    passed = failure is None
    for note in notices:
        logger.info(note)
    logger.info(f"audit: {len(checks)} 项检查, passed={passed}, ratio={ratio:.3f}")
    return AuditReport(passed=passed, checks=checks, failure=failure, notices=notices)
