"""
Symmetrization：Cleaning 与 Merging 交替执行直到不动点

Cleaning  最小度低于 (6/25 − α)·|V|² 时删除一个顶点：
          该顶点所在部分是单点集时连同部分一起删除，否则删除部分中一个非 U 顶点
Merging   若 U 中存在 u, v 使没有边同时碰到 P_u 与 P_v，把度较小者的部分并入度较大者的部分，
          再以 G[U′] 在新划分上的 blow-up 作为新图

原文中的 "任取" 一律取最小下标；random_order=True 时改为按 seed 随机选择。
"""

from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from ...core.config import settings
from ...core.errors import PreconditionError, VerificationError
from ...core.logger import logger
from ...core.utils import make_rng
from ..hypergraph.operations import delete_vertices
from ..hypergraph.structures import Hypergraph
from .structures import MergeEvent, PointedPartitionedHypergraph, SymmetrizationLog

Threshold = Callable[[int], float]


def default_threshold(alpha: float) -> Threshold:
    """(6/25 − α)·m²，m 为当前存活顶点数"""
    return lambda m: (6 / 25 - alpha) * m * m


def _pick(candidates: List[int], rng: Optional[np.random.Generator]) -> int:
    if rng is None:
        return min(candidates)
    return int(rng.choice(sorted(candidates)))


def _clean_once(
    state: PointedPartitionedHypergraph,
    threshold: Threshold,
    rng: Optional[np.random.Generator],
) -> Optional[Tuple[PointedPartitionedHypergraph, Dict[str, int]]]:
    limit = threshold(len(state.vertices))
    degrees = state.degrees()
    low = [v for v in state.vertices if degrees[v] < limit]
    if not low:
        return None
    u = _pick(low, rng)
    owner = state.owner()
    point = owner[u]
    part = state.parts[point]
    parts = dict(state.parts)
    if len(part) == 1:
        victim = u
        del parts[point]
        kind = "part"
    else:
        others = [w for w in part if w != point]
        earliest = min(state.retired.get(w, 0) for w in others)
        victim = _pick([w for w in others if state.retired.get(w, 0) == earliest], rng)
        parts[point] = part - {victim}
        kind = "vertex"
    graph = delete_vertices(state.graph, [victim])
    event = {"vertex": victim, "trigger": u, "degree": degrees[u], "kind": kind, "alive": len(state.vertices)}
    return PointedPartitionedHypergraph(graph, state.vertices - {victim}, parts, state.retired), event


def cleaning(
    state: PointedPartitionedHypergraph,
    threshold: Optional[Threshold] = None,
    alpha: float = settings.SYMMETRIZE_ALPHA,
    rng: Optional[np.random.Generator] = None,
    events: Optional[List[Dict[str, int]]] = None,
) -> PointedPartitionedHypergraph:
    """删除低度顶点直到最小度不低于阈值；空图也是合法输出"""
    threshold = threshold or default_threshold(alpha)
    while True:
        step = _clean_once(state, threshold, rng)
        if step is None:
            return state
        state, event = step
        if events is not None:
            events.append(event)


def _touched_pairs(state: PointedPartitionedHypergraph) -> set:
    owner = state.owner()
    touched = set()
    for e in state.graph.edges:
        for a, b in combinations(sorted({owner[v] for v in e}), 2):
            touched.add((a, b))
    return touched


def uncovered_pairs(state: PointedPartitionedHypergraph) -> List[Tuple[int, int]]:
    """U 中没有任何边同时碰到 P_u 与 P_v 的点对 u < v (不含 u = v)"""
    touched = _touched_pairs(state)
    return [p for p in combinations(state.points, 2) if p not in touched]


def rebuild_blowup(graph: Hypergraph, points: FrozenSet[int], parts: Dict[int, FrozenSet[int]]) -> Hypergraph:
    """G[U′] 在划分上的 blow-up：每条边 {a,b,c} ⊆ U′ 换成 P_a × P_b × P_c"""
    edges = [
        choice
        for e in graph.edges
        if points.issuperset(e)
        for choice in product(*(sorted(parts[v]) for v in e))
    ]
    return Hypergraph(graph.n, graph.r, tuple(edges))


def merging(
    state: PointedPartitionedHypergraph,
    rng: Optional[np.random.Generator] = None,
    step: int = 0,
    events: Optional[List[MergeEvent]] = None,
) -> PointedPartitionedHypergraph:
    candidates = uncovered_pairs(state)
    if not candidates:
        return state
    a, b = candidates[0] if rng is None else candidates[int(rng.integers(len(candidates)))]
    degrees = state.degrees()
    # 度大者保留；相等时下标小者保留
    u, v = (a, b) if degrees[a] >= degrees[b] else (b, a)
    parts = dict(state.parts)
    merged_part = parts.pop(v)
    kept_part = parts[u]
    parts[u] = kept_part | merged_part
    graph = rebuild_blowup(state.graph, frozenset(parts), parts)
    if events is not None:
        events.append(MergeEvent(
            step=step, kept=u, merged=v, kept_part=kept_part, merged_part=merged_part,
            degree_kept=degrees[u], degree_merged=degrees[v],
            edges_before=state.graph.m, edges_after=graph.m,
        ))
    return PointedPartitionedHypergraph(graph, state.vertices, parts, {**state.retired, v: step})


def symmetrize(
    graph: Hypergraph,
    alpha: float = settings.SYMMETRIZE_ALPHA,
    threshold: Optional[Threshold] = None,
    random_order: bool = False,
    seed: Optional[int] = None,
) -> SymmetrizationLog:
    """
    从全单点划分开始交替 Cleaning / Merging，直到一整轮没有任何变化

    Returns:
        SymmetrizationLog；final 即 (ℱ_sym, 𝒫, U)
    """
    if graph.r != 3:
        raise PreconditionError(f"symmetrize expects a 3-graph, got r={graph.r}")
    rng = make_rng(settings.DEFAULT_SEED if seed is None else seed) if random_order else None
    threshold = threshold or default_threshold(alpha)
    state = PointedPartitionedHypergraph.initial(graph)
    log = SymmetrizationLog(initial=state, alpha=alpha, random_order=random_order, seed=seed)

    step = 0
    while True:
        step += 1
        before = len(log.deletions)
        cleaned = cleaning(state, threshold, rng=rng, events=log.deletions)
        for event in log.deletions[before:]:
            event["step"] = step
        merged = merging(cleaned, rng=rng, step=step, events=log.merges)
        if merged.same_state(state):
            break
        if not merged.size < state.size:
            raise VerificationError(
                "symmetrize-progress", f"step {step}: (|V|,|U|) did not decrease", merged.to_dict(False)
            )
        log.cleaned.append(cleaned)
        log.merged.append(merged)
        state = merged

    final = log.final
    logger.info(
        f"symmetrize: {log.rounds} 轮, {len(log.merges)} 次合并, {len(log.deletions)} 次删除, "
        f"|V|={len(final.vertices)}, |U|={len(final.parts)}, ratio={log.ratio:.3f}"
    )
    return log
