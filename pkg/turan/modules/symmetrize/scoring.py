"""
5-划分的评分 (Splitting 阶段使用的原语)

边 e 关于划分 W₁..W₅：
    good       三个顶点落在三个不同部分
    bad        恰有两个顶点落在同一部分
    very bad   三个顶点落在同一部分

Σ = Σ_{p<q} e(W_p ∪ W_q) − 2·Σ_p e(W_p)，每条 bad 边计 1 次，每条 very bad 边计 2 次。
部分下标从 0 开始。
"""

from collections import Counter
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from ...core.errors import PreconditionError
from ...core.logger import logger
from ..hypergraph.structures import Hypergraph
from .structures import PartitionScore

PARTS = 5

Parts = Tuple[FrozenSet[int], ...]


def _normalize(graph: Hypergraph, parts: Sequence[Iterable[int]]) -> Parts:
    if graph.r != 3:
        raise PreconditionError(f"partition scoring expects a 3-graph, got r={graph.r}")
    frozen = tuple(frozenset(int(v) for v in p) for p in parts)
    if len(frozen) != PARTS:
        raise ValueError(f"expected a partition into {PARTS} parts, got {len(frozen)}")
    seen: Set[int] = set()
    for p in frozen:
        if seen & p:
            raise ValueError(f"parts overlap on {sorted(seen & p)}")
        seen |= p
    if seen != set(graph.vertices):
        raise ValueError(f"parts must cover exactly [1..{graph.n}]")
    return frozen


def _edge_profiles(graph: Hypergraph, parts: Parts) -> List[Tuple[int, ...]]:
    """每条边落在各部分的下标 (排序后)"""
    where = {v: k for k, p in enumerate(parts) for v in p}
    return [tuple(sorted(where[v] for v in e)) for e in graph.edges]


def _sigma_from_definition(profiles: List[Tuple[int, ...]]) -> int:
    inside_pair = Counter()
    inside_one = Counter()
    for prof in profiles:
        used = set(prof)
        if len(used) == 1:
            inside_one[prof[0]] += 1
        for p, q in combinations(range(PARTS), 2):
            if used <= {p, q}:
                inside_pair[(p, q)] += 1
    return sum(inside_pair.values()) - 2 * sum(inside_one.values())


def edge_goodness(graph: Hypergraph, parts: Sequence[Iterable[int]]) -> PartitionScore:
    """分类全部边并计算 Σ；按定义计算的 Σ 与分类恒等式不一致时抛出 PreconditionError"""
    frozen = _normalize(graph, parts)
    profiles = _edge_profiles(graph, frozen)
    kinds = Counter(len(set(p)) for p in profiles)
    score = PartitionScore(
        parts=frozen,
        sigma=_sigma_from_definition(profiles),
        good=kinds[3],
        bad=kinds[2],
        very_bad=kinds[1],
    )
    if not score.identity_holds:
        raise PreconditionError(f"Σ = {score.sigma} but #bad + 2·#very-bad = {score.bad + 2 * score.very_bad}")
    return score


def _reassign(parts: Parts, block: FrozenSet[int], target: int) -> Parts:
    stripped = [p - block for p in parts]
    stripped[target] = stripped[target] | block
    return tuple(stripped)


def best_destination(graph: Hypergraph, parts: Sequence[Iterable[int]], block: Iterable[int]) -> int:
    """把整块 A 放入哪个部分使 Σ 最小；并列取最小下标"""
    frozen = _normalize(graph, parts)
    chunk = frozenset(int(v) for v in block)
    if not chunk:
        raise ValueError("block must be nonempty")
    outside = [v for v in chunk if v < 1 or v > graph.n]
    if outside:
        raise ValueError(f"block vertices outside [1..{graph.n}]: {sorted(outside)}")
    scores = [edge_goodness(graph, _reassign(frozen, chunk, k)).sigma for k in range(PARTS)]
    return min(range(PARTS), key=lambda k: (scores[k], k))


def non_good_degrees(graph: Hypergraph, parts: Sequence[Iterable[int]]) -> Dict[int, int]:
    frozen = _normalize(graph, parts)
    where = {v: k for k, p in enumerate(frozen) for v in p}
    counts = {v: 0 for v in graph.vertices}
    for e in graph.edges:
        if len({where[v] for v in e}) < 3:
            for v in e:
                counts[v] += 1
    return counts


def find_bad_vertices(graph: Hypergraph, parts: Sequence[Iterable[int]], threshold: float) -> Set[int]:
    """
    非 good 边的关联数 ≥ threshold·m² 的顶点，m 为非孤立顶点数；
    补入孤立顶点不改变结果
    """
    m = len(graph.non_isolated())
    limit = threshold * m * m
    return {v for v, d in non_good_degrees(graph, parts).items() if d > 0 and d >= limit}


def local_search_partition(
    graph: Hypergraph,
    start: Sequence[Iterable[int]],
    max_rounds: int = 100,
) -> Tuple[Parts, PartitionScore]:
    """
    单顶点移动的局部搜索：依次把每个顶点移到 best_destination，直到一整轮 Σ 不再下降
    """
    parts = _normalize(graph, start)
    score = edge_goodness(graph, parts)
    for rounds in range(max_rounds):
        improved = False
        for v in graph.vertices:
            target = best_destination(graph, parts, [v])
            candidate = _reassign(parts, frozenset({v}), target)
            new_score = edge_goodness(graph, candidate)
            if new_score.sigma < score.sigma:
                parts, score, improved = candidate, new_score, True
        if not improved:
            logger.debug(f"local search: {rounds + 1} 轮后 Σ = {score.sigma}")
            break
    return parts, score
