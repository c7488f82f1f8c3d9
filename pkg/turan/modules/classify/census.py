"""
小地面集上极大相交 3-图的普查

三元组的相交图中，极大团恰好就是极大相交族。用 networkx.find_cliques 枚举极大团，
按规范型去重后再逐个计算 λ (n ≤ 7 时为穷举支撑集模式)。
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Set, Tuple

import networkx as nx
import pandas as pd

from ...core.cache import cached
from ...core.config import settings
from ...core.errors import GuardExceededError, PreconditionError
from ...core.logger import logger
from ..families.catalog import CATALOG
from ..hypergraph.canonical import canonical_form
from ..hypergraph.operations import covers_pairs, is_intersecting, is_maximal_intersecting, pair_degrees
from ..hypergraph.structures import Hypergraph, all_rsets
from ..lagrangian.optimizer import LagrangianOptions, LagrangianResult, default_options, maximize
from ..shifting.shift import shift_type, shift_deterministic, verify_unique_intersection

CSV_COLUMNS = ["canonical-id", "edges", "pair-profile", "lambda", "gap", "catalog-match"]

# 参与普查匹配的 3-图条目 (参数化条目按 3..n 逐一展开)
_MATCH_FIXED = ["K5_3", "K5_3_minus", "F7", "FF6", "F6", "T6", "K6_3"]
_MATCH_PARAMETRIC = ["star", "gen_K3", "gen_F4", "gen_R5"]


@dataclass
class CensusRecord:
    n: int
    graph: Hypergraph
    canonical_id: str
    covers_pairs: bool
    unique_intersection: bool
    pair_profile: Dict[int, int]
    shift_type: str
    catalog_match: Optional[str] = None
    lagrangian: Optional[LagrangianResult] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def edges(self) -> int:
        return self.graph.m

    @property
    def value(self) -> Optional[float]:
        return None if self.lagrangian is None else self.lagrangian.value

    @property
    def gap(self) -> Optional[float]:
        """2/25 − λ"""
        return None if self.value is None else float(settings.K53_LAMBDA) - self.value

    @property
    def is_k53(self) -> bool:
        return self.catalog_match == "K5_3"

    def to_row(self) -> Dict[str, Any]:
        return {
            "canonical-id": self.canonical_id,
            "edges": self.edges,
            "pair-profile": profile_signature(self.pair_profile),
            "lambda": self.value,
            "gap": self.gap,
            "catalog-match": self.catalog_match or "",
            "n": self.n,
            "covers_pairs": self.covers_pairs,
            "unique_intersection": self.unique_intersection,
            "shift_type": self.shift_type,
            "certified": None if self.lagrangian is None else self.lagrangian.certified,
            "members": [list(e) for e in self.graph.edges],
        }


def pair_coverage_profile(graph: Hypergraph) -> Dict[Tuple[int, int], int]:
    """每个点对 i<j 被多少条边覆盖"""
    if graph.r != 3:
        raise PreconditionError(f"pair_coverage_profile expects a 3-graph, got r={graph.r}")
    return pair_degrees(graph)


def profile_histogram(graph: Hypergraph) -> Dict[int, int]:
    """共度 → 点对个数"""
    return dict(sorted(Counter(pair_coverage_profile(graph).values()).items()))


def profile_signature(histogram: Dict[int, int]) -> str:
    return " ".join(f"{d}:{c}" for d, c in sorted(histogram.items()))


def intersection_graph(n: int) -> nx.Graph:
    """顶点为 [n] 的三元组，两三元组相交则连边"""
    triples = list(all_rsets(n, 3))
    graph = nx.Graph()
    graph.add_nodes_from(triples)
    masks = {t: sum(1 << v for v in t) for t in triples}
    graph.add_edges_from((a, b) for a, b in combinations(triples, 2) if masks[a] & masks[b])
    return graph


def _check_range(n: int, opt_in: bool) -> None:
    if settings.CENSUS_MIN_N <= n <= settings.CENSUS_MAX_N:
        return
    if n == settings.CENSUS_OPT_IN_N and opt_in:
        logger.warning(f"n={n} 普查已显式开启，极大团数量会显著增加")
        return
    raise GuardExceededError(
        f"census supports {settings.CENSUS_MIN_N} ≤ n ≤ {settings.CENSUS_MAX_N}"
        f" (n={settings.CENSUS_OPT_IN_N} needs opt-in), got {n}"
    )


def maximal_intersecting_families(n: int) -> Dict[tuple, Hypergraph]:
    """规范标签 → 规范代表；结果按标签排序"""
    found: Dict[tuple, Hypergraph] = {}
    cliques = 0
    for clique in nx.find_cliques(intersection_graph(n)):
        cliques += 1
        label = canonical_form(Hypergraph(n, 3, tuple(clique))).label
        if label not in found:
            found[label] = Hypergraph(n, 3, label[1])
    logger.info(f"n={n}: {cliques} 个极大团, {len(found)} 个同构类")
    return dict(sorted(found.items()))


def catalog_labels(n: int) -> Dict[tuple, str]:
    """目录中 ≤ n 个顶点的 3-图，补孤立顶点到 n 后的规范标签"""
    labels: Dict[tuple, str] = {}

    def add(name: str, graph) -> None:
        if not isinstance(graph, Hypergraph) or graph.r != 3 or graph.n > n:
            return
        label = canonical_form(graph.with_isolated(n - graph.n)).label
        labels.setdefault(label, name)

    for name in _MATCH_FIXED:
        add(name, CATALOG[name].build())
    for name in _MATCH_PARAMETRIC:
        entry = CATALOG[name]
        for m in range(entry.min_param or 3, n + 1):
            add(f"{name}(n={m})", entry.build(m))
    return labels


def _score_one(payload: Tuple[Hypergraph, Optional[LagrangianOptions], Optional[int]]) -> LagrangianResult:
    graph, options, seed = payload
    opts = options or default_options(graph, seed=seed)
    return maximize(graph, opts)


def score_records(
    graphs: List[Hypergraph],
    options: Optional[LagrangianOptions] = None,
    seed: Optional[int] = None,
    jobs: int = 1,
) -> List[LagrangianResult]:
    """逐个计算 λ；jobs > 1 时用进程池，结果顺序与输入一致"""
    payloads = [(g, options, settings.DEFAULT_SEED if seed is None else seed) for g in graphs]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_score_one, payloads))
    return [_score_one(p) for p in payloads]


def build_record(graph: Hypergraph, matches: Dict[tuple, str]) -> CensusRecord:
    form = canonical_form(graph)
    return CensusRecord(
        n=graph.n,
        graph=graph,
        canonical_id=form.digest,
        covers_pairs=covers_pairs(graph),
        unique_intersection=verify_unique_intersection(graph),
        pair_profile=profile_histogram(graph),
        shift_type=shift_type(shift_deterministic(graph).final),
        catalog_match=matches.get(form.label),
    )


def enumerate_maximal_intersecting(
    n: int,
    opt_in: bool = False,
    score: bool = True,
    seed: Optional[int] = None,
    jobs: int = 1,
    options: Optional[LagrangianOptions] = None,
) -> List[CensusRecord]:
    """
    [n] 上全部极大相交 3-图 (同构意义下)

    Args:
        opt_in: n = CENSUS_OPT_IN_N 时必须显式开启
        score: 是否计算 λ (n ≤ EXHAUSTIVE_MAX_N 时为穷举支撑集模式)
    """
    _check_range(n, opt_in)
    families = maximal_intersecting_families(n)
    matches = catalog_labels(n)
    records = []
    for graph in families.values():
        if not is_maximal_intersecting(graph):
            logger.error(f"极大团不是极大相交族: {graph.edges}")
            continue
        records.append(build_record(graph, matches))
    if score:
        results = score_records([r.graph for r in records], options, seed, jobs)
        for record, result in zip(records, results):
            record.lagrangian = result
            if not result.certified:
                logger.warning(f"census n={n}: {record.canonical_id} 未认证 (residual={result.kkt_residual:.2e})")
    return records


def subset_scan(n: int) -> Set[tuple]:
    """独立对照：遍历三元组的全部子集 (仅 n ≤ 5)"""
    if n > 5:
        raise GuardExceededError(f"subset scan enumerates 2^C(n,3) families; limited to n ≤ 5, got {n}")
    triples = list(all_rsets(n, 3))
    labels: Set[tuple] = set()
    for mask in range(1, 1 << len(triples)):
        chosen = tuple(t for k, t in enumerate(triples) if mask >> k & 1)
        graph = Hypergraph(n, 3, chosen)
        if is_intersecting(graph) and is_maximal_intersecting(graph):
            labels.add(canonical_form(graph).label)
    return labels


def complement_choice_scan() -> Set[tuple]:
    """
    独立对照 (n = 6)：[6] 上的三元组两两配成互补对，从每对中恰选一个。
    不交的三元组必互补，所以每种选法都相交且极大。
    """
    pairs = [(t, tuple(v for v in range(1, 7) if v not in t)) for t in all_rsets(6, 3) if 1 in t]
    labels: Set[tuple] = set()
    for choice in product((0, 1), repeat=len(pairs)):
        graph = Hypergraph(6, 3, tuple(pair[c] for pair, c in zip(pairs, choice)))
        if is_intersecting(graph) and is_maximal_intersecting(graph):
            labels.add(canonical_form(graph).label)
    return labels


def census_frame(records: List[CensusRecord], extended: bool = False) -> pd.DataFrame:
    rows = [r.to_row() for r in records]
    frame = pd.DataFrame(rows)
    if frame.empty:
        return pd.DataFrame(columns=CSV_COLUMNS)
    if extended:
        return frame.drop(columns=["members"])
    return frame[CSV_COLUMNS]


def write_census_csv(records: List[CensusRecord], path: str) -> None:
    census_frame(records).to_csv(path, index=False)
    logger.info(f"普查结果已写入 {path} ({len(records)} 行)")


class CensusService:
    """普查结果 (JSON 行)，Redis 可用时缓存"""

    @staticmethod
    @cached("census", ttl=settings.CACHE_TTL["census"])
    def census_rows(n: int, seed: int = 0) -> List[Dict[str, Any]]:
        records = enumerate_maximal_intersecting(n, seed=seed)
        return [r.to_row() for r in records]
