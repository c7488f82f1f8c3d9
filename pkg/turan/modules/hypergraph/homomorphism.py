"""
超图同态搜索

通用路径：回溯 + 边约束传播 (部分像必须落在 G 某条边的影子里)，模式顶点数受保护阈值限制。
𝒦³₃,₃ 专用路径：存在两条不交边 A, B 且 A×B 中每一对都被 G 的某条边覆盖。
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ...core.config import settings
from ...core.errors import GuardExceededError, PreconditionError
from .canonical import canonical_form
from .structures import Hypergraph, Member


def k_rr_pattern(r: int = 3) -> Hypergraph:
    """
    𝒦ʳ_{r,r}：两条不交的"侧边" {x₁..x_r}, {y₁..y_r}，以及 r² 条交叉边
    {x_i, y_j} ∪ Z_ij，其中 Z_ij 为 r−2 个私有顶点。
    顶点数 2r + r²(r−2)，边数 r² + 2。
    """
    if r < 3:
        raise ValueError(f"pattern needs r ≥ 3, got {r}")
    xs = list(range(1, r + 1))
    ys = list(range(r + 1, 2 * r + 1))
    edges = [tuple(xs), tuple(ys)]
    nxt = 2 * r + 1
    for i in range(r):
        for j in range(r):
            private = tuple(range(nxt, nxt + r - 2))
            nxt += r - 2
            edges.append((xs[i], ys[j]) + private)
    return Hypergraph(nxt - 1, r, tuple(edges))


@lru_cache(maxsize=1)
def _k333_label():
    return canonical_form(k_rr_pattern(3)).label


def _is_k333(pattern: Hypergraph) -> bool:
    return pattern.r == 3 and pattern.n == 15 and pattern.m == 11 and canonical_form(pattern).label == _k333_label()


class _PairIndex:
    """对覆盖索引：nbr[v] 为与 v 同在某条边的顶点；third[(u,v)] 为补全成边的第三个顶点"""

    def __init__(self, graph: Hypergraph):
        self.nbr: Dict[int, Set[int]] = {v: set() for v in graph.vertices}
        self.third: Dict[Tuple[int, int], Set[int]] = {}
        for a, b, c in graph.edges:
            for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
                self.nbr[u].add(v)
                self.nbr[v].add(u)
                self.third.setdefault((u, v), set()).add(w)
        self._inside: Dict[FrozenSet[int], Optional[Member]] = {}

    def edge_inside(self, pool: FrozenSet[int]) -> Optional[Member]:
        """pool 内是否整条含有一条边 (按顶点顺序找到的第一条)"""
        if pool in self._inside:
            return self._inside[pool]
        found: Optional[Member] = None
        for b in sorted(pool):
            for c in sorted(self.nbr[b] & pool):
                if c <= b:
                    continue
                rest = self.third.get((b, c), set()) & pool
                rest = {w for w in rest if w > c}
                if rest:
                    found = (b, c, min(rest))
                    break
            if found:
                break
        self._inside[pool] = found
        return found


def k333_witness(graph: Hypergraph) -> Optional[Tuple[Member, Member]]:
    """返回 (A, B)：不交边且 A×B 全部被覆盖；不存在则 None"""
    if graph.r != 3:
        raise PreconditionError(f"contains_k333_hom requires a 3-graph, got r={graph.r}")
    index = _PairIndex(graph)
    for a in graph.edges:
        pool = frozenset(index.nbr[a[0]] & index.nbr[a[1]] & index.nbr[a[2]]) - frozenset(a)
        if len(pool) < 3:
            continue
        b = index.edge_inside(pool)
        if b is not None:
            return a, b
    return None


def contains_k333_hom(graph: Hypergraph) -> bool:
    return k333_witness(graph) is not None


def _k333_mapping(pattern: Hypergraph, graph: Hypergraph) -> Optional[Dict[int, int]]:
    witness = k333_witness(graph)
    if witness is None:
        return None
    a, b = witness
    index = _PairIndex(graph)
    reference = k_rr_pattern(3)
    on_reference: Dict[int, int] = {}
    for i in range(3):
        on_reference[i + 1] = a[i]
        on_reference[i + 4] = b[i]
    for edge in reference.edges:
        if edge[2] <= 6:
            continue
        x, y, z = edge
        on_reference[z] = min(index.third[(min(a[x - 1], b[y - 4]), max(a[x - 1], b[y - 4]))])
    # pattern → 规范型 → reference
    to_canon = canonical_form(pattern).relabeling
    from_canon = {c: v for v, c in canonical_form(reference).relabeling.items()}
    return {v: on_reference[from_canon[to_canon[v]]] for v in pattern.vertices}


class _Backtracker:
    def __init__(self, pattern: Hypergraph, graph: Hypergraph, injective: bool):
        self.pattern = pattern
        self.graph = graph
        self.injective = injective
        self.edges = graph.member_set
        self.shadow: Set[FrozenSet[int]] = set()
        for e in graph.edges:
            for k in range(1, len(e) + 1):
                for sub in combinations(e, k):
                    self.shadow.add(frozenset(sub))
        self.incident = {v: pattern.incident(v) for v in pattern.vertices}
        self.order = self._ordering()
        self.domain = list(graph.non_isolated())

    def _ordering(self) -> List[int]:
        deg = self.pattern.degrees()
        remaining = set(v for v in self.pattern.vertices if deg[v] > 0)
        order: List[int] = []
        while remaining:
            placed = set(order)
            # 优先选与已放置顶点共边最多的顶点，再按度数
            best = max(
                sorted(remaining),
                key=lambda v: (sum(1 for e in self.incident[v] for u in e if u in placed), deg[v]),
            )
            order.append(best)
            remaining.discard(best)
        return order

    def _consistent(self, v: int, mapping: Dict[int, int]) -> bool:
        for e in self.incident[v]:
            assigned = [mapping[u] for u in e if u in mapping]
            if len(set(assigned)) != len(assigned):
                return False
            if len(assigned) == len(e):
                if tuple(sorted(assigned)) not in self.edges:
                    return False
            elif frozenset(assigned) not in self.shadow:
                return False
        return True

    def search(self) -> Optional[Dict[int, int]]:
        mapping: Dict[int, int] = {}
        used: Set[int] = set()
        if self._extend(0, mapping, used):
            fill = self.graph.vertices[0] if self.graph.n else None
            for v in self.pattern.vertices:
                if v not in mapping:
                    if fill is None:
                        return None
                    if self.injective:
                        free = [w for w in self.graph.vertices if w not in used]
                        if not free:
                            return None
                        mapping[v] = free[0]
                        used.add(free[0])
                    else:
                        mapping[v] = fill
            return dict(sorted(mapping.items()))
        return None

    def _extend(self, k: int, mapping: Dict[int, int], used: Set[int]) -> bool:
        if k == len(self.order):
            return True
        v = self.order[k]
        for w in self.domain:
            if self.injective and w in used:
                continue
            mapping[v] = w
            if self._consistent(v, mapping):
                used.add(w)
                if self._extend(k + 1, mapping, used):
                    return True
                used.discard(w)
            del mapping[v]
        return False


def find_homomorphism(pattern: Hypergraph, graph: Hypergraph) -> Optional[Dict[int, int]]:
    """保边顶点映射 (不要求单射)；不存在时返回 None"""
    if pattern.r != graph.r:
        return None
    if pattern.m == 0:
        return {v: 1 for v in pattern.vertices} if graph.n else ({} if pattern.n == 0 else None)
    if _is_k333(pattern):
        return _k333_mapping(pattern, graph)
    if pattern.n > settings.HOMOMORPHISM_MAX_VERTICES:
        raise GuardExceededError(
            f"pattern has {pattern.n} vertices, generic homomorphism search is limited to "
            f"{settings.HOMOMORPHISM_MAX_VERTICES}"
        )
    return _Backtracker(pattern, graph, injective=False).search()


def find_embedding(pattern: Hypergraph, graph: Hypergraph) -> Optional[Dict[int, int]]:
    """单射同态 (子图嵌入)：π(pattern) ⊆ graph"""
    if pattern.r != graph.r or pattern.n > graph.n:
        return None
    if pattern.n > settings.HOMOMORPHISM_MAX_VERTICES:
        raise GuardExceededError(f"pattern has {pattern.n} vertices, embedding search limited")
    return _Backtracker(pattern, graph, injective=True).search()


def is_subfamily_up_to_isomorphism(pattern: Hypergraph, graph: Hypergraph) -> bool:
    return find_embedding(pattern, graph) is not None
