"""
超图 / 集族的基本运算与结构判定
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from ...core.errors import PreconditionError
from .structures import Family, Hypergraph, Member, SetFamily, all_rsets, same_kind, vertex_sequence


def _check_subset(family: Family, vertices: Iterable[int]) -> Sequence[int]:
    seq = vertex_sequence(vertices)
    bad = [v for v in seq if v < 1 or v > family.n]
    if bad:
        raise ValueError(f"vertex set not contained in [1..{family.n}]: {bad}")
    return seq


def restrict(family: Family, vertices: Iterable[int], reindex: bool = True) -> Family:
    """
    F[I] = {F ∈ ℱ : F ⊆ I}

    reindex=True 时按保序映射重编号到 1..|I|；否则保留原顶点编号与原 n。
    """
    seq = _check_subset(family, vertices)
    keep = set(seq)
    members = [m for m in family.members if keep.issuperset(m)]
    if not reindex:
        return same_kind(family, family.n, members)
    pos = {v: k for k, v in enumerate(seq, start=1)}
    return same_kind(family, len(seq), (tuple(pos[v] for v in m) for m in members))


def generate(n: int, r: int, family: Union[SetFamily, Iterable[Iterable[int]]]) -> Hypergraph:
    """Gen(n, r, ℱ)：包含 ℱ 中某个成员的全部 r 元子集"""
    members = family.members if isinstance(family, (SetFamily, Hypergraph)) else [tuple(sorted(m)) for m in family]
    edges = set()
    for m in members:
        if len(m) > r:
            raise ValueError(f"generator member {m} larger than r={r}")
        if m and (m[0] < 1 or m[-1] > n):
            raise ValueError(f"generator member {m} not inside [1..{n}]")
        rest = [v for v in range(1, n + 1) if v not in m]
        for extra in combinations(rest, r - len(m)):
            edges.add(tuple(sorted(m + extra)))
    return Hypergraph(n, r, tuple(edges))


def blow_up(graph: Hypergraph, t: int) -> Hypergraph:
    """F(t)：顶点 i 替换为块 {(i−1)t+1, …, it}，每条边替换为 t^r 条横截边"""
    if t < 1:
        raise ValueError(f"blow-up factor must be ≥ 1, got {t}")
    block = lambda i: range((i - 1) * t + 1, i * t + 1)  # noqa: E731
    edges = [tuple(choice) for e in graph.edges for choice in product(*(block(i) for i in e))]
    return Hypergraph(graph.n * t, graph.r, tuple(edges))


@dataclass(frozen=True)
class LinkFamilies:
    """ℱ_i (含 i 的成员) 与 ℱ_i⁻ (去掉 i 之后的 link)；link 中可能出现空元组 (成员恰为 {i})"""

    vertex: int
    containing: SetFamily
    link: FrozenSet[Member]


def link_family(family: Family, i: int) -> LinkFamilies:
    if i < 1 or i > family.n:
        raise ValueError(f"vertex {i} out of range 1..{family.n}")
    containing = [m for m in family.members if i in m]
    link = frozenset(tuple(v for v in m if v != i) for m in containing)
    return LinkFamilies(i, SetFamily(family.n, containing), link)


def covered_pairs(family: Family) -> FrozenSet[Tuple[int, int]]:
    return frozenset(p for m in family.members for p in combinations(m, 2))


def covers_pairs(family: Family, vertices: Optional[Iterable[int]] = None) -> bool:
    """I 中每对不同顶点都被某个成员包含；|I| ≤ 1 时为真"""
    seq = family.vertices if vertices is None else _check_subset(family, vertices)
    pairs = covered_pairs(family)
    return all(p in pairs for p in combinations(seq, 2))


def is_intersecting(family: Family) -> bool:
    masks = family.masks
    if any(mask == 0 for mask in masks):
        return False
    return all(a & b for a, b in combinations(masks, 2))


def is_maximal_intersecting(graph: Hypergraph) -> bool:
    """不存在 ℱ 之外的 r 元集与所有成员相交"""
    if not is_intersecting(graph):
        raise PreconditionError("is_maximal_intersecting requires an intersecting family")
    masks = graph.masks
    present = graph.member_set
    for candidate in all_rsets(graph.n, graph.r):
        if candidate in present:
            continue
        cmask = sum(1 << v for v in candidate)
        if all(cmask & b for b in masks):
            return False
    return True


def relabel(family: Family, permutation: Union[Mapping[int, int], Sequence[int]]) -> Family:
    """按置换重编号；序列形式下 permutation[i-1] 为顶点 i 的像"""
    if isinstance(permutation, Mapping):
        perm = dict(permutation)
    else:
        perm = {i: int(v) for i, v in enumerate(permutation, start=1)}
    if sorted(perm) != list(family.vertices) or sorted(perm.values()) != list(family.vertices):
        raise ValueError("relabeling must be a permutation of the ground set")
    return same_kind(family, family.n, (tuple(perm[v] for v in m) for m in family.members))


def delete_vertices(graph: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """删除经过给定顶点的边；地面集合保持不变"""
    gone = set(vertices)
    return Hypergraph(graph.n, graph.r, tuple(e for e in graph.edges if gone.isdisjoint(e)))


def pair_degrees(family: Family) -> Dict[Tuple[int, int], int]:
    """所有顶点对 i<j 的共度"""
    counts = {p: 0 for p in combinations(family.vertices, 2)}
    for m in family.members:
        for p in combinations(m, 2):
            counts[p] += 1
    return counts


def minimum_degree(graph: Hypergraph, alive: Optional[Iterable[int]] = None) -> int:
    deg = graph.degrees()
    pool = list(graph.vertices) if alive is None else list(alive)
    return min((deg[v] for v in pool), default=0)


def contains_complete(graph: Hypergraph, k: int) -> bool:
    """是否含 K_k^r 子图"""
    edges = graph.member_set
    for subset in combinations(graph.vertices, k):
        if all(e in edges for e in combinations(subset, graph.r)):
            return True
    return False
