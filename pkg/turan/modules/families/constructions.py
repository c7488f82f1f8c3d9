"""
极值构造与计数公式

T₅³(n)   K₅³ 的均衡 blow-up，部分大小 ⌊(n+i)/5⌋ (i = 0..4) 按升序排列
t₅³(n)   e(T₅³(n))
δ₅³(n)   T₅³(n) 的最小度
Sʳ(n)    A 中恰 1 个顶点、B 中 r−1 个顶点的全部 r 元组，|A| 取使边数最大者
"""

from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Dict, List, Tuple

from ..hypergraph.homomorphism import k_rr_pattern
from ..hypergraph.structures import Hypergraph, Partition


def turan_t53_parts(n: int) -> List[int]:
    if n < 5:
        raise ValueError(f"T5^3(n) needs n ≥ 5, got {n}")
    return [(n + i) // 5 for i in range(5)]


def turan_t53_partition(n: int) -> Partition:
    parts, start = [], 1
    for size in turan_t53_parts(n):
        parts.append(frozenset(range(start, start + size)))
        start += size
    return Partition(n, tuple(parts))


def t53_edge_blocks(n: int) -> List[Tuple[List[int], List[int], List[int]]]:
    """T₅³(n) 的边按块给出：每个块是三个不同部分的顶点表，边即其笛卡尔积"""
    blocks = [sorted(p) for p in turan_t53_partition(n).parts]
    return [(blocks[a], blocks[b], blocks[c]) for a, b, c in combinations(range(5), 3)]


def build_turan_t53(n: int) -> Hypergraph:
    """全部跨三个不同部分的三元组"""
    edges = [choice for block in t53_edge_blocks(n) for choice in product(*block)]
    return Hypergraph(n, 3, tuple(edges))


def t53_block_census(n: int) -> Tuple[int, Dict[int, int]]:
    """
    不展开边集，逐块统计 T₅³(n) 的边数与每个顶点的度。
    块 (A, B, C) 贡献 |A||B||C| 条边，A 中每个顶点的度增加 |B||C|。
    """
    edges = 0
    degree = {v: 0 for v in range(1, n + 1)}
    for block in t53_edge_blocks(n):
        sizes = [len(part) for part in block]
        edges += sizes[0] * sizes[1] * sizes[2]
        for k, part in enumerate(block):
            others = sizes[(k + 1) % 3] * sizes[(k + 2) % 3]
            for v in part:
                degree[v] += others
    return edges, degree


def t53_count(n: int) -> int:
    sizes = turan_t53_parts(n)
    return sum(sizes[i] * sizes[j] * sizes[k] for i, j, k in combinations(range(5), 3))


def delta53_count(n: int) -> int:
    # 最小度顶点位于最大的部分 (下标 4)，其余四部分两两配对
    if n < 6:
        raise ValueError(f"delta53_count needs n ≥ 6, got {n}")
    sizes = turan_t53_parts(n)
    return sum(sizes[i] * sizes[j] for i, j in combinations(range(4), 2))


def t53_fit_constant(n_max: int, n_min: int = 5) -> float:
    """max_n |t₅³(n) − 2n³/25| / n²"""
    worst = Fraction(0)
    for n in range(n_min, n_max + 1):
        gap = abs(Fraction(t53_count(n)) - Fraction(2 * n ** 3, 25)) / (n * n)
        worst = max(worst, gap)
    return float(worst)


def build_k333(r: int = 3) -> Hypergraph:
    """𝒦ʳ_{r,r}：r = 3 时为 15 个顶点、11 条边"""
    return k_rr_pattern(r)


def star_size(n: int, r: int) -> Tuple[int, int]:
    """(|A|, sʳ(n))：最大化 |A|·C(n−|A|, r−1)，并列时取较小的 |A|"""
    if r < 3 or n <= r:
        raise ValueError(f"S^r(n) needs n > r ≥ 3, got n={n}, r={r}")
    best_a, best = 1, comb(n - 1, r - 1)
    for a in range(2, n - r + 2):
        count = a * comb(n - a, r - 1)
        if count > best:
            best_a, best = a, count
    return best_a, best


def build_star_sr(n: int, r: int) -> Tuple[Hypergraph, int]:
    a, count = star_size(n, r)
    side_a = range(1, a + 1)
    side_b = range(a + 1, n + 1)
    edges = [(v,) + rest for v in side_a for rest in combinations(side_b, r - 1)]
    return Hypergraph(n, r, tuple(edges)), count


def complete(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, tuple(combinations(range(1, n + 1), r)))


def complete_lagrangian(n: int, r: int) -> Fraction:
    """λ(K_n^r) = C(n, r)/n^r (均匀权重)"""
    return Fraction(comb(n, r), n ** r)


def star_limit(r: int) -> Fraction:
    """lim λ(Sʳ(n)) = (r−1)^{r−1} / ((r−1)!·r^r)"""
    return Fraction((r - 1) ** (r - 1), factorial(r - 1) * r ** r)


def star_limit_vs_complete(r: int) -> Dict[str, object]:
    """
    比较星形极限与 λ(K^r_{2r−1})。r = 3 时完全图更大，r ≥ 4 时星形极限更大，
    此时 K^r_{2r−1} 的 blow-up 不再是极值构造。
    """
    if r < 3:
        raise ValueError(f"r must be ≥ 3, got {r}")
    star = star_limit(r)
    full = complete_lagrangian(2 * r - 1, r)
    return {
        "r": r,
        "star_limit": star,
        "complete": full,
        "star_exceeds_complete": star > full,
        "ratio": float(star / full),
    }
