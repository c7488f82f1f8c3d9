"""
不降低 p_F 的两种权重变换：轨道平均与支配转移
"""

from typing import Set

import numpy as np

from ..hypergraph.canonical import automorphism_orbits
from ..hypergraph.operations import link_family
from ..hypergraph.structures import Family
from .polynomial import ArrayLike, WeightVector, as_array


def symmetric_average(family: Family, x: ArrayLike) -> WeightVector:
    """在 automorphism_orbits(F) 的每个部分上取平均"""
    arr = np.array(as_array(x, family.n), dtype=float)
    out = arr.copy()
    for part in automorphism_orbits(family).parts:
        idx = [v - 1 for v in part]
        out[idx] = arr[idx].mean()
    return WeightVector(out / out.sum())


def dominates(family: Family, i: int, j: int) -> bool:
    """i 支配 j：ℱ_j⁻ ⊆ ℱ_i⁻"""
    if i == j:
        raise ValueError("dominates needs two distinct vertices")
    return link_family(family, j).link <= link_family(family, i).link


def dominate_reduce(family: Family, x: ArrayLike) -> WeightVector:
    """
    按 j 从大到小处理：若存在支配 j 且尚未被清零的顶点 i，把 x_j 全部转给最小的那个 i。
    """
    arr = np.array(as_array(x, family.n), dtype=float)
    links = {v: link_family(family, v).link for v in family.vertices}
    emptied: Set[int] = set()
    for j in sorted(family.vertices, reverse=True):
        if arr[j - 1] == 0.0:
            continue
        for i in family.vertices:
            if i == j or i in emptied:
                continue
            if links[j] <= links[i]:
                arr[i - 1] += arr[j - 1]
                arr[j - 1] = 0.0
                emptied.add(j)
                break
    return WeightVector(arr)
