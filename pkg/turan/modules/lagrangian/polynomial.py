"""
边多项式 p_G(x) = Σ_{e∈E} Π_{i∈e} x_i 的向量化求值

成员按大小分组存成整数矩阵 (m_k × k)，梯度与 Hessian 通过 bincount / add.at 累加。
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Union

import numpy as np

from ..hypergraph.structures import Family, Hypergraph

ArrayLike = Union[np.ndarray, Iterable[float], "WeightVector"]


@dataclass(frozen=True)
class WeightVector:
    """单纯形上的点：非负且和为 1 (容差 1e-12)"""

    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1:
            raise ValueError("weight vector must be one-dimensional")
        if w.size and (w.min() < -1e-12 or abs(w.sum() - 1.0) > 1e-12 * max(1, w.size)):
            raise ValueError(f"weights not on the simplex (min={w.min():.3e}, sum={w.sum():.15f})")
        w = np.clip(w, 0.0, None)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n: int, on: Iterable[int] = ()) -> "WeightVector":
        idx = [v - 1 for v in on] or list(range(n))
        w = np.zeros(n)
        w[idx] = 1.0 / len(idx)
        return cls(w)

    def support(self, threshold: float = 1e-9) -> List[int]:
        return [i + 1 for i in np.flatnonzero(self.weights > threshold)]

    def __len__(self) -> int:
        return int(self.weights.size)

    def to_list(self) -> List[float]:
        return [float(v) for v in self.weights]


def as_array(x: ArrayLike, n: int) -> np.ndarray:
    arr = x.weights if isinstance(x, WeightVector) else np.asarray(list(x) if not isinstance(x, np.ndarray) else x, dtype=float)
    if arr.shape != (n,):
        raise ValueError(f"weight vector has length {arr.size}, expected {n}")
    return arr


class EdgePolynomial:
    """p_F 及其一阶、二阶导数"""

    def __init__(self, family: Family):
        self.n = family.n
        self.r = family.r if isinstance(family, Hypergraph) else None
        groups: Dict[int, List] = {}
        for m in family.members:
            groups.setdefault(len(m), []).append([v - 1 for v in m])
        self.groups = {k: np.asarray(rows, dtype=np.intp) for k, rows in sorted(groups.items())}

    def terms(self, x: np.ndarray) -> np.ndarray:
        parts = [np.prod(x[idx], axis=1) for idx in self.groups.values()]
        return np.concatenate(parts) if parts else np.zeros(0)

    def value(self, x: np.ndarray) -> float:
        # 补偿求和
        return math.fsum(self.terms(x))

    def grad(self, x: np.ndarray) -> np.ndarray:
        g = np.zeros(self.n)
        for k, idx in self.groups.items():
            vals = x[idx]
            for c in range(k):
                others = np.prod(np.delete(vals, c, axis=1), axis=1) if k > 1 else np.ones(len(idx))
                g += np.bincount(idx[:, c], weights=others, minlength=self.n)
        return g

    def hessian(self, x: np.ndarray) -> np.ndarray:
        h = np.zeros((self.n, self.n))
        for k, idx in self.groups.items():
            if k < 2:
                continue
            vals = x[idx]
            for c in range(k):
                for d in range(c + 1, k):
                    keep = [j for j in range(k) if j not in (c, d)]
                    others = np.prod(vals[:, keep], axis=1) if keep else np.ones(len(idx))
                    np.add.at(h, (idx[:, c], idx[:, d]), others)
                    np.add.at(h, (idx[:, d], idx[:, c]), others)
        return h

    def multiplier(self, x: np.ndarray, g: np.ndarray) -> float:
        """Lagrange 乘子：r 一致时为 r·p(x)，一般集族为 Σ x_i ∂p/∂x_i"""
        if self.r is not None:
            return self.r * self.value(x)
        return math.fsum(x * g)


def poly_eval(family: Family, x: ArrayLike) -> float:
    return EdgePolynomial(family).value(as_array(x, family.n))


def poly_grad(family: Family, x: ArrayLike) -> np.ndarray:
    return EdgePolynomial(family).grad(as_array(x, family.n))


def poly_hessian(family: Family, x: ArrayLike) -> np.ndarray:
    return EdgePolynomial(family).hessian(as_array(x, family.n))


def lagrange_multiplier(family: Family, x: ArrayLike) -> float:
    poly = EdgePolynomial(family)
    arr = as_array(x, family.n)
    return poly.multiplier(arr, poly.grad(arr))


def kkt_residual(family: Family, x: ArrayLike, threshold: float = 1e-9) -> float:
    """max_{i∈Supp(x)} |∂p/∂x_i − r·p(x)|"""
    poly = EdgePolynomial(family)
    arr = as_array(x, family.n)
    g = poly.grad(arr)
    mu = poly.multiplier(arr, g)
    support = arr > threshold
    if not support.any():
        return 0.0
    return float(np.max(np.abs(g[support] - mu)))
