"""
Lagrangian λ(G) = max{p_G(x) : x ∈ Δ_n} 的数值求解

投影梯度上升 + Armijo 回溯，多起点；收敛后剪除小于阈值的坐标，在支撑集所在的面上
再做投影梯度与 Newton 精修，最后检查 KKT 条件给出 certified 标志。

三种模式：
    multistart  全坐标多起点
    symmetric   在自同构轨道上取常值 (降维)，轨道由 automorphism_orbits 给出
    exhaustive  n ≤ EXHAUSTIVE_MAX_N 时枚举全部支撑集 I (只保留 F[I] 覆盖 I 中全部点对的 I)，
                每个 I 内按 F[I] 的轨道做降维优化，取最大值
"""

import dataclasses
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...core.config import settings
from ...core.errors import GuardExceededError, PreconditionError
from ...core.logger import logger
from ...core.utils import make_rng
from ..hypergraph.canonical import automorphism_orbits
from ..hypergraph.operations import covers_pairs, restrict
from ..hypergraph.structures import Family
from .polynomial import EdgePolynomial, WeightVector

MAX_STEP = 1e6
MIN_STEP = 1e-18
NEWTON_ROUNDS = 30


@dataclass(frozen=True)
class LagrangianOptions:
    restarts: int = 200
    max_iter: int = 100_000
    seed: Optional[int] = 0
    exhaustive: bool = False
    symmetric: bool = False
    armijo_c: float = 1e-4
    shrink: float = 0.5
    support_threshold: float = 1e-9
    certify_tol: float = 1e-10
    inner_restarts: int = 4
    # 粗搜阶段每个起点的迭代上限；只有最好的几个起点会跑满 max_iter
    explore_iter: int = 3000
    keep_best: int = 3

    def replace(self, **changes) -> "LagrangianOptions":
        return dataclasses.replace(self, **changes)


@dataclass
class LagrangianResult:
    value: float
    argmax: WeightVector
    support: Tuple[int, ...]
    kkt_residual: float
    restarts_used: int
    certified: bool
    boundary_ok: bool = True
    # F[Supp] 覆盖支撑集内全部点对 (极小支撑集的必要条件)；为 False 时支撑集不是极小的
    support_covers_pairs: bool = True
    mode: str = "multistart"
    diagnostics: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "argmax": self.argmax.to_list(),
            "support": list(self.support),
            "kkt_residual": self.kkt_residual,
            "restarts_used": self.restarts_used,
            "certified": self.certified,
            "boundary_ok": self.boundary_ok,
            "support_covers_pairs": self.support_covers_pairs,
            "mode": self.mode,
        }


def project_simplex(v: np.ndarray) -> np.ndarray:
    """欧氏投影到概率单纯形 (排序法，O(n log n))"""
    n = v.shape[0]
    if n == 0:
        return v
    u = np.sort(v)[::-1]
    cssv = np.cumsum(u) - 1.0
    rho = np.nonzero(u * np.arange(1, n + 1) > cssv)[0][-1]
    theta = cssv[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


class _Objective:
    """
    降维后的目标：x = lift(y)，y 落在 k 维单纯形上。

    columns 中每一列是一组顶点 (0 起下标)，对应的 y 坐标平均分给这组顶点。
    全坐标模式下每列只含一个顶点。
    """

    def __init__(self, poly: EdgePolynomial, columns: Sequence[Sequence[int]]):
        self.poly = poly
        self.columns = [list(c) for c in columns]
        self.k = len(self.columns)
        self.lift_matrix = np.zeros((poly.n, self.k))
        for j, col in enumerate(self.columns):
            self.lift_matrix[col, j] = 1.0 / len(col)

    def lift(self, y: np.ndarray) -> np.ndarray:
        return self.lift_matrix @ y

    def reduce(self, x: np.ndarray) -> np.ndarray:
        y = np.array([x[col].sum() for col in self.columns])
        total = y.sum()
        return y / total if total > 0 else np.full(self.k, 1.0 / self.k)

    def value(self, y: np.ndarray) -> float:
        return self.poly.value(self.lift(y))

    def grad(self, y: np.ndarray) -> np.ndarray:
        return self.lift_matrix.T @ self.poly.grad(self.lift(y))

    def hessian(self, y: np.ndarray) -> np.ndarray:
        m = self.lift_matrix
        return m.T @ self.poly.hessian(self.lift(y)) @ m

    def face(self, keep: Sequence[int]) -> "_Objective":
        return _Objective(self.poly, [self.columns[j] for j in keep])


def _ascend(obj: _Objective, y: np.ndarray, opts: LagrangianOptions, max_iter: int) -> Tuple[np.ndarray, float]:
    """投影梯度上升；步长接受后翻倍，Armijo 不满足时按 shrink 缩小"""
    f = obj.value(y)
    step = 1.0
    window: List[float] = []
    for _ in range(max_iter):
        g = obj.grad(y)
        while True:
            cand = project_simplex(y + step * g)
            d = cand - y
            f_cand = obj.value(cand)
            if f_cand >= f + opts.armijo_c * float(g @ d):
                break
            step *= opts.shrink
            if step < MIN_STEP:
                return y, f
        y, f = cand, f_cand
        if np.max(np.abs(d)) < 1e-15:
            break
        step = min(step * 2.0, MAX_STEP)
        window.append(f)
        # 停滞：10 步累计提升低于机器精度量级
        if len(window) > 10:
            if window[-1] - window[-11] <= 1e-15 * max(1.0, abs(f)):
                break
            window = window[-11:]
    return y, f


def _newton_polish(obj: _Objective, y: np.ndarray, f: float) -> Tuple[np.ndarray, float]:
    """在面内解 [[H, −1], [1ᵀ, 0]] [d; μ] = [−g; 0]；只接受保持非负且 p 不减的步"""
    k = obj.k
    if k < 2:
        return y, f
    for _ in range(NEWTON_ROUNDS):
        g = obj.grad(y)
        h = obj.hessian(y)
        kkt = np.zeros((k + 1, k + 1))
        kkt[:k, :k] = h
        kkt[:k, k] = -1.0
        kkt[k, :k] = 1.0
        rhs = np.concatenate([-g, [0.0]])
        sol = np.linalg.lstsq(kkt, rhs, rcond=None)[0]
        d = sol[:k]
        cand = y + d
        if cand.min() < 0:
            break
        cand = cand / cand.sum()
        f_cand = obj.value(cand)
        if f_cand < f - 1e-14 * max(1.0, abs(f)):
            break
        y, f = cand, f_cand
        if np.max(np.abs(d)) < 1e-16:
            break
    return y, f


def _polish(obj: _Objective, y: np.ndarray, opts: LagrangianOptions) -> Tuple[_Objective, np.ndarray, float]:
    """剪枝 → 面内上升 → Newton，直到支撑集不再缩小"""
    f = obj.value(y)
    for _ in range(obj.k + 1):
        keep = [j for j in range(obj.k) if y[j] > opts.support_threshold]
        if not keep:
            break
        if len(keep) < obj.k:
            obj = obj.face(keep)
            y = y[keep] / y[keep].sum()
        y, f = _ascend(obj, y, opts, opts.max_iter)
        y, f = _newton_polish(obj, y, f)
        if not (y <= opts.support_threshold).any():
            break
    return obj, y, f


class _Certifier:
    def __init__(self, family: Family, poly: EdgePolynomial, opts: LagrangianOptions):
        self.family = family
        self.poly = poly
        self.opts = opts

    def finish(self, x: np.ndarray, restarts_used: int, mode: str) -> LagrangianResult:
        x = np.clip(x, 0.0, None)
        x = x / x.sum()
        x[x <= self.opts.support_threshold] = 0.0
        x = x / x.sum()
        value = self.poly.value(x)
        g = self.poly.grad(x)
        mu = self.poly.multiplier(x, g)
        support_mask = x > self.opts.support_threshold
        residual = float(np.max(np.abs(g[support_mask] - mu))) if support_mask.any() else 0.0
        outside = ~support_mask
        boundary_ok = bool(not outside.any() or np.max(g[outside]) <= mu + self.opts.certify_tol)
        support = tuple(int(i) + 1 for i in np.flatnonzero(support_mask))
        result = LagrangianResult(
            value=value,
            argmax=WeightVector(x),
            support=support,
            kkt_residual=residual,
            restarts_used=restarts_used,
            certified=residual < self.opts.certify_tol and boundary_ok,
            boundary_ok=boundary_ok,
            support_covers_pairs=covers_pairs(self.family, support),
            mode=mode,
            diagnostics={"multiplier": mu},
        )
        if not result.certified:
            logger.warning(
                f"λ 未通过认证: value={value:.12g} residual={residual:.3e} boundary_ok={boundary_ok} ({mode})"
            )
        return result


def _full_columns(n: int) -> List[List[int]]:
    return [[i] for i in range(n)]


def _orbit_columns(family: Family) -> List[List[int]]:
    return [[v - 1 for v in sorted(p)] for p in automorphism_orbits(family).parts]


def _starts(family: Family, opts: LagrangianOptions, rng: np.random.Generator) -> List[np.ndarray]:
    """对称起点 + 每条边上的均匀起点 + Dirichlet(1) 样本，总数不超过 restarts"""
    n = family.n
    active = [v - 1 for v in family.non_isolated()]
    wanted = max(1, opts.restarts)
    starts: List[np.ndarray] = []
    x = np.zeros(n)
    x[active] = 1.0 / len(active)
    starts.append(x)
    for member in family.members:
        if len(starts) >= wanted:
            break
        x = np.zeros(n)
        x[[v - 1 for v in member]] = 1.0 / len(member)
        starts.append(x)
    while len(starts) < wanted:
        x = np.zeros(n)
        x[active] = rng.dirichlet(np.ones(len(active)))
        starts.append(x)
    return starts


def _multistart(family: Family, poly: EdgePolynomial, columns, opts: LagrangianOptions) -> Tuple[np.ndarray, int]:
    rng = make_rng(opts.seed)
    obj = _Objective(poly, columns)
    starts = _starts(family, opts, rng)
    explored = []
    for x0 in starts:
        y, f = _ascend(obj, obj.reduce(x0), opts, min(opts.explore_iter, opts.max_iter))
        explored.append((f, y))
    # 稳定排序：值相同时保留起点顺序，保证可复现
    explored.sort(key=lambda t: -t[0])
    best_x, best_f = None, -np.inf
    for f0, y in explored[: max(1, opts.keep_best)]:
        face_obj, y_face, f = _polish(obj, y, opts)
        if f > best_f:
            best_f, best_x = f, face_obj.lift(y_face)
    return best_x, len(starts)


def _supports(family: Family) -> List[Tuple[int, ...]]:
    active = family.non_isolated()
    out = []
    for size in range(1, len(active) + 1):
        for subset in combinations(active, size):
            if len(restrict(family, subset, reindex=False)) and covers_pairs(family, subset):
                out.append(subset)
    return out


def _exhaustive(family: Family, poly: EdgePolynomial, opts: LagrangianOptions) -> Tuple[np.ndarray, int]:
    active = family.non_isolated()
    if len(active) > settings.EXHAUSTIVE_MAX_N:
        raise GuardExceededError(
            f"exhaustive mode limited to {settings.EXHAUSTIVE_MAX_N} non-isolated vertices, got {len(active)}"
        )
    rng = make_rng(opts.seed)
    best_x, best_f, best_key = None, -np.inf, None
    runs = 0
    for subset in _supports(family):
        sub = restrict(family, subset)
        columns = [[subset[v - 1] - 1 for v in sorted(p)] for p in automorphism_orbits(sub).parts]
        obj = _Objective(poly, columns)
        x0 = np.zeros(family.n)
        x0[[v - 1 for v in subset]] = 1.0 / len(subset)
        ys = [obj.reduce(x0)] + [rng.dirichlet(np.ones(obj.k)) for _ in range(opts.inner_restarts)]
        for y0 in ys:
            runs += 1
            y, _ = _ascend(obj, y0, opts, opts.max_iter)
            face_obj, y_face, f = _polish(obj, y, opts)
            key = (round(f, 13), -len(subset))
            if best_key is None or key > best_key:
                best_x, best_f, best_key = face_obj.lift(y_face), f, key
    return best_x, runs


def maximize(family: Family, options: Optional[LagrangianOptions] = None) -> LagrangianResult:
    """
    求 λ(G) 并给出 argmax / KKT 残差 / 认证标志

    未认证时返回目前最好的结果并记录 warning，不抛异常。
    """
    if len(family) == 0:
        raise PreconditionError("maximize requires a nonempty family")
    opts = options or settings.lagrangian_options()
    poly = EdgePolynomial(family)
    certifier = _Certifier(family, poly, opts)

    if opts.exhaustive:
        x, used = _exhaustive(family, poly, opts)
        return certifier.finish(x, used, "exhaustive")
    columns = _orbit_columns(family) if opts.symmetric else _full_columns(family.n)
    x, used = _multistart(family, poly, columns, opts)
    return certifier.finish(x, used, "symmetric" if opts.symmetric else "multistart")


def lagrangian(family: Family, **overrides) -> float:
    """便捷入口：默认参数下的 λ 值"""
    if len(family) == 0:
        return 0.0
    return maximize(family, settings.lagrangian_options(**overrides)).value


def default_options(family: Family, **overrides) -> LagrangianOptions:
    """非孤立顶点不超过 EXHAUSTIVE_MAX_N 时用穷举支撑集，否则用轨道降维"""
    small = len(family.non_isolated()) <= settings.EXHAUSTIVE_MAX_N
    base = {"exhaustive": small, "symmetric": not small}
    base.update(overrides)
    return settings.lagrangian_options(**base)
