"""
具名集族目录

每个条目声明构造函数、参数、λ 的期望值 (精确闭式或上界) 以及 intersecting / covers_pairs 标志；
测试与 verify-all 会用构造结果逐一核对这些标志。
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Union

import pandas as pd
import sympy as sp

from ..hypergraph.operations import covers_pairs, generate, is_intersecting
from ..hypergraph.structures import Family, Hypergraph, SetFamily
from .constructions import build_k333, build_turan_t53, complete

Flag = Union[bool, Callable[[Optional[int]], bool]]

F7_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))

# 生成集族
PT = SetFamily(1, ((1,),))
K3 = SetFamily(3, ((1, 2), (1, 3), (2, 3)))
F4 = SetFamily(4, ((1, 2), (1, 3), (1, 4), (2, 3, 4)))
R5 = SetFamily(5, ((1, 2), (1, 4), (1, 3, 5), (2, 3, 4), (2, 4, 5)))

T6_PARTS = ((1, 2), (3, 4), (5, 6))


def _residue(i: int) -> int:
    return (i - 1) % 5 + 1


def build_ff6() -> Hypergraph:
    """{i, i+1, i+2} 与 {i, i+2, 6}，i ∈ [5]，下标取 [5] 中的剩余类代表"""
    edges = set()
    for i in range(1, 6):
        edges.add(tuple(sorted((i, _residue(i + 1), _residue(i + 2)))))
        edges.add(tuple(sorted((i, _residue(i + 2), 6))))
    return Hypergraph(6, 3, tuple(edges))


def build_t6() -> Hypergraph:
    """8 条横截边 + 6 条 2-1 边 {a, a′, b}，a, a′ ∈ A_i，b ∈ A_{i+1} (下标模 3)"""
    transversal = [(a, b, c) for a in T6_PARTS[0] for b in T6_PARTS[1] for c in T6_PARTS[2]]
    two_one = [T6_PARTS[i] + (b,) for i in range(3) for b in T6_PARTS[(i + 1) % 3]]
    return Hypergraph(6, 3, tuple(transversal + two_one))


def build_f6() -> Hypergraph:
    """{1,2,3} 以及恰含 {1,2,3} 中一个顶点的 9 个三元组"""
    edges = [(1, 2, 3)] + [(i, b, c) for i in (1, 2, 3) for b, c in ((4, 5), (4, 6), (5, 6))]
    return Hypergraph(6, 3, tuple(edges))


def build_k53_minus() -> Hypergraph:
    return complete(5, 3).without_edge((1, 2, 3))


@dataclass(frozen=True)
class FamilyCatalogEntry:
    name: str
    description: str
    builder: Callable[..., Family]
    # 参数名 ("n" / "r") 与最小值；None 表示无参数
    param: Optional[str] = None
    min_param: Optional[int] = None
    default_param: Optional[int] = None
    expected: Optional[Callable[[Optional[int]], sp.Expr]] = None
    # "exact" | "bound"
    expected_kind: Optional[str] = None
    # 上界由另一个条目的 λ 给出 (FF₆ ≤ λ(T₆))
    bound_ref: Optional[str] = None
    source: str = ""
    intersecting: Flag = True
    covers_pairs: Flag = True
    tolerance: float = 1e-9

    def build(self, value: Optional[int] = None) -> Family:
        if self.param is None:
            return self.builder()
        value = self.default_param if value is None else value
        if value is None:
            raise ValueError(f"family '{self.name}' needs parameter {self.param}")
        if self.min_param is not None and value < self.min_param:
            raise ValueError(f"family '{self.name}' needs {self.param} ≥ {self.min_param}, got {value}")
        return self.builder(value)

    def expected_lambda(self, value: Optional[int] = None) -> Optional[sp.Expr]:
        if self.expected is None:
            return None
        return sp.sympify(self.expected(value if value is not None else self.default_param))

    def expects_intersecting(self, value: Optional[int] = None) -> bool:
        return _flag(self.intersecting, value if value is not None else self.default_param)

    def expects_covers_pairs(self, value: Optional[int] = None) -> bool:
        return _flag(self.covers_pairs, value if value is not None else self.default_param)


def _flag(flag: Flag, value: Optional[int]) -> bool:
    return flag(value) if callable(flag) else flag


def _const(expr) -> Callable[[Optional[int]], sp.Expr]:
    return lambda _n: sp.sympify(expr)


_sqrt = sp.sqrt
_BLOCKED = sp.Rational(2, 25) - sp.Rational(1, 1000)

CATALOG: Dict[str, FamilyCatalogEntry] = {
    e.name: e
    for e in [
        FamilyCatalogEntry(
            "K5_3", "complete 3-graph on 5 vertices", lambda: complete(5, 3),
            expected=_const(sp.Rational(2, 25)), expected_kind="exact",
            source="uniform weights (every permutation is an automorphism)",
        ),
        FamilyCatalogEntry(
            "K5_3_minus", "K5^3 with edge {1,2,3} removed", build_k53_minus,
            expected=_const((13 * _sqrt(13) - 35) / 162), expected_kind="exact",
            source="orbits {1,2,3},{4,5}: (3/4)(x − 2x² − 3x³) at x = (√13 − 2)/9", tolerance=1e-8,
        ),
        FamilyCatalogEntry(
            "F7", "Fano plane", lambda: Hypergraph(7, 3, F7_LINES),
            expected=_const(sp.Rational(1, 27)), expected_kind="exact",
            source="one edge with weight 1/3 each; full support is impossible",
        ),
        FamilyCatalogEntry(
            "FF6", "{i,i+1,i+2}, {i,i+2,6} for i in [5] (residues mod 5)", build_ff6,
            expected_kind="bound", bound_ref="T6",
            source="FF6 is contained in T6 up to isomorphism",
        ),
        FamilyCatalogEntry(
            "T6", "three parts of size 2: transversals plus cyclic 2-1 triples", build_t6,
            expected=_const(sp.Rational(7, 108)), expected_kind="bound",
            source="summing the three link equations", intersecting=False,
        ),
        FamilyCatalogEntry(
            "F6", "{1,2,3} plus all triples with exactly one vertex in {1,2,3}", build_f6,
            expected=_const((9 + _sqrt(6)) / 225), expected_kind="exact",
            source="orbits {1,2,3},{4,5,6}: 10x³ − 6x² + x at x = (6 − √6)/30", tolerance=1e-8,
        ),
        FamilyCatalogEntry(
            "star", "Gen(n,3,pt): all triples through vertex 1", lambda n: generate(n, 3, PT),
            param="n", min_param=3, default_param=9,
            expected=lambda n: sp.Rational(n - 2, n - 1) * sp.Rational(2, 27), expected_kind="exact",
            source="(n−2)/(2(n−1))·x²(1−x) at x = 2/3",
        ),
        FamilyCatalogEntry(
            "gen_K3", "Gen(n,3,K3): triples containing a pair of {1,2,3}", lambda n: generate(n, 3, K3),
            param="n", min_param=3, default_param=6,
            expected=lambda n: sp.Rational(1, 16) if n >= 4 else sp.Rational(1, 27), expected_kind="exact",
            source="3x² − 8x³ at x = 1/4 (n = 3 is a single edge)",
            covers_pairs=lambda n: n <= 4,
        ),
        FamilyCatalogEntry(
            "gen_F4", "Gen(n,3,F4)", lambda n: generate(n, 3, F4),
            param="n", min_param=4, default_param=7,
            expected=_const(_BLOCKED), expected_kind="bound",
            source="vertex 5 dominates every i ≥ 6; reduces to a 5-vertex graph missing {2,3,5}",
            covers_pairs=lambda n: n <= 5,
        ),
        FamilyCatalogEntry(
            "gen_R5", "Gen(n,3,R5)", lambda n: generate(n, 3, R5),
            param="n", min_param=5, default_param=7,
            expected=_const(_BLOCKED), expected_kind="bound",
            source="vertex 5 dominates every i ≥ 6; reduces to a 5-vertex graph missing {2,3,5}",
            covers_pairs=lambda n: n <= 5,
        ),
        FamilyCatalogEntry(
            "K6_3", "complete 3-graph on 6 vertices", lambda: complete(6, 3),
            expected=_const(sp.Rational(20, 216)), expected_kind="exact",
            source="uniform weights", intersecting=False,
        ),
        FamilyCatalogEntry("pt", "generating family {{1}}", lambda: PT),
        FamilyCatalogEntry("K3", "generating family: triangle", lambda: K3),
        FamilyCatalogEntry("F4", "generating family {12,13,14,234}", lambda: F4),
        FamilyCatalogEntry("R5", "generating family {12,14,135,234,245}", lambda: R5),
        FamilyCatalogEntry(
            "turan_t53", "balanced blow-up of K5^3", build_turan_t53,
            param="n", min_param=5, default_param=10,
            expected=_const(sp.Rational(2, 25)), expected_kind="exact",
            source="blow-ups keep the lagrangian",
            intersecting=lambda n: n == 5, covers_pairs=lambda n: n == 5,
        ),
        FamilyCatalogEntry(
            "k333", "the 15-vertex 11-edge pattern K^r_{r,r}", build_k333,
            param="r", min_param=3, default_param=3,
            intersecting=False, covers_pairs=False,
        ),
    ]
}


def get_entry(name: str) -> FamilyCatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown family '{name}' (known: {', '.join(sorted(CATALOG))})") from None


def build_named(name: str, n: Optional[int] = None) -> Family:
    """按名字构造；参数化条目的 n (k333 为 r) 缺省时使用条目默认值"""
    return get_entry(name).build(n)


def check_flags(name: str, n: Optional[int] = None) -> Dict[str, bool]:
    """构造结果与目录声明的标志是否一致"""
    entry = get_entry(name)
    family = entry.build(n)
    found_int = is_intersecting(family)
    found_cov = covers_pairs(family)
    return {
        "intersecting": found_int == entry.expects_intersecting(n),
        "covers_pairs": found_cov == entry.expects_covers_pairs(n),
    }


def catalog_table() -> pd.DataFrame:
    """families list 使用的目录表"""
    rows: List[dict] = []
    for entry in CATALOG.values():
        family = entry.build()
        expected = entry.expected_lambda()
        if entry.bound_ref:
            shown = f"≤ λ({entry.bound_ref})"
        elif expected is None:
            shown = ""
        else:
            prefix = "≤ " if entry.expected_kind == "bound" else ""
            shown = f"{prefix}{sp.sstr(expected)} ≈ {float(expected):.10f}"
        rows.append(
            {
                "name": entry.name,
                "param": f"{entry.param}={entry.default_param}" if entry.param else "",
                "kind": "hypergraph" if isinstance(family, Hypergraph) else "set-family",
                "vertices": family.n,
                "members": len(family),
                "expected_lambda": shown,
                "intersecting": entry.expects_intersecting(),
                "covers_pairs": entry.expects_covers_pairs(),
            }
        )
    return pd.DataFrame(rows)
