"""
对称化使用的数据结构

PointedPartitionedHypergraph  (G, 𝒫, U)：G 的地面集保持为原始 [n]，存活顶点集合记为 V，
                              parts 把每个 U 中的点映射到它所在的部分
SymmetrizationLog             H₀, H′₁, H₁, … 的快照序列与逐步事件
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from ..hypergraph.structures import Hypergraph, Partition


@dataclass(frozen=True)
class PointedPartitionedHypergraph:
    graph: Hypergraph
    vertices: FrozenSet[int]
    parts: Mapping[int, FrozenSet[int]]
    # 顶点 → 离开 U 的轮次；Cleaning 先删除较早离开 U 的顶点，保证每个旧部分的点最后被删
    retired: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def initial(cls, graph: Hypergraph) -> "PointedPartitionedHypergraph":
        """全部顶点存活、每个顶点单独成一部分"""
        return cls(graph, frozenset(graph.vertices), {v: frozenset({v}) for v in graph.vertices})

    @property
    def points(self) -> Tuple[int, ...]:
        """U (升序)"""
        return tuple(sorted(self.parts))

    @property
    def size(self) -> Tuple[int, int]:
        """(|V|, |U|)"""
        return len(self.vertices), len(self.parts)

    @property
    def partition(self) -> Partition:
        return Partition(self.graph.n, tuple(self.parts.values()), carrier=self.vertices)

    def owner(self) -> Dict[int, int]:
        """顶点 → 所在部分的点"""
        return {v: u for u, part in self.parts.items() for v in part}

    def violations(self) -> List[str]:
        """不满足 (G, 𝒫, U) 定义的地方；空列表表示合法"""
        problems = []
        seen: set = set()
        for u, part in sorted(self.parts.items()):
            if u not in part:
                problems.append(f"point {u} not in its part {sorted(part)}")
            if seen & part:
                problems.append(f"part of {u} overlaps another part")
            seen |= part
        if seen != set(self.vertices):
            problems.append(f"parts cover {sorted(seen)} instead of V = {sorted(self.vertices)}")
        stray = [e for e in self.graph.edges if not self.vertices.issuperset(e)]
        if stray:
            problems.append(f"{len(stray)} edges leave V, e.g. {stray[0]}")
        return problems

    def degrees(self) -> Dict[int, int]:
        return self.graph.degrees()

    def same_state(self, other: "PointedPartitionedHypergraph") -> bool:
        return (
            self.vertices == other.vertices
            and dict(self.parts) == dict(other.parts)
            and self.graph.member_set == other.graph.member_set
        )

    def to_dict(self, with_edges: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "n": self.graph.n,
            "vertices": sorted(self.vertices),
            "points": list(self.points),
            "parts": {str(u): sorted(p) for u, p in sorted(self.parts.items())},
            "edges": self.graph.m,
        }
        if with_edges:
            payload["edge_list"] = [list(e) for e in self.graph.edges]
        return payload


@dataclass
class MergeEvent:
    step: int
    kept: int
    merged: int
    # 合并前 P′_u / P′_v 与两个点在 H′_i 中的度
    kept_part: FrozenSet[int]
    merged_part: FrozenSet[int]
    degree_kept: int
    degree_merged: int
    edges_before: int
    edges_after: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "kept": self.kept,
            "merged": self.merged,
            "kept_part": sorted(self.kept_part),
            "merged_part": sorted(self.merged_part),
            "degree_kept": self.degree_kept,
            "degree_merged": self.degree_merged,
            "edges_before": self.edges_before,
            "edges_after": self.edges_after,
        }


@dataclass
class SymmetrizationLog:
    """
    states[0] = H₀；之后每轮追加 (H′_i, H_i)，即 cleaned[i-1] / merged[i-1]
    """

    initial: PointedPartitionedHypergraph
    alpha: float
    cleaned: List[PointedPartitionedHypergraph] = field(default_factory=list)
    merged: List[PointedPartitionedHypergraph] = field(default_factory=list)
    deletions: List[Dict[str, Any]] = field(default_factory=list)
    merges: List[MergeEvent] = field(default_factory=list)
    random_order: bool = False
    seed: Optional[int] = None

    @property
    def rounds(self) -> int:
        return len(self.merged)

    @property
    def states(self) -> List[PointedPartitionedHypergraph]:
        """H₀, H₁, …, H_ℓ"""
        return [self.initial] + self.merged

    @property
    def final(self) -> PointedPartitionedHypergraph:
        return self.merged[-1] if self.merged else self.initial

    @property
    def ratio(self) -> float:
        """|V(ℱ_sym)| / n"""
        n = self.initial.graph.n
        return len(self.final.vertices) / n if n else 0.0

    def snapshots(self) -> Iterable[Tuple[str, PointedPartitionedHypergraph]]:
        yield "H0", self.initial
        for i, (c, m) in enumerate(zip(self.cleaned, self.merged), start=1):
            yield f"H'{i}", c
            yield f"H{i}", m

    def to_dict(self, with_edges: bool = False) -> Dict[str, Any]:
        final = self.final
        return {
            "alpha": self.alpha,
            "random_order": self.random_order,
            "seed": self.seed,
            "n": self.initial.graph.n,
            "rounds": self.rounds,
            "final": final.to_dict(with_edges=with_edges),
            "ratio": self.ratio,
            "deletions": self.deletions,
            "merges": [m.to_dict() for m in self.merges],
            "trajectory": [{"state": name, "size": list(s.size), "edges": s.graph.m} for name, s in self.snapshots()],
        }


@dataclass
class PartitionScore:
    parts: Tuple[FrozenSet[int], ...]
    sigma: int
    good: int
    bad: int
    very_bad: int

    @property
    def identity_holds(self) -> bool:
        """Σ = #bad + 2·#very-bad"""
        return self.sigma == self.bad + 2 * self.very_bad

    def to_dict(self) -> Dict[str, Any]:
        return {
            "parts": [sorted(p) for p in self.parts],
            "sigma": self.sigma,
            "good": self.good,
            "bad": self.bad,
            "very_bad": self.very_bad,
            "identity_holds": self.identity_holds,
        }


@dataclass
class PeelLog:
    initial: Hypergraph
    final: Hypergraph
    order: List[int] = field(default_factory=list)
    # 每一步删除前的 (存活顶点数, 删除顶点的度, δ₅³, f)
    steps: List[Dict[str, int]] = field(default_factory=list)
    potentials: List[int] = field(default_factory=list)
    alive: FrozenSet[int] = frozenset()
    halted_by_guard: bool = False

    @property
    def monotone(self) -> bool:
        """每次删除后势函数 f 至少增加 1"""
        return all(b >= a + 1 for a, b in zip(self.potentials, self.potentials[1:]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.initial.n,
            "initial_edges": self.initial.m,
            "final_edges": self.final.m,
            "order": self.order,
            "steps": self.steps,
            "potentials": self.potentials,
            "alive": sorted(self.alive),
            "halted_by_guard": self.halted_by_guard,
            "monotone": self.monotone,
        }


@dataclass
class AuditReport:
    passed: bool
    checks: List[Dict[str, Any]]
    failure: Optional[Dict[str, Any]] = None
    notices: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": self.checks, "failure": self.failure, "notices": self.notices}
