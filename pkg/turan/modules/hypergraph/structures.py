"""
超图与集族的基础数据结构

顶点一律为 1..n 的连续整数；孤立顶点合法并被保留。
所有对象构造后不可变，可在线程之间安全共享。
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

Member = Tuple[int, ...]


def _normalize_members(n: int, members: Iterable[Iterable[int]], kind: str) -> Tuple[Member, ...]:
    seen = set()
    out: List[Member] = []
    for raw in members:
        member = tuple(sorted(int(v) for v in raw))
        if not member:
            raise ValueError(f"{kind}: empty member")
        if len(set(member)) != len(member):
            raise ValueError(f"{kind}: repeated vertex in {member}")
        if member[0] < 1 or member[-1] > n:
            raise ValueError(f"{kind}: vertex out of range in {member} (n={n})")
        if member in seen:
            raise ValueError(f"{kind}: duplicate member {member}")
        seen.add(member)
        out.append(member)
    out.sort()
    return tuple(out)


class _FamilyMixin:
    """Hypergraph / SetFamily 共用的只读接口"""

    n: int

    @property
    def members(self) -> Tuple[Member, ...]:  # pragma: no cover - overridden
        raise NotImplementedError

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def member_set(self) -> FrozenSet[Member]:
        return frozenset(self.members)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """每个成员的位掩码 (第 v 位表示顶点 v)"""
        return tuple(sum(1 << v for v in m) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Member]:
        return iter(self.members)

    def __contains__(self, item: Iterable[int]) -> bool:
        return tuple(sorted(item)) in self.member_set

    def incident(self, v: int) -> Tuple[Member, ...]:
        return tuple(m for m in self.members if v in m)

    def degree(self, v: int) -> int:
        return sum(1 for m in self.members if v in m)

    def degrees(self) -> Dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for m in self.members:
            for v in m:
                deg[v] += 1
        return deg

    def non_isolated(self) -> Tuple[int, ...]:
        return tuple(sorted({v for m in self.members for v in m}))


@dataclass(frozen=True)
class Hypergraph(_FamilyMixin):
    """r 一致超图：n 个顶点，边为有序 r 元组，按字典序存储"""

    n: int
    r: int
    edges: Tuple[Member, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Hypergraph: negative ground set size {self.n}")
        if self.r < 1:
            raise ValueError(f"Hypergraph: uniformity must be ≥ 1, got {self.r}")
        edges = _normalize_members(self.n, self.edges, "Hypergraph")
        for e in edges:
            if len(e) != self.r:
                raise ValueError(f"Hypergraph: edge {e} has arity {len(e)}, expected {self.r}")
        object.__setattr__(self, "edges", edges)

    @property
    def members(self) -> Tuple[Member, ...]:
        return self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def with_edges(self, edges: Iterable[Iterable[int]], n: Optional[int] = None) -> "Hypergraph":
        return Hypergraph(self.n if n is None else n, self.r, tuple(edges))

    def without_edge(self, edge: Iterable[int]) -> "Hypergraph":
        target = tuple(sorted(edge))
        if target not in self.member_set:
            raise ValueError(f"edge {target} not in hypergraph")
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e != target))

    def with_isolated(self, extra: int) -> "Hypergraph":
        return Hypergraph(self.n + extra, self.r, self.edges)

    def as_family(self) -> "SetFamily":
        return SetFamily(self.n, self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={len(self.edges)})"


@dataclass(frozen=True)
class SetFamily(_FamilyMixin):
    """非一致集族：[n] 的非空子集，按字典序存储"""

    n: int
    sets: Tuple[Member, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"SetFamily: negative ground set size {self.n}")
        object.__setattr__(self, "sets", _normalize_members(self.n, self.sets, "SetFamily"))

    @property
    def members(self) -> Tuple[Member, ...]:
        return self.sets

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(sorted({len(s) for s in self.sets}))

    def is_uniform(self) -> bool:
        return len(self.sizes) <= 1

    def as_hypergraph(self) -> Hypergraph:
        if not self.sets:
            raise ValueError("empty family has no uniformity")
        if not self.is_uniform():
            raise ValueError(f"family is not uniform (sizes {self.sizes})")
        return Hypergraph(self.n, self.sizes[0], self.sets)

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, sets={[set(s) for s in self.sets]})"


Family = Union[Hypergraph, SetFamily]


def as_family(obj: Family) -> SetFamily:
    return obj.as_family() if isinstance(obj, Hypergraph) else obj


def same_kind(template: Family, n: int, members: Iterable[Iterable[int]]) -> Family:
    """按 template 的类型重建对象"""
    if isinstance(template, Hypergraph):
        return Hypergraph(n, template.r, tuple(members))
    return SetFamily(n, tuple(members))


@dataclass(frozen=True)
class Partition:
    """顶点划分：各部分两两不交、非空，并集等于 carrier (默认 [n])"""

    n: int
    parts: Tuple[FrozenSet[int], ...]
    carrier: Optional[FrozenSet[int]] = None

    def __post_init__(self) -> None:
        parts = tuple(sorted((frozenset(p) for p in self.parts), key=lambda p: min(p) if p else 0))
        carrier = frozenset(range(1, self.n + 1)) if self.carrier is None else frozenset(self.carrier)
        covered: set = set()
        for p in parts:
            if not p:
                raise ValueError("Partition: empty part")
            if covered & p:
                raise ValueError(f"Partition: overlapping part {sorted(p)}")
            covered |= p
        if covered != carrier:
            raise ValueError(
                f"Partition: union {sorted(covered)} differs from carrier {sorted(carrier)}"
            )
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "carrier", carrier)

    @cached_property
    def index(self) -> Dict[int, int]:
        """顶点 → 所在部分的下标"""
        return {v: k for k, part in enumerate(self.parts) for v in part}

    def part_of(self, v: int) -> FrozenSet[int]:
        return self.parts[self.index[v]]

    def as_lists(self) -> List[List[int]]:
        return [sorted(p) for p in self.parts]

    def __len__(self) -> int:
        return len(self.parts)


def all_rsets(n: int, r: int) -> Iterator[Member]:
    return combinations(range(1, n + 1), r)


def vertex_sequence(vertices: Iterable[int]) -> Sequence[int]:
    return sorted(set(int(v) for v in vertices))
