"""
规范型与自同构

规范型：度 / 对度不变量作为初始着色，迭代细化，再在个体化树上回溯；
已发现的自同构用于剪枝同一轨道内的兄弟分支。两个对象规范标签相同当且仅当同构。
"""

import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .structures import Family, Hypergraph, Member, Partition, same_kind

Label = Tuple[int, Tuple[Member, ...]]


@dataclass(frozen=True)
class CanonicalForm:
    """label = (n, 重编号后的成员元组)；relabeling: 原顶点 → 规范顶点"""

    label: Label
    relabeling: Dict[int, int]

    @property
    def digest(self) -> str:
        return hashlib.sha256(repr(self.label).encode()).hexdigest()[:16]

    def representative(self, template: Family) -> Family:
        return same_kind(template, self.label[0], self.label[1])


class _Refiner:
    def __init__(self, n: int, members: Sequence[Member]):
        self.n = n
        self.members = [tuple(v - 1 for v in m) for m in members]
        self.incidence: List[List[Tuple[int, ...]]] = [[] for _ in range(n)]
        for m in self.members:
            for v in m:
                self.incidence[v].append(m)

    def initial_colors(self) -> List[int]:
        codeg: Dict[Tuple[int, int], int] = {}
        for m in self.members:
            for p in combinations(m, 2):
                codeg[p] = codeg.get(p, 0) + 1
        sigs = []
        for v in range(self.n):
            sizes = tuple(sorted(len(m) for m in self.incidence[v]))
            pair_profile = tuple(sorted(codeg.get((min(u, v), max(u, v)), 0) for u in range(self.n) if u != v))
            sigs.append((sizes, pair_profile))
        return self._rank(sigs)

    @staticmethod
    def _rank(sigs: Sequence) -> List[int]:
        order = {s: k for k, s in enumerate(sorted(set(sigs)))}
        return [order[s] for s in sigs]

    def refine(self, colors: List[int]) -> List[int]:
        cells = len(set(colors))
        while True:
            sigs = []
            for v in range(self.n):
                around = sorted(
                    (len(m), tuple(sorted(colors[u] for u in m if u != v))) for m in self.incidence[v]
                )
                sigs.append((colors[v], tuple(around)))
            new = self._rank(sigs)
            new_cells = len(set(new))
            if new_cells == cells:
                return new
            colors, cells = new, new_cells

    def certificate(self, colors: Sequence[int]) -> Tuple[Member, ...]:
        return tuple(sorted(tuple(sorted(colors[v] + 1 for v in m)) for m in self.members))


def _individualize(colors: Sequence[int], v: int) -> List[int]:
    out = [2 * c + 1 for c in colors]
    out[v] = 2 * colors[v]
    return out


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _CanonicalSearch:
    def __init__(self, family: Family):
        self.n = family.n
        self.refiner = _Refiner(family.n, family.members)
        self.best_cert: Optional[Tuple[Member, ...]] = None
        self.best_colors: Optional[List[int]] = None
        self.automorphisms: List[List[int]] = []

    def run(self) -> CanonicalForm:
        if self.n == 0:
            return CanonicalForm((0, ()), {})
        colors = self.refiner.refine(self.refiner.initial_colors())
        self._descend(colors, [])
        assert self.best_colors is not None and self.best_cert is not None
        relabeling = {v + 1: self.best_colors[v] + 1 for v in range(self.n)}
        return CanonicalForm((self.n, self.best_cert), relabeling)

    def _leaf(self, colors: List[int]) -> None:
        cert = self.refiner.certificate(colors)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_colors = cert, colors
        elif cert == self.best_cert:
            # 两片叶子给出同一标签：best⁻¹ ∘ colors 是自同构
            inverse = [0] * self.n
            for v, c in enumerate(self.best_colors):
                inverse[c] = v
            self.automorphisms.append([inverse[colors[v]] for v in range(self.n)])

    def _descend(self, colors: List[int], fixed: List[int]) -> None:
        counts: Dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        targets = [c for c in sorted(counts) if counts[c] > 1]
        if not targets:
            self._leaf(colors)
            return
        cell_color = targets[0]
        cell = [v for v in range(self.n) if colors[v] == cell_color]
        explored: List[int] = []
        for v in cell:
            if explored and self._equivalent(v, explored, fixed):
                continue
            explored.append(v)
            child = self.refiner.refine(_individualize(colors, v))
            self._descend(child, fixed + [v])

    def _equivalent(self, v: int, explored: List[int], fixed: List[int]) -> bool:
        gens = [a for a in self.automorphisms if all(a[f] == f for f in fixed)]
        if not gens:
            return False
        uf = _UnionFind(self.n)
        for a in gens:
            for x in range(self.n):
                uf.union(x, a[x])
        root = uf.find(v)
        return any(uf.find(w) == root for w in explored)


def canonical_form(family: Family) -> CanonicalForm:
    """规范标签 + 重编号；对 Hypergraph 与 SetFamily 均适用"""
    return _CanonicalSearch(family).run()


def canonical_id(family: Family) -> str:
    return canonical_form(family).digest


def is_isomorphic(a: Family, b: Family) -> bool:
    if a.n != b.n or len(a) != len(b):
        return False
    if isinstance(a, Hypergraph) and isinstance(b, Hypergraph) and a.r != b.r:
        return False
    return canonical_form(a).label == canonical_form(b).label


def automorphism_orbits(family: Family) -> Partition:
    """i ∼ j 当且仅当对换 (ij) 是自同构；返回等价类划分"""
    n = family.n
    present = family.member_set
    uf = _UnionFind(n + 1)
    for i, j in combinations(range(1, n + 1), 2):
        if uf.find(i) == uf.find(j):
            continue
        ok = True
        for m in family.members:
            if (i in m) != (j in m):
                swapped = tuple(sorted(j if v == i else i if v == j else v for v in m))
                if swapped not in present:
                    ok = False
                    break
        if ok:
            uf.union(i, j)
    groups: Dict[int, set] = {}
    for v in range(1, n + 1):
        groups.setdefault(uf.find(v), set()).add(v)
    return Partition(n, tuple(frozenset(g) for g in groups.values()))
