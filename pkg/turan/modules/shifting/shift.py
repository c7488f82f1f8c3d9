"""
相交族的 shift

规则：只要存在 i ∈ A ∈ ℱ 使 ℱ′ = (ℱ ∖ {A}) ∪ {A ∖ {i}} 仍相交，就用 ℱ′ 替换 ℱ 并重复。
A ∖ {i} 已在 ℱ 中时两者合并为一个成员；A ∖ {i} 为空的移动不合法。

deterministic  每次取字典序最小的 A，再取最小的可删 i
all            深度优先遍历所有移动顺序，按规范型去重 (同构的状态只展开一次)，
               返回每个终止同构类的一条轨迹
"""

from dataclasses import dataclass, field
from typing import List, Optional, Set, Tuple, Union

from ...core.config import settings
from ...core.errors import GuardExceededError, PreconditionError, VerificationError
from ...core.logger import logger
from ..families.catalog import F4, K3, R5
from ..hypergraph.canonical import canonical_form, is_isomorphic
from ..hypergraph.operations import generate, is_intersecting, is_maximal_intersecting, restrict
from ..hypergraph.structures import Family, Hypergraph, Member, SetFamily, as_family

Move = Tuple[Member, int]


@dataclass
class ShiftTrace:
    initial: SetFamily
    final: SetFamily
    steps: List[Move] = field(default_factory=list)

    def replay(self) -> List[SetFamily]:
        """按步骤重放，逐步检查相交性；返回全部中间族 (含首尾)"""
        states = [self.initial]
        current = self.initial
        for k, (member, i) in enumerate(self.steps):
            if (member, i) not in legal_moves(current):
                raise VerificationError("shift-trace", f"step {k}: move {member} − {i} is not legal", current)
            current = apply_move(current, member, i)
            if not is_intersecting(current):
                raise VerificationError("shift-trace", f"step {k}: family stopped intersecting", current)
            states.append(current)
        if current.member_set != self.final.member_set:
            raise VerificationError("shift-trace", "replay does not reach the recorded final family", current)
        return states

    def to_dict(self) -> dict:
        return {
            "initial": [list(m) for m in self.initial.members],
            "final": [list(m) for m in self.final.members],
            "steps": [{"set": list(a), "removed": i} for a, i in self.steps],
            "type": shift_type(self.final),
        }


def legal_moves(family: Family) -> List[Move]:
    """全部合法移动 (A, i)，按 A 的字典序、再按 i 升序"""
    members = family.members
    masks = family.masks
    moves: List[Move] = []
    for idx, member in enumerate(members):
        if len(member) < 2:
            continue
        others = masks[:idx] + masks[idx + 1:]
        for i in member:
            reduced = masks[idx] & ~(1 << i)
            if all(reduced & b for b in others):
                moves.append((member, i))
    return moves


def apply_move(family: Family, member: Member, i: int) -> SetFamily:
    reduced = tuple(v for v in member if v != i)
    rest = [m for m in family.members if m != member]
    if reduced not in rest:
        rest.append(reduced)
    return SetFamily(family.n, tuple(rest))


def _prepare(family: Family) -> SetFamily:
    fam = as_family(family)
    if not is_intersecting(fam):
        raise PreconditionError("shift requires an intersecting family")
    return fam


def shift_deterministic(family: Family) -> ShiftTrace:
    current = _prepare(family)
    trace = ShiftTrace(initial=current, final=current)
    while True:
        moves = legal_moves(current)
        if not moves:
            break
        member, i = moves[0]
        current = apply_move(current, member, i)
        trace.steps.append((member, i))
    trace.final = current
    return trace


def shift_all(family: Family) -> List[ShiftTrace]:
    start = _prepare(family)
    if len(start) > settings.SHIFT_EXPLORE_MAX_SETS:
        raise GuardExceededError(
            f"exploring all shift orders is limited to {settings.SHIFT_EXPLORE_MAX_SETS} sets, got {len(start)}"
        )
    seen: Set[tuple] = {canonical_form(start).label}
    terminal_labels: Set[tuple] = set()
    traces: List[ShiftTrace] = []
    stack: List[Tuple[SetFamily, List[Move]]] = [(start, [])]
    expanded = 0
    while stack:
        current, steps = stack.pop()
        expanded += 1
        moves = legal_moves(current)
        if not moves:
            label = canonical_form(current).label
            if label not in terminal_labels:
                terminal_labels.add(label)
                traces.append(ShiftTrace(initial=start, final=current, steps=steps))
            continue
        children = []
        for member, i in moves:
            child = apply_move(current, member, i)
            label = canonical_form(child).label
            if label in seen:
                continue
            seen.add(label)
            children.append((child, steps + [(member, i)]))
        # 逆序入栈，使字典序最小的移动先被展开
        stack.extend(reversed(children))
    logger.debug(f"shift 遍历: {expanded} 个状态, {len(traces)} 个终止类型")
    return traces


def shift(family: Family, policy: str = "deterministic") -> Union[ShiftTrace, List[ShiftTrace]]:
    if policy in ("deterministic", "det"):
        return shift_deterministic(family)
    if policy == "all":
        return shift_all(family)
    raise ValueError(f"unknown shift policy '{policy}' (deterministic | all)")


def verify_unique_intersection(family: Family) -> bool:
    """对每个 i ∈ A ∈ ℱ，存在 B ∈ ℱ 使 A ∩ B = {i}"""
    masks = family.masks
    for a, member in zip(masks, family.members):
        for i in member:
            target = 1 << i
            if not any(a & b == target for b in masks):
                return False
    return True


def is_antichain(family: Family) -> bool:
    masks = family.masks
    for x in masks:
        for y in masks:
            if x != y and x & y == x:
                return False
    return True


def verify_gen_shift(graph: Hypergraph, trace: Optional[ShiftTrace] = None) -> bool:
    """Gen(n, r, S(ℱ)) = ℱ；S(ℱ) 默认取 deterministic 策略"""
    if not is_maximal_intersecting(graph):
        raise PreconditionError("verify_gen_shift requires a maximal intersecting family")
    trace = trace or shift_deterministic(graph)
    return generate(graph.n, graph.r, trace.final).member_set == graph.member_set


def shift_type(family: Family) -> str:
    """pt / K3 / uniform / F4 / R5 / mixed"""
    sizes = {len(m) for m in family.members}
    if 1 in sizes:
        return "pt"
    core = restrict(family, family.non_isolated())
    if sizes == {2}:
        return "K3" if is_isomorphic(core, K3) else "mixed"
    if len(sizes) == 1:
        return "uniform"
    if is_isomorphic(core, F4):
        return "F4"
    if is_isomorphic(core, R5):
        return "R5"
    return "mixed"
