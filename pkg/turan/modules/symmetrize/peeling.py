"""
最小度剥离

当前图有 m 个存活顶点且最小度 < δ₅³(m) 时删除一个最小度顶点 (并列取最小下标)。
势函数 f(m) = e(H_m) − t₅³(m)；每删除一次 f 至少增加 1。
"""

from ...core.errors import PreconditionError, VerificationError
from ...core.logger import logger
from ..families.constructions import delta53_count, t53_count
from ..hypergraph.operations import delete_vertices
from ..hypergraph.structures import Hypergraph
from .structures import PeelLog

MIN_ALIVE = 6


def peel_min_degree(graph: Hypergraph, strict: bool = True) -> PeelLog:
    if graph.r != 3:
        raise PreconditionError(f"peel_min_degree expects a 3-graph, got r={graph.r}")
    if graph.n < MIN_ALIVE:
        raise PreconditionError(f"peel_min_degree needs n ≥ {MIN_ALIVE}, got {graph.n}")

    alive = set(graph.vertices)
    current = graph
    log = PeelLog(initial=graph, final=graph)
    log.potentials.append(current.m - t53_count(len(alive)))
    while True:
        m = len(alive)
        if m < MIN_ALIVE:
            log.halted_by_guard = True
            break
        degrees = current.degrees()
        v = min(alive, key=lambda w: (degrees[w], w))
        schedule = delta53_count(m)
        if degrees[v] >= schedule:
            break
        current = delete_vertices(current, [v])
        alive.discard(v)
        log.order.append(v)
        log.steps.append({"alive": m, "vertex": v, "degree": degrees[v], "delta53": schedule})
        log.potentials.append(current.m - t53_count(len(alive)))

    log.final = current
    log.alive = frozenset(alive)
    if strict and not log.monotone:
        raise VerificationError("peel-potential", "f did not increase by at least 1 per deletion", log.to_dict())
    logger.debug(f"peel: 删除 {len(log.order)} 个顶点, 剩余 {len(alive)}, guard={log.halted_by_guard}")
    return log
