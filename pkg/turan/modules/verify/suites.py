"""
verify-all 的七组校验

1 closed-forms      目录闭式 / 上界
2 theorem           主定理分支
3 classification    普查恒等式与独立对照
4 constructions     T₅³(n) 计数
5 freeness          𝒦³₃,₃ 同态
6 properties        随机性质战役 (规模由 VerifyPlan 控制)
7 reproducibility   相同 seed 两次运行摘要一致
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ...core.config import settings
from ...core.logger import logger
from ...core.report import build_check, build_suite, result_digest
from ...core.utils import make_rng
from ..classify.census import CensusRecord, enumerate_maximal_intersecting
from ..classify.verification import oracle_check, verify_pair_cover_classification, verify_theorem_main3int
from ..families.catalog import build_named, get_entry
from ..families.constructions import build_turan_t53, delta53_count, t53_block_census, t53_count, t53_fit_constant
from ..hypergraph.homomorphism import contains_k333_hom
from ..hypergraph.operations import blow_up, minimum_degree
from ..hypergraph.structures import Hypergraph, all_rsets
from ..lagrangian.exact import exact_catalog_check, symbolic_lagrangian
from ..lagrangian.optimizer import default_options, maximize
from ..lagrangian.polynomial import poly_eval, poly_grad
from ..shifting.shift import is_antichain, shift_deterministic, verify_gen_shift, verify_unique_intersection
from ..symmetrize.audit import audit_properties
from ..symmetrize.peeling import peel_min_degree
from ..symmetrize.process import symmetrize
from ..symmetrize.scoring import PARTS, best_destination, edge_goodness

# 闭式校验的 (名字, 参数) 列表
CLOSED_FORM_CASES = (
    [("K5_3", None), ("F7", None), ("K5_3_minus", None), ("F6", None), ("T6", None), ("FF6", None), ("K6_3", None)]
    + [("gen_K3", n) for n in range(3, 10)]
    + [("star", n) for n in range(4, 13)]
)
BLOWUP_FAMILIES = ("K5_3", "F7", "K5_3_minus", "F6", "FF6")


@dataclass
class VerifyPlan:
    """战役规模；单元测试用缩小的计划走同样的代码路径"""

    seed: int = settings.DEFAULT_SEED
    jobs: int = 1
    quick: bool = False
    census_ns: tuple = (5, 6, 7)
    star_max: int = 50
    gen_max: int = 12
    counts_materialized: int = 60
    counts_blocks: int = 500
    freeness_max: int = 40
    monotone_pairs: int = 200
    symmetrize_inputs: int = 200
    symmetrize_max_n: int = 40
    partition_samples: int = 1000
    gradient_samples: int = 50
    peel_samples: int = 20
    censuses: Dict[int, List[CensusRecord]] = field(default_factory=dict)

    def census(self, n: int) -> List[CensusRecord]:
        if n not in self.censuses:
            self.censuses[n] = enumerate_maximal_intersecting(n, seed=self.seed, jobs=self.jobs)
        return self.censuses[n]


def suite_closed_forms(plan: VerifyPlan) -> Dict[str, Any]:
    checks = []
    for name, n in CLOSED_FORM_CASES:
        family = build_named(name, n)
        checks.append(exact_catalog_check(name, n, options=default_options(family, seed=plan.seed)))
    # 单变量推导与目录闭式一致
    for name in ("K5_3_minus", "F6"):
        reduction = symbolic_lagrangian(build_named(name))
        expected = float(get_entry(name).expected_lambda())
        found = float(reduction.maximum)
        checks.append(build_check(f"symbolic:{name}", abs(found - expected) <= 1e-12, expected=expected, found=found))
    return build_suite("closed-forms", checks)


def suite_theorem(plan: VerifyPlan) -> Dict[str, Any]:
    censuses = {n: plan.census(n) for n in plan.census_ns}
    return verify_theorem_main3int(
        census_ns=plan.census_ns, star_max=plan.star_max, gen_max=plan.gen_max,
        seed=plan.seed, jobs=plan.jobs, censuses=censuses,
    )


def suite_classification(plan: VerifyPlan, ns: Optional[tuple] = None) -> Dict[str, Any]:
    checks = []
    for n in ns or plan.census_ns:
        report = verify_pair_cover_classification(n, records=plan.census(n))
        checks.extend(report["checks"])
        if n in (5, 6):
            checks.append(oracle_check(n, plan.census(n)))
    return build_suite("classification", checks)


def suite_constructions(plan: VerifyPlan) -> Dict[str, Any]:
    checks = [
        build_check("t53(5)", t53_count(5) == 10, expected=10, found=t53_count(5)),
        build_check("t53(6)", t53_count(6) == 16, expected=16, found=t53_count(6)),
        build_check("t53(11)", t53_count(11) == 104, expected=104, found=t53_count(11)),
    ]
    bad_materialized = []
    for n in range(6, plan.counts_materialized + 1):
        graph = build_turan_t53(n)
        if graph.m != t53_count(n) or minimum_degree(graph) != delta53_count(n):
            bad_materialized.append(n)
    checks.append(build_check(
        f"t53-materialized(6..{plan.counts_materialized})", not bad_materialized, found=bad_materialized[:5],
    ))
    # 与 build_turan_t53 相同的边块，逐块计数，不展开边集
    bad_edges, bad_degree = [], []
    for n in range(6, plan.counts_blocks + 1):
        edges, degree = t53_block_census(n)
        if edges != t53_count(n):
            bad_edges.append(n)
        if min(degree.values()) != delta53_count(n) or delta53_count(n) != t53_count(n) - t53_count(n - 1):
            bad_degree.append(n)
    checks.append(build_check(f"t53-builder(6..{plan.counts_blocks})", not bad_edges, found=bad_edges[:5]))
    checks.append(build_check(f"delta53-builder(6..{plan.counts_blocks})", not bad_degree, found=bad_degree[:5]))
    fit = t53_fit_constant(plan.counts_blocks)
    logger.info(f"max |t53(n) − 2n³/25| / n² (n ≤ {plan.counts_blocks}) = {fit:.6f}")
    return build_suite("constructions", checks, fit_constant=fit)


def suite_freeness(plan: VerifyPlan) -> Dict[str, Any]:
    hits = [n for n in range(5, plan.freeness_max + 1) if contains_k333_hom(build_turan_t53(n))]
    checks = [build_check(f"T53(5..{plan.freeness_max}) hom-free", not hits, found=hits)]
    for n in plan.census_ns:
        bad = [r.canonical_id for r in plan.census(n) if contains_k333_hom(r.graph)]
        checks.append(build_check(f"census[{n}] hom-free", not bad, found=bad[:3]))
    checks.append(build_check("K6_3 contains K333 image", contains_k333_hom(build_named("K6_3")), expected=True))
    checks.append(build_check("K333 contains itself", contains_k333_hom(build_named("k333")), expected=True))
    return build_suite("freeness", checks)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Hypergraph:
    triples = list(all_rsets(n, 3))
    keep = rng.random(len(triples)) < p
    return Hypergraph(n, 3, tuple(t for t, k in zip(triples, keep) if k))


def random_subgraph(rng: np.random.Generator, graph: Hypergraph, p: float) -> Hypergraph:
    keep = rng.random(graph.m) < p
    return graph.with_edges(e for e, k in zip(graph.edges, keep) if k)


def campaign_monotonicity(plan: VerifyPlan, rng: np.random.Generator) -> Dict[str, Any]:
    worst, failures = 0.0, []
    for _ in range(plan.monotone_pairs):
        n = int(rng.integers(4, 7))
        big = random_graph(rng, n, float(rng.uniform(0.3, 0.9)))
        if big.m == 0:
            continue
        small = random_subgraph(rng, big, 0.7)
        if small.m == 0:
            continue
        lam_big = maximize(big, default_options(big, seed=plan.seed)).value
        lam_small = maximize(small, default_options(small, seed=plan.seed)).value
        excess = lam_small - lam_big
        worst = max(worst, excess)
        if excess > 1e-9:
            failures.append({"big": [list(e) for e in big.edges], "small": [list(e) for e in small.edges]})
    return build_check("monotone-under-inclusion", not failures, found=worst, failures=failures[:1])


def campaign_blowup(plan: VerifyPlan) -> Dict[str, Any]:
    worst = 0.0
    for name in BLOWUP_FAMILIES:
        base = build_named(name)
        lam = maximize(base, default_options(base, seed=plan.seed)).value
        for t in (2, 3):
            graph = blow_up(base, t)
            value = maximize(graph, default_options(graph, seed=plan.seed)).value
            worst = max(worst, abs(value - lam))
    return build_check("blowup-invariance", worst <= 1e-8, found=worst)


def campaign_gradient(plan: VerifyPlan, rng: np.random.Generator) -> Dict[str, Any]:
    worst = 0.0
    names = ("K5_3", "F7", "FF6", "F6", "T6", "K5_3_minus")
    h = 1e-6
    for k in range(plan.gradient_samples):
        family = build_named(names[k % len(names)])
        x = rng.dirichlet(np.ones(family.n))
        grad = poly_grad(family, x)
        for i in range(family.n):
            step = np.zeros(family.n)
            step[i] = h
            fd = (poly_eval(family, x + step) - poly_eval(family, x - step)) / (2 * h)
            worst = max(worst, abs(fd - grad[i]) / max(1.0, abs(grad[i])))
    return build_check("gradient-vs-finite-differences", worst <= 1e-6, found=worst)


def campaign_shift(plan: VerifyPlan) -> Dict[str, Any]:
    failures = []
    total = 0
    for n in plan.census_ns:
        for record in plan.census(n):
            total += 1
            trace = shift_deterministic(record.graph)
            final = trace.final
            if not (verify_unique_intersection(final) and is_antichain(final) and verify_gen_shift(record.graph, trace)):
                failures.append(record.to_row())
    return build_check("shift-census", not failures, found=total, failures=failures[:1])


def campaign_symmetrize(plan: VerifyPlan, rng: np.random.Generator) -> Dict[str, Any]:
    failures, ratios = [], []
    for k in range(plan.symmetrize_inputs):
        n = int(rng.integers(10, plan.symmetrize_max_n + 1))
        graph = random_subgraph(rng, build_turan_t53(n), float(rng.uniform(0.9, 1.0)))
        log = symmetrize(graph, random_order=bool(k % 2), seed=plan.seed + k)
        report = audit_properties(log)
        ratios.append(log.ratio)
        if not report.passed:
            failures.append({"n": n, "failure": report.failure})
    return build_check(
        "symmetrize-audit", not failures, found=len(ratios), failures=failures[:1],
        min_ratio=min(ratios, default=None),
    )


def campaign_partitions(plan: VerifyPlan, rng: np.random.Generator) -> Dict[str, Any]:
    failures = 0
    equivariance = 0
    for k in range(plan.partition_samples):
        n = int(rng.integers(5, 13))
        graph = random_graph(rng, n, float(rng.uniform(0.1, 0.6)))
        labels = rng.integers(0, PARTS, size=n)
        parts = [[v for v in graph.vertices if labels[v - 1] == p] for p in range(PARTS)]
        score = edge_goodness(graph, parts)
        recount = sum(1 for e in graph.edges if len({labels[v - 1] for v in e}) == 2)
        recount += 2 * sum(1 for e in graph.edges if len({labels[v - 1] for v in e}) == 1)
        if score.sigma != recount:
            failures += 1
        if k % 10 == 0:
            perm = rng.permutation(PARTS)
            block = [int(rng.integers(1, n + 1))]
            target = best_destination(graph, parts, block)
            permuted = [parts[int(perm[p])] for p in range(PARTS)]
            moved = best_destination(graph, permuted, block)
            # 并列时两边的下标可能不同，只比较 Σ
            sigma_a = edge_goodness(graph, _move(parts, block, target)).sigma
            sigma_b = edge_goodness(graph, _move(permuted, block, moved)).sigma
            if sigma_a != sigma_b:
                equivariance += 1
    return build_check(
        "sigma-identity", failures == 0 and equivariance == 0,
        found=plan.partition_samples, mismatches=failures, equivariance_failures=equivariance,
    )


def _move(parts: List[List[int]], block: List[int], target: int) -> List[List[int]]:
    moved = [[v for v in p if v not in block] for p in parts]
    moved[target] = moved[target] + list(block)
    return moved


def _perturbed_turan(rng: np.random.Generator, n: int) -> Hypergraph:
    """T₅³(n) 去掉一个顶点的全部边，再随机补边直到 e ≥ t₅³(n)"""
    base = build_turan_t53(n)
    x = int(rng.integers(1, n + 1))
    edges = {e for e in base.edges if x not in e}
    missing = [t for t in all_rsets(n, 3) if t not in edges]
    order = rng.permutation(len(missing))
    for k in order:
        if len(edges) >= t53_count(n):
            break
        edges.add(missing[int(k)])
    return base.with_edges(edges)


def campaign_peeling(plan: VerifyPlan, rng: np.random.Generator) -> Dict[str, Any]:
    failures = []
    for k in range(plan.peel_samples):
        n = int(rng.integers(8, 21))
        graph = _perturbed_turan(rng, n)
        log = peel_min_degree(graph, strict=False)
        alive = sorted(log.alive)
        ok = log.monotone and bool(alive)
        if ok and len(alive) >= 6:
            ok = minimum_degree(log.final, alive) >= delta53_count(len(alive))
        if not ok:
            failures.append(log.to_dict())
    return build_check("peel-schedule", not failures, found=plan.peel_samples, failures=failures[:1])


def suite_properties(plan: VerifyPlan) -> Dict[str, Any]:
    rng = make_rng(plan.seed)
    checks = [
        campaign_monotonicity(plan, rng),
        campaign_blowup(plan),
        campaign_gradient(plan, rng),
        campaign_shift(plan),
        campaign_symmetrize(plan, rng),
        campaign_partitions(plan, rng),
        campaign_peeling(plan, rng),
    ]
    return build_suite("properties", checks)


def _reproducible_payload(seed: int) -> Dict[str, Any]:
    plan = VerifyPlan(seed=seed, census_ns=(5,))
    census = [r.to_row() for r in plan.census(5)]
    log = symmetrize(build_turan_t53(25), random_order=True, seed=seed)
    return {"census": census, "symmetrize": log.to_dict(), "closed": suite_closed_forms(plan)}


def suite_reproducibility(plan: VerifyPlan, previous: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
    first = result_digest(_reproducible_payload(plan.seed))
    second = result_digest(_reproducible_payload(plan.seed))
    checks = [build_check("digest-stable", first == second, expected=first, found=second)]
    extra = {}
    if previous:
        extra["suites_digest"] = result_digest(previous)
    return build_suite("reproducibility", checks, **extra)


def run_verify_all(plan: Optional[VerifyPlan] = None) -> List[Dict[str, Any]]:
    """按顺序运行全部套件；quick 模式只跑闭式与 [5]、[6] 普查"""
    plan = plan or VerifyPlan()
    if plan.quick:
        suites = [suite_closed_forms(plan), suite_classification(plan, ns=(5, 6))]
    else:
        suites = [
            suite_closed_forms(plan),
            suite_theorem(plan),
            suite_classification(plan),
            suite_constructions(plan),
            suite_freeness(plan),
            suite_properties(plan),
        ]
        suites.append(suite_reproducibility(plan, suites))
    for suite in suites:
        logger.info(f"suite {suite['suite']}: {suite['total'] - suite['failed']}/{suite['total']} passed")
    return suites
