import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan.core.errors import PreconditionError, VerificationError
from turan.modules.families import build_turan_t53, complete, t53_count, turan_t53_partition
from turan.modules.hypergraph import Hypergraph, delete_vertices
from turan.modules.symmetrize import (
    PointedPartitionedHypergraph,
    SymmetrizeService,
    audit_properties,
    best_destination,
    cleaning,
    default_threshold,
    edge_goodness,
    find_bad_vertices,
    local_search_partition,
    merging,
    non_good_degrees,
    peel_min_degree,
    rebuild_blowup,
    symmetrize,
    uncovered_pairs,
)


def _turan_parts(n):
    return [sorted(p) for p in turan_t53_partition(n).parts]


@pytest.mark.parametrize("n", [10, 20])
def test_turan_graph_is_a_fixed_point(n):
    log = symmetrize(build_turan_t53(n))
    final = log.final
    assert final.vertices == frozenset(range(1, n + 1))
    assert len(final.parts) == 5
    assert sorted(sorted(p) for p in final.parts.values()) == sorted(_turan_parts(n))
    assert final.graph.m == t53_count(n)
    assert log.ratio == 1.0
    assert log.deletions == []
    assert len(log.merges) == n - 5


def test_audit_passes_on_turan_graph():
    log = symmetrize(build_turan_t53(15))
    report = audit_properties(log)
    assert report.passed, report.failure
    names = {c["name"] for c in report.checks}
    assert "P4[1]" in names and "merge-count" in names
    assert any(name.startswith("hom-free[") for name in names)


def test_merge_edge_identity_is_recorded():
    log = symmetrize(build_turan_t53(15))
    for event in log.merges:
        expected = event.edges_before + (event.degree_kept - event.degree_merged) * len(event.merged_part)
        assert event.edges_after == expected
        assert event.degree_kept >= event.degree_merged


def test_sparse_graph_is_cleaned_away():
    log = symmetrize(Hypergraph(8, 3, ((1, 2, 3), (4, 5, 6))))
    assert log.final.vertices == frozenset()
    assert log.final.graph.m == 0
    assert log.ratio == 0.0
    assert audit_properties(log).passed


def test_perturbed_turan_graph_keeps_properties():
    g = build_turan_t53(15)
    g = g.without_edge(g.edges[0])
    log = symmetrize(g)
    report = audit_properties(log, strict=True)
    assert report.passed
    assert len(log.final.vertices) >= 14


def test_random_order_is_seeded():
    g = delete_vertices(build_turan_t53(15), [1])
    a = symmetrize(g, random_order=True, seed=7)
    b = symmetrize(g, random_order=True, seed=7)
    assert a.to_dict() == b.to_dict()
    assert audit_properties(a).passed


def test_hom_check_skipped_for_non_free_input():
    log = symmetrize(complete(7, 3))
    report = audit_properties(log)
    assert report.notices
    assert not any(c["name"].startswith("hom-free[") for c in report.checks)


def test_requires_three_graph():
    with pytest.raises(PreconditionError):
        symmetrize(Hypergraph(4, 2, ((1, 2),)))


def test_cleaning_and_merging_steps():
    state = PointedPartitionedHypergraph.initial(build_turan_t53(10))
    assert cleaning(state, alpha=0.02).same_state(state)
    events = []
    tight = cleaning(state, threshold=lambda m: 10 ** 6, events=events)
    assert tight.vertices == frozenset()
    assert len(events) == 10
    assert uncovered_pairs(state)[0] == (1, 2)
    merged = merging(state, step=1)
    assert merged.parts[1] == frozenset({1, 2})
    assert 2 not in merged.parts
    assert merged.retired[2] == 1
    assert merged.violations() == []


def test_default_threshold():
    assert default_threshold(0.02)(10) == pytest.approx(22.0)


def test_rebuild_blowup_expands_points():
    g = Hypergraph(4, 3, ((1, 2, 3),))
    parts = {1: frozenset({1, 4}), 2: frozenset({2}), 3: frozenset({3})}
    assert rebuild_blowup(g, frozenset(parts), parts).edges == ((1, 2, 3), (2, 3, 4))


def test_strict_audit_raises_on_tampered_log():
    log = symmetrize(build_turan_t53(10))
    bad = log.merged[0]
    log.merged[0] = PointedPartitionedHypergraph(
        bad.graph.with_edges(bad.graph.edges + ((1, 2, 3),)), bad.vertices, bad.parts, bad.retired
    )
    with pytest.raises(VerificationError):
        audit_properties(log, strict=True)
    assert not audit_properties(log).passed


def test_service_payload():
    payload = SymmetrizeService.turan_run(10)
    assert payload["ratio"] == 1.0
    assert payload["audit"]["passed"]


# -----------------------------------------------------------------------------
# 5-划分评分
# -----------------------------------------------------------------------------
def test_turan_partition_is_all_good(t53_10):
    score = edge_goodness(t53_10, _turan_parts(10))
    assert score.sigma == 0
    assert score.good == t53_10.m
    assert score.identity_holds


def test_sigma_counts_bad_and_very_bad(k53):
    parts = [[1, 2, 3], [4], [5], [], []]
    score = edge_goodness(k53, parts)
    assert score.very_bad == 1
    assert score.bad == 6
    assert score.good == 3
    assert score.sigma == score.bad + 2 * score.very_bad


def test_partition_validation(k53):
    with pytest.raises(ValueError):
        edge_goodness(k53, [[1], [2], [3], [4, 5]])
    with pytest.raises(ValueError):
        edge_goodness(k53, [[1, 2], [2], [3], [4], [5]])
    with pytest.raises(ValueError):
        edge_goodness(k53, [[1], [2], [3], [4], []])


def test_best_destination_returns_home(t53_10):
    parts = _turan_parts(10)
    moved = [p[:] for p in parts]
    moved[0].remove(1)
    moved[3].append(1)
    assert best_destination(t53_10, moved, [1]) == 0
    with pytest.raises(ValueError):
        best_destination(t53_10, moved, [])
    with pytest.raises(ValueError):
        best_destination(t53_10, moved, [11])


def test_bad_vertices_and_local_search(t53_10):
    parts = _turan_parts(10)
    moved = [p[:] for p in parts]
    moved[0].remove(1)
    moved[3].append(1)
    degrees = non_good_degrees(t53_10, moved)
    assert degrees[1] > 0
    assert 1 in find_bad_vertices(t53_10, moved, 1e-3)
    assert find_bad_vertices(t53_10, parts, 1e-3) == set()
    _, score = local_search_partition(t53_10, moved)
    assert score.sigma == 0


def test_bad_vertices_ignore_isolated_padding(t53_10):
    moved = [p[:] for p in _turan_parts(10)]
    moved[0].remove(1)
    moved[3].append(1)
    # 顶点 1 的非 good 度为 12：0.1·10² ≤ 12 < 0.1·15²
    assert find_bad_vertices(t53_10, moved, 0.1) == {1}
    padded = t53_10.with_isolated(5)
    padded_parts = [p[:] for p in moved]
    padded_parts[0].extend(range(11, 16))
    assert find_bad_vertices(padded, padded_parts, 0.1) == {1}


# -----------------------------------------------------------------------------
# 最小度剥离
# -----------------------------------------------------------------------------
def test_peeling_stops_on_turan_graph(t53_10):
    log = peel_min_degree(t53_10)
    assert log.order == []
    assert not log.halted_by_guard


def test_peeling_empty_graph_hits_guard():
    log = peel_min_degree(Hypergraph(10, 3))
    assert len(log.order) == 5
    assert log.halted_by_guard
    assert log.monotone
    assert log.order == [1, 2, 3, 4, 5]


def test_peeling_potential_increases():
    g = build_turan_t53(14)
    for v in (1, 2, 3):
        g = g.without_edge(next(e for e in g.edges if v in e))
    log = peel_min_degree(g)
    assert log.monotone
    assert all(b - a >= 1 for a, b in zip(log.potentials, log.potentials[1:]))


def test_peeling_preconditions():
    with pytest.raises(PreconditionError):
        peel_min_degree(Hypergraph(5, 3))
    with pytest.raises(PreconditionError):
        peel_min_degree(Hypergraph(8, 2))


@settings(max_examples=60, deadline=None)
@given(
    edges=st.sets(st.frozensets(st.integers(1, 7), min_size=3, max_size=3), max_size=20),
    labels=st.lists(st.integers(0, 4), min_size=7, max_size=7),
)
def test_sigma_identity_on_random_partitions(edges, labels):
    graph = Hypergraph(7, 3, tuple(tuple(e) for e in edges))
    parts = [[v for v in range(1, 8) if labels[v - 1] == k] for k in range(5)]
    score = edge_goodness(graph, parts)
    assert score.identity_holds
    assert score.good + score.bad + score.very_bad == graph.m
