import pytest

from turan.core.errors import GuardExceededError, PreconditionError
from turan.modules.classify import (
    CSV_COLUMNS,
    CensusService,
    catalog_labels,
    census_frame,
    complement_choice_scan,
    enumerate_maximal_intersecting,
    intersection_graph,
    oracle_check,
    pair_coverage_profile,
    profile_histogram,
    subset_scan,
    verify_pair_cover_classification,
    verify_theorem_main3int,
    write_census_csv,
)
from turan.modules.families import build_named
from turan.modules.hypergraph import Hypergraph, canonical_form, is_isomorphic


@pytest.fixture(scope="module")
def census5():
    return enumerate_maximal_intersecting(5)


@pytest.fixture(scope="module")
def census6():
    return enumerate_maximal_intersecting(6)


def test_intersection_graph_size():
    graph = intersection_graph(6)
    assert graph.number_of_nodes() == 20
    # 每个三元组只与它的补不相交
    assert all(degree == 18 for _, degree in graph.degree())


def test_only_k5_on_five_vertices(census5):
    assert len(census5) == 1
    record = census5[0]
    assert record.catalog_match == "K5_3"
    assert record.is_k53
    assert abs(record.value - 2 / 25) <= 1e-8
    assert record.gap == pytest.approx(0.0, abs=1e-8)


def test_census_range_guard():
    with pytest.raises(GuardExceededError):
        enumerate_maximal_intersecting(4)
    with pytest.raises(GuardExceededError):
        enumerate_maximal_intersecting(8)


def test_six_vertex_identities(census6):
    assert {r.edges for r in census6} == {10}
    names = {r.catalog_match for r in census6}
    assert {"FF6", "K5_3"} <= names
    ff6 = next(r for r in census6 if r.catalog_match == "FF6")
    assert ff6.pair_profile == {2: 15}
    assert ff6.covers_pairs
    ids = [r.canonical_id for r in census6]
    assert len(ids) == len(set(ids))


def test_six_vertex_covering_records_are_blocked(census6):
    suite = verify_pair_cover_classification(6, records=census6)
    assert suite["passed"], suite
    covering = [r for r in census6 if r.covers_pairs and not r.is_k53]
    assert covering
    assert max(r.value for r in covering) <= 2 / 25 - 1e-3 + 1e-8


@pytest.mark.parametrize("n", [6, 7])
def test_every_census_record_is_certified(n, census6):
    records = census6 if n == 6 else enumerate_maximal_intersecting(7)
    uncertified = [r.canonical_id for r in records if not r.lagrangian.certified]
    assert not uncertified
    assert all(r.lagrangian.kkt_residual <= 1e-10 for r in records)


def test_oracles_agree():
    assert subset_scan(5) == {canonical_form(build_named("K5_3")).label}
    records = enumerate_maximal_intersecting(6, score=False)
    assert {canonical_form(r.graph).label for r in records} == complement_choice_scan()
    assert oracle_check(5)["passed"]
    with pytest.raises(ValueError):
        oracle_check(7)


def test_fano_is_the_unique_covering_unique_intersection_on_seven():
    records = enumerate_maximal_intersecting(7, score=False)
    unique = [r for r in records if r.covers_pairs and r.unique_intersection]
    assert len(unique) == 1
    assert is_isomorphic(unique[0].graph, build_named("F7"))
    assert unique[0].catalog_match == "F7"


def test_catalog_labels_pad_isolated_vertices():
    labels = catalog_labels(6)
    k5_padded = canonical_form(build_named("K5_3").with_isolated(1)).label
    assert labels[k5_padded] == "K5_3"
    assert "star(n=6)" in labels.values()


def test_pair_profile(k53):
    assert set(pair_coverage_profile(k53).values()) == {3}
    assert profile_histogram(k53) == {3: 10}
    with pytest.raises(PreconditionError):
        pair_coverage_profile(Hypergraph(4, 2, ((1, 2),)))


def test_census_frame_and_csv(census6, tmp_path):
    frame = census_frame(census6)
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) == len(census6)
    extended = census_frame(census6, extended=True)
    assert "shift_type" in extended.columns and "members" not in extended.columns
    assert list(census_frame([]).columns) == CSV_COLUMNS
    path = tmp_path / "census6.csv"
    write_census_csv(census6, str(path))
    assert path.read_text(encoding="utf-8").splitlines()[0] == ",".join(CSV_COLUMNS)


def test_census_rows_are_json_ready():
    rows = CensusService.census_rows(5)
    assert rows[0]["catalog-match"] == "K5_3"
    assert rows[0]["members"][0] == [1, 2, 3]


def test_theorem_reduced_run(census5, census6):
    suite = verify_theorem_main3int(
        census_ns=(5, 6), star_max=8, gen_max=7, censuses={5: census5, 6: census6},
    )
    assert suite["passed"], [c for c in suite["checks"] if not c["passed"]]
    assert suite["margin"] >= 1e-3 - 1e-8
