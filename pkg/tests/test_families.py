from fractions import Fraction

import pytest

from turan.modules.families import (
    CATALOG,
    FamilyService,
    build_named,
    build_star_sr,
    build_turan_t53,
    catalog_table,
    check_flags,
    complete_lagrangian,
    delta53_count,
    get_entry,
    star_limit,
    star_limit_vs_complete,
    star_size,
    t53_block_census,
    t53_count,
    t53_fit_constant,
    turan_t53_parts,
)
from turan.modules.hypergraph import Hypergraph, minimum_degree, pair_degrees


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_flags_match_constructions(name):
    flags = check_flags(name)
    assert flags == {"intersecting": True, "covers_pairs": True}


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_parametric_flags(n):
    assert all(check_flags("gen_K3", n).values())
    assert all(check_flags("star", n).values())


def test_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        get_entry("nope")


def test_parameter_lower_bound():
    with pytest.raises(ValueError):
        build_named("gen_R5", 4)


def test_named_sizes(ff6):
    assert build_named("K5_3").m == 10
    assert build_named("K5_3_minus").m == 9
    assert build_named("F7").m == 7
    assert ff6.m == 10
    assert set(pair_degrees(ff6).values()) == {2}
    assert build_named("T6").m == 14
    assert build_named("F6").m == 10
    assert build_named("k333").n == 15


def test_turan_parts_are_balanced():
    assert turan_t53_parts(5) == [1, 1, 1, 1, 1]
    assert turan_t53_parts(11) == [2, 2, 2, 2, 3]
    assert sum(turan_t53_parts(37)) == 37
    with pytest.raises(ValueError):
        turan_t53_parts(4)


def test_t53_counts():
    assert t53_count(5) == 10
    assert t53_count(6) == 16
    assert t53_count(11) == 104


@pytest.mark.parametrize("n", [6, 7, 10, 13, 25])
def test_construction_matches_formulas(n):
    g = build_turan_t53(n)
    assert g.m == t53_count(n)
    assert minimum_degree(g) == delta53_count(n)
    assert delta53_count(n) == t53_count(n) - t53_count(n - 1)


@pytest.mark.parametrize("n", [6, 9, 17, 30])
def test_block_census_agrees_with_materialized_builder(n):
    g = build_turan_t53(n)
    edges, degree = t53_block_census(n)
    assert edges == g.m
    assert degree == g.degrees()


def test_block_census_at_upper_range():
    edges, degree = t53_block_census(500)
    assert edges == t53_count(500)
    assert min(degree.values()) == delta53_count(500)
    assert len(degree) == 500


def test_delta_needs_six():
    with pytest.raises(ValueError):
        delta53_count(5)


def test_fit_constant_is_small():
    assert 0 < t53_fit_constant(200) < 1


def test_star_size_ties_prefer_smaller_side():
    a, count = star_size(7, 3)
    assert count == max(k * (7 - k) * (6 - k) // 2 for k in range(1, 6))
    assert all(k * (7 - k) * (6 - k) // 2 < count for k in range(1, a))
    graph, edges = build_star_sr(7, 3)
    assert graph.m == edges


def test_star_limit_against_complete():
    assert star_limit(3) == Fraction(4, 54)
    assert complete_lagrangian(5, 3) == Fraction(2, 25)
    assert not star_limit_vs_complete(3)["star_exceeds_complete"]
    assert star_limit_vs_complete(4)["star_exceeds_complete"]


def test_catalog_table_lists_every_entry():
    frame = catalog_table()
    assert list(frame["name"]) == list(CATALOG)
    row = frame[frame["name"] == "K5_3"].iloc[0]
    assert row["kind"] == "hypergraph"
    assert row["expected_lambda"].startswith("2/25")


def test_family_service_describe():
    payload = FamilyService.describe("F7")
    assert payload["vertices"] == 7
    assert payload["expected"] == "1/27"
    assert payload["covers_pairs"] and payload["intersecting"]
    assert payload["text"].splitlines()[1] == "7 3"
    generator = FamilyService.describe("F4")
    assert "r" not in generator
    assert isinstance(build_named("F7"), Hypergraph)
