import json

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from turan.core.errors import GuardExceededError, HypergraphFormatError, HypergraphMemberError, PreconditionError
from turan.modules.families import build_named, build_turan_t53, complete
from turan.modules.hypergraph import (
    Hypergraph,
    Partition,
    SetFamily,
    automorphism_orbits,
    blow_up,
    canonical_form,
    canonical_id,
    contains_complete,
    contains_k333_hom,
    covers_pairs,
    delete_vertices,
    density_report,
    find_homomorphism,
    generate,
    is_dense,
    is_intersecting,
    is_isomorphic,
    is_maximal_intersecting,
    is_subfamily_up_to_isomorphism,
    k_rr_pattern,
    link_family,
    minimum_degree,
    pair_degrees,
    parse,
    parse_json,
    read_hypergraph,
    relabel,
    restrict,
    serialize,
    to_json,
    write_hypergraph,
)


def test_hypergraph_sorts_and_validates():
    g = Hypergraph(4, 3, ((3, 2, 1), (1, 2, 4)))
    assert g.edges == ((1, 2, 3), (1, 2, 4))
    with pytest.raises(ValueError):
        Hypergraph(4, 3, ((1, 2),))
    with pytest.raises(ValueError):
        Hypergraph(4, 3, ((1, 2, 5),))
    with pytest.raises(ValueError):
        Hypergraph(4, 3, ((1, 2, 3), (3, 2, 1)))


def test_isolated_vertices_are_kept():
    g = Hypergraph(7, 3, ((1, 2, 3),))
    assert g.n == 7
    assert g.non_isolated() == (1, 2, 3)
    assert g.degrees()[7] == 0


def test_set_family_rejects_empty_member():
    with pytest.raises(ValueError):
        SetFamily(3, ((),))


def test_partition_checks_cover():
    p = Partition(4, (frozenset({3, 4}), frozenset({1, 2})))
    assert p.as_lists() == [[1, 2], [3, 4]]
    with pytest.raises(ValueError):
        Partition(4, (frozenset({1, 2}), frozenset({2, 3, 4})))
    with pytest.raises(ValueError):
        Partition(4, (frozenset({1, 2}),))


def test_parse_text_with_comments():
    g = parse("# fano\n7 3\n1 2 3\n\n# lines\n1 4 5\n")
    assert g.n == 7 and g.r == 3 and g.m == 2


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("5\n1 2 3\n", 1),
        ("5 3\n1 2\n", 2),
        ("5 3\n1 2 6\n", 2),
        ("5 3\n1 3 2\n", 2),
        ("5 3\n1 2 3\n# dup\n1 2 3\n", 4),
        ("5 3\n1 x 3\n", 2),
    ],
)
def test_parse_errors_carry_line_number(text, line):
    with pytest.raises(HypergraphFormatError) as info:
        parse(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    "edges,index",
    [
        ([[1, 2, 3], [1, 2]], 1),
        ([[1, 2, 6]], 0),
        ([[1, 2, 3], [2, 4, 5], [1, "x", 3]], 2),
        ([[1, 2, 3], [3, 2, 1]], 1),
        ([[1, 2, 3], [1, 4, 4]], 1),
    ],
)
def test_json_errors_carry_member_index(edges, index):
    with pytest.raises(HypergraphMemberError) as info:
        parse_json({"n": 5, "r": 3, "edges": edges})
    assert info.value.index == index
    assert str(info.value).startswith(f"edges[{index}]:")
    assert isinstance(info.value, HypergraphFormatError)


def test_json_header_errors():
    with pytest.raises(HypergraphFormatError):
        parse_json({"n": 5, "edges": []})
    with pytest.raises(HypergraphFormatError):
        parse_json("{\"n\": 5,")
    assert parse_json({"n": 5, "r": 3, "edges": [[3, 1, 2]]}).edges == ((1, 2, 3),)


def test_serialize_parse_and_json(fano, tmp_path):
    assert parse(serialize(fano, comment="Fano plane")) == fano
    assert parse_json(json.dumps(to_json(fano))) == fano
    path = tmp_path / "fano.json"
    write_hypergraph(path, fano)
    assert read_hypergraph(path) == fano
    path = tmp_path / "fano.txt"
    write_hypergraph(path, fano, comment="F7")
    assert read_hypergraph(path) == fano


def test_restrict_reindexes(fano):
    sub = restrict(fano, [1, 2, 3, 4, 5])
    assert sub.n == 5
    assert sub.edges == ((1, 2, 3), (1, 4, 5))
    kept = restrict(fano, [1, 2, 3], reindex=False)
    assert kept.n == 7 and kept.edges == ((1, 2, 3),)
    with pytest.raises(ValueError):
        restrict(fano, [0, 1])


def test_generate_star_and_k3():
    star = generate(5, 3, SetFamily(1, ((1,),)))
    assert star.m == 6
    assert all(1 in e for e in star.edges)
    gen = generate(4, 3, SetFamily(3, ((1, 2), (1, 3), (2, 3))))
    assert gen.m == 4
    with pytest.raises(ValueError):
        generate(2, 3, SetFamily(3, ((1, 2, 3),)))


def test_blow_up_counts(k53):
    big = blow_up(k53, 2)
    assert big.n == 10
    assert big.m == 10 * 8
    with pytest.raises(ValueError):
        blow_up(k53, 0)


def test_link_family_records_singleton_member():
    fam = SetFamily(3, ((1,), (1, 2), (2, 3)))
    link = link_family(fam, 1)
    assert () in link.link
    assert (2,) in link.link
    assert len(link.containing) == 2


def test_intersecting_and_covering(k53, fano):
    assert is_intersecting(k53)
    assert covers_pairs(fano)
    assert is_intersecting(fano)
    assert not is_intersecting(Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6))))
    assert covers_pairs(Hypergraph(5, 3), vertices=[2])


def test_maximal_intersecting(k53, fano):
    assert is_maximal_intersecting(k53)
    assert is_maximal_intersecting(fano)
    assert not is_maximal_intersecting(Hypergraph(5, 3, ((1, 2, 3),)))
    with pytest.raises(PreconditionError):
        is_maximal_intersecting(Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6))))


@hsettings(max_examples=30, deadline=None)
@given(st.permutations(list(range(1, 8))))
def test_canonical_form_is_relabeling_invariant(perm):
    fano = build_named("F7")
    moved = relabel(fano, perm)
    assert canonical_form(moved).label == canonical_form(fano).label
    assert is_isomorphic(moved, fano)


def test_canonical_id_separates_classes(k53):
    minus = build_named("K5_3_minus")
    assert canonical_id(k53) != canonical_id(minus)
    assert len(canonical_id(k53)) == 16


def test_automorphism_orbits():
    assert len(automorphism_orbits(complete(5, 3))) == 1
    orbits = automorphism_orbits(build_named("K5_3_minus"))
    assert sorted(sorted(p) for p in orbits.parts) == [[1, 2, 3], [4, 5]]
    star = automorphism_orbits(build_named("star", 6))
    assert sorted(sorted(p) for p in star.parts) == [[1], [2, 3, 4, 5, 6]]


def test_k333_pattern_shape():
    pattern = k_rr_pattern(3)
    assert pattern.n == 15 and pattern.m == 11


def test_k333_freeness():
    assert not contains_k333_hom(build_turan_t53(12))
    assert contains_k333_hom(complete(6, 3))
    assert not contains_k333_hom(complete(5, 3))


def test_find_homomorphism_uses_k333_path():
    mapping = find_homomorphism(k_rr_pattern(3), complete(6, 3))
    assert mapping is not None
    image = {tuple(sorted(mapping[v] for v in e)) for e in k_rr_pattern(3).edges}
    assert image <= complete(6, 3).member_set
    assert find_homomorphism(k_rr_pattern(3), build_turan_t53(10)) is None


def test_generic_homomorphism_guard():
    big = Hypergraph(20, 3, ((1, 2, 3), (4, 5, 6)))
    with pytest.raises(GuardExceededError):
        find_homomorphism(big, complete(5, 3))


def test_ff6_embeds_in_t6(ff6):
    assert is_subfamily_up_to_isomorphism(ff6, build_named("T6"))


def test_degrees_and_deletion(t53_10):
    assert minimum_degree(t53_10) == min(t53_10.degrees().values())
    smaller = delete_vertices(t53_10, [1])
    assert smaller.n == 10
    assert smaller.degree(1) == 0
    assert smaller.m == t53_10.m - t53_10.degree(1)
    assert sum(pair_degrees(t53_10).values()) == 3 * t53_10.m


def test_contains_complete(k53):
    assert contains_complete(complete(6, 3), 4)
    assert contains_complete(build_turan_t53(10), 5)
    assert not contains_complete(build_turan_t53(10), 6)
    assert contains_complete(k53, 5)


def test_density(k53):
    assert is_dense(k53)
    # 孤立边以外再挂一条边：删去它 λ 不变
    g = Hypergraph(6, 3, ((1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (1, 4, 5),
                          (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5), (1, 2, 6)))
    report = density_report(g)
    assert not report.dense
    assert len(report.deletions) == g.m
    with pytest.raises(GuardExceededError):
        is_dense(complete(7, 3))
