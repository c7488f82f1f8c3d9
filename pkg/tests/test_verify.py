import pytest

from turan.core.report import build_check, build_suite, dumps_canonical, first_failure, result_digest, suites_table
from turan.modules.verify import (
    VerifyPlan,
    run_verify_all,
    suite_classification,
    suite_constructions,
    suite_freeness,
    suite_properties,
)


@pytest.fixture
def small_plan() -> VerifyPlan:
    return VerifyPlan(
        seed=0,
        census_ns=(5,),
        counts_materialized=12,
        counts_blocks=40,
        freeness_max=12,
        monotone_pairs=4,
        symmetrize_inputs=2,
        symmetrize_max_n=15,
        partition_samples=30,
        gradient_samples=3,
        peel_samples=3,
    )


def _assert_passed(suite):
    assert suite["passed"], first_failure([suite])
    assert suite["failed"] == 0
    assert suite["total"] == len(suite["checks"])


def test_constructions_suite(small_plan):
    suite = suite_constructions(small_plan)
    _assert_passed(suite)
    names = [c["name"] for c in suite["checks"]]
    assert names[:3] == ["t53(5)", "t53(6)", "t53(11)"]
    assert "t53-builder(6..40)" in names and "delta53-builder(6..40)" in names
    assert not any("fit-constant" in name for name in names)
    assert 0 < suite["fit_constant"] < 1


def test_freeness_suite(small_plan):
    _assert_passed(suite_freeness(small_plan))


def test_classification_suite_reuses_census(small_plan):
    suite = suite_classification(small_plan)
    _assert_passed(suite)
    assert set(small_plan.censuses) == {5}
    assert len(small_plan.census(5)) == 1


def test_properties_suite(small_plan):
    suite = suite_properties(small_plan)
    _assert_passed(suite)
    assert {c["name"] for c in suite["checks"]} == {
        "monotone-under-inclusion",
        "blowup-invariance",
        "gradient-vs-finite-differences",
        "shift-census",
        "symmetrize-audit",
        "sigma-identity",
        "peel-schedule",
    }


def test_quick_run():
    suites = run_verify_all(VerifyPlan(seed=0, quick=True))
    assert [s["suite"] for s in suites] == ["closed-forms", "classification"]
    for suite in suites:
        _assert_passed(suite)
    assert "closed-forms" in suites_table(suites)


def test_report_helpers():
    good = build_suite("a", [build_check("x", True, found=1)])
    bad = build_suite("b", [build_check("y", True), build_check("z", False, expected=2, found=3)])
    assert first_failure([good]) is None
    assert first_failure([good, bad]) == {"suite": "b", "name": "z", "passed": False, "expected": 2, "found": 3}
    assert dumps_canonical({"b": 1, "a": 0.1}) == '{"a":0.1,"b":1}'
    assert result_digest({"a": 1, "b": 2}) == result_digest({"b": 2, "a": 1})
