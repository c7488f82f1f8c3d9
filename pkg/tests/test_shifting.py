import pytest

from turan.core.errors import GuardExceededError, PreconditionError, VerificationError
from turan.modules.families import build_named
from turan.modules.hypergraph import Hypergraph, SetFamily, is_intersecting
from turan.modules.shifting import (
    ShiftService,
    ShiftTrace,
    apply_move,
    is_antichain,
    legal_moves,
    shift,
    shift_all,
    shift_deterministic,
    shift_type,
    verify_gen_shift,
    verify_unique_intersection,
)


def test_legal_moves_keep_intersection(fano):
    for member, i in legal_moves(fano):
        assert is_intersecting(apply_move(fano, member, i))


def test_fano_is_already_shifted(fano):
    assert legal_moves(fano) == []
    trace = shift_deterministic(fano)
    assert trace.steps == []
    assert shift_type(trace.final) == "uniform"


def test_k53_has_no_legal_move(k53):
    assert legal_moves(k53) == []
    assert shift_type(shift_deterministic(k53).final) == "uniform"


def test_gen_k3_shifts_to_triangle():
    trace = shift_deterministic(build_named("gen_K3", 5))
    assert shift_type(trace.final) == "K3"
    assert verify_unique_intersection(trace.final)
    assert is_antichain(trace.final)
    assert len(trace.replay()) == len(trace.steps) + 1


def test_star_shifts_to_point():
    trace = shift(build_named("star", 6))
    assert trace.final.members == ((1,),)
    assert shift_type(trace.final) == "pt"


@pytest.mark.parametrize("name,n,expected", [("gen_F4", 6, "F4"), ("gen_R5", 6, "R5")])
def test_generated_families_recover_generator(name, n, expected):
    graph = build_named(name, n)
    trace = shift_deterministic(graph)
    assert shift_type(trace.final) == expected
    assert verify_gen_shift(graph, trace)


def test_merge_when_reduced_member_exists():
    fam = SetFamily(3, ((1, 2), (1,)))
    out = apply_move(fam, (1, 2), 2)
    assert out.members == ((1,),)


def test_shift_rejects_non_intersecting():
    with pytest.raises(PreconditionError):
        shift(Hypergraph(6, 3, ((1, 2, 3), (4, 5, 6))))
    with pytest.raises(ValueError, match="unknown shift policy"):
        shift(build_named("F7"), "random")


def test_verify_gen_shift_requires_maximal():
    with pytest.raises(PreconditionError):
        verify_gen_shift(Hypergraph(5, 3, ((1, 2, 3),)))


def test_shift_all_dedups_terminal_types():
    traces = shift_all(build_named("gen_K3", 4))
    assert traces
    labels = {shift_type(t.final) for t in traces}
    assert "K3" in labels
    for trace in traces:
        trace.replay()
        assert verify_unique_intersection(trace.final)
        assert is_antichain(trace.final)


def test_shift_all_guard():
    with pytest.raises(GuardExceededError):
        shift_all(build_named("gen_K3", 8))


def test_replay_detects_tampering(k53):
    trace = shift_deterministic(k53)
    bad = ShiftTrace(initial=trace.initial, final=trace.final, steps=[((1, 2, 3), 1)] * 2)
    with pytest.raises(VerificationError):
        bad.replay()


def test_antichain():
    assert is_antichain(SetFamily(3, ((1, 2), (2, 3))))
    assert not is_antichain(SetFamily(3, ((1,), (1, 2))))


def test_shift_service_payload():
    payload = ShiftService.run("F7")
    assert payload["types"] == ["uniform"]
    assert payload["traces"][0]["steps"] == []
