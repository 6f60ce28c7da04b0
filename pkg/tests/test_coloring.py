"""Coloring moves, closure, the seed-count search, and certificates."""

import json
import random

import pytest

from bridgekit import (
    Certificate,
    MoveNotApplicable,
    OracleBoundExceeded,
    SearchStatus,
    apply_move,
    certificate_failure,
    certificate_from_json,
    certificate_to_json,
    closure_randomized,
    is_colorable_from,
    parse_gauss,
    propagate,
    seed_coloring,
    verify_certificate,
    wirtinger_number,
    wirtinger_oracle,
)
from oracles import naive_closure, random_valid_code

TREFOIL = parse_gauss("O1U2O3U1O2U3")
FIG8 = parse_gauss("O2U1O4U3O1U2O3U4")


# ── seeding and single moves ────────────────────────────────────────────


def test_seed_coloring_ascending_colors():
    coloring = seed_coloring(TREFOIL, [3, 1])
    assert coloring.get(1) == 1
    assert coloring.get(3) == 2
    assert coloring.get(2) is None


def test_apply_move_extends_coloring():
    start = seed_coloring(TREFOIL, [1, 2])
    # crossing 2 has over strand 2 and under pair (3, 1): color 3 from 1
    after = apply_move(TREFOIL, start, crossing_id=2, target_strand=3)
    assert after.get(3) == 1
    assert start.get(3) is None  # input coloring untouched


def test_apply_move_condition_1_target_colored():
    start = seed_coloring(TREFOIL, [1, 3])
    with pytest.raises(MoveNotApplicable) as exc:
        apply_move(TREFOIL, start, crossing_id=2, target_strand=3)
    assert exc.value.condition == 1


def test_apply_move_condition_3_not_adjacent():
    start = seed_coloring(TREFOIL, [1])
    # crossing 2 has under pair (3, 1); strand 2 is not part of it
    with pytest.raises(MoveNotApplicable) as exc:
        apply_move(TREFOIL, start, crossing_id=2, target_strand=2)
    assert exc.value.condition == 3


def test_apply_move_condition_3_source_uncolored():
    start = seed_coloring(TREFOIL, [2])
    with pytest.raises(MoveNotApplicable) as exc:
        apply_move(TREFOIL, start, crossing_id=2, target_strand=3)
    assert exc.value.condition == 3


def test_apply_move_condition_4_over_uncolored():
    start = seed_coloring(TREFOIL, [3])
    # crossing 3 has over strand 1 (uncolored) and under pair (2, 3)
    with pytest.raises(MoveNotApplicable) as exc:
        apply_move(TREFOIL, start, crossing_id=3, target_strand=2)
    assert exc.value.condition == 4


# ── propagation ─────────────────────────────────────────────────────────


def test_propagate_trefoil_two_seeds_complete():
    result = propagate(TREFOIL, [1, 2])
    assert result.colored == frozenset({1, 2, 3})
    assert len(result.trace) == 1


def test_propagate_single_seed_stalls():
    result = propagate(TREFOIL, [1])
    assert result.colored == frozenset({1})
    assert result.trace == ()


def test_propagate_matches_naive_closure_on_samples():
    rng = random.Random(7)
    for _ in range(80):
        d = parse_gauss(random_valid_code(rng, rng.randint(1, 7)))
        seeds = rng.sample(range(1, d.n_strands + 1), rng.randint(1, d.n_strands))
        assert propagate(d, seeds).colored == naive_closure(d, seeds)


def test_closure_randomized_confluent_with_propagate():
    rng = random.Random(11)
    for _ in range(40):
        d = parse_gauss(random_valid_code(rng, rng.randint(1, 6)))
        seeds = rng.sample(range(1, d.n_strands + 1), rng.randint(1, d.n_strands))
        expected = propagate(d, seeds).colored
        for _ in range(5):
            assert closure_randomized(d, seeds, rng) == expected


def test_is_colorable_from():
    assert is_colorable_from(TREFOIL, [1, 2])
    assert not is_colorable_from(TREFOIL, [1])


# ── the search ──────────────────────────────────────────────────────────


def test_wirtinger_trefoil():
    out = wirtinger_number(TREFOIL)
    assert out.status is SearchStatus.EXACT
    assert out.k == 2
    assert out.certificate.seeds == (1, 2)


def test_wirtinger_goldens():
    assert wirtinger_number(parse_gauss("")).k == 1
    assert wirtinger_number(parse_gauss("O1U1")).k == 1
    assert wirtinger_number(FIG8).k == 2


def test_wirtinger_certificate_replays():
    for d in (TREFOIL, FIG8, parse_gauss("O1U1")):
        out = wirtinger_number(d)
        assert verify_certificate(d, out.certificate)


def test_wirtinger_matches_oracle_on_randoms():
    rng = random.Random(13)
    for _ in range(60):
        d = parse_gauss(random_valid_code(rng, rng.randint(1, 6)))
        assert wirtinger_number(d).k == wirtinger_oracle(d)


def test_wirtinger_parallel_equals_sequential():
    rng = random.Random(17)
    for _ in range(8):
        d = parse_gauss(random_valid_code(rng, rng.randint(3, 6)))
        seq = wirtinger_number(d)
        par = wirtinger_number(d, parallel=2)
        assert (seq.k, seq.status) == (par.k, par.status)
        assert seq.certificate.seeds == par.certificate.seeds


def test_wirtinger_max_k_lower_bound():
    out = wirtinger_number(TREFOIL, max_k=1)
    assert out.status is SearchStatus.LOWER_BOUND
    assert out.k == 2  # level 1 exhausted, so at least 2
    assert out.certificate is None


def test_wirtinger_time_limit_lower_bound():
    d = parse_gauss(
        "U4O3U2U1O5O4U3O2O1U5O13U12O11U9O8U7U6U13O12U11U10U8O7O6O9O10O14U14O15U15"
    )
    out = wirtinger_number(d, time_limit=1e-9)
    assert out.status is SearchStatus.LOWER_BOUND
    assert out.k >= 1


def test_oracle_bound_enforced():
    big = parse_gauss(
        "U4O3U2U1O5O4U3O2O1U5O13U12O11U9O8U7U6U13O12U11U10U8O7O6O9O10O14U14O15U15"
    )
    with pytest.raises(OracleBoundExceeded):
        wirtinger_oracle(big)


# ── certificates ────────────────────────────────────────────────────────


def test_certificate_json_schema_and_roundtrip():
    out = wirtinger_number(TREFOIL)
    text = certificate_to_json(out.certificate)
    data = json.loads(text)
    assert set(data) == {"k", "seeds", "trace"}
    assert data["k"] == 2
    assert data["seeds"] == [1, 2]
    assert set(data["trace"][0]) == {"crossing", "source", "target", "over", "color"}
    assert certificate_from_json(text) == out.certificate


def test_certificate_tampering_detected():
    out = wirtinger_number(TREFOIL)
    cert = out.certificate
    wrong_seed = Certificate(k=cert.k, seeds=(1, 3), trace=cert.trace)
    assert not verify_certificate(TREFOIL, wrong_seed)
    incomplete = Certificate(k=cert.k, seeds=cert.seeds, trace=())
    assert not verify_certificate(TREFOIL, incomplete)
    reason = certificate_failure(TREFOIL, incomplete)
    assert reason is not None and "uncolored" in reason


def test_certificate_wrong_color_detected():
    out = wirtinger_number(TREFOIL)
    cert = out.certificate
    step = cert.trace[0]
    bad_step = type(step)(
        crossing_id=step.crossing_id,
        source_strand=step.source_strand,
        target_strand=step.target_strand,
        over_strand=step.over_strand,
        assigned_color=99,
    )
    bad = Certificate(k=cert.k, seeds=cert.seeds, trace=(bad_step,))
    reason = certificate_failure(TREFOIL, bad)
    assert reason is not None
