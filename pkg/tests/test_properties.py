"""Property-based checks of the structural invariants."""

import random

from hypothesis import given, settings, strategies as st

from bridgekit import (
    canonical_form,
    closure_randomized,
    connected_sum,
    decompose,
    from_entries,
    is_composite,
    parse_gauss,
    pass_decomposition,
    propagate,
    reduce_kinks,
    rotated,
    serialize,
    wirtinger_number,
    wirtinger_oracle,
)


@st.composite
def valid_codes(draw, max_n=7, min_n=0):
    """Random double-occurrence words with O/U pairing per crossing."""
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return ""
    perm = draw(st.permutations(list(range(2 * n))))
    flips = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    slots = [None] * (2 * n)
    for i in range(n):
        a, b = perm[2 * i], perm[2 * i + 1]
        if flips[i]:
            a, b = b, a
        slots[a] = ("O", i + 1)
        slots[b] = ("U", i + 1)
    return "".join(f"{kind}{cid}" for kind, cid in slots)


# ── parsing round trips ─────────────────────────────────────────────────


@given(valid_codes())
def test_parse_serialize_roundtrip(code):
    d = parse_gauss(code)
    assert serialize(parse_gauss(serialize(d))) == serialize(d)


@given(valid_codes(min_n=1))
def test_every_id_once_over_once_under(code):
    d = parse_gauss(code)
    over = [e.crossing_id for e in d.entries if e.passage.value == "O"]
    under = [e.crossing_id for e in d.entries if e.passage.value == "U"]
    assert sorted(over) == sorted(under) == list(range(1, d.n + 1))


# ── canonical form ──────────────────────────────────────────────────────


@given(valid_codes(min_n=1), st.data())
def test_canonical_rotation_and_reversal_invariant(code, data):
    d = parse_gauss(code)
    key = serialize(canonical_form(d))
    k = data.draw(st.integers(0, 2 * d.n - 1))
    assert serialize(canonical_form(rotated(d, k))) == key
    rev = from_entries(list(reversed(d.entries)))
    assert serialize(canonical_form(rev)) == key


@given(valid_codes())
def test_canonical_idempotent(code):
    c = canonical_form(parse_gauss(code))
    assert serialize(canonical_form(c)) == serialize(c)


# ── closure ─────────────────────────────────────────────────────────────


@given(valid_codes(min_n=1), st.data())
def test_closure_contains_seeds_and_is_fixed_point(code, data):
    d = parse_gauss(code)
    seeds = data.draw(
        st.sets(st.integers(1, d.n_strands), min_size=1, max_size=d.n_strands)
    )
    closed = propagate(d, seeds).colored
    assert seeds <= closed
    assert propagate(d, closed).colored == closed


@given(valid_codes(min_n=1), st.data())
def test_closure_monotone_in_seeds(code, data):
    d = parse_gauss(code)
    small = data.draw(
        st.sets(st.integers(1, d.n_strands), min_size=1, max_size=d.n_strands)
    )
    extra = data.draw(st.sets(st.integers(1, d.n_strands), max_size=d.n_strands))
    assert propagate(d, small).colored <= propagate(d, small | extra).colored


@given(valid_codes(min_n=1), st.integers(0, 2**32 - 1), st.data())
def test_closure_confluent_under_random_orders(code, seed, data):
    d = parse_gauss(code)
    seeds = data.draw(
        st.sets(st.integers(1, d.n_strands), min_size=1, max_size=d.n_strands)
    )
    expected = propagate(d, seeds).colored
    rng = random.Random(seed)
    assert closure_randomized(d, seeds, rng) == expected


# ── the search against the oracle ───────────────────────────────────────


@settings(max_examples=60, deadline=None)
@given(valid_codes(max_n=6))
def test_search_agrees_with_oracle(code):
    d = parse_gauss(code)
    out = wirtinger_number(d)
    assert out.k == wirtinger_oracle(d)
    assert 1 <= out.k <= max(1, d.n_strands)
    assert out.certificate.seeds == tuple(sorted(out.certificate.seeds))


# ── passes ──────────────────────────────────────────────────────────────


@given(valid_codes(min_n=1))
def test_pass_runs_alternate_and_balance(code):
    dec = pass_decomposition(parse_gauss(code))
    kinds = [run.kind for run in dec.runs]
    for i, kind in enumerate(kinds):
        assert kind is not kinds[(i + 1) % len(kinds)] or len(kinds) == 1
    if len(kinds) > 1:
        assert dec.overpass_count == dec.underpass_count


# ── sums and kinks ──────────────────────────────────────────────────────


@given(valid_codes(min_n=1, max_n=5), valid_codes(min_n=1, max_n=5), st.data())
def test_sum_is_composite_at_every_edge(code1, code2, data):
    d1, d2 = parse_gauss(code1), parse_gauss(code2)
    e1 = data.draw(st.integers(0, 2 * d1.n - 1))
    e2 = data.draw(st.integers(0, 2 * d2.n - 1))
    s = connected_sum(d1, d2, e1, e2)
    assert s.n == d1.n + d2.n
    witness = is_composite(s)
    assert witness is not None
    assert witness.length % 2 == 0


@given(valid_codes())
def test_reduce_kinks_leaves_no_adjacent_pair(code):
    r = reduce_kinks(parse_gauss(code))
    entries = r.entries
    total = len(entries)
    for i in range(total):
        if total > 1:
            assert entries[i].crossing_id != entries[(i + 1) % total].crossing_id
    assert serialize(reduce_kinks(r)) == serialize(r)


@given(valid_codes(max_n=5))
def test_decompose_parts_are_prime_and_sizes_add_up(code):
    d = parse_gauss(code)
    parts = decompose(d)
    assert sum(p.n for p in parts) == d.n
    for p in parts:
        assert is_composite(p) is None
