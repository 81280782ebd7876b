import random

import pytest

from shatterlab import (
    SetSystem,
    ShatterProfile,
    bondy_distinguishing_set,
    format_set_system,
    is_ideal,
    parse_set_system,
    shatter_profile,
    shatter_value,
    shatter_witness,
    trace,
    vc_dimension,
)
from helpers import masks_to_sets, naive_profile, naive_trace, naive_vc, random_masks, system_as_sets


def sys_of(n, *sets):
    return SetSystem.from_sets(n, sets)


def test_canonical_form_sorted_and_deduplicated():
    s = SetSystem.from_sets(3, [{1, 2}, {1}, {1, 2}, set()])
    assert s.ranges == (0, 1, 3)
    assert s.sets() == [(), (1,), (1, 2)]


def test_constructor_rejects_bad_masks():
    with pytest.raises(ValueError):
        SetSystem(2, (4,))
    with pytest.raises(ValueError):
        SetSystem(2, (1, 1))
    with pytest.raises(ValueError):
        SetSystem(65, ())


def test_trace_definition_examples():
    s = sys_of(2, set(), {1}, {2}, {1, 2})
    assert trace(s, {1}).sets() == [(), (1,)]
    assert len(trace(SetSystem.power_set(4), {2, 3, 4})) == 8
    s = sys_of(3, {1, 2}, {1, 3}, {2, 3})
    t = trace(s, {1, 2})
    assert len(t) == 3
    assert t.sets() == [(1,), (2,), (1, 2)]


def test_trace_rejects_foreign_elements():
    s = sys_of(2, {1})
    with pytest.raises(ValueError):
        trace(s, {3})


def test_trace_composes():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 8)
        masks = random_masks(rng, n, 20)
        s = SetSystem.from_masks(n, masks)
        x = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        y_rel = sorted(rng.sample(range(1, len(x) + 1), rng.randint(1, len(x))))
        y_orig = [x[i - 1] for i in y_rel]
        assert trace(trace(s, x), y_rel) == trace(s, y_orig)


def test_shatter_value_examples():
    assert shatter_value(SetSystem.power_set(4), 3) == 8
    # empty set, singletons, and the balanced complete bipartite edges on six points
    edges = [{u, v} for u in (1, 2, 3) for v in (4, 5, 6)]
    s = SetSystem.from_sets(6, [set()] + [{e} for e in range(1, 7)] + edges)
    assert shatter_value(s, 3) == 6


def test_shatter_witness_is_lex_smallest():
    s = SetSystem.power_set(4)
    value, witness = shatter_witness(s, 2)
    assert value == 4
    assert witness == (1, 2)


def test_shatter_value_range_check():
    s = sys_of(2, {1})
    with pytest.raises(ValueError):
        shatter_value(s, 3)
    with pytest.raises(ValueError):
        shatter_value(s, -1)


def test_profile_examples():
    assert list(shatter_profile(sys_of(3, set()))) == [1, 1, 1, 1]
    assert list(shatter_profile(SetSystem.power_set(3))) == [1, 2, 4, 8]
    assert list(shatter_profile(sys_of(3, set(), {1}, {2}, {3}, {1, 2}))) == [1, 2, 4, 5]


def test_profile_matches_naive_oracle_on_random_systems():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(1, 7)
        masks = random_masks(rng, n, 25)
        s = SetSystem.from_masks(n, masks)
        assert list(shatter_profile(s)) == naive_profile(n, masks_to_sets(masks))


def test_profile_invariants_hold_on_random_systems():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 9)
        s = SetSystem.from_masks(n, random_masks(rng, n, 40))
        p = list(shatter_profile(s))
        if len(s):
            assert p[0] == 1
        for b in range(n):
            assert p[b] <= p[b + 1]
            assert p[b + 1] <= 2 * p[b]
        for b in range(n + 1):
            assert p[b] <= min(2 ** b, len(s))


def test_vc_dimension_examples():
    assert vc_dimension(SetSystem.power_set(5)) == 5
    s = SetSystem.from_sets(5, [set()] + [{e} for e in range(1, 6)])
    assert vc_dimension(s) == 1
    assert vc_dimension(SetSystem.empty(3)) == -1


def test_vc_dimension_matches_naive_oracle():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(1, 7)
        masks = random_masks(rng, n, 30)
        s = SetSystem.from_masks(n, masks)
        assert vc_dimension(s) == naive_vc(n, masks_to_sets(masks))


def test_sauer_inequality_on_random_systems():
    from shatterlab import sauer_bound

    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 12)
        s = SetSystem.from_masks(n, random_masks(rng, n, 60))
        d = vc_dimension(s)
        if d >= 0:
            assert len(s) <= sauer_bound(n, d + 1)


def test_is_ideal():
    assert is_ideal(sys_of(2, set(), {1}, {2}, {1, 2}))
    assert not is_ideal(sys_of(2, {1, 2}))
    assert is_ideal(SetSystem.empty(2))
    assert is_ideal(sys_of(2, set()))


def test_bondy_singleton_and_worked_example():
    assert bondy_distinguishing_set([5]) == ()
    # {} vs {1} vs {1,2}: element 1 separates {} from the rest, element 2 finishes
    masks = [0, 1, 3]
    assert bondy_distinguishing_set(masks) == (1, 2)


def test_bondy_rejects_duplicates():
    with pytest.raises(ValueError):
        bondy_distinguishing_set([1, 1])


def test_bondy_random_instances():
    rng = random.Random(31)
    for _ in range(10_000):
        n = rng.randint(1, 16)
        t = rng.randint(1, min(12, 1 << n))
        masks = rng.sample(range(1 << n), t)
        chosen = bondy_distinguishing_set(masks)
        assert len(chosen) <= t - 1 or t == 1
        xmask = 0
        for e in chosen:
            xmask |= 1 << (e - 1)
        assert len({m & xmask for m in masks}) == t


def test_profile_type_validation():
    with pytest.raises(ValueError):
        ShatterProfile(())
    with pytest.raises(ValueError):
        ShatterProfile((1, -1))


def test_ss_round_trip():
    s = sys_of(5, set(), {2}, {1, 3, 5})
    text = format_set_system(s)
    assert text == "n 5\n-\n2\n1 3 5\n"
    assert parse_set_system(text) == s


def test_ss_parser_accepts_comments_and_blanks():
    text = "# header comment\n\nn 3\n# a range follows\n-\n1 2\n"
    s = parse_set_system(text)
    assert s.sets() == [(), (1, 2)]


@pytest.mark.parametrize(
    "bad",
    [
        "1 2\n",  # missing header
        "n 0\n",
        "n 65\n",
        "n 3\n4\n",  # out of range
        "n 3\n2 1\n",  # not increasing
        "n 3\n2 2\n",  # repeated element
        "n 3\n1\n1\n",  # duplicate range
        "n x\n",
        "n 3\n1 a\n",
    ],
)
def test_ss_parser_rejects(bad):
    with pytest.raises(ValueError):
        parse_set_system(bad)


def test_trace_matches_naive_oracle():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(1, 8)
        masks = random_masks(rng, n, 20)
        s = SetSystem.from_masks(n, masks)
        x = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        got = trace(s, x)
        relabel = {orig: new for new, orig in enumerate(x, start=1)}
        expected = {
            frozenset(relabel[e] for e in sub)
            for sub in naive_trace(masks_to_sets(masks), x)
        }
        assert system_as_sets(got) == expected or (not masks and len(got) == 0)
