import itertools
import random
from math import comb

import pytest

from shatterlab import (
    UnsupportedScaleError,
    dedekind_count,
    enumerate_ideal_systems,
    ex_exact,
    extremal_ideal_exact,
    is_ideal,
    lambda_,
    lambda_construction,
    shatter_profile,
    theorem1_bound,
    turan_edges,
    upsilon,
    verify_bollobas_radcliffe,
    verify_lemma2,
    zeta,
)
from helpers import brute_force_ex


def test_ex_small_values_and_witnesses_match_brute_force():
    for n, m, k in [(4, 4, 3), (5, 4, 3), (4, 3, 1), (5, 3, 2), (5, 4, 2), (4, 2, 0), (5, 5, 5)]:
        expected, witness = brute_force_ex(n, m, k)
        result = ex_exact(n, m, k)
        assert result.optimum == expected
        assert result.witness.edges == witness
        assert result.exhaustive


def test_ex_named_cases():
    assert ex_exact(4, 4, 3).optimum == 3
    five = ex_exact(5, 4, 3)
    assert five.optimum == 5
    # the lex-min witness is a 5-cycle: 1-2-4-5-3-1
    assert five.witness.edges == ((1, 2), (1, 3), (2, 4), (3, 5), (4, 5))
    for n in (3, 4, 5, 6, 7):
        assert ex_exact(n, 3, 3).optimum == comb(n, 2)


def test_ex_six_four_three():
    result = ex_exact(6, 4, 3)
    assert result.optimum == 6
    assert result.witness.edges == ((1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (5, 6))


def test_ex_monotonicity():
    base = ex_exact(5, 4, 3).optimum
    assert ex_exact(6, 4, 3).optimum >= base
    assert ex_exact(5, 4, 4).optimum >= base


def test_ex_witness_feasible():
    rng = random.Random(6)
    for _ in range(15):
        n = rng.randint(3, 6)
        m = rng.randint(2, n)
        k = rng.randint(0, comb(m, 2))
        result = ex_exact(n, m, k)
        g = result.witness
        assert g.edge_count() == result.optimum
        for subset in itertools.combinations(range(1, n + 1), m):
            inside = set(subset)
            assert sum(1 for u, v in g.edges if u in inside and v in inside) <= k


def test_ex_parameter_validation():
    with pytest.raises(ValueError):
        ex_exact(3, 4, 1)
    with pytest.raises(ValueError):
        ex_exact(4, 1, 1)
    with pytest.raises(ValueError):
        ex_exact(4, 3, -1)


def test_ex_budget_truncation():
    result = ex_exact(7, 4, 3, node_budget=40)
    assert not result.exhaustive
    assert result.nodes_explored == 41


def test_ex_jobs_deterministic():
    reference = ex_exact(6, 4, 3)
    for jobs in (2, 3, 5):
        again = ex_exact(6, 4, 3, jobs=jobs)
        assert again.optimum == reference.optimum
        assert again.witness == reference.witness
        assert again.exhaustive


def test_dedekind_counts():
    assert [dedekind_count(n) for n in range(6)] == [2, 3, 6, 20, 168, 7581]
    with pytest.raises(UnsupportedScaleError):
        dedekind_count(6)


def test_enumeration_yields_ideal_distinct_systems():
    seen = set()
    for system in enumerate_ideal_systems(4):
        assert is_ideal(system)
        seen.add(system.ranges)
    assert len(seen) == 168


def brute_extremal_ideal(n, constraints):
    best = -1
    for system in enumerate_ideal_systems(n):
        profile = shatter_profile(system)
        if all(profile[b] <= k for b, k in constraints):
            best = max(best, len(system))
    return best


@pytest.mark.parametrize(
    "n,constraints",
    [
        (3, [(2, 3)]),
        (3, [(2, 2)]),
        (4, [(3, 6)]),
        (4, [(3, 7)]),
        (4, [(4, 10)]),
        (4, [(2, 3)]),
        (4, [(3, 6), (2, 3)]),
        (4, []),
    ],
)
def test_extremal_ideal_matches_enumeration(n, constraints):
    result = extremal_ideal_exact(n, constraints)
    assert result.optimum == brute_extremal_ideal(n, constraints)
    assert result.exhaustive
    # witness is feasible and attains the optimum
    witness = result.witness
    assert len(witness) == result.optimum
    assert is_ideal(witness) or len(witness) == 0
    profile = shatter_profile(witness)
    for b, k in constraints:
        assert profile[b] <= k


def test_extremal_ideal_named_values():
    assert extremal_ideal_exact(4, [(3, 7)]).optimum == 11
    assert extremal_ideal_exact(5, [(3, 6)]).optimum == 12
    assert extremal_ideal_exact(5, [(4, 10)]).optimum == 14


def test_extremal_ideal_scale_and_validation():
    with pytest.raises(UnsupportedScaleError):
        extremal_ideal_exact(8, [(3, 6)])
    with pytest.raises(ValueError):
        extremal_ideal_exact(4, [(5, 3)])
    with pytest.raises(ValueError):
        extremal_ideal_exact(4, [(3, -1)])


def test_extremal_ideal_jobs_deterministic():
    reference = extremal_ideal_exact(5, [(3, 6)])
    for jobs in (2, 4):
        again = extremal_ideal_exact(5, [(3, 6)], jobs=jobs)
        assert (again.optimum, again.witness) == (reference.optimum, reference.witness)


def test_theorem1_cross_check_on_enumerated_systems():
    # quick version at n = 4; the full n = 5 sweep runs in the acceptance suite
    for system in enumerate_ideal_systems(4):
        profile = shatter_profile(system)
        for b in range(1, 5):
            for i in range(b):
                if profile[b] < upsilon(i, b):
                    assert len(system) < theorem1_bound(4, b, i)


def test_search_optimum_respects_weighted_bound():
    # whenever the cap sits strictly below upsilon(i, b), the search optimum
    # must stay strictly below the weighted cumulative bound
    for n in (4, 5):
        for b in range(1, n + 1):
            for i in range(b):
                k = upsilon(i, b) - 1
                result = extremal_ideal_exact(n, [(b, k)])
                assert result.optimum < theorem1_bound(n, b, i)


def test_lambda_construction_is_a_lower_bound_for_the_search():
    # whenever the composition bound fits under the cap, the transversal
    # system is feasible, so the search optimum must reach its size
    for n, i, b in [(4, 2, 3), (5, 2, 3), (4, 2, 2), (5, 1, 2)]:
        cap = lambda_(i, b)
        result = extremal_ideal_exact(n, [(b, cap)])
        assert result.optimum >= len(lambda_construction(n, i))


def test_verify_lemma2_cases():
    for b, n in [(3, 4), (3, 5), (4, 5)]:
        report = verify_lemma2(n, b)
        assert report.equal, (b, n, report)
        assert report.exhaustive
    report = verify_lemma2(5, 4)
    assert report.trace_cap == zeta(4) - 1 == 8
    assert report.edge_cap == 3
    assert report.ideal_optimum == 11


def test_verify_bollobas_radcliffe():
    assert verify_bollobas_radcliffe(4).within_bound
    five = verify_bollobas_radcliffe(5)
    assert five.within_bound and five.bound == 16
    six = verify_bollobas_radcliffe(6)
    assert six.exceeds_bound  # the documented exceptional case
    assert six.optimum == 23 and six.bound == 22
    with pytest.raises(UnsupportedScaleError):
        verify_bollobas_radcliffe(7)


def test_frankl_formulas_at_small_n():
    for n in (4, 5):
        assert extremal_ideal_exact(n, [(3, 6)]).optimum == turan_edges(2, n) + n + 1
        assert extremal_ideal_exact(n, [(4, 10)]).optimum == turan_edges(3, n) + n + 1
