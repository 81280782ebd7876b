"""Named verification suites behind the command-line ``verify`` subcommand.

Each suite returns a SuiteReport of independent checks.  Randomized suites
take an explicit seed and are fully deterministic given it.  Checks marked
report-only in their detail string never fail; they record observations
(such as the exceptional pair-trace case at n = 6) without judging them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import bounds as bnd
from .compression import dominates, normalize_with_stats
from .constructions import (
    family_identity_perturbed,
    family_independent_swaps,
    family_single_swap,
    lambda_construction,
    vc_remark_system,
)
from .permsearch import perm_extremal_exact
from .perms import PermutationFamily, distinguishing_pair, phi_value, verify_lemma3
from .randgen import random_family, random_system
from .search import verify_bollobas_radcliffe, verify_lemma2
from .setsystem import SetSystem, is_ideal, shatter_profile, vc_dimension

# Reference values for the interleaved bound table, rows b = 2..6, and the
# index pairs where the lower family overtakes the upper one.
TABLE1_REFERENCE: dict[int, tuple[int, ...]] = {
    2: (2, 3),
    3: (3, 4, 5, 6),
    4: (4, 5, 7, 9, 11, 12),
    5: (5, 6, 9, 12, 15, 18, 23, 24),
    6: (6, 7, 11, 16, 19, 27, 31, 36, 47, 48),
}
TABLE1_GAP_REFERENCE: dict[int, tuple[int, ...]] = {
    2: (),
    3: (),
    4: (1,),
    5: (1, 2),
    6: (1, 2, 3),
}

DEFAULT_SEED = 271828


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check(name: str, passed: bool, detail: str, **values) -> CheckResult:
    return CheckResult(name, bool(passed), detail, dict(values))


# ---------------------------------------------------------------------------
# bound table tightness


def suite_table1_tightness(construction_max_n: int = 9) -> SuiteReport:
    checks = []
    rows = {row.b: row for row in bnd.table1(6)}

    ok = all(rows[b].entries == ref for b, ref in TABLE1_REFERENCE.items())
    checks.append(_check(
        "table-entries", ok, "rows b=2..6 match the reference values",
        entries={b: list(rows[b].entries) for b in TABLE1_REFERENCE},
    ))

    got_gaps = {b: tuple(i for i, g in enumerate(rows[b].gap_flags) if g) for b in TABLE1_REFERENCE}
    ok = got_gaps == TABLE1_GAP_REFERENCE
    checks.append(_check(
        "gap-flags", ok, "gap positions match the reference rows",
        gaps={b: list(v) for b, v in got_gaps.items()},
    ))

    ok = all(
        bnd.upsilon(i, b) == 2 * bnd.upsilon(i - 1, b - 1)
        for b in range(2, 13)
        for i in range(1, b)
    )
    checks.append(_check("doubling-identity", ok, "upsilon(i,b) = 2*upsilon(i-1,b-1) for b <= 12"))

    def balanced(i: int, b: int) -> int:
        q, r = divmod(b, i)
        return (q + 2) ** r * (q + 1) ** (i - r)

    ok = all(bnd.lambda_(i, b) == balanced(i, b) for b in range(1, 13) for i in range(1, b + 1))
    checks.append(_check(
        "lambda-balanced", ok,
        "composition maximum equals the near-equal-parts product for b <= 12",
    ))

    ok = all(
        bnd.theorem1_bound(b, b, i) >= bnd.upsilon(i, b)
        for b in range(1, 13)
        for i in range(b)
    )
    checks.append(_check("anchor-at-n-equals-b", ok, "weighted bound at n = b dominates upsilon"))

    bad = []
    for i in range(1, 4):
        for n in range(i, construction_max_n + 1):
            system = lambda_construction(n, i)
            sizes = bnd.balanced_part_sizes(n, i)
            expected = 1
            for s in sizes:
                expected *= s
            if len(system) != expected:
                bad.append((n, i, "size"))
            profile = shatter_profile(system)
            for b in range(1, n + 1):
                if profile[b] > bnd.lambda_(min(i, b), b):
                    bad.append((n, i, b))
    checks.append(_check(
        "transversal-construction", not bad,
        f"block systems stay within their composition bound up to n = {construction_max_n}",
        violations=bad,
    ))

    bad = []
    details = {}
    for n, i in ((6, 3), (8, 3), (7, 2)):
        system = vc_remark_system(n, i)
        if vc_dimension(system) != i:
            bad.append((n, i, "vc"))
        profile = shatter_profile(system)
        for b in range(1, n + 1):
            expected = (1 << min(i, b)) + max(0, b - i)
            if profile[b] != expected:
                bad.append((n, i, b))
        b_probe = min(n, i + 2)
        details[f"n{n}_i{i}_f{b_probe}"] = {
            "exact": profile[b_probe],
            "direct_count": (1 << i) + b_probe - i,
            "off_by_one_variant": (1 << i) + b_probe - i - 1,
        }
    checks.append(_check(
        "cube-plus-singletons", not bad,
        "exact trace counts equal 2^min(i,b) + max(0, b-i); the off-by-one variant does not match",
        violations=bad, probes=details,
    ))
    return SuiteReport("table1-tightness", tuple(checks))


# ---------------------------------------------------------------------------
# graph equivalence and density bounds


def suite_lemma2(
    stretch: bool = False,
    jobs: int = 1,
    node_budget: int | None = None,
    pairs: list[tuple[int, int]] | None = None,
) -> SuiteReport:
    """Equality of the two searches; ``pairs`` narrows the run to given (b, n)."""
    if pairs is None:
        pairs = [(3, 4), (3, 5), (4, 5)]
        if stretch:
            pairs.append((4, 6))
    checks = []
    for b, n in pairs:
        rep = verify_lemma2(n, b, jobs=jobs, node_budget=node_budget)
        checks.append(_check(
            f"equivalence-b{b}-n{n}",
            rep.equal and rep.exhaustive,
            f"ideal optimum {rep.ideal_optimum} vs graph side {rep.graph_optimum} + {n} + 1 = {rep.rhs}",
            ideal=rep.ideal_optimum, graph=rep.graph_optimum, rhs=rep.rhs,
            exhaustive=rep.exhaustive,
        ))
    return SuiteReport("lemma2", tuple(checks))


def suite_frankl(stretch: bool = False, jobs: int = 1, node_budget: int | None = None) -> SuiteReport:
    from .search import extremal_ideal_exact

    ns = [4, 5] + ([6] if stretch else [])
    checks = []
    for n in ns:
        for b, k, parts in ((3, 6, 2), (4, 10, 3)):
            expected = bnd.turan_edges(parts, n) + n + 1
            result = extremal_ideal_exact(n, [(b, k)], jobs=jobs, node_budget=node_budget)
            checks.append(_check(
                f"cap-{b}-{k}-n{n}",
                result.optimum == expected and result.exhaustive,
                f"optimum {result.optimum}, partite bound {expected}",
                optimum=result.optimum, expected=expected, exhaustive=result.exhaustive,
            ))
    return SuiteReport("frankl", tuple(checks))


def suite_bollobas_radcliffe(jobs: int = 1, node_budget: int | None = None) -> SuiteReport:
    checks = []
    for n in (4, 5):
        rep = verify_bollobas_radcliffe(n, jobs=jobs, node_budget=node_budget)
        checks.append(_check(
            f"within-bound-n{n}",
            rep.within_bound and rep.exhaustive,
            f"optimum {rep.optimum} vs bound {rep.bound}",
            optimum=rep.optimum, bound=rep.bound, exhaustive=rep.exhaustive,
        ))
    rep = verify_bollobas_radcliffe(6, jobs=jobs, node_budget=node_budget)
    checks.append(_check(
        "exception-n6",
        True,
        "report-only: optimum {} vs bound {}; exception {}".format(
            rep.optimum, rep.bound, "materializes" if rep.exceeds_bound else "does not materialize"
        ),
        optimum=rep.optimum, bound=rep.bound, exceeds=rep.exceeds_bound,
        exhaustive=rep.exhaustive,
    ))
    return SuiteReport("bollobas-radcliffe", tuple(checks))


# ---------------------------------------------------------------------------
# permutation reduction properties


def suite_lemma3(seed: int = DEFAULT_SEED, cases: int = 200) -> SuiteReport:
    rng = random.Random(seed)
    failures = []
    tested = 0
    for _ in range(cases):
        n = rng.randint(2, 8)
        family = random_family(rng, n, 40)
        m = rng.randint(2, n)
        report = verify_lemma3(family, m)
        tested += 1
        if not report.ok:
            failures.append((n, len(family), m, report.shatter, report.phi, report.max_span))
    checks = [_check(
        "random-families", not failures,
        f"{tested} seeded families checked at one subset size each",
        failures=failures[:5], seed=seed,
    )]

    failures = []
    constructed: list[PermutationFamily] = []
    constructed += [family_single_swap(n) for n in range(4, 9)]
    constructed += [family_independent_swaps(n) for n in range(4, 9)]
    constructed += [family_identity_perturbed(n) for n in range(4, 7)]
    for family in constructed:
        for m in range(2, family.n + 1):
            report = verify_lemma3(family, m)
            if not report.ok:
                failures.append((family.n, len(family), m))
    checks.append(_check(
        "constructed-families", not failures,
        "swap and moved-element families checked at every subset size",
        failures=failures[:5],
    ))

    bad = []
    for _ in range(200):
        n = rng.randint(2, 8)
        family = random_family(rng, n, 12)
        t = len(family)
        if t < 2:
            continue
        pairs = {distinguishing_pair(a, b) for a, b in itertools.combinations(family.members, 2)}
        if len(pairs) > t - 1:
            bad.append((n, t, len(pairs)))
    checks.append(_check(
        "pair-count-bound", not bad,
        "families of t members never exhibit more than t-1 distinguishing pairs",
        failures=bad[:5],
    ))
    return SuiteReport("lemma3", tuple(checks))


# ---------------------------------------------------------------------------
# permutation extremal table and growth transitions


def suite_table3(jobs: int = 1, node_budget: int | None = None) -> SuiteReport:
    checks = []
    formula_cells = [
        (4, 4, 3, 4 * 2 // 3 + 1, "two-thirds"),
        (5, 4, 3, 5 * 2 // 3 + 1, "two-thirds"),
        (5, 5, 3, 5 // 2 + 1, "half"),
    ]
    for n, m, k, expected, tag in formula_cells:
        result = perm_extremal_exact(n, m, k, jobs=jobs, node_budget=node_budget)
        checks.append(_check(
            f"{tag}-n{n}-m{m}-k{k}",
            result.optimum == expected and result.exhaustive,
            f"optimum {result.optimum}, formula {expected}",
            optimum=result.optimum, expected=expected, exhaustive=result.exhaustive,
            nodes=result.nodes_explored,
        ))
    constant_cells = [(m, k) for m in range(4, 11) for k in range(2, m // 2 + 1)]
    bad = []
    for m, k in constant_cells:
        result = perm_extremal_exact(m, m, k, jobs=jobs, node_budget=node_budget)
        if result.optimum != k or not result.exhaustive:
            bad.append((m, k, result.optimum))
    checks.append(_check(
        "constant-cells", not bad,
        f"{len(constant_cells)} cells with k at most floor(m/2) equal k at the smallest meaningful n",
        failures=bad,
    ))
    return SuiteReport("table3", tuple(checks))


def suite_transitions(jobs: int = 1, node_budget: int | None = None) -> SuiteReport:
    checks = []

    constant_runs = {
        (3, 1): [perm_extremal_exact(n, 3, 1, jobs=jobs, node_budget=node_budget).optimum for n in (3, 4, 5)],
        (4, 2): [perm_extremal_exact(n, 4, 2, jobs=jobs, node_budget=node_budget).optimum for n in (4, 5)],
    }
    ok = all(len(set(vals)) == 1 for vals in constant_runs.values())
    checks.append(_check(
        "constant-regime", ok,
        "optima under cap floor(m/2) do not move with n",
        runs={f"m{m}k{k}": v for (m, k), v in constant_runs.items()},
    ))

    sizes = [len(family_single_swap(n)) for n in range(4, 9)]
    phis = [phi_value(family_single_swap(n), 4) for n in range(4, 9)]
    ok = sizes == [1 + n // 2 for n in range(4, 9)] and all(p == 3 for p in phis)
    checks.append(_check(
        "linear-regime-lower", ok,
        "single-swap families grow linearly while holding the 4-subset count at 3",
        sizes=sizes, phis=phis,
    ))

    upper = [perm_extremal_exact(n, 4, 3, jobs=jobs, node_budget=node_budget).optimum for n in (4, 5)]
    ok = upper == [2 * n // 3 + 1 for n in (4, 5)]
    checks.append(_check(
        "linear-regime-exact", ok,
        "search optima under the just-above-half cap follow the linear formula",
        optima=upper,
    ))

    sizes = [len(family_independent_swaps(n)) for n in range(4, 9)]
    phis = [phi_value(family_independent_swaps(n), 4) for n in range(4, 9)]
    ok = sizes == [1 << (n // 2) for n in range(4, 9)] and all(p == 4 for p in phis)
    checks.append(_check(
        "exponential-regime", ok,
        "independent-swap families double with every added pair at fixed 4-subset count",
        sizes=sizes, phis=phis,
    ))
    return SuiteReport("transitions", tuple(checks))


# ---------------------------------------------------------------------------
# compression invariants


def suite_compression(
    seed: int = DEFAULT_SEED,
    random_cases: int = 1000,
    max_random_n: int = 10,
    exhaustive_cap: int = 1_000_000,
) -> SuiteReport:
    checks = []
    violations = []
    second_pass_changes = 0
    runs = 0
    total = (1 << 16) - 1
    count = min(total, exhaustive_cap)
    for code in range(1, count + 1):
        system = SetSystem(4, tuple(i for i in range(16) if code >> i & 1))
        compressed, stats = normalize_with_stats(system)
        runs += 1
        if len(stats) > 1 and stats[1] > 0:
            second_pass_changes += 1
        if len(compressed) != len(system):
            violations.append((code, "cardinality"))
            continue
        if not is_ideal(compressed):
            violations.append((code, "ideal"))
            continue
        if not dominates(shatter_profile(compressed), shatter_profile(system)):
            violations.append((code, "profile"))
    checks.append(_check(
        "exhaustive-n4", not violations,
        f"all {count} non-empty systems on four elements compress correctly",
        violations=violations[:5],
    ))

    violations = []
    rng = random.Random(seed)
    for _ in range(random_cases):
        n = rng.randint(1, max_random_n)
        system = random_system(rng, n, max_ranges=min(1 << n, 40))
        compressed, stats = normalize_with_stats(system)
        runs += 1
        if len(stats) > 1 and stats[1] > 0:
            second_pass_changes += 1
        if len(compressed) != len(system):
            violations.append((n, "cardinality"))
        elif not is_ideal(compressed):
            violations.append((n, "ideal"))
        elif not dominates(shatter_profile(compressed), shatter_profile(system)):
            violations.append((n, "profile"))
    checks.append(_check(
        "random-systems", not violations,
        f"{random_cases} seeded systems on up to {max_random_n} elements compress correctly",
        violations=violations[:5], seed=seed,
    ))

    checks.append(_check(
        "single-sweep-observation", True,
        f"report-only: a second sweep changed something in {second_pass_changes} of {runs} runs",
        second_pass_changes=second_pass_changes, runs=runs,
    ))
    return SuiteReport("compression", tuple(checks))


SUITES = {
    "table1-tightness": suite_table1_tightness,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "frankl": suite_frankl,
    "bollobas-radcliffe": suite_bollobas_radcliffe,
    "table3": suite_table3,
    "transitions": suite_transitions,
    "compression": suite_compression,
}
