"""Exact extremal searches over graphs and downward-closed set systems.

Both searches share one engine: items (edges, or candidate ranges) are
decided in a fixed canonical order by a depth-first branch and bound.
Constraints are tracked by saturating watchers; a watcher that reaches its
cap kills every undecided item it contains, which doubles as the upper
bound used for pruning.  Two phases keep witnesses canonical: the first
proves the optimum value, the second re-runs with that value as a target
and stops at the first attaining leaf, which under include-first traversal
in canonical item order is the lexicographically smallest witness.

Searches are deterministic for any worker count: workers only share a
monotonically improving best-value cell, which cannot change the proven
optimum, and the witness phase is sequential.
"""

from __future__ import annotations

import itertools
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .bounds import zeta
from .graphs import Graph
from .setsystem import SetSystem

DEFAULT_NODE_BUDGET = 100_000_000
BUDGET_ENV_VAR = "SHATTERLAB_NODE_BUDGET"


class UnsupportedScaleError(ValueError):
    """The requested instance is beyond the sizes this search supports."""


def default_node_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive")
    return value


@dataclass(frozen=True)
class SearchResult:
    """Optimum plus canonical witness and audit counters.

    exhaustive is True only when the search provably covered the whole
    space; a run cut short by the node budget reports its incumbent with
    exhaustive False.
    """

    optimum: int
    witness: object
    nodes_explored: int
    exhaustive: bool


class _Saturation:
    """Max-cardinality item selection under saturating watcher caps.

    watchers_of[i] lists the watchers containing item i; member_bits[w] is
    the item bitmask of watcher w; kill_bits[i], when given, marks items
    that become impossible once item i is excluded (used to keep range
    selections downward closed).
    """

    def __init__(
        self,
        num_items: int,
        caps: Sequence[int],
        watchers_of: Sequence[Sequence[int]],
        member_bits: Sequence[int],
        kill_bits: Sequence[int] | None,
        node_budget: int,
    ) -> None:
        self.num_items = num_items
        self.caps = list(caps)
        self.watchers_of = watchers_of
        self.member_bits = list(member_bits)
        self.kill_bits = kill_bits
        self.node_budget = node_budget
        alive = (1 << num_items) - 1
        for w, cap in enumerate(self.caps):
            if cap == 0:
                alive &= ~self.member_bits[w]
        self.initial_alive = alive

    # -- value phase -------------------------------------------------------

    def solve_value(self, jobs: int = 1) -> tuple[int, int, int, bool]:
        """Return (best value, incumbent item bits, nodes, exhaustive)."""
        if jobs <= 1:
            best, bits, nodes, ok = self._run_value(
                0, 0, self.initial_alive, 0, [0] * len(self.caps), None
            )
            return best, bits, nodes, ok
        prefixes = self._expand_prefixes(max(1, (jobs * 4 - 1).bit_length()))
        shared = [-1]
        lock = threading.Lock()

        def work(prefix):
            pos, chosen, alive, bits, cnt = prefix
            return self._run_value(pos, chosen, alive, bits, cnt, (shared, lock))

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, prefixes))
        best, bits = -1, 0
        nodes = 0
        ok = True
        for b, w, n_, o in results:
            nodes += n_
            ok = ok and o
            if b > best:
                best, bits = b, w
        return best, bits, nodes, ok

    def _expand_prefixes(self, depth: int) -> list[tuple[int, int, int, int, list[int]]]:
        """All consistent decision prefixes at the given depth, with counter snapshots."""
        depth = min(depth, self.num_items)
        out: list[tuple[int, int, int, int, list[int]]] = []

        def grow(pos: int, chosen: int, alive: int, bits: int, cnt: list[int]) -> None:
            if pos == depth:
                out.append((pos, chosen, alive, bits, cnt))
                return
            bit = 1 << pos
            kill = self.kill_bits[pos] if self.kill_bits else 0
            if alive & bit:
                new_alive = alive
                new_cnt = list(cnt)
                for w in self.watchers_of[pos]:
                    new_cnt[w] += 1
                    if new_cnt[w] == self.caps[w]:
                        new_alive &= ~self.member_bits[w]
                grow(pos + 1, chosen + 1, new_alive, bits | bit, new_cnt)
            grow(pos + 1, chosen, alive & ~bit & ~kill, bits, cnt)

        grow(0, 0, self.initial_alive, 0, [0] * len(self.caps))
        return out

    def _run_value(self, start_pos, start_chosen, start_alive, start_bits, cnt, shared):
        best = -1
        best_bits = 0
        nodes = 0
        exhausted = False
        stack: list[tuple] = [(False, start_pos, start_chosen, start_alive, start_bits)]
        caps = self.caps
        watchers_of = self.watchers_of
        member_bits = self.member_bits
        kill_bits = self.kill_bits
        num_items = self.num_items
        budget = self.node_budget
        while stack:
            frame = stack.pop()
            if frame[0]:
                for w in frame[1]:
                    cnt[w] -= 1
                continue
            _, pos, chosen, alive, bits = frame
            nodes += 1
            if nodes > budget:
                exhausted = True
                break
            # the shared cell only raises the pruning floor; the incumbent
            # pair (best, best_bits) stays consistent within this worker
            floor = best
            if shared is not None and shared[0][0] > floor:
                floor = shared[0][0]
            if pos == num_items:
                if chosen > best:
                    best, best_bits = chosen, bits
                    if shared is not None:
                        cell, lock = shared
                        with lock:
                            if chosen > cell[0]:
                                cell[0] = chosen
                continue
            if chosen + (alive >> pos).bit_count() <= floor:
                continue
            bit = 1 << pos
            kill = kill_bits[pos] if kill_bits else 0
            stack.append((False, pos + 1, chosen, alive & ~bit & ~kill, bits))
            if alive & bit:
                new_alive = alive
                touched = []
                for w in watchers_of[pos]:
                    c = cnt[w] + 1
                    cnt[w] = c
                    touched.append(w)
                    if c == caps[w]:
                        new_alive &= ~member_bits[w]
                stack.append((True, touched))
                stack.append((False, pos + 1, chosen + 1, new_alive, bits | bit))
        return best, best_bits, nodes, not exhausted

    # -- witness phase -----------------------------------------------------

    def solve_witness(self, target: int, budget: int) -> tuple[int, int]:
        """First leaf attaining the target under include-first canonical order."""
        cnt = [0] * len(self.caps)
        nodes = 0
        stack: list[tuple] = [(False, 0, 0, self.initial_alive, 0)]
        while stack:
            frame = stack.pop()
            if frame[0]:
                for w in frame[1]:
                    cnt[w] -= 1
                continue
            _, pos, chosen, alive, bits = frame
            nodes += 1
            if nodes > budget:
                raise UnsupportedScaleError("node budget exhausted during witness reconstruction")
            if pos == self.num_items:
                return bits, nodes
            if chosen + (alive >> pos).bit_count() < target:
                continue
            bit = 1 << pos
            kill = self.kill_bits[pos] if self.kill_bits else 0
            stack.append((False, pos + 1, chosen, alive & ~bit & ~kill, bits))
            if alive & bit:
                new_alive = alive
                touched = []
                for w in self.watchers_of[pos]:
                    c = cnt[w] + 1
                    cnt[w] = c
                    touched.append(w)
                    if c == self.caps[w]:
                        new_alive &= ~self.member_bits[w]
                stack.append((True, touched))
                stack.append((False, pos + 1, chosen + 1, new_alive, bits | bit))
        raise AssertionError("witness search found no leaf attaining the proven optimum")


def ex_exact(n: int, m: int, k: int, *, jobs: int = 1, node_budget: int | None = None) -> SearchResult:
    """Maximum edge count of a graph on n vertices whose every m vertices span at most k edges.

    Exact branch and bound over edges in lexicographic order.  The witness
    is the lexicographically smallest extremal edge set; if the node budget
    runs out the incumbent is returned with exhaustive False.
    """
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m = {m}, n = {n}")
    if k < 0:
        raise ValueError(f"k = {k} must be non-negative")
    budget = default_node_budget() if node_budget is None else node_budget
    edges = list(itertools.combinations(range(1, n + 1), 2))
    edge_index = {e: i for i, e in enumerate(edges)}
    caps = []
    member_bits = []
    watchers_of: list[list[int]] = [[] for _ in edges]
    for w, subset in enumerate(itertools.combinations(range(1, n + 1), m)):
        caps.append(k)
        bits = 0
        for pair in itertools.combinations(subset, 2):
            i = edge_index[pair]
            bits |= 1 << i
            watchers_of[i].append(w)
        member_bits.append(bits)
    engine = _Saturation(len(edges), caps, watchers_of, member_bits, None, budget)
    best, bits, nodes, exhaustive = engine.solve_value(jobs)
    if exhaustive:
        bits, extra = engine.solve_witness(best, budget)
        nodes += extra
    witness = Graph.from_edges(n, (edges[i] for i in range(len(edges)) if bits >> i & 1))
    return SearchResult(best, witness, nodes, exhaustive)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def extremal_ideal_exact(
    n: int,
    constraints: Sequence[tuple[int, int]],
    *,
    jobs: int = 1,
    node_budget: int | None = None,
) -> SearchResult:
    """Largest downward-closed system on {1..n} whose shatter values respect the caps.

    Compression lets the search range over downward-closed systems only.
    Candidate ranges are decided in ascending mask order, which refines the
    subset partial order, so closure is maintained by killing all supersets
    of any excluded range.  For a downward-closed system the trace size on X
    is the number of chosen ranges inside X, so each constraint (b, k)
    becomes one saturating watcher per b-subset.
    """
    if n < 1:
        raise ValueError(f"n = {n} must be at least 1")
    if n > 7:
        raise UnsupportedScaleError(f"n = {n} beyond the supported branch-and-bound scale (7)")
    for b, k in constraints:
        if not 0 <= b <= n:
            raise ValueError(f"constraint subset size {b} outside 0..{n}")
        if k < 0:
            raise ValueError(f"constraint cap {k} must be non-negative")
    budget = default_node_budget() if node_budget is None else node_budget
    num_items = 1 << n
    caps = []
    member_bits = []
    watchers_of: list[list[int]] = [[] for _ in range(num_items)]
    w = 0
    for b, k in constraints:
        for subset in itertools.combinations(range(n), b):
            xmask = 0
            for e in subset:
                xmask |= 1 << e
            caps.append(k)
            bits = 0
            for sub in _submasks(xmask):
                bits |= 1 << sub
                watchers_of[sub].append(w)
            member_bits.append(bits)
            w += 1
    kill_bits = []
    full = (1 << n) - 1
    for mask in range(num_items):
        free = full ^ mask
        bits = 0
        for extra in _submasks(free):
            bits |= 1 << (mask | extra)
        kill_bits.append(bits & ~(1 << mask))
    engine = _Saturation(num_items, caps, watchers_of, member_bits, kill_bits, budget)
    best, bits, nodes, exhaustive = engine.solve_value(jobs)
    if exhaustive:
        bits, extra = engine.solve_witness(best, budget)
        nodes += extra
    witness = SetSystem.from_masks(n, (m for m in range(num_items) if bits >> m & 1))
    return SearchResult(best, witness, nodes, exhaustive)


_MONOTONE_CACHE: dict[int, list[frozenset[int]]] = {}


def _monotone_families(j: int) -> list[frozenset[int]]:
    if j in _MONOTONE_CACHE:
        return _MONOTONE_CACHE[j]
    if j == 0:
        families = [frozenset(), frozenset({0})]
    else:
        smaller = _monotone_families(j - 1)
        bit = 1 << (j - 1)
        families = []
        for without in smaller:
            for with_elem in smaller:
                if with_elem <= without:
                    families.append(without | {a | bit for a in with_elem})
    _MONOTONE_CACHE[j] = families
    return families


def enumerate_ideal_systems(n: int) -> Iterator[SetSystem]:
    """Yield every downward-closed system on {1..n}; counts are the Dedekind numbers.

    A family on j elements is a pair (R0, R1) of families on j-1 elements
    with R1 contained in R0 (R0 holds the ranges avoiding element j, R1 the
    ranges containing it, with j stripped).  Kept to n <= 5, where the count
    is 7581; n = 6 already has 7.8 million families.
    """
    if not 1 <= n <= 5:
        raise UnsupportedScaleError(f"full enumeration supported for n <= 5, got {n}")
    for family in _monotone_families(n):
        yield SetSystem.from_masks(n, family)


def dedekind_count(n: int) -> int:
    """Number of downward-closed systems on {1..n} (n <= 5)."""
    if not 0 <= n <= 5:
        raise UnsupportedScaleError(f"count supported for n <= 5, got {n}")
    return len(_monotone_families(n))


@dataclass(frozen=True)
class EquivalenceReport:
    """Both sides of the trace-cap vs graph-density equivalence at one (n, b)."""

    n: int
    b: int
    trace_cap: int
    edge_cap: int
    ideal_optimum: int
    graph_optimum: int
    rhs: int
    ideal_exhaustive: bool
    graph_exhaustive: bool

    @property
    def equal(self) -> bool:
        return self.ideal_optimum == self.rhs

    @property
    def exhaustive(self) -> bool:
        return self.ideal_exhaustive and self.graph_exhaustive


def verify_lemma2(n: int, b: int, *, jobs: int = 1, node_budget: int | None = None) -> EquivalenceReport:
    """Compare the two sides of the equivalence by two independent searches.

    Left: the largest downward-closed system with trace cap zeta(b) - 1 at b.
    Right: the graph search optimum at edge cap zeta(b) - b - 2, plus n + 1.
    """
    trace_cap = zeta(b) - 1
    edge_cap = zeta(b) - b - 2
    ideal = extremal_ideal_exact(n, [(b, trace_cap)], jobs=jobs, node_budget=node_budget)
    graph = ex_exact(n, b, edge_cap, jobs=jobs, node_budget=node_budget)
    return EquivalenceReport(
        n=n,
        b=b,
        trace_cap=trace_cap,
        edge_cap=edge_cap,
        ideal_optimum=ideal.optimum,
        graph_optimum=graph.optimum,
        rhs=graph.optimum + n + 1,
        ideal_exhaustive=ideal.exhaustive,
        graph_exhaustive=graph.exhaustive,
    )


@dataclass(frozen=True)
class PairTraceReport:
    """Search outcome for the trace cap 11 at subset size 4 against C(n,2) + n + 1."""

    n: int
    optimum: int
    bound: int
    exhaustive: bool

    @property
    def within_bound(self) -> bool:
        return self.optimum <= self.bound

    @property
    def exceeds_bound(self) -> bool:
        return self.optimum > self.bound


def verify_bollobas_radcliffe(n: int, *, jobs: int = 1, node_budget: int | None = None) -> PairTraceReport:
    """Check the pair-trace bound; n = 6 is the documented exceptional case."""
    if not 4 <= n <= 6:
        raise UnsupportedScaleError(f"supported for 4 <= n <= 6, got {n}")
    result = extremal_ideal_exact(n, [(4, 11)], jobs=jobs, node_budget=node_budget)
    return PairTraceReport(
        n=n,
        optimum=result.optimum,
        bound=comb(n, 2) + n + 1,
        exhaustive=result.exhaustive,
    )
