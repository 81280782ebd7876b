"""Exact maximum-family search under a restriction-count cap.

Feasibility is hereditary (any subfamily of a feasible family is feasible),
so the search is a maximum-subset branch and bound over the n! candidate
permutations in lexicographic order.  Each m-subset of the ground set is a
watcher counting the distinct restriction orders among chosen members; a
watcher that reaches the cap leaves only candidates matching one of its
already-present orders alive.

When m equals n the single watcher sees every member distinctly, so the
optimum is min(k, n!) with the first k permutations as canonical witness;
this shortcut keeps the large-m table cells reachable beyond the general
search scale.
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from math import factorial

from .perms import PermutationFamily
from .search import SearchResult, UnsupportedScaleError, default_node_budget

GENERAL_SCALE_LIMIT = 7


def perm_extremal_exact(
    n: int,
    m: int,
    k: int,
    *,
    jobs: int = 1,
    node_budget: int | None = None,
) -> SearchResult:
    """Largest family of permutations on {1..n} whose every m-subset shows at most k orders."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m = {m}, n = {n}")
    if k < 0:
        raise ValueError(f"k = {k} must be non-negative")
    budget = default_node_budget() if node_budget is None else node_budget
    if m == n:
        # the full ground set distinguishes all members: optimum is min(k, n!)
        size = min(k, factorial(n))
        members = itertools.islice(itertools.permutations(range(1, n + 1)), size)
        witness = PermutationFamily.from_images(n, members)
        return SearchResult(size, witness, 0, True)
    if n > GENERAL_SCALE_LIMIT:
        raise UnsupportedScaleError(
            f"n = {n} beyond the supported search scale ({GENERAL_SCALE_LIMIT}) for m < n"
        )
    engine = _FamilySearch(n, m, k, budget)
    best, bits, nodes, exhaustive = engine.solve_value(jobs)
    if exhaustive:
        bits, extra = engine.solve_witness(best)
        nodes += extra
    witness = PermutationFamily.from_images(
        n, (engine.candidates[i] for i in range(len(engine.candidates)) if bits >> i & 1)
    )
    return SearchResult(best, witness, nodes, exhaustive)


class _FamilySearch:
    def __init__(self, n: int, m: int, k: int, node_budget: int) -> None:
        self.n = n
        self.k = k
        self.node_budget = node_budget
        self.candidates = list(itertools.permutations(range(1, n + 1)))
        subsets = list(itertools.combinations(range(1, n + 1), m))
        self.num_watchers = len(subsets)
        # per watcher: intern each candidate's restriction order as a small key id
        keys_per_candidate: list[list[int]] = [[] for _ in self.candidates]
        candidates_with: list[list[int]] = []
        key_counts_template: list[list[int]] = []
        for w, subset in enumerate(subsets):
            interning: dict[tuple[int, ...], int] = {}
            masks: list[int] = []
            for c, image in enumerate(self.candidates):
                pos = [0] * (n + 1)
                for p, v in enumerate(image):
                    pos[v] = p
                order = tuple(sorted(subset, key=pos.__getitem__))
                key = interning.get(order)
                if key is None:
                    key = len(interning)
                    interning[order] = key
                    masks.append(0)
                masks[key] |= 1 << c
                keys_per_candidate[c].append(key)
            candidates_with.append(masks)
            key_counts_template.append([0] * len(interning))
        self.keys_per_candidate = keys_per_candidate
        self.candidates_with = candidates_with
        self.key_counts_template = key_counts_template
        alive = (1 << len(self.candidates)) - 1
        if k == 0:
            alive = 0
        self.initial_alive = alive

    def _fresh_counts(self) -> tuple[list[list[int]], list[int]]:
        return [list(row) for row in self.key_counts_template], [0] * self.num_watchers

    def solve_value(self, jobs: int = 1) -> tuple[int, int, int, bool]:
        if jobs <= 1:
            counts, distinct = self._fresh_counts()
            return self._run_value(0, 0, self.initial_alive, 0, counts, distinct, None)
        prefixes = self._expand_prefixes(max(1, (jobs * 4 - 1).bit_length()))
        shared = [0]
        lock = threading.Lock()

        def work(prefix):
            pos, chosen, alive, bits, counts, distinct = prefix
            return self._run_value(pos, chosen, alive, bits, counts, distinct, (shared, lock))

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, prefixes))
        best, bits, nodes, ok = -1, 0, 0, True
        for b, w, n_, o in results:
            nodes += n_
            ok = ok and o
            if b > best:
                best, bits = b, w
        return best, bits, nodes, ok

    def _expand_prefixes(self, depth: int):
        depth = min(depth, len(self.candidates))
        out = []

        def grow(pos, chosen, alive, bits, counts, distinct):
            if pos == depth:
                out.append((pos, chosen, alive, bits, counts, distinct))
                return
            bit = 1 << pos
            if alive & bit:
                new_counts = [list(row) for row in counts]
                new_distinct = list(distinct)
                new_alive = self._apply_include(pos, alive, new_counts, new_distinct, None)
                grow(pos + 1, chosen + 1, new_alive, bits | bit, new_counts, new_distinct)
            grow(pos + 1, chosen, alive & ~bit, bits, counts, distinct)

        counts, distinct = self._fresh_counts()
        grow(0, 0, self.initial_alive, 0, counts, distinct)
        return out

    def _apply_include(self, pos, alive, counts, distinct, touched):
        """Bump every watcher for candidate pos; saturated watchers filter alive."""
        new_alive = alive
        for w, key in enumerate(self.keys_per_candidate[pos]):
            row = counts[w]
            row[key] += 1
            if touched is not None:
                touched.append((w, key))
            if row[key] == 1:
                distinct[w] += 1
                if distinct[w] == self.k:
                    allowed = 0
                    masks = self.candidates_with[w]
                    for key2, count in enumerate(row):
                        if count > 0:
                            allowed |= masks[key2]
                    new_alive &= allowed
        return new_alive

    def _undo(self, touched, counts, distinct):
        for w, key in touched:
            row = counts[w]
            row[key] -= 1
            if row[key] == 0:
                distinct[w] -= 1

    def _run_value(self, start_pos, start_chosen, start_alive, start_bits, counts, distinct, shared):
        best, best_bits = -1, 0
        nodes = 0
        exhausted = False
        num = len(self.candidates)
        stack: list[tuple] = [(False, start_pos, start_chosen, start_alive, start_bits)]
        while stack:
            frame = stack.pop()
            if frame[0]:
                self._undo(frame[1], counts, distinct)
                continue
            _, pos, chosen, alive, bits = frame
            nodes += 1
            if nodes > self.node_budget:
                exhausted = True
                break
            floor = best
            if shared is not None and shared[0][0] > floor:
                floor = shared[0][0]
            if pos == num:
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
            stack.append((False, pos + 1, chosen, alive & ~bit, bits))
            if alive & bit:
                touched: list[tuple[int, int]] = []
                new_alive = self._apply_include(pos, alive, counts, distinct, touched)
                stack.append((True, touched))
                stack.append((False, pos + 1, chosen + 1, new_alive, bits | bit))
        return best, best_bits, nodes, not exhausted

    def solve_witness(self, target: int) -> tuple[int, int]:
        counts, distinct = self._fresh_counts()
        nodes = 0
        num = len(self.candidates)
        stack: list[tuple] = [(False, 0, 0, self.initial_alive, 0)]
        while stack:
            frame = stack.pop()
            if frame[0]:
                self._undo(frame[1], counts, distinct)
                continue
            _, pos, chosen, alive, bits = frame
            nodes += 1
            if nodes > self.node_budget:
                raise UnsupportedScaleError("node budget exhausted during witness reconstruction")
            if pos == num:
                return bits, nodes
            if chosen + (alive >> pos).bit_count() < target:
                continue
            bit = 1 << pos
            stack.append((False, pos + 1, chosen, alive & ~bit, bits))
            if alive & bit:
                touched: list[tuple[int, int]] = []
                new_alive = self._apply_include(pos, alive, counts, distinct, touched)
                stack.append((True, touched))
                stack.append((False, pos + 1, chosen + 1, new_alive, bits | bit))
        raise AssertionError("witness search found no leaf attaining the proven optimum")
