"""Independent brute-force oracles used to cross-check the library.

Everything here works on frozensets of 1-based elements, deliberately
avoiding the library's bitmask machinery so the two routes share nothing.
"""

import itertools

from shatterlab import SetSystem


def system_as_sets(system: SetSystem) -> set[frozenset[int]]:
    return {frozenset(s) for s in system.sets()}


def naive_trace(sets, subset) -> set[frozenset[int]]:
    subset = frozenset(subset)
    return {frozenset(s) & subset for s in sets}


def naive_shatter(n: int, sets, b: int) -> int:
    best = 0
    for subset in itertools.combinations(range(1, n + 1), b):
        count = len(naive_trace(sets, subset))
        if count > best:
            best = count
    return best


def naive_profile(n: int, sets) -> list[int]:
    if not sets:
        return [0] * (n + 1)
    return [naive_shatter(n, sets, b) for b in range(n + 1)]


def naive_vc(n: int, sets) -> int:
    if not sets:
        return -1
    dim = 0
    for b in range(1, n + 1):
        if naive_shatter(n, sets, b) == 2 ** b:
            dim = b
    return dim


def brute_force_ex(n: int, m: int, k: int):
    """Enumerate all graphs on n vertices; return (optimum, lex-min witness)."""
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    count = len(all_edges)
    subsets = [frozenset(s) for s in itertools.combinations(range(1, n + 1), m)]
    best, best_witness = -1, None
    for code in range(1 << count):
        edges = tuple(all_edges[i] for i in range(count) if code >> i & 1)
        if len(edges) < best:
            continue
        ok = True
        for subset in subsets:
            spanned = sum(1 for u, v in edges if u in subset and v in subset)
            if spanned > k:
                ok = False
                break
        if not ok:
            continue
        if len(edges) > best or (len(edges) == best and edges < best_witness):
            best, best_witness = len(edges), edges
    return best, best_witness


def random_masks(rng, n: int, max_ranges: int) -> list[int]:
    count = rng.randint(0, min(max_ranges, 1 << n))
    return rng.sample(range(1 << n), count)


def masks_to_sets(masks) -> list[frozenset[int]]:
    out = []
    for mask in masks:
        elems = set()
        e = 1
        while mask:
            if mask & 1:
                elems.add(e)
            mask >>= 1
            e += 1
        out.append(frozenset(elems))
    return out
