"""Generators for the explicit extremal families used throughout the suite.

Set-system side: transversal block systems whose shatter values track the
best composition products, the low-dimension cube-plus-singletons system,
conversions between graphs and systems of ranges of size at most two, Turan
graphs, and point-line incidence graphs of prime-order projective planes.

Permutation side: the single-swap family, the independent-swaps family and
the moved-element family.  Swap positions are the disjoint adjacent pairs
{2i-1, 2i} for i = 1..floor(n/2); this pairing reproduces the intended
family sizes 1 + floor(n/2) and 2^floor(n/2) exactly, which an overlapping
(2i, 2i+1) pairing would not.
"""

from __future__ import annotations

import itertools

from .bounds import balanced_part_sizes
from .graphs import Graph
from .perms import PermutationFamily
from .setsystem import SetSystem, elements_of, is_ideal, mask_of


def balanced_blocks(n: int, i: int) -> list[tuple[int, ...]]:
    """Split {1..n} into i consecutive near-equal blocks, larger blocks first."""
    sizes = balanced_part_sizes(n, i)
    blocks = []
    start = 1
    for size in sizes:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return blocks


def lambda_construction(n: int, i: int) -> SetSystem:
    """All i-sets picking exactly one element from each of i near-equal blocks.

    The system has prod(block sizes) ranges and its shatter value at b never
    exceeds the best product over compositions of b into i parts.
    """
    blocks = balanced_blocks(n, i)
    masks = []
    for combo in itertools.product(*blocks):
        masks.append(mask_of(combo, n))
    return SetSystem.from_masks(n, masks)


def vc_remark_system(n: int, i: int) -> SetSystem:
    """Every subset of {1..i} plus every singleton of {1..n}."""
    if not 1 <= i <= n:
        raise ValueError(f"i = {i} outside 1..{n}")
    masks = set(range(1 << i))
    masks.update(1 << (e - 1) for e in range(1, n + 1))
    return SetSystem.from_masks(n, masks)


def graph_to_system(graph: Graph) -> SetSystem:
    """The empty set, all singletons, and one 2-range per edge."""
    masks = [0]
    masks.extend(1 << (v - 1) for v in range(1, graph.n + 1))
    masks.extend(mask_of(edge, graph.n) for edge in graph.edges)
    return SetSystem.from_masks(graph.n, masks)


def system_to_graph(system: SetSystem) -> Graph:
    """Inverse of graph_to_system on its image.

    Requires a downward-closed system whose ranges all have at most two
    elements and whose singletons cover the whole ground set.
    """
    singles = 0
    edges = []
    for mask in system.ranges:
        size = mask.bit_count()
        if size > 2:
            raise ValueError(f"range {elements_of(mask)} has more than two elements")
        if size == 1:
            singles |= mask
        elif size == 2:
            edges.append(elements_of(mask))
    if singles != (1 << system.n) - 1:
        missing = (~singles) & ((1 << system.n) - 1)
        raise ValueError(f"missing singleton for element {elements_of(missing)[0]}")
    if not is_ideal(system):
        raise ValueError("system is not downward closed")
    return Graph.from_edges(system.n, edges)


def turan_graph(n: int, i: int) -> Graph:
    """Complete balanced i-partite graph on n vertices."""
    blocks = balanced_blocks(n, i)
    edges = []
    for a, b in itertools.combinations(range(len(blocks)), 2):
        for u in blocks[a]:
            for v in blocks[b]:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of the projective plane of prime order q.

    2(q^2 + q + 1) vertices, (q + 1)(q^2 + q + 1) edges, girth 6, so any
    four vertices span at most three edges and it contains no 4-cycle.
    Points come first (1..q^2+q+1), lines after, both in lexicographic
    order of their normalized homogeneous coordinates.
    """
    if not _is_prime(q):
        raise ValueError(f"order {q} is not prime")
    reps = [(0, 0, 1)]
    reps.extend((0, 1, z) for z in range(q))
    reps.extend((1, y, z) for y in range(q) for z in range(q))
    reps.sort()
    count = len(reps)  # q^2 + q + 1
    edges = []
    for pi, (x, y, z) in enumerate(reps):
        for li, (a, b, c) in enumerate(reps):
            if (a * x + b * y + c * z) % q == 0:
                edges.append((pi + 1, count + li + 1))
    return Graph.from_edges(2 * count, edges)


def _swap_pairs(n: int) -> list[tuple[int, int]]:
    return [(2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)]


def family_single_swap(n: int) -> PermutationFamily:
    """Identity plus one adjacent transposition per disjoint pair; size 1 + floor(n/2)."""
    if n < 2:
        raise ValueError(f"n = {n} must be at least 2")
    base = tuple(range(1, n + 1))
    images = [base]
    for a, b in _swap_pairs(n):
        img = list(base)
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        images.append(tuple(img))
    return PermutationFamily.from_images(n, images)


def family_independent_swaps(n: int) -> PermutationFamily:
    """Every combination of the disjoint adjacent transpositions; size 2^floor(n/2)."""
    if n < 2:
        raise ValueError(f"n = {n} must be at least 2")
    pairs = _swap_pairs(n)
    images = []
    for r in range(len(pairs) + 1):
        for subset in itertools.combinations(pairs, r):
            img = list(range(1, n + 1))
            for a, b in subset:
                img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
            images.append(tuple(img))
    return PermutationFamily.from_images(n, images)


def family_identity_perturbed(n: int) -> PermutationFamily:
    """All permutations that keep some n-1 values in identity order.

    Equivalently: take the identity, remove one value, re-insert it anywhere.
    Adjacent transpositions arise from two different moves and the identity
    from all of them, so the family has (n-1)^2 + 1 distinct members.
    """
    if n < 2:
        raise ValueError(f"n = {n} must be at least 2")
    base = list(range(1, n + 1))
    images = {tuple(base)}
    for value in base:
        rest = [v for v in base if v != value]
        for slot in range(n):
            images.add(tuple(rest[:slot] + [value] + rest[slot:]))
    return PermutationFamily.from_images(n, images)
