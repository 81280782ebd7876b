"""Seeded random instances for property suites; deterministic given the Random source."""

from __future__ import annotations

import random
from math import factorial

from .perms import PermutationFamily
from .setsystem import SetSystem


def random_system(rng: random.Random, n: int, max_ranges: int | None = None) -> SetSystem:
    """Uniformly sized random set system on {1..n}."""
    universe = 1 << n
    cap = universe if max_ranges is None else min(max_ranges, universe)
    count = rng.randint(0, cap)
    if count * 3 > universe:
        masks = rng.sample(range(universe), count)
    else:
        masks: set[int] = set()
        while len(masks) < count:
            masks.add(rng.randrange(universe))
    return SetSystem.from_masks(n, masks)


def random_family(rng: random.Random, n: int, max_size: int) -> PermutationFamily:
    """Random permutation family with 1..max_size distinct members."""
    count = rng.randint(1, min(max_size, factorial(n)))
    images: set[tuple[int, ...]] = set()
    base = list(range(1, n + 1))
    while len(images) < count:
        rng.shuffle(base)
        images.add(tuple(base))
    return PermutationFamily.from_images(n, images)
