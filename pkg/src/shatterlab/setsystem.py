"""Set systems over small ground sets, stored as bitmasks.

A set system is a ground set {1, ..., n} together with a collection of
distinct subsets ("ranges").  With n capped at 64, a range fits in one
machine word and every operation below reduces to word-parallel integer
arithmetic.  Elements are 1-based in all public interfaces; bit e-1 of a
mask encodes element e.

All types are immutable and all functions are pure, so everything here is
safe to share across threads or worker processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_GROUND_SIZE = 64


def mask_of(elements: Iterable[int], n: int) -> int:
    """Build the bitmask of a subset of {1..n}; rejects out-of-range elements."""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Decode a bitmask into its ascending 1-based elements."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class SetSystem:
    """Ground set {1..n} plus distinct ranges in ascending mask order.

    The canonical form (deduplicated, sorted by mask value) makes witnesses
    and serialized output reproducible across runs.  n = 0 is permitted so
    that constructions which collapse the ground set (for example the
    inversion-pair reduction of a one-member permutation family) stay total.
    """

    n: int
    ranges: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(f"ground-set size {self.n} outside 0..{MAX_GROUND_SIZE}")
        limit = 1 << self.n
        prev = -1
        for mask in self.ranges:
            if not 0 <= mask < limit:
                raise ValueError(f"range mask {mask} uses bits outside the low {self.n}")
            if mask <= prev:
                raise ValueError("ranges must be strictly ascending (canonical form)")
            prev = mask

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetSystem":
        return cls(n, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        return cls.from_masks(n, (mask_of(s, n) for s in sets))

    @classmethod
    def power_set(cls, n: int) -> "SetSystem":
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def empty(cls, n: int) -> "SetSystem":
        return cls(n, ())

    def sets(self) -> list[tuple[int, ...]]:
        """Ranges as element tuples, in canonical order."""
        return [elements_of(m) for m in self.ranges]

    def __len__(self) -> int:
        return len(self.ranges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranges)


@dataclass(frozen=True)
class ShatterProfile:
    """The sequence f(0), f(1), ..., f(n) of maximal trace sizes."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("profile needs at least the b = 0 entry")
        if any(v < 0 for v in self.values):
            raise ValueError("profile values must be non-negative")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, b: int) -> int:
        return self.values[b]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def trace(system: SetSystem, subset: Iterable[int]) -> SetSystem:
    """Project every range onto a subset of the ground set.

    The result lives on a fresh ground set 1..|subset|, re-indexed by
    ascending original element, with duplicate projections merged.
    """
    elems = sorted(set(subset))
    xmask = mask_of(elems, system.n)
    position = {e: i for i, e in enumerate(elems)}
    projected = set()
    for full in system.ranges:
        rest = full & xmask
        compact = 0
        while rest:
            low = rest & -rest
            compact |= 1 << position[low.bit_length()]
            rest ^= low
        projected.add(compact)
    return SetSystem.from_masks(len(elems), projected)


def shatter_witness(system: SetSystem, b: int) -> tuple[int, tuple[int, ...]]:
    """Exact maximum trace size over b-element subsets, with a witness.

    Scans all C(n, b) subsets; ties resolve to the lexicographically
    smallest witness so repeated runs (and parallel callers) agree.
    """
    if not 0 <= b <= system.n:
        raise ValueError(f"b = {b} outside 0..{system.n}")
    ranges = system.ranges
    cap = min(1 << b, len(ranges))
    best = -1
    best_subset: tuple[int, ...] = ()
    for subset in itertools.combinations(range(1, system.n + 1), b):
        xmask = 0
        for e in subset:
            xmask |= 1 << (e - 1)
        count = len({a & xmask for a in ranges})
        if count > best:
            best, best_subset = count, subset
            if best == cap:
                break
    if best < 0:
        best, best_subset = 0, ()
    return best, best_subset


def shatter_value(system: SetSystem, b: int) -> int:
    return shatter_witness(system, b)[0]


def shatter_profile(system: SetSystem) -> ShatterProfile:
    """All shatter values f(0..n) in one pass over the 2^n subsets."""
    n = system.n
    ranges = system.ranges
    best = [0] * (n + 1)
    if ranges:
        caps = [min(1 << b, len(ranges)) for b in range(n + 1)]
        for xmask in range(1 << n):
            b = xmask.bit_count()
            if best[b] >= caps[b]:
                continue
            count = len({a & xmask for a in ranges})
            if count > best[b]:
                best[b] = count
    return ShatterProfile(tuple(best))


def _is_shattered(ranges: tuple[int, ...], xmask: int, size: int) -> bool:
    return len({a & xmask for a in ranges}) == 1 << size


def vc_dimension(system: SetSystem) -> int:
    """Largest b such that some b-subset carries all 2^b traces.

    The empty system has no shattered set at all, not even the empty one,
    and is assigned dimension -1.
    """
    if not system.ranges:
        return -1
    ranges = system.ranges
    n = system.n
    # climb the subset lattice: every shattered (b+1)-set extends a
    # shattered b-set by its own largest element
    frontier = [0]
    dim = 0
    while True:
        grown = []
        for xmask in frontier:
            start = xmask.bit_length()  # only extend past the current maximum
            for e in range(start, n):
                bigger = xmask | (1 << e)
                if _is_shattered(ranges, bigger, dim + 1):
                    grown.append(bigger)
        if not grown:
            return dim
        frontier = grown
        dim += 1


def is_ideal(system: SetSystem) -> bool:
    """True when the ranges are closed under taking subsets."""
    present = set(system.ranges)
    for a in system.ranges:
        rest = a
        while rest:
            low = rest & -rest
            if (a ^ low) not in present:
                return False
            rest ^= low
    return True


def bondy_distinguishing_set(ranges: Iterable[int]) -> tuple[int, ...]:
    """Select at most t-1 elements on which t distinct ranges differ pairwise.

    Partition-refinement: while some trace-equivalence class still holds two
    ranges, add the smallest element on which any such class disagrees.  Each
    added element splits at least one class, so the class count strictly
    increases and at most t-1 elements are ever chosen.
    """
    masks = list(ranges)
    if len(set(masks)) != len(masks):
        raise ValueError("ranges must be pairwise distinct")
    chosen = 0
    while True:
        classes: dict[int, list[int]] = {}
        for mask in masks:
            classes.setdefault(mask & chosen, []).append(mask)
        candidate = 0
        for group in classes.values():
            if len(group) < 2:
                continue
            agreed = group[0]
            union = group[0]
            for mask in group[1:]:
                agreed &= mask
                union |= mask
            disagreement = (union ^ agreed) & ~chosen
            low = disagreement & -disagreement
            if candidate == 0 or low < candidate:
                candidate = low
        if candidate == 0:
            return elements_of(chosen)
        chosen |= candidate


def parse_set_system(text: str) -> SetSystem:
    """Read the ``.ss`` text format.

    First significant line is ``n <N>``; each following line is one range,
    either ``-`` for the empty set or strictly increasing elements of 1..N.
    Lines starting with ``#`` are comments.  Duplicate ranges and
    out-of-range elements are rejected.
    """
    n: int | None = None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: ground-set size {parts[1]!r} is not an integer") from None
            if not 1 <= n <= MAX_GROUND_SIZE:
                raise ValueError(f"line {lineno}: ground-set size {n} outside 1..{MAX_GROUND_SIZE}")
            continue
        if line == "-":
            mask = 0
        else:
            try:
                elems = [int(tok) for tok in line.split()]
            except ValueError:
                raise ValueError(f"line {lineno}: malformed range {line!r}") from None
            if any(not 1 <= e <= n for e in elems):
                raise ValueError(f"line {lineno}: element outside 1..{n}")
            if any(a >= b for a, b in zip(elems, elems[1:])):
                raise ValueError(f"line {lineno}: elements must be strictly increasing")
            mask = mask_of(elems, n)
        if mask in seen:
            raise ValueError(f"line {lineno}: duplicate range {line!r}")
        seen.add(mask)
        masks.append(mask)
    if n is None:
        raise ValueError("missing 'n <N>' header line")
    return SetSystem.from_masks(n, masks)


def format_set_system(system: SetSystem) -> str:
    """Serialize to the ``.ss`` format in canonical range order."""
    lines = [f"n {system.n}"]
    for mask in system.ranges:
        if mask == 0:
            lines.append("-")
        else:
            lines.append(" ".join(str(e) for e in elements_of(mask)))
    return "\n".join(lines) + "\n"
