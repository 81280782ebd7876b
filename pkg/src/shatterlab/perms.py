"""Permutations, restriction orders, and the inversion-pair reduction to set systems.

A permutation is stored in one-line notation: image[p] is the value at
position p+1.  The restriction of a permutation to a subset X is the order
it induces on X.  Comparing two permutations yields their distinguishing
pair: the lexicographically smallest value pair they order differently.
Collecting the distinguishing pairs of a family and recording, per member,
which of them the member inverts produces a set system that mirrors the
family's restriction behaviour at half the subset size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, max_induced_edges
from .setsystem import SetSystem, shatter_value


class ReductionInjectivityError(RuntimeError):
    """Two family members produced identical inversion masks; should be impossible."""


@dataclass(frozen=True)
class Permutation:
    """One-line-notation bijection on {1..n}."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.image)

    @cached_property
    def position(self) -> tuple[int, ...]:
        """position[v-1] is the 0-based slot where value v sits."""
        pos = [0] * len(self.image)
        for p, v in enumerate(self.image):
            pos[v - 1] = p
        return tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))


@dataclass(frozen=True)
class PermutationFamily:
    """Distinct permutations sharing one ground set, kept sorted for canonical output."""

    n: int
    members: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        images = [m.image for m in self.members]
        if any(m.n != self.n for m in self.members):
            raise ValueError("all members must act on the same ground set")
        if images != sorted(set(images)):
            raise ValueError("members must be distinct and sorted by one-line notation")

    @classmethod
    def from_images(cls, n: int, images: Iterable[Sequence[int]]) -> "PermutationFamily":
        unique = sorted({tuple(img) for img in images})
        return cls(n, tuple(Permutation(img) for img in unique))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)


def restriction(sigma: Permutation, subset: Iterable[int]) -> tuple[int, ...]:
    """Elements of the subset listed in the order sigma places them."""
    elems = sorted(set(subset))
    if not elems:
        raise ValueError("restriction needs a non-empty subset")
    if elems[0] < 1 or elems[-1] > sigma.n:
        raise ValueError(f"subset leaves the ground set 1..{sigma.n}")
    pos = sigma.position
    return tuple(sorted(elems, key=lambda v: pos[v - 1]))


def phi_witness(family: PermutationFamily, m: int) -> tuple[int, tuple[int, ...]]:
    """Maximum number of distinct restriction orders over m-subsets, with witness.

    Ties go to the lexicographically smallest subset.
    """
    if not 1 <= m <= family.n:
        raise ValueError(f"m = {m} outside 1..{family.n}")
    positions = [member.position for member in family.members]
    cap = min(len(family.members), _factorial(m))
    best = -1
    best_subset: tuple[int, ...] = ()
    for subset in itertools.combinations(range(1, family.n + 1), m):
        seen = {tuple(sorted(subset, key=lambda v: pos[v - 1])) for pos in positions}
        if len(seen) > best:
            best, best_subset = len(seen), subset
            if best == cap:
                break
    if best < 0:
        best, best_subset = 0, ()
    return best, best_subset


def phi_value(family: PermutationFamily, m: int) -> int:
    return phi_witness(family, m)[0]


def _factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def contains(sigma: Permutation, tau: Permutation) -> bool:
    """Pattern containment: some ascending value tuple of sigma orders like tau."""
    m, n = tau.n, sigma.n
    if m > n:
        raise ValueError(f"pattern on {m} values cannot fit in a permutation on {n}")
    tau_rank = _order_signature(tau.position)
    pos = sigma.position
    if m <= 4:
        for values in itertools.combinations(range(1, n + 1), m):
            if _order_signature([pos[v - 1] for v in values]) == tau_rank:
                return True
        return False
    return _contains_backtrack(pos, n, tau.position, m)


def _order_signature(positions: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(len(positions)), key=positions.__getitem__))


def _contains_backtrack(pos: Sequence[int], n: int, tau_pos: Sequence[int], m: int) -> bool:
    # assign pattern values 1..m to increasing sigma-values; prune on both the
    # pairwise order constraints and the count of values still available
    chosen: list[int] = []

    def feasible(candidate: int) -> bool:
        i = len(chosen)
        cp = pos[candidate - 1]
        for j, other in enumerate(chosen):
            if (pos[other - 1] < cp) != (tau_pos[j] < tau_pos[i]):
                return False
        return True

    def extend(start: int) -> bool:
        i = len(chosen)
        if i == m:
            return True
        for candidate in range(start, n - (m - i) + 2):
            if feasible(candidate):
                chosen.append(candidate)
                if extend(candidate + 1):
                    return True
                chosen.pop()
        return False

    return extend(1)


def inversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """All value pairs i < j that sigma lists in decreasing order."""
    pos = sigma.position
    n = sigma.n
    return frozenset(
        (i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        if pos[i - 1] > pos[j - 1]
    )


def distinguishing_pair(first: Permutation, second: Permutation) -> tuple[int, int]:
    """Lexicographically smallest value pair the two permutations order differently."""
    if first.n != second.n:
        raise ValueError("permutations must share a ground set")
    if first.image == second.image:
        raise ValueError("equal permutations have no distinguishing pair")
    pos_a, pos_b = first.position, second.position
    n = first.n
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if (pos_a[i - 1] > pos_a[j - 1]) != (pos_b[i - 1] > pos_b[j - 1]):
                return (i, j)
    raise AssertionError("distinct permutations must differ on some pair")


@dataclass(frozen=True)
class ReductionOutput:
    """The inversion-pair set system induced by a permutation family.

    ground_pairs lists the distinguishing pairs in ascending order; element
    p+1 of the system's ground set stands for ground_pairs[p].  range_masks
    aligns with the family's member order and records, per member, which
    ground pairs it inverts.
    """

    ground_pairs: tuple[tuple[int, int], ...]
    range_masks: tuple[int, ...]
    system: SetSystem


def build_reduction(family: PermutationFamily) -> ReductionOutput:
    """Distinguishing pairs plus the per-member inversion masks over them.

    Distinct members always receive distinct masks: their own distinguishing
    pair lands in the ground set and is inverted by exactly one of the two.
    A collision would therefore falsify the construction and raises.
    """
    if len(family) < 1:
        raise ValueError("family must have at least one member")
    members = family.members
    pairs: set[tuple[int, int]] = set()
    for a, b in itertools.combinations(members, 2):
        pairs.add(distinguishing_pair(a, b))
    ground = tuple(sorted(pairs))
    index = {p: i for i, p in enumerate(ground)}
    masks = []
    for member in members:
        pos = member.position
        mask = 0
        for (i, j), slot in index.items():
            if pos[i - 1] > pos[j - 1]:
                mask |= 1 << slot
        masks.append(mask)
    if len(set(masks)) != len(masks):
        raise ReductionInjectivityError("two members share an inversion mask")
    system = SetSystem.from_masks(len(ground), masks)
    return ReductionOutput(ground, tuple(masks), system)


@dataclass(frozen=True)
class PairGraphReport:
    """Joint check of the reduction system and the pair graph at one m."""

    m: int
    b: int
    phi: int
    ground_size: int
    shatter: int
    max_span: int
    shatter_ok: bool
    span_ok: bool

    @property
    def ok(self) -> bool:
        return self.shatter_ok and self.span_ok


def verify_lemma3(family: PermutationFamily, m: int) -> PairGraphReport:
    """Check the two reduction inequalities at one subset size m.

    (a) the reduction system's shatter value at floor(m/2) stays within the
        family's restriction count at m;
    (b) in the graph on {1..n} whose edges are the distinguishing pairs,
        any m vertices span at most that count minus one edges.

    When the ground set is smaller than floor(m/2) the shatter value is
    taken at the full ground set, which equals the extended value because
    shatter functions are monotone.
    """
    if not 1 <= m <= family.n:
        raise ValueError(f"m = {m} outside 1..{family.n}")
    reduction = build_reduction(family)
    phi = phi_value(family, m)
    b = m // 2
    b_eff = min(b, reduction.system.n)
    shatter = shatter_value(reduction.system, b_eff)
    pair_graph = Graph.from_edges(family.n, reduction.ground_pairs)
    max_span = max_induced_edges(pair_graph, m)
    return PairGraphReport(
        m=m,
        b=b,
        phi=phi,
        ground_size=reduction.system.n,
        shatter=shatter,
        max_span=max_span,
        shatter_ok=shatter <= phi,
        span_ok=max_span <= phi - 1,
    )


@dataclass(frozen=True)
class DecompositionClass:
    anchor_order: tuple[int, ...]
    size: int
    projected: tuple[tuple[int, ...], ...]

    @property
    def preserved(self) -> bool:
        return len(self.projected) == self.size


@dataclass(frozen=True)
class DecompositionReport:
    applicable: bool
    reason: str | None
    k: int | None
    witness: tuple[int, ...] | None
    classes: tuple[DecompositionClass, ...]

    @property
    def all_preserved(self) -> bool:
        return self.applicable and all(c.preserved for c in self.classes)


def decompose_step(family: PermutationFamily, m: int) -> DecompositionReport:
    """Split the family by its restriction to a saturated (m-1)-witness.

    Applicable only when the restriction counts at m and m-1 agree; the
    members are then grouped by their order on the witness subset, and each
    group is projected to the complement.  The step reports whether every
    group keeps its size under the projection.
    """
    if not 2 <= m <= family.n:
        raise ValueError(f"m = {m} outside 2..{family.n}")
    k_m = phi_value(family, m)
    k_prev, witness = phi_witness(family, m - 1)
    if k_m != k_prev:
        return DecompositionReport(
            applicable=False,
            reason=f"restriction counts differ: {k_m} at m = {m} vs {k_prev} at m - 1",
            k=None,
            witness=None,
            classes=(),
        )
    complement = [v for v in range(1, family.n + 1) if v not in witness]
    groups: dict[tuple[int, ...], list[Permutation]] = {}
    for member in family.members:
        groups.setdefault(restriction(member, witness), []).append(member)
    classes = []
    for anchor in sorted(groups):
        members = groups[anchor]
        projected = tuple(sorted({restriction(mem, complement) for mem in members}))
        classes.append(DecompositionClass(anchor, len(members), projected))
    return DecompositionReport(
        applicable=True,
        reason=None,
        k=k_m,
        witness=witness,
        classes=tuple(classes),
    )


def parse_family(text: str) -> PermutationFamily:
    """Read the ``.pf`` format: header ``n <N>`` then one-line notation per line."""
    n: int | None = None
    images: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>', got {line!r}")
            n = int(parts[1])
            if n < 1:
                raise ValueError(f"line {lineno}: bad ground-set size {n}")
            continue
        image = tuple(int(tok) for tok in parts)
        if len(image) != n or sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"line {lineno}: {line!r} is not one-line notation on 1..{n}")
        if image in seen:
            raise ValueError(f"line {lineno}: duplicate member {line!r}")
        seen.add(image)
        images.append(image)
    if n is None:
        raise ValueError("missing 'n <N>' header line")
    return PermutationFamily.from_images(n, images)


def format_family(family: PermutationFamily) -> str:
    lines = [f"n {family.n}"]
    lines.extend(" ".join(str(v) for v in member.image) for member in family.members)
    return "\n".join(lines) + "\n"
