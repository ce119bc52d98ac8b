"""Induced actions on points, m-subsets and balanced partitions.

Spaces index their objects densely: subsets in lexicographic order with a
closed-form rank (no materialization needed), partitions in generation order
with a cached index table.  Objects are canonical: subsets are ascending
tuples, partitions are tuples of ascending blocks ordered by minimum element.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .caps import Caps, DEFAULT
from .groups import CapExceeded, PermGroup
from .perms import Permutation

SubsetObj = tuple[int, ...]
PartitionObj = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ActionSpace:
    kind: str  # "points" | "subsets" | "partitions"
    n: int  # degree of the acting permutations
    m: int = 0
    blocks: int = 0  # partition block count

    @classmethod
    def points(cls, n: int) -> "ActionSpace":
        return cls("points", n)

    @classmethod
    def subsets(cls, n: int, m: int) -> "ActionSpace":
        if not 0 < m <= n:
            raise ValueError("need 0 < m <= n")
        return cls("subsets", n, m)

    @classmethod
    def partitions(cls, m: int, blocks: int) -> "ActionSpace":
        if m < 1 or blocks < 1:
            raise ValueError("need m >= 1 and blocks >= 1")
        return cls("partitions", m * blocks, m, blocks)

    @cached_property
    def size(self) -> int:
        if self.kind == "points":
            return self.n
        if self.kind == "subsets":
            return math.comb(self.n, self.m)
        return math.factorial(self.n) // (math.factorial(self.m) ** self.blocks * math.factorial(self.blocks))

    def describe(self) -> str:
        if self.kind == "points":
            return f"points:{self.n}"
        if self.kind == "subsets":
            return f"subsets:{self.n},{self.m}"
        return f"partitions:{self.m},{self.blocks}"

    # object <-> index

    def object_at(self, index: int):
        if not 0 <= index < self.size:
            raise IndexError(index)
        if self.kind == "points":
            return index
        if self.kind == "subsets":
            return _unrank_subset(self.n, self.m, index)
        return self._partition_list()[index]

    def index_of(self, obj) -> int:
        if self.kind == "points":
            return obj
        if self.kind == "subsets":
            return _rank_subset(self.n, obj)
        return self._partition_index()[obj]

    def iter_objects(self) -> Iterator:
        if self.kind == "points":
            return iter(range(self.n))
        if self.kind == "subsets":
            return itertools.combinations(range(self.n), self.m)
        return iter(self._partition_list())

    def apply(self, p: Permutation, obj):
        """Image of a canonical object under p, canonicalized."""
        if self.kind == "points":
            return p.act(obj)
        if self.kind == "subsets":
            return tuple(sorted(p.act(x) for x in obj))
        blocks = [tuple(sorted(p.act(x) for x in blk)) for blk in obj]
        blocks.sort()
        return tuple(blocks)

    def check_degree(self, p: Permutation) -> None:
        if p.degree != self.n:
            raise ValueError(f"permutation degree {p.degree} does not match space on {self.n} points")

    def _partition_list(self, caps: Caps = DEFAULT) -> list[PartitionObj]:
        if self.size > caps["space_materialize"]:
            raise CapExceeded(f"space size {self.size} exceeds materialization cap")
        cached = getattr(self, "_plist", None)
        if cached is None:
            cached = list(_gen_partitions(tuple(range(self.n)), self.m))
            object.__setattr__(self, "_plist", cached)
        return cached

    def _partition_index(self) -> dict[PartitionObj, int]:
        cached = getattr(self, "_pindex", None)
        if cached is None:
            cached = {obj: i for i, obj in enumerate(self._partition_list())}
            object.__setattr__(self, "_pindex", cached)
        return cached


def _rank_subset(n: int, obj: SubsetObj) -> int:
    m = len(obj)
    r = math.comb(n, m) - 1
    for j, a in enumerate(obj):
        r -= math.comb(n - 1 - a, m - j)
    return r


def _unrank_subset(n: int, m: int, index: int) -> SubsetObj:
    out = []
    prev = -1
    remaining = index
    for j in range(m):
        a = prev + 1
        while True:
            block = math.comb(n - 1 - a, m - 1 - j)
            if remaining < block:
                break
            remaining -= block
            a += 1
        out.append(a)
        prev = a
    return tuple(out)


def _gen_partitions(points: tuple[int, ...], m: int) -> Iterator[PartitionObj]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for others in itertools.combinations(rest, m - 1):
        block = (first,) + others
        remaining = tuple(x for x in rest if x not in others)
        for tail in _gen_partitions(remaining, m):
            yield (block,) + tail


def induced_permutation(p: Permutation, space: ActionSpace, caps: Caps = DEFAULT) -> Permutation:
    """Index-level permutation induced by p; functorial over composition."""
    space.check_degree(p)
    if space.size > caps["space_materialize"]:
        raise CapExceeded(f"space size {space.size} exceeds materialization cap")
    images = [0] * space.size
    for i, obj in enumerate(space.iter_objects()):
        images[i] = space.index_of(space.apply(p, obj))
    return Permutation(images)


def induced_group(group: PermGroup, space: ActionSpace, caps: Caps = DEFAULT) -> PermGroup:
    space_gens = [induced_permutation(g, space, caps) for g in group.generators]
    return PermGroup(space.size, space_gens)


def fixed_points(p: Permutation, space: ActionSpace, caps: Caps = DEFAULT) -> int:
    """Number of space objects fixed by p."""
    space.check_degree(p)
    if space.size > caps["space_materialize"]:
        raise CapExceeded(f"space size {space.size} exceeds materialization cap")
    return sum(1 for obj in space.iter_objects() if space.apply(p, obj) == obj)


def orbit_on_space(group: PermGroup, index: int, space: ActionSpace) -> list[int]:
    """Orbit of a space index under the group, ascending."""
    if group.degree != space.n:
        raise ValueError("group degree does not match the space")
    start = space.object_at(index)
    seen = {start}
    queue = [start]
    while queue:
        obj = queue.pop(0)
        for g in group.generators:
            img = space.apply(g, obj)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(space.index_of(obj) for obj in seen)


@dataclass(frozen=True)
class IntersectionMatrix:
    """Block-intersection counts of two balanced partitions, up to row/column permutation."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.entries
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("entries must be square")
        target = sum(rows[0])
        if any(sum(r) != target for r in rows):
            raise ValueError("row sums differ")
        cols = list(zip(*rows))
        if any(sum(c) != target for c in cols):
            raise ValueError("column sums differ")

    @property
    def side(self) -> int:
        return len(self.entries)

    @property
    def block_size(self) -> int:
        return sum(self.entries[0])

    def canonical(self) -> "IntersectionMatrix":
        return IntersectionMatrix(canonical_matrix(self.entries))


def canonical_matrix(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least matrix over simultaneous row and column permutations.

    For a fixed row order the flattened matrix is minimized by sorting columns
    lexicographically, so only distinct row arrangements need enumerating.
    """
    rows = sorted(entries)
    best = None
    for arrangement in _distinct_permutations(rows):
        cols = sorted(zip(*arrangement))
        candidate = tuple(zip(*cols))
        if best is None or candidate < best:
            best = candidate
    return best


def _distinct_permutations(items: list) -> Iterator[tuple]:
    seen = set()
    for arr in itertools.permutations(items):
        if arr not in seen:
            seen.add(arr)
            yield arr


def intersection_class(alpha: PartitionObj, beta: PartitionObj) -> IntersectionMatrix:
    """Canonical intersection matrix of two partitions of the same shape."""
    if len(alpha) != len(beta) or {len(b) for b in alpha} != {len(b) for b in beta}:
        raise ValueError("partitions have different shape")
    beta_sets = [set(b) for b in beta]
    entries = tuple(
        tuple(sum(1 for x in blk_a if x in blk_b) for blk_b in beta_sets) for blk_a in alpha
    )
    return IntersectionMatrix(canonical_matrix(entries))
