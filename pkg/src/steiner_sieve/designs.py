"""Steiner 3-design representation, coverage verification, transitivity and automorphisms.

Blocks are 0-based sorted tuples internally; the text format is 1-based with
``v k`` on the first line and one block per line.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .caps import Caps, DEFAULT
from .groups import CapExceeded, PermGroup, group_from_elements
from .perms import Permutation, format_cycles


class NotAnAutomorphism(ValueError):
    def __init__(self, generator: Permutation, block: tuple[int, ...]):
        self.generator = generator
        self.block = block
        pretty = "{" + ",".join(str(x + 1) for x in block) + "}"
        super().__init__(
            f"generator {format_cycles(generator)} maps block {pretty} outside the block set"
        )


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    t: int = 3

    def __post_init__(self):
        if not 0 < self.k <= self.v:
            raise ValueError(f"need 0 < k <= v, got k={self.k} v={self.v}")
        for block in self.blocks:
            if len(block) != self.k or len(set(block)) != self.k:
                raise ValueError(f"block {block} does not have {self.k} distinct points")
            if any(not 0 <= x < self.v for x in block):
                raise ValueError(f"block {block} has points outside 1..{self.v}")
            if tuple(sorted(block)) != block:
                raise ValueError(f"block {block} is not sorted")
        for a, b in zip(self.blocks, self.blocks[1:]):
            if not a < b:
                raise ValueError("block list is not strictly sorted")

    @classmethod
    def from_blocks(cls, v: int, blocks) -> "Design":
        """Canonicalize: sort within blocks, sort the list, reject duplicates."""
        canon = sorted(tuple(sorted(b)) for b in blocks)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate block {a}")
        if not canon:
            raise ValueError("empty block list")
        return cls(v, len(canon[0]), tuple(canon))

    def block_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.blocks)

    def relabel(self, p: Permutation) -> "Design":
        return Design.from_blocks(self.v, [[p.act(x) for x in b] for b in self.blocks])


def parse_design_text(text: str) -> Design:
    header = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        values = [int(tok) for tok in line.split()]
        if header is None:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: expected 'v k'")
            header = tuple(values)
            continue
        if len(values) != header[1]:
            raise ValueError(f"line {lineno}: expected {header[1]} points")
        blocks.append([x - 1 for x in values])
    if header is None:
        raise ValueError("missing 'v k' header line")
    design = Design.from_blocks(header[0], blocks)
    if design.k != header[1]:
        raise ValueError("header k does not match block size")
    return design


def format_design_text(design: Design) -> str:
    lines = [f"{design.v} {design.k}"]
    lines.extend(" ".join(str(x + 1) for x in block) for block in design.blocks)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoverageReport:
    is_steiner: bool
    lambda_map: dict[int, int]
    witnesses: tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]], ...]
    triple_count: int


def design_params(v: int, k: int) -> tuple[Fraction, Fraction, Fraction, bool]:
    """Block count, per-point count and per-pair count of a 3-(v,k,1) design."""
    if not 3 < k < v:
        raise ValueError(f"need 3 < k < v, got k={k} v={v}")
    b = Fraction(v * (v - 1) * (v - 2), k * (k - 1) * (k - 2))
    lam1 = Fraction((v - 1) * (v - 2), (k - 1) * (k - 2))
    lam2 = Fraction(v - 2, k - 2)
    integral = all(x.denominator == 1 for x in (b, lam1, lam2))
    return b, lam1, lam2, integral


def verify_steiner(design: Design, max_witnesses: int = 10) -> CoverageReport:
    """Count how often each 3-subset of points is covered by the blocks."""
    if design.k <= 3:
        raise ValueError(f"block size {design.k} <= 3 gives a trivial strength-3 design")
    if design.k >= design.v:
        raise ValueError("need k < v")
    cover: dict[tuple[int, int, int], list[int]] = {}
    for bi, block in enumerate(design.blocks):
        for tri in itertools.combinations(block, 3):
            cover.setdefault(tri, []).append(bi)
    total = _comb3(design.v)
    lambda_map = Counter(len(v) for v in cover.values())
    uncovered = total - len(cover)
    if uncovered:
        lambda_map[0] = uncovered
    witnesses = []
    for tri in sorted(cover):
        if len(cover[tri]) != 1 and len(witnesses) < max_witnesses:
            witnesses.append((tri, tuple(design.blocks[i] for i in cover[tri])))
    if uncovered and len(witnesses) < max_witnesses:
        covered = set(cover)
        for tri in itertools.combinations(range(design.v), 3):
            if tri not in covered:
                witnesses.append((tri, ()))
                if len(witnesses) >= max_witnesses:
                    break
    is_steiner = lambda_map == Counter({1: total})
    return CoverageReport(is_steiner, dict(sorted(lambda_map.items())), tuple(witnesses), total)


def _comb3(v: int) -> int:
    return v * (v - 1) * (v - 2) // 6


def block_orbits(group: PermGroup, design: Design) -> list[list[int]]:
    """Orbits of the group on block indices; raises if a generator breaks incidence."""
    if group.degree != design.v:
        raise ValueError("group degree does not match the point count")
    index = {block: i for i, block in enumerate(design.blocks)}
    gen_maps = []
    for g in group.generators:
        images = []
        for block in design.blocks:
            img = tuple(sorted(g.act(x) for x in block))
            if img not in index:
                raise NotAnAutomorphism(g, block)
            images.append(index[img])
        gen_maps.append(images)
    seen = [False] * len(design.blocks)
    orbits = []
    for start in range(len(design.blocks)):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        queue = [start]
        while queue:
            b = queue.pop(0)
            for images in gen_maps:
                nb = images[b]
                if not seen[nb]:
                    seen[nb] = True
                    orbit.append(nb)
                    queue.append(nb)
        orbits.append(sorted(orbit))
    return orbits


def is_block_transitive(group: PermGroup, design: Design) -> tuple[bool, list[int]]:
    """(single block orbit?, orbit sizes)."""
    orbits = block_orbits(group, design)
    sizes = sorted(len(o) for o in orbits)
    return len(orbits) == 1, sizes


def is_flag_transitive(group: PermGroup, design: Design) -> bool:
    """Block-transitive with a block stabilizer transitive on its block."""
    transitive, _ = is_block_transitive(group, design)
    if not transitive:
        return False
    block = design.blocks[0]
    stab = group.setwise_stabilizer(block)
    return set(stab.orbit(block[0])) >= set(block)


def automorphism_group(design: Design, caps: Caps = DEFAULT) -> PermGroup:
    """All point permutations mapping the block set onto itself.

    Backtrack on point images in natural order (the designs here are
    point-transitive, so degree-based ordering would not discriminate).
    Pruning compares triple coverage counts and, where a triple lies in a
    unique block, forces the images of that block's remaining points: assigned
    ones must already land in the image block and the leftover slots must be
    unused.  With multiplicity 1 this nearly determines the map after three
    assignments.
    """
    v = design.v
    if v > caps["aut_points"]:
        raise CapExceeded(f"{v} points exceeds the automorphism backtrack cap {caps['aut_points']}")
    cover: dict[tuple[int, int, int], list[int]] = {}
    for bi, block in enumerate(design.blocks):
        for tri in itertools.combinations(block, 3):
            cover.setdefault(tri, []).append(bi)
    block_set = design.block_set()

    images = [-1] * v
    used = [False] * v
    found: list[Permutation] = []

    def admissible(p: int, q: int) -> bool:
        # images[p] == q has been written already
        for x in range(p):
            ix = images[x]
            for y in range(x + 1, p):
                tri = tuple(sorted((x, y, p)))
                tri_img = tuple(sorted((ix, images[y], q)))
                covering = cover.get(tri, ())
                covering_img = cover.get(tri_img, ())
                if len(covering) != len(covering_img):
                    return False
                if len(covering) != 1:
                    continue
                block = design.blocks[covering[0]]
                target = set(design.blocks[covering_img[0]])
                for w in block:
                    iw = images[w]
                    if iw != -1:
                        if iw not in target:
                            return False
                        target.discard(iw)
                if any(used[slot] for slot in target):
                    return False
        return True

    def rec(p: int) -> None:
        if p == v:
            g = Permutation(list(images))
            if all(tuple(sorted(g.act(x) for x in b)) in block_set for b in design.blocks):
                found.append(g)
            return
        for q in range(v):
            if used[q]:
                continue
            images[p] = q
            used[q] = True
            if admissible(p, q):
                rec(p + 1)
            used[q] = False
        images[p] = -1

    rec(0)
    return group_from_elements(v, found)
