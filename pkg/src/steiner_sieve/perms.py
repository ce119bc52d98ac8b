"""Permutations of {1..n} as immutable 0-based image tables.

Composition is left-to-right throughout the project: ``(p * q)(x) = q(p(x))``,
matching the exponent convention ``x^(pq) = (x^p)^q``.  Points are 1-based in
all text formats and 0-based everywhere else.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        seen = [False] * n
        for v in imgs:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {imgs!r}")
            seen[v] = True
        self.images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from disjoint 0-based cycles; repeated points are rejected."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cyc = list(cycle)
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise ValueError(f"point {x} repeated across cycles")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def act(self, x: int) -> int:
        return self.images[x]

    def act_set(self, points: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.images[x] for x in points))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        q = other.images
        return Permutation(q[v] for v in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(inv)

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return by^-1 * self * by."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated min-first, sorted by minimum."""
        out = []
        seen = [False] * len(self.images)
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images) if i != v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation like ``(2,3,5)(4,7,10)``."""
    stripped = text.strip()
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(stripped):
        match = _CYCLE_RE.match(stripped, pos)
        if match is None:
            raise ValueError(f"could not parse permutation {text!r} at {stripped[pos:]!r}")
        if match.group(1):
            cycles.append([int(tok) - 1 for tok in match.group(1).split(",")])
        pos = match.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    """Canonical 1-based cycle string: min-first cycles sorted by minimum, no spaces."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)


def parse_group_text(text: str) -> tuple[int, list[Permutation]]:
    """Parse the group text format: ``degree n`` then one generator per line."""
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ValueError(f"line {lineno}: expected 'degree n', got {raw!r}")
            degree = int(parts[1])
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be positive")
            continue
        gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("missing 'degree n' header line")
    return degree, gens


def format_group_text(degree: int, gens: Iterable[Permutation]) -> str:
    lines = [f"degree {degree}"]
    lines.extend(format_cycles(g) for g in gens)
    return "\n".join(lines) + "\n"


def iter_parsed_generators(lines: Iterable[str], degree: int) -> Iterator[Permutation]:
    for line in lines:
        yield parse_cycles(line, degree)
