"""Finite permutation groups with a deterministic base/strong-generating chain.

The chain is built by the classical deterministic Schreier-Sims procedure with
base points chosen as the smallest non-fixed point first (or from an explicit
hint, which the stabilizer and backtrack routines use).  All orders and indices
are exact Python integers.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable, Iterator, Sequence

from .caps import Caps, DEFAULT
from .perms import Permutation, parse_cycles

Images = tuple[int, ...]


class CapExceeded(RuntimeError):
    """A desk-scale cap was exceeded; the message names the remedy if one exists."""


# tuple-level algebra used by the closure oracles and subgroup enumeration

def compose(a: Images, b: Images) -> Images:
    """Left-to-right product: (a*b)(x) = b(a(x))."""
    return tuple(b[x] for x in a)


def invert(a: Images) -> Images:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def element_order(a: Images) -> int:
    order = 1
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = math.lcm(order, length)
    return order


def closure(gens: Iterable[Images], limit: int | None = None) -> frozenset[Images] | None:
    """Exhaustive product closure; None if it grows past `limit`.

    This is the brute-force oracle against which the chain is tested.
    """
    gens = [g for g in gens]
    if not gens:
        return frozenset()
    identity = tuple(range(len(gens[0])))
    elements = {identity}
    boundary = [identity]
    while boundary:
        new_boundary = []
        for b in boundary:
            for g in gens:
                c = compose(b, g)
                if c not in elements:
                    elements.add(c)
                    if limit is not None and len(elements) > limit:
                        return None
                    new_boundary.append(c)
        boundary = new_boundary
    return frozenset(elements)


class _Chain:
    """Base, strong generators and transversals for one group."""

    def __init__(self, degree: int, gens: Sequence[Permutation], base_hint: Sequence[int] = ()):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[Permutation] = [g for g in gens if not g.is_identity()]
        self.transversals: list[dict[int, Permutation]] = []
        self.base_hint = tuple(base_hint)
        # hint points are seeded unconditionally so stabilizer extraction and
        # backtracks can rely on the base starting with them
        for pt in self.base_hint:
            if pt not in self.base:
                self.base.append(pt)
                self.transversals.append({pt: Permutation.identity(self.degree)})
        for g in self.strong:
            self._cover(g)
        for i in range(len(self.base)):
            self._rebuild_orbit(i)
        self._schreier_sims()

    def _depth(self, g: Permutation) -> int:
        i = 0
        while i < len(self.base) and g.act(self.base[i]) == self.base[i]:
            i += 1
        return i

    def _cover(self, g: Permutation) -> None:
        """Extend the base until g moves some base point."""
        if self._depth(g) < len(self.base):
            return
        for pt in self.base_hint:
            if pt not in self.base and g.act(pt) != pt:
                self.base.append(pt)
                self.transversals.append({pt: Permutation.identity(self.degree)})
                return
        for pt in range(self.degree):
            if g.act(pt) != pt:
                self.base.append(pt)
                self.transversals.append({pt: Permutation.identity(self.degree)})
                return
        raise AssertionError("identity generator reached _cover")

    def _gens_at(self, level: int) -> list[Permutation]:
        return [g for g in self.strong if self._depth(g) >= level]

    def _rebuild_orbit(self, level: int) -> None:
        b = self.base[level]
        gens = self._gens_at(level)
        transversal = {b: Permutation.identity(self.degree)}
        queue = [b]
        while queue:
            p = queue.pop(0)
            u = transversal[p]
            for s in gens:
                q = s.act(p)
                if q not in transversal:
                    transversal[q] = u * s
                    queue.append(q)
        self.transversals[level] = transversal

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip g through the chain; returns (residue, stop level)."""
        for i in range(start, len(self.base)):
            p = g.act(self.base[i])
            if p == self.base[i]:
                continue
            u = self.transversals[i].get(p)
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            self._rebuild_orbit(i)
            residue_level = self._verify_level(i)
            if residue_level is None:
                i -= 1
            else:
                i = residue_level

    def _verify_level(self, i: int) -> int | None:
        """Sift all Schreier generators of level i; add the first residue found."""
        transversal = self.transversals[i]
        gens = self._gens_at(i)
        for p in sorted(transversal):
            u_p = transversal[p]
            for s in gens:
                q = s.act(p)
                u_q = transversal[q]
                schreier = u_p * s * u_q.inverse()
                if schreier.is_identity():
                    continue
                residue, j = self.sift(schreier, i + 1)
                if residue.is_identity():
                    continue
                if j == len(self.base):
                    self._cover(residue)
                self.strong.append(residue)
                for level in range(i + 1, j + 1):
                    self._rebuild_orbit(level)
                return j
        return None

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def contains(self, g: Permutation) -> bool:
        residue, _ = self.sift(g)
        return residue.is_identity()

    def elements(self) -> Iterator[Permutation]:
        """All elements, deterministically ordered by transversal choices."""

        def rec(level: int) -> Iterator[Permutation]:
            if level == len(self.base):
                yield Permutation.identity(self.degree)
                return
            transversal = self.transversals[level]
            for h in rec(level + 1):
                for p in sorted(transversal):
                    yield h * transversal[p]

        return rec(0)


class PermGroup:
    """Group generated by permutations of common degree; immutable after construction."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), base_hint: Sequence[int] = ()):
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self._base_hint = tuple(base_hint)
        self._chain: _Chain | None = None
        self._lock = threading.Lock()

    @classmethod
    def from_cycle_strings(cls, degree: int, cycle_strings: Iterable[str], base_hint: Sequence[int] = ()) -> "PermGroup":
        return cls(degree, [parse_cycles(s, degree) for s in cycle_strings], base_hint)

    def chain(self) -> _Chain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _Chain(self.degree, self.generators, self._base_hint)
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self.chain().contains(g)

    def elements(self, limit: int | None = None) -> list[Permutation]:
        if limit is not None and self.order() > limit:
            raise CapExceeded(f"group order {self.order()} exceeds cap {limit}")
        return list(self.chain().elements())

    def element_set(self, limit: int | None = None) -> frozenset[Images]:
        return frozenset(p.images for p in self.elements(limit))

    def orbit(self, x: int) -> list[int]:
        """Natural orbit of a point, ascending."""
        seen = {x}
        queue = [x]
        while queue:
            p = queue.pop(0)
            for g in self.generators:
                q = g.act(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(orb)
            remaining.difference_update(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def conjugate(self, by: Permutation) -> "PermGroup":
        return PermGroup(self.degree, [g.conjugate(by) for g in self.generators])

    def point_stabilizer(self, x: int) -> "PermGroup":
        """Stabilizer of a point; its index equals the orbit length of x."""
        if all(g.act(x) == x for g in self.generators):
            return PermGroup(self.degree, self.generators)
        chain = _Chain(self.degree, self.generators, base_hint=(x,))
        gens = [g for g in chain.strong if g.act(x) == x]
        return PermGroup(self.degree, _reduce_generators(self.degree, gens))

    def setwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """{g in G : S^g = S}, by backtrack over a chain based inside S first."""
        s_set = frozenset(points)
        if not s_set <= set(range(self.degree)):
            raise ValueError("set contains points outside the domain")
        chain = _Chain(self.degree, self.generators, base_hint=tuple(sorted(s_set)))
        base = chain.base
        found: list[Permutation] = []

        def rec(level: int, tail: Permutation) -> None:
            if level == len(base):
                if all((tail.act(x) in s_set) == (x in s_set) for x in range(self.degree)):
                    found.append(tail)
                return
            b = base[level]
            b_in = b in s_set
            transversal = chain.transversals[level]
            for p in sorted(transversal):
                if (tail.act(p) in s_set) != b_in:
                    continue
                rec(level + 1, transversal[p] * tail)

        rec(0, Permutation.identity(self.degree))
        return group_from_elements(self.degree, found)

    def centralizer(self, g: Permutation, caps: Caps = DEFAULT) -> "PermGroup":
        if g not in self:
            raise ValueError("element is not a member of the group")
        if self.order() > caps["centralizer_elements"]:
            raise CapExceeded(
                f"group order {self.order()} exceeds centralizer cap "
                f"{caps['centralizer_elements']}; use closed form "
                "centralizer_ratio_3cycle for 3-cycles in S_n/A_n"
            )
        commuting = [h for h in self.chain().elements() if h * g == g * h]
        return group_from_elements(self.degree, commuting)

    def derived_subgroup(self, caps: Caps = DEFAULT) -> "PermGroup":
        """Commutator subgroup via normal closure of generator commutators."""
        if self.order() > caps["small_group"]:
            raise CapExceeded(f"group order {self.order()} exceeds cap {caps['small_group']}")
        seeds = []
        for a in self.generators:
            for b in self.generators:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity():
                    seeds.append(c)
        sub = PermGroup(self.degree, _reduce_generators(self.degree, seeds))
        while True:
            new = None
            for h in sub.generators:
                for g in self.generators:
                    c = h.conjugate(g)
                    if c not in sub:
                        new = c
                        break
                if new is not None:
                    break
            if new is None:
                return sub
            sub = PermGroup(self.degree, sub.generators + (new,))

    def index2_subgroups(self, caps: Caps = DEFAULT) -> list["PermGroup"]:
        """All subgroups of index 2, via the quotient by derived subgroup and squares."""
        if self.order() > caps["small_group"]:
            raise CapExceeded(f"group order {self.order()} exceeds cap {caps['small_group']}")
        derived = self.derived_subgroup(caps)
        k_gens = derived.generators + tuple(g * g for g in self.generators)
        kernel = PermGroup(self.degree, _reduce_generators(self.degree, k_gens))
        # coset reps of the kernel; the quotient is elementary abelian of order 2^r
        reps: list[Permutation] = [Permutation.identity(self.degree)]
        queue = [reps[0]]
        while queue:
            r = queue.pop(0)
            for g in self.generators:
                c = r * g
                if not any(c * r2.inverse() in kernel for r2 in reps):
                    reps.append(c)
                    queue.append(c)
        count = len(reps)
        if count == 1:
            return []
        target = self.order() // 2

        def coset_index(p: Permutation) -> int:
            for i, r in enumerate(reps):
                if p * r.inverse() in kernel:
                    return i
            raise AssertionError("element escaped its coset decomposition")

        # F2 coordinates for each coset over a greedy basis
        basis: list[int] = []
        span = {0: ()}
        for i in range(1, count):
            if i in span:
                continue
            basis.append(i)
            for j, coords in list(span.items()):
                k = coset_index(reps[j] * reps[i])
                span[k] = coords + (len(basis) - 1,)
        rank = len(basis)
        coords_of = {i: frozenset(span[i]) for i in span}
        out = []
        for mask in range(1, 2**rank):
            functional = [bool(mask >> b & 1) for b in range(rank)]
            kernel_reps = [
                reps[i]
                for i in range(count)
                if not (sum(functional[c] for c in coords_of[i]) % 2)
            ]
            sub = PermGroup(
                self.degree,
                _reduce_generators(self.degree, list(kernel.generators) + kernel_reps),
            )
            assert sub.order() == target
            out.append(sub)
        out.sort(key=lambda h: tuple(sorted(g.images for g in h.generators)))
        return out

    def subgroups_of_order(self, m: int, caps: Caps = DEFAULT) -> "SubgroupClasses":
        """One representative per conjugacy class of order-m subgroups.

        Finds them by extending subgroup closures with up to
        caps["subgroup_max_gens"] generating elements; the `saturated` flag
        reports whether the generator bound was reached with room to extend,
        i.e. whether classes needing more generators could have been missed.
        """
        order = self.order()
        if order > caps["small_group"]:
            raise CapExceeded(f"group order {order} exceeds cap {caps['small_group']}")
        if m < 1 or order % m != 0:
            raise ValueError(f"{m} does not divide the group order {order}")
        identity = tuple(range(self.degree))
        if m == 1:
            return SubgroupClasses([PermGroup(self.degree)], saturated=False)
        elements = sorted(p.images for p in self.chain().elements())
        if m == order:
            return SubgroupClasses([PermGroup(self.degree, self.generators)], saturated=False)

        # one minimal generator per cyclic subgroup of order dividing m
        cyclic_gens: list[Images] = []
        seen_cyclic: set[frozenset[Images]] = set()
        for t in elements:
            if t == identity or m % element_order(t) != 0:
                continue
            powers = [identity]
            p = t
            while p != identity:
                powers.append(p)
                p = compose(p, t)
            key = frozenset(powers)
            if key not in seen_cyclic:
                seen_cyclic.add(key)
                cyclic_gens.append(t)

        max_gens = caps["subgroup_max_gens"]
        pool: dict[frozenset[Images], tuple[Images, ...]] = {}
        frontier: list[tuple[frozenset[Images], tuple[Images, ...]]] = []
        for g in cyclic_gens:
            cset = closure([g], limit=m)
            if cset is None or m % len(cset) != 0:
                continue
            if cset not in pool:
                pool[cset] = (g,)
                frontier.append((cset, (g,)))
        saturated = False
        for depth in range(2, max_gens + 1):
            new_frontier = []
            for hset, hgens in frontier:
                if len(hset) == m:
                    continue
                for g in cyclic_gens:
                    if g in hset:
                        continue
                    cset = closure(list(hgens) + [g], limit=m)
                    if cset is None or m % len(cset) != 0:
                        continue
                    if cset not in pool:
                        pool[cset] = hgens + (g,)
                        new_frontier.append((cset, hgens + (g,)))
            frontier = new_frontier
        # room left to extend at the generator bound means possible misses
        saturated = any(len(hset) < m for hset, _ in frontier)

        hits = sorted(
            ((hset, hgens) for hset, hgens in pool.items() if len(hset) == m),
            key=lambda item: tuple(sorted(item[0])),
        )
        classes: list[PermGroup] = []
        seen: set[frozenset[Images]] = set()
        inverses = {e: invert(e) for e in elements}
        for hset, hgens in hits:
            if hset in seen:
                continue
            classes.append(PermGroup(self.degree, [Permutation(g) for g in hgens]))
            for e in elements:
                einv = inverses[e]
                seen.add(frozenset(compose(compose(einv, h), e) for h in hset))
        return SubgroupClasses(classes, saturated)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


class SubgroupClasses:
    def __init__(self, classes: list[PermGroup], saturated: bool):
        self.classes = classes
        self.saturated = saturated

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[PermGroup]:
        return iter(self.classes)


def _reduce_generators(degree: int, gens: Sequence[Permutation]) -> tuple[Permutation, ...]:
    """Greedy generating subset, dropping redundant members."""
    chosen: list[Permutation] = []
    current = PermGroup(degree)
    for g in gens:
        if g.is_identity() or g in current:
            continue
        chosen.append(g)
        current = PermGroup(degree, chosen)
    return tuple(chosen)


def group_from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Group generated by (in practice: equal to) the given element list."""
    return PermGroup(degree, _reduce_generators(degree, sorted(elements)))


def symmetric_group(n: int) -> PermGroup:
    """S_n with generators chosen so that the stabilizer of point 0 is easy to hit."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PermGroup(1)
    if n == 2:
        return PermGroup.from_cycle_strings(2, ["(1,2)"])
    cycle = "(" + ",".join(str(i) for i in range(2, n + 1)) + ")"
    return PermGroup.from_cycle_strings(n, ["(1,2)", cycle])


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(max(n, 1))
    if n == 3:
        return PermGroup.from_cycle_strings(3, ["(1,2,3)"])
    if n % 2 == 0:
        cycle = "(" + ",".join(str(i) for i in range(2, n + 1)) + ")"
    else:
        cycle = "(" + ",".join(str(i) for i in range(3, n + 1)) + ")"
    return PermGroup.from_cycle_strings(n, ["(1,2,3)", cycle])


def centralizer_ratio_3cycle(n: int, alternating: bool = False) -> int:
    """|G| / |C_G(g)| for a 3-cycle g, identical for G = S_n and A_n when n >= 7."""
    if n < 7:
        raise ValueError("closed form requires n >= 7")
    return n * (n - 1) * (n - 2) // 3
