"""Acceptance suite: every headline result, each with its runtime budget.

Each check returns (passed, detail).  run_all() executes them in order and
reports one line per check; the CLI's `reproduce all` and the test suite both
call into this module so there is a single source of truth.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .actions import ActionSpace, induced_permutation
from .caps import DEFAULT
from .designs import (
    automorphism_group,
    block_orbits,
    design_params,
    is_block_transitive,
    is_flag_transitive,
    verify_steiner,
)
from .fixtures import AUT_A6_GROUP, design_fixture, group_fixture
from .groups import PermGroup, alternating_group, symmetric_group
from .perms import Permutation
from .search import reproduce_case
from .sieve import cameron_bound, fix_bound, run_sieve
from .subdegrees import (
    alternating_partition_subdegrees,
    imprimitive_bound_pairs,
    imprimitive_sweep,
    intransitive_sweep,
    partition_subdegrees,
    primitive_degree_bound,
    subdegrees_oracle,
    subset_subdegrees,
)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    seconds: float
    budget: float
    detail: str

    @property
    def in_budget(self) -> bool:
        return self.seconds < self.budget

    def line(self) -> str:
        verdict = "PASS" if (self.passed and self.in_budget) else "FAIL"
        return f"{verdict} {self.name} ({self.seconds:.2f}s / budget {self.budget:.0f}s): {self.detail}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed and self.in_budget,
            "seconds": round(self.seconds, 3),
            "budget": self.budget,
            "detail": self.detail,
        }


def check_design_verification() -> tuple[bool, str]:
    design = design_fixture()
    report = verify_steiner(design)
    blocks, lam1, lam2, integral = design_params(10, 4)
    ok = (
        len(design.blocks) == 30
        and report.is_steiner
        and report.lambda_map == {1: 120}
        and (blocks, lam1, lam2, integral) == (30, 12, 4, True)
    )
    return ok, f"30 blocks, lambda map {report.lambda_map}, parameters (30, 12, 4)"


def check_automorphism_group() -> tuple[bool, str]:
    design = design_fixture()
    aut = automorphism_group(design)
    ok = aut.order() == 1440 and is_flag_transitive(aut, design)
    index2 = aut.index2_subgroups()
    ok = ok and len(index2) == 3 and all(h.order() == 720 for h in index2)
    transitive_subs = []
    for sub in index2:
        bt, sizes = is_block_transitive(sub, design)
        if bt:
            stab = sub.setwise_stabilizer(design.blocks[0])
            transitive_subs.append(
                is_flag_transitive(sub, design)
                and stab.order() == 24
                and set(stab.orbit(design.blocks[0][0])) >= set(design.blocks[0])
            )
    ok = ok and len(transitive_subs) == 2 and all(transitive_subs)
    derived = aut.derived_subgroup()
    orbits = block_orbits(derived, design)
    ok = ok and derived.order() == 360 and sorted(len(o) for o in orbits) == [15, 15]
    return ok, (
        f"|Aut| = {aut.order()}, {len(index2)} index-2 subgroups, "
        f"{len(transitive_subs)} block-transitive, derived order {derived.order()} "
        f"with block orbits {sorted(len(o) for o in orbits)}"
    )


def check_a5_elimination() -> tuple[bool, str]:
    report = reproduce_case("a5")
    rows = {f.name: f for f in report.facts}
    needed = (
        "the four fixed-point candidates have orbit below 30",
        "exactly the four expected candidates double-cover a triple",
        "the two paired-orbit candidates miss the probe triple {1,6,10}",
        "every candidate fails to produce a Steiner design",
    )
    ok = report.ok and all(rows[n].match for n in needed)
    return ok, "10 candidates: 4 short-orbit, 4 double-cover, 2 missing {1,6,10}; all fail"


def subset_oracle_pairs(limit: int = 5000):
    pairs = []
    m = 1
    while math.comb(2 * m + 1, m) <= limit or m == 1:
        n = max(5, 2 * m + 1)
        if math.comb(n, m) > limit:
            break
        while math.comb(n, m) <= limit:
            pairs.append((n, m))
            n += 1
        m += 1
    return pairs


def partition_oracle_pairs(limit: int = 5000):
    pairs = []
    for blocks in itertools.count(2):
        start = 3 if blocks == 2 else 2
        if ActionSpace.partitions(start, blocks).size > limit:
            break
        m = start
        while ActionSpace.partitions(m, blocks).size <= limit:
            pairs.append((m, blocks))
            m += 1
    return pairs


def check_subdegree_oracle() -> tuple[bool, str]:
    subset_pairs = subset_oracle_pairs()
    for n, m in subset_pairs:
        expected = subset_subdegrees(n, m).lengths()
        space = ActionSpace.subsets(n, m)
        if subdegrees_oracle(symmetric_group(n), space).lengths() != expected:
            return False, f"symmetric oracle mismatch at (n={n}, m={m})"
        if subdegrees_oracle(alternating_group(n), space).lengths() != expected:
            return False, f"alternating oracle mismatch at (n={n}, m={m})"
    part_pairs = partition_oracle_pairs()
    for m, blocks in part_pairs:
        space = ActionSpace.partitions(m, blocks)
        expected = partition_subdegrees(m, blocks).lengths()
        if subdegrees_oracle(symmetric_group(m * blocks), space).lengths() != expected:
            return False, f"partition oracle mismatch at (m={m}, blocks={blocks})"
        alt_expected = alternating_partition_subdegrees(m, blocks).lengths()
        if subdegrees_oracle(alternating_group(m * blocks), space).lengths() != alt_expected:
            return False, f"alternating partition oracle mismatch at (m={m}, blocks={blocks})"
    return True, (
        f"{2 * len(subset_pairs)} subset actions and {2 * len(part_pairs)} partition "
        "actions agree with the closed forms"
    )


def check_intransitive_sweep() -> tuple[bool, str]:
    sweep = intransitive_sweep()
    ok = sweep.survivors == ((8, 3, 11),)
    return ok, f"survivors: {[list(s) for s in sweep.survivors]} over {len(sweep.examined)} tuples"


def check_degree56_elimination() -> tuple[bool, str]:
    for case in ("s8_degree56", "a8_degree56"):
        report = reproduce_case(case)
        if not report.ok:
            return False, f"{case} reported a mismatch"
    return True, "all 55 candidate families fail exact cover for both groups"


def check_imprimitive_sweep() -> tuple[bool, str]:
    expected_pairs = sorted(
        [(m, 2) for m in range(4, 16)]
        + [(3, 3), (4, 3), (5, 3), (6, 3), (2, 4), (3, 4), (2, 5), (2, 6), (2, 7)]
    )
    pairs = imprimitive_bound_pairs()
    sweep = imprimitive_sweep()
    ok = pairs == expected_pairs and sweep.survivors == ()
    return ok, f"{len(pairs)} bound-passing pairs, no surviving block size"


def check_primitive_filters() -> tuple[bool, str]:
    degrees = primitive_degree_bound()
    verdicts = run_sieve(15, require_k_divides_v=True)
    forced = [v.k for v in verdicts if v.checks[2].passed]
    survivors = [v.k for v in verdicts if v.surviving]
    lam2 = design_params(15, 5)[2]
    ok = degrees == list(range(7, 14)) and forced == [5] and survivors == [] and lam2 == Fraction(13, 3)
    return ok, f"degree bound {degrees}, v=15 forces k={forced} and eliminates it (lambda2 = {lam2})"


def check_small_case_eliminations() -> tuple[bool, str]:
    v45 = run_sieve(45)
    ok = [v.k for v in v45] == [4, 5, 6, 7, 8] and all(not v.surviving for v in v45)
    ok = ok and all(
        not next(c for c in v.checks if c.name == "params_integral").passed for v in v45
    )
    v36 = run_sieve(36, group_order=720)
    integral_ks = [
        v.k for v in v36 if next(c for c in v.checks if c.name == "params_integral").passed
    ]
    k4 = next(v for v in v36 if v.k == 4)
    orbit_check = next(c for c in k4.checks if c.name == "orbit_size")
    ok = ok and integral_ks == [4] and not orbit_check.passed
    ok = ok and orbit_check.witness["blocks"] == 1785 and orbit_check.witness["group_order"] == 720
    aut = group_fixture(AUT_A6_GROUP)
    a6 = aut.derived_subgroup()
    c12 = a6.subgroups_of_order(12)
    ok = ok and len(c12) == 2
    ok = ok and all(sorted(len(o) for o in sub.orbits()) == [4, 6] for sub in c12)
    from .fixtures import PGL29_GROUP

    pgl = group_fixture(PGL29_GROUP)
    c24 = pgl.subgroups_of_order(24)
    ok = ok and len(c24) == 1
    ok = ok and sorted(len(o) for o in c24.classes[0].orbits()) == [4, 6]
    return ok, (
        "v=45 killed for k=4..8; v=36 forces k=4 then 1785 does not divide 720; "
        "order-12 and order-24 subgroup classes both have orbit profile [4, 6]"
    )


def check_property_suites() -> tuple[bool, str]:
    rng = random.Random(20260810)
    # orbit-stabilizer identity on 100 randomized (group, point) pairs
    for _ in range(100):
        degree = rng.randrange(4, 10)
        gens = []
        for _ in range(rng.randrange(1, 4)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(images))
        group = PermGroup(degree, gens)
        point = rng.randrange(degree)
        if len(group.orbit(point)) * group.point_stabilizer(point).order() != group.order():
            return False, f"orbit-stabilizer identity failed on degree {degree}"
    # functoriality of induced actions
    for space in (ActionSpace.subsets(6, 3), ActionSpace.partitions(2, 2), ActionSpace.points(7)):
        for _ in range(20):
            a = list(range(space.n))
            b = list(range(space.n))
            rng.shuffle(a)
            rng.shuffle(b)
            pa, pb = Permutation(a), Permutation(b)
            if induced_permutation(pa * pb, space) != induced_permutation(pa, space) * induced_permutation(pb, space):
                return False, f"functoriality failed on {space.describe()}"
    # profile normalization: lengths plus the trivial suborbit fill the space
    for n, m in [(7, 2), (8, 3), (9, 4), (11, 5), (31, 2)]:
        profile = subset_subdegrees(n, m)
        if sum(profile.lengths()) + 1 != math.comb(n, m):
            return False, f"profile normalization failed at subsets({n},{m})"
    for m, blocks in [(3, 2), (7, 2), (3, 3), (2, 4)]:
        profile = partition_subdegrees(m, blocks)
        if sum(profile.lengths()) + 1 != ActionSpace.partitions(m, blocks).size:
            return False, f"profile normalization failed at partitions({m},{blocks})"
    # boundary semantics at exact equality
    boundary_ok = (
        cameron_bound(8, 4)[0]
        and not cameron_bound(7, 4)[0]
        and fix_bound(10, 4, 8)[0]
        and not fix_bound(10, 4, 9)[0]
    )
    if not boundary_ok:
        return False, "boundary semantics failed"
    return True, "orbit-stabilizer (100 pairs), functoriality, normalization, boundaries"


CHECKS = (
    ("design-verification", 0.1, check_design_verification),
    ("automorphism-group", 30.0, check_automorphism_group),
    ("a5-elimination", 5.0, check_a5_elimination),
    ("subdegree-oracle", 60.0, check_subdegree_oracle),
    ("intransitive-sweep", 60.0, check_intransitive_sweep),
    ("degree56-elimination", 120.0, check_degree56_elimination),
    ("imprimitive-sweep", 120.0, check_imprimitive_sweep),
    ("primitive-filters", 1.0, check_primitive_filters),
    ("small-case-eliminations", 60.0, check_small_case_eliminations),
    ("property-suites", 30.0, check_property_suites),
)


def run_all() -> list[CheckOutcome]:
    outcomes = []
    for name, budget, func in CHECKS:
        start = time.perf_counter()
        try:
            passed, detail = func()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        outcomes.append(CheckOutcome(name, passed, elapsed, budget, detail))
    return outcomes
