"""Arithmetic elimination filters for 3-(v,k,1) parameters; all arithmetic exact."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .designs import design_params


def k_range(v: int) -> range:
    """Admissible block sizes 4..floor(sqrt(v))+2."""
    return range(4, math.isqrt(v) + 3)


def cameron_bound(v: int, k: int) -> tuple[bool, dict]:
    """v >= k^2 - 3k + 4, equivalently k <= floor(sqrt(v)) + 2."""
    v_min = k * k - 3 * k + 4
    return v >= v_min, {"v_min": v_min, "k_max": math.isqrt(v) + 2}


def params_integral(v: int, k: int) -> tuple[bool, dict]:
    b, lam1, lam2, integral = design_params(v, k)
    return integral, {"blocks": b, "lambda1": lam1, "lambda2": lam2}


def centralizer_bound(v: int, k: int, ratio: int) -> tuple[bool, dict]:
    """(v-1)(v-2) <= ratio * k(k-1)(k-2)."""
    if ratio < 1:
        raise ValueError("ratio must be >= 1")
    lhs = (v - 1) * (v - 2)
    rhs = ratio * k * (k - 1) * (k - 2)
    return lhs <= rhs, {"lhs": lhs, "rhs": rhs}


def v_upper_from_c(c: int) -> int:
    """Exclusive upper bound (c+2)^2 on v, given (v-1)(v-2) <= c*k(k-1)(k-2) and the Cameron bound."""
    if c < 1:
        raise ValueError("c must be >= 1")
    return (c + 2) ** 2


def stabilizer_divisibility(v: int, k: int, stab_order: int) -> tuple[bool, dict]:
    """(v-1)(v-2) divides k(k-1)(k-2) * |point stabilizer|."""
    if min(v, k, stab_order) < 1:
        raise ValueError("arguments must be positive")
    lhs = (v - 1) * (v - 2)
    rhs = k * (k - 1) * (k - 2) * stab_order
    return rhs % lhs == 0, {"divisor": lhs, "value": rhs}


def subdegree_divisibility(v: int, k: int, d: int) -> tuple[bool, dict]:
    """(v-1)(v-2) divides k(k-1)(k-2) * d(d-1) for a nontrivial subdegree d."""
    if not 1 <= d < v:
        raise ValueError("need 1 <= d < v")
    lhs = (v - 1) * (v - 2)
    rhs = k * (k - 1) * (k - 2) * d * (d - 1)
    return rhs % lhs == 0, {"divisor": lhs, "value": rhs, "d": d}


def fix_bound(v: int, k: int, fix_count: int) -> tuple[bool, dict]:
    """fix_count <= 2(v-k)/(k-2) + k - 2, exact rational comparison."""
    if k <= 2:
        raise ValueError("need k > 2")
    bound = Fraction(2 * (v - k), k - 2) + (k - 2)
    return Fraction(fix_count) <= bound, {"bound": bound, "fix": fix_count}


def k_divides_v_filter(v: int, k: int) -> tuple[bool, dict]:
    return v % k == 0, {"v": v, "k": k}


def flag_force(v: int, k: int) -> tuple[bool, dict]:
    """Flag-transitivity is forced when k | v and 4 | v."""
    forced = v % k == 0 and v % 4 == 0
    return forced, {"k_divides": v % k == 0, "four_divides": v % 4 == 0}


def orbit_size_filter(v: int, k: int, group_order: int) -> tuple[bool, dict]:
    """Block-transitivity needs an integral block count dividing the group order."""
    b, _, _, _ = design_params(v, k)
    if b.denominator != 1:
        return False, {"blocks": b, "group_order": group_order}
    return group_order % b == 0, {"blocks": b, "group_order": group_order}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": _jsonify(self.witness)}


@dataclass(frozen=True)
class SieveVerdict:
    v: int
    k: int
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)
    flag_forced: bool = False

    @property
    def surviving(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "checks": [c.to_dict() for c in self.checks],
            "surviving": self.surviving,
            "flag_forced": self.flag_forced,
        }


def run_sieve(
    v: int,
    *,
    group_order: int | None = None,
    stab_order: int | None = None,
    subdegrees: tuple[int, ...] = (),
    ratio: int | None = None,
    fix: int | None = None,
    require_k_divides_v: bool = False,
) -> list[SieveVerdict]:
    """One verdict per k in 4..floor(sqrt(v))+2, applying every check with given data.

    flag_forced is informational (a survivor with k | v and 4 | v must be
    flag-transitive); it never eliminates.
    """
    if v <= 4:
        raise ValueError("need v > 4")
    verdicts = []
    for k in k_range(v):
        checks = [
            CheckResult("cameron_bound", *cameron_bound(v, k)),
            CheckResult("params_integral", *params_integral(v, k)),
        ]
        if require_k_divides_v:
            checks.append(CheckResult("k_divides_v", *k_divides_v_filter(v, k)))
        if group_order is not None:
            checks.append(CheckResult("orbit_size", *orbit_size_filter(v, k, group_order)))
        if stab_order is not None:
            checks.append(CheckResult("stabilizer_divisibility", *stabilizer_divisibility(v, k, stab_order)))
        for d in subdegrees:
            checks.append(CheckResult(f"subdegree_divisibility[d={d}]", *subdegree_divisibility(v, k, d)))
        if ratio is not None:
            checks.append(CheckResult("centralizer_bound", *centralizer_bound(v, k, ratio)))
        if fix is not None:
            checks.append(CheckResult("fix_bound", *fix_bound(v, k, fix)))
        verdicts.append(SieveVerdict(v, k, tuple(checks), flag_forced=flag_force(v, k)[0]))
    return verdicts


def _jsonify(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value
