"""Desk-scale resource caps, overridable via the STEINER_SIEVE_CAPS env var."""

from __future__ import annotations

import os

# Defaults.  Names double as the keys accepted by STEINER_SIEVE_CAPS.
_DEFAULTS = {
    # centralizer(): maximum group order searched element by element
    "centralizer_elements": 10**7,
    # derived_subgroup / index2_subgroups / subgroups_of_order group-order cap
    "small_group": 10**5,
    # subgroups_of_order(): maximum generating-set size explored
    "subgroup_max_gens": 3,
    # ActionSpace: refuse full materialization above this size
    "space_materialize": 10**7,
    # subdegrees_oracle(): maximum action-space size
    "oracle_space": 10**6,
    # imprimitive sweep: spaces up to this size get an orbit-oracle cross-check
    "oracle_feasible": 5000,
    # orbit_design(): maximum block-orbit size
    "orbit_design": 10**6,
    # automorphism_group(): maximum point count for the backtrack
    "aut_points": 16,
}


class Caps:
    """Immutable snapshot of the cap table plus the worker-count limit."""

    def __init__(self, overrides: dict[str, int] | None = None, threads: int | None = None):
        values = dict(_DEFAULTS)
        for name, value in (overrides or {}).items():
            if name not in values:
                raise KeyError(f"unknown cap {name!r}")
            values[name] = int(value)
        self._values = values
        self.threads = threads if threads is not None else (os.cpu_count() or 1)
        if self.threads < 1:
            raise ValueError("thread cap must be >= 1")

    def __getitem__(self, name: str) -> int:
        return self._values[name]

    def as_dict(self) -> dict[str, int]:
        return dict(self._values)


def _parse_pairs(text: str) -> dict[str, int]:
    pairs: dict[str, int] = {}
    for chunk in text.replace(",", " ").split():
        name, sep, value = chunk.partition("=")
        if not sep:
            raise ValueError(f"malformed cap override {chunk!r}, expected name=value")
        pairs[name.strip()] = int(value)
    return pairs


def from_env(environ: dict[str, str] | None = None) -> Caps:
    """Build the cap table from STEINER_SIEVE_CAPS / STEINER_SIEVE_THREADS."""
    env = os.environ if environ is None else environ
    overrides = _parse_pairs(env["STEINER_SIEVE_CAPS"]) if "STEINER_SIEVE_CAPS" in env else None
    threads = int(env["STEINER_SIEVE_THREADS"]) if "STEINER_SIEVE_THREADS" in env else None
    return Caps(overrides, threads)


DEFAULT = Caps()
