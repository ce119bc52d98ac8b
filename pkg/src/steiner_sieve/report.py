"""Deterministic report model shared by the CLI's JSON and text output.

Every command builds one JSON-able dict; the text format is a rendering of
that dict, so both formats carry identical information and repeated runs are
byte-identical (no timestamps, canonical ordering everywhere).
"""

from __future__ import annotations

import json
from fractions import Fraction


def make_report(command: str, status: str, data: dict) -> dict:
    return {"command": command, "status": status, "data": jsonify(data)}


def jsonify(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(jsonify(v) for v in value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, float, str)):
        return value
    return str(value)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    lines.extend(_render_value(report["data"], ""))
    return "\n".join(lines) + "\n"


def _render_value(value, indent: str):
    if isinstance(value, dict):
        for key, sub in value.items():
            if isinstance(sub, (dict, list)):
                yield f"{indent}{key}:"
                yield from _render_value(sub, indent + "  ")
            else:
                yield f"{indent}{key}: {_scalar(sub)}"
        return
    if isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield f"{indent}-"
                yield from _render_value(item, indent + "  ")
            else:
                yield f"{indent}- {_scalar(item)}"
        return
    yield f"{indent}{_scalar(value)}"


def _scalar(value) -> str:
    if value is True:
        return "yes"
    if value is False:
        return "no"
    if value is None:
        return "-"
    return str(value)
