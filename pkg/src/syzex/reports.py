"""Report assembly and rendering.

A report is a plain dict with a fixed shape (see data/report.schema.json):
command echo, input digest, structured results, warnings, and optional
timings.  Text and JSON renderings carry the same numeric content; default
reports contain nothing run-dependent, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import hashlib
import json


def new_report(command: list, inputs: dict) -> dict:
    digest = hashlib.sha256(
        json.dumps(inputs, sort_keys=True, default=str).encode()
    ).hexdigest()[:16]
    return {
        "command": list(command),
        "inputs": {"digest": digest, **inputs},
        "results": {},
        "warnings": [],
        "timings": None,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"


def _flat(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in value:
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append("%s%s:" % (pad, k))
                lines.extend(_flat(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _scalar(v)))
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                lines.append("%s-" % pad)
                lines.extend(_flat(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _scalar(v)))
    else:
        lines.append("%s%s" % (pad, _scalar(value)))
    return lines


def _scalar(v):
    if isinstance(v, (dict, list)) and not v:
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def render_text(report: dict) -> str:
    lines = ["command: %s" % " ".join(report["command"])]
    lines.append("inputs digest: %s" % report["inputs"]["digest"])
    lines.append("results:")
    lines.extend(_flat(report["results"], 1))
    if report["warnings"]:
        lines.append("warnings:")
        lines.extend(_flat(report["warnings"], 1))
    if report.get("timings"):
        lines.append("timings:")
        lines.extend(_flat(report["timings"], 1))
    return "\n".join(lines) + "\n"
