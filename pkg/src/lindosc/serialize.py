"""JSON/CSV output helpers with fixed 17-significant-digit float formatting."""

from __future__ import annotations

import json
import re

_TOKEN = "@@f17@@"
_TOKEN_RE = re.compile(f'"{_TOKEN}([^"]*){_TOKEN}"')


def fmt17(x):
    """Format a float with 17 significant digits (round-trip exact)."""
    return format(float(x), ".17g")


def _tag_floats(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return f"{_TOKEN}{fmt17(obj)}{_TOKEN}"
    if isinstance(obj, dict):
        return {k: _tag_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tag_floats(v) for v in obj]
    return obj


def dumps(obj, indent=2):
    """json.dumps with every float printed at 17 significant digits."""
    text = json.dumps(_tag_floats(obj), indent=indent)
    return _TOKEN_RE.sub(lambda m: m.group(1), text)


def write_json(path, obj):
    with open(path, "w") as fh:
        fh.write(dumps(obj) + "\n")


def write_csv(path, header, rows):
    """Write rows of floats under a comma-separated header."""
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(fmt17(v) for v in row) + "\n")
