"""pam-v1 JSON serialization for piecewise-affine maps.

Layout::

    {
      "schema": "pam-v1",
      "breakpoints": [{"x": "0/1", "y": "0/1"}, ...]
    }

Rationals are ``"num/den"`` strings in lowest terms; serialization is
canonical, so ``dumps(loads(text)) == text`` for files this module wrote.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .pamap import PAMap
from .rational import format_rational, parse_rational

SCHEMA = "pam-v1"

__all__ = ["SCHEMA", "MapFormatError", "to_dict", "from_dict", "dumps", "loads", "save", "load",
           "atomic_write_text"]


class MapFormatError(ValueError):
    pass


def to_dict(f: PAMap) -> dict:
    return {
        "schema": SCHEMA,
        "breakpoints": [
            {"x": format_rational(x), "y": format_rational(y)} for x, y in zip(f.xs, f.ys)
        ],
    }


def from_dict(data) -> PAMap:
    if not isinstance(data, dict):
        raise MapFormatError("map document must be a JSON object")
    schema = data.get("schema")
    if schema != SCHEMA:
        raise MapFormatError(f"unsupported schema {schema!r}, expected {SCHEMA!r}")
    try:
        pts = [(parse_rational(p["x"]), parse_rational(p["y"])) for p in data["breakpoints"]]
        return PAMap(pts)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise MapFormatError(f"invalid breakpoints: {exc}") from exc


def dumps(f: PAMap) -> str:
    return json.dumps(to_dict(f), indent=2) + "\n"


def loads(text: str) -> PAMap:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapFormatError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def atomic_write_text(path, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save(f: PAMap, path) -> None:
    atomic_write_text(path, dumps(f))


def load(path) -> PAMap:
    return loads(Path(path).read_text(encoding="utf-8"))
