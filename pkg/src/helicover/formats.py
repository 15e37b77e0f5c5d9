"""Text formats: command-line complex literals, path files and JSON output.

JSON is written by hand so that every float carries 17 significant digits
and keys come out sorted; identical values always give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from pathlib import Path

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_PURE_IM = re.compile(rf"([+-]?)({_NUM})?i")
_FULL = re.compile(rf"([+-]?{_NUM})([+-])({_NUM})?i")
_PURE_RE = re.compile(rf"[+-]?{_NUM}")


class PathFormatError(ValueError):
    """A path file row could not be read; ``row`` is 1-based."""

    def __init__(self, source: str, row: int, detail: str):
        super().__init__(f"{source}: row {row}: {detail}")
        self.row = row


def parse_complex(text: str) -> complex:
    """Parse ``a+bi``, ``a-bi``, ``bi`` or ``a`` (no spaces) into a complex."""
    s = text.strip()
    if m := _PURE_IM.fullmatch(s):
        sign, mag = m.groups()
        im = float(mag) if mag else 1.0
        return complex(0.0, -im if sign == "-" else im)
    if m := _FULL.fullmatch(s):
        re_part, sign, mag = m.groups()
        im = float(mag) if mag else 1.0
        return complex(float(re_part), -im if sign == "-" else im)
    if _PURE_RE.fullmatch(s):
        return complex(float(s), 0.0)
    raise ValueError(f"cannot parse complex literal {text!r}; expected a+bi or a-bi")


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def dumps(obj, indent: int | None = None) -> str:
    """JSON with sorted keys and 17-significant-digit floats."""
    def enc(o, level):
        pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
        end = "" if indent is None else "\n" + " " * (indent * level)
        sep = ":" if indent is None else ": "
        if isinstance(o, bool) or o is None or isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, int):
            return str(o)
        if isinstance(o, float):
            return format_float(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}{sep}{enc(o[k], level + 1)}" for k in sorted(o)]
            return "{" + ",".join(items) + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            return "[" + ",".join(f"{pad}{enc(v, level + 1)}" for v in o) + end + "]"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0)


def _row_to_complex(source: str, row: int, cells) -> complex:
    try:
        re_, im_ = (float(c) for c in cells)
    except (TypeError, ValueError):
        raise PathFormatError(source, row, f"expected two numbers re,im, got {cells!r}") from None
    if not (math.isfinite(re_) and math.isfinite(im_)):
        raise PathFormatError(source, row, f"non-finite value {cells!r}")
    return complex(re_, im_)


def read_path_csv(text: str, source: str = "<csv>") -> list[complex]:
    """Two columns ``re,im``; a non-numeric first row is taken as a header."""
    pts = []
    for row, cells in enumerate(csv.reader(io.StringIO(text)), 1):
        cells = [c.strip() for c in cells]
        if not any(cells):
            continue
        if row == 1 and len(cells) == 2:
            try:
                float(cells[0])
            except ValueError:
                continue
        if len(cells) != 2:
            raise PathFormatError(source, row, f"expected 2 columns, got {len(cells)}")
        pts.append(_row_to_complex(source, row, cells))
    if not pts:
        raise PathFormatError(source, 1, "no points")
    return pts


def read_path_json(text: str, source: str = "<json>") -> list[complex]:
    """A JSON array of ``[re, im]`` pairs."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PathFormatError(source, exc.lineno, exc.msg) from None
    if not isinstance(data, list) or not data:
        raise PathFormatError(source, 1, "expected a non-empty array of [re, im] pairs")
    pts = []
    for row, item in enumerate(data, 1):
        if not isinstance(item, list) or len(item) != 2 or any(isinstance(c, bool) for c in item):
            raise PathFormatError(source, row, f"expected [re, im], got {item!r}")
        pts.append(_row_to_complex(source, row, item))
    return pts


def read_path(path: str | Path) -> list[complex]:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return read_path_json(text, str(path))
    return read_path_csv(text, str(path))
