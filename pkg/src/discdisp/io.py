"""Distribution JSON and sample-count CSV formats.

Distribution JSON::

    {"label": "sample 1", "mode": "exact", "tail_defect": "0",
     "atoms": [["0", "15/28"], ["1", "5/28"], ...]}

Exact values are written as ``"num/den"`` strings (integers as ``"3"``)
so nothing is lost in transit; approx values are plain JSON numbers.
``sample_size`` is an optional extra key written for empirical data.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from .dist import APPROX, EXACT, DiscreteDist, from_pmf, from_samples
from .errors import ParseError

__all__ = [
    "num_to_json",
    "dist_to_json",
    "dist_from_json",
    "dumps",
    "dump_dist",
    "load_dist",
    "parse_counts_csv",
    "read_counts_csv",
]


def num_to_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def _num_from_json(v, exact: bool, what: str):
    if isinstance(v, bool) or not isinstance(v, (int, float, str)):
        raise ParseError(f"{what}: expected a number or 'num/den' string, got {v!r}")
    if isinstance(v, str):
        try:
            v = Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{what}: cannot parse {v!r} as a number") from None
    elif isinstance(v, int):
        v = Fraction(v)
    if exact:
        if isinstance(v, float):
            raise ParseError(f"{what}: float {v!r} in an exact-mode distribution")
        return v
    return float(v)


def dist_to_json(d: DiscreteDist) -> dict:
    out = {
        "label": d.label,
        "mode": d.mode,
        "tail_defect": num_to_json(d.tail_defect),
        "atoms": [[num_to_json(x), num_to_json(p)] for x, p in d.atoms],
    }
    if d.sample_size is not None:
        out["sample_size"] = d.sample_size
    return out


def dist_from_json(obj) -> DiscreteDist:
    if not isinstance(obj, dict) or "atoms" not in obj:
        raise ParseError("distribution JSON must be an object with an 'atoms' list")
    mode = obj.get("mode", EXACT)
    if mode not in (EXACT, APPROX):
        raise ParseError(f"mode must be 'exact' or 'approx', got {mode!r}")
    exact = mode == EXACT
    atoms = obj["atoms"]
    if not isinstance(atoms, list):
        raise ParseError("'atoms' must be a list of [value, prob] pairs")
    pairs = []
    for i, atom in enumerate(atoms):
        if not isinstance(atom, (list, tuple)) or len(atom) != 2:
            raise ParseError(f"atom {i}: expected [value, prob]")
        pairs.append((_num_from_json(atom[0], exact, f"atom {i} value"),
                       _num_from_json(atom[1], exact, f"atom {i} prob")))
    tail = _num_from_json(obj.get("tail_defect", 0), exact, "tail_defect")
    d = from_pmf(pairs, label=str(obj.get("label", "")), tail_defect=tail)
    if "sample_size" in obj:
        n = obj["sample_size"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ParseError(f"sample_size must be a positive integer, got {n!r}")
        d = replace(d, sample_size=n)
    return d


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """``json.dumps`` with indentation, but lists of scalars kept on one line
    (so each atom reads as ``["3", "1/14"]``)."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict) and obj:
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent, _level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)) and obj and any(isinstance(v, (dict, list, tuple)) for v in obj):
        items = [inner + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dump_dist(d: DiscreteDist, path) -> None:
    Path(path).write_text(dumps(dist_to_json(d)) + "\n")


def load_dist(path) -> DiscreteDist:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno) from None
    return dist_from_json(obj)


def parse_counts_csv(text: str) -> list:
    """Parse ``value,count`` rows (header required) into ``(value, count)``."""
    reader = csv.reader(io.StringIO(text))
    rows = [(i, row) for i, row in enumerate(reader, start=1) if any(c.strip() for c in row)]
    if not rows:
        raise ParseError("empty CSV", 1)
    line, header = rows[0]
    if [c.strip().lower() for c in header] != ["value", "count"]:
        raise ParseError("header must be 'value,count'", line)
    out = []
    for line, row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"expected 2 columns, got {len(row)}", line)
        raw_v, raw_c = (c.strip() for c in row)
        try:
            value = Fraction(raw_v)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad value {raw_v!r}", line) from None
        try:
            count = int(raw_c)
        except ValueError:
            raise ParseError(f"bad count {raw_c!r}", line) from None
        if count < 0:
            raise ParseError(f"negative count {count}", line)
        out.append((value, count))
    return out


def read_counts_csv(path, label: str | None = None) -> DiscreteDist:
    counts = parse_counts_csv(Path(path).read_text())
    return from_samples(counts, label=Path(path).stem if label is None else label)
