"""JSON file formats for points and disks with exact rationals.

Points file::

    {"points": [[x, y], ...], "meta": {...}}        (meta optional)

Disks file::

    {"disks": [{"type": "disk", "center": [x, y], "r2": q},
               {"type": "halfplane", "a": q, "b": q, "c": q}, ...]}

Every numeric field is an integer, a decimal string ("0.25"), or a
rational string ("3/4"); decimals are converted exactly.  Serialization
writes integers as JSON numbers and everything else as "p/q" strings,
so round-trips are lossless.
"""

import json
from fractions import Fraction

from .geometry import Point, Disk, HalfPlane, GeneralizedDisk, GeometryError


class ParseError(Exception):
    pass


def parse_rational(value, where: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"{where}: bad rational {value!r} ({e})") from None
    if isinstance(value, float):
        raise ParseError(
            f"{where}: floats are not accepted; write the exact value "
            f'as a string, e.g. "1/3" or "0.25"'
        )
    raise ParseError(f"{where}: expected int or string, got {type(value).__name__}")


def unparse_rational(q: Fraction):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_points(text: str) -> tuple[list[Point], dict]:
    """Parse a points document; returns (points, meta)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError('top-level object with a "points" field required')
    raw = doc["points"]
    if not isinstance(raw, list):
        raise ParseError('"points" must be a list of [x, y] pairs')
    pts = []
    for i, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"points[{i}]: expected an [x, y] pair")
        pts.append(
            Point(
                parse_rational(item[0], f"points[{i}].x"),
                parse_rational(item[1], f"points[{i}].y"),
            )
        )
    if len(set(pts)) != len(pts):
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise ParseError(f"points[{seen[p]}] and points[{i}] coincide")
            seen[p] = i
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError('"meta" must be an object')
    return pts, meta


def parse_disks(text: str) -> list[GeneralizedDisk]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or "disks" not in doc:
        raise ParseError('top-level object with a "disks" field required')
    raw = doc["disks"]
    if not isinstance(raw, list):
        raise ParseError('"disks" must be a list')
    out: list[GeneralizedDisk] = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict):
            raise ParseError(f"disks[{i}]: expected an object")
        kind = item.get("type")
        try:
            if kind == "disk":
                center = item["center"]
                if not isinstance(center, list) or len(center) != 2:
                    raise ParseError(f"disks[{i}].center: expected an [x, y] pair")
                out.append(
                    Disk(
                        Point(
                            parse_rational(center[0], f"disks[{i}].center.x"),
                            parse_rational(center[1], f"disks[{i}].center.y"),
                        ),
                        parse_rational(item["r2"], f"disks[{i}].r2"),
                    )
                )
            elif kind == "halfplane":
                out.append(
                    HalfPlane(
                        parse_rational(item["a"], f"disks[{i}].a"),
                        parse_rational(item["b"], f"disks[{i}].b"),
                        parse_rational(item["c"], f"disks[{i}].c"),
                    )
                )
            else:
                raise ParseError(
                    f'disks[{i}].type: expected "disk" or "halfplane", got {kind!r}'
                )
        except KeyError as e:
            raise ParseError(f"disks[{i}]: missing field {e.args[0]!r}") from None
        except GeometryError as e:
            raise ParseError(f"disks[{i}]: {e}") from None
    return out


def points_document(points, meta: dict | None = None) -> str:
    doc = {"points": [[unparse_rational(p.x), unparse_rational(p.y)] for p in points]}
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def disks_document(disks) -> str:
    items = []
    for d in disks:
        if isinstance(d, Disk):
            items.append(
                {
                    "type": "disk",
                    "center": [unparse_rational(d.center.x), unparse_rational(d.center.y)],
                    "r2": unparse_rational(d.r2),
                }
            )
        elif isinstance(d, HalfPlane):
            items.append(
                {
                    "type": "halfplane",
                    "a": unparse_rational(d.a),
                    "b": unparse_rational(d.b),
                    "c": unparse_rational(d.c),
                }
            )
        else:
            raise ParseError(f"cannot serialize {type(d).__name__}")
    return json.dumps({"disks": items}, indent=2, sort_keys=True) + "\n"
