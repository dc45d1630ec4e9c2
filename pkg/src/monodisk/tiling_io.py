"""Tiling documents: a versioned, strictly validated JSON format.

Schema (version 1)::

    {
      "schema_version": 1,
      "disk": {"cx": float, "cy": float, "r": float},
      "tiles": [
        {"id": int,
         "orientation": "positive" | "negative",
         "path": [
            {"type": "line", "x0":..., "y0":..., "x1":..., "y1":...},
            {"type": "arc", "cx":..., "cy":..., "r":..., "start":..., "sweep":...},
            ...
         ]},
        ...
      ],
      "metadata": {"family":..., "n":..., "k":..., "t":..., "word":...,
                   "chirality":..., "about":...}
    }

Unknown keys are rejected.  Floats survive a save/load/save round trip
byte-identically (shortest round-trip repr, 17 significant digits).
"""

from __future__ import annotations

import json
import math

from .errors import SchemaViolation, VersionUnsupported
from .families import Orientation, PlacedTile, Tiling
from .geometry import Arc, Contour, Line, Point

SCHEMA_VERSION = 1

_METADATA_KEYS = {"family", "n", "k", "t", "word", "chirality", "about"}


def save(t: Tiling) -> bytes:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "disk": {"cx": t.center.x, "cy": t.center.y, "r": t.radius},
        "tiles": [
            {
                "id": pt.id,
                "orientation": pt.orientation,
                "path": [_segment_record(seg) for seg in pt.contour.segments],
            }
            for pt in t.tiles
        ],
        "metadata": {key: t.meta[key] for key in sorted(t.meta) if key in _METADATA_KEYS},
    }
    return (json.dumps(doc, indent=1) + "\n").encode("utf-8")


def _segment_record(seg) -> dict:
    if isinstance(seg, Line):
        return {"type": "line", "x0": seg.p0.x, "y0": seg.p0.y,
                "x1": seg.p1.x, "y1": seg.p1.y}
    return {"type": "arc", "cx": seg.center.x, "cy": seg.center.y,
            "r": seg.radius, "start": seg.start_angle, "sweep": seg.sweep}


def _expect_keys(obj: dict, required: set[str], optional: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaViolation("expected an object", where)
    unknown = set(obj) - required - optional
    if unknown:
        raise SchemaViolation(f"unknown field(s) {sorted(unknown)}", where)
    missing = required - set(obj)
    if missing:
        raise SchemaViolation(f"missing field(s) {sorted(missing)}", where)


def _number(obj: dict, key: str, where: str) -> float:
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise SchemaViolation(f"field {key!r} must be a finite number", where)
    return float(v)


def load(data: bytes | str) -> Tiling:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"not valid JSON: {exc}", "") from exc
    _expect_keys(doc, {"schema_version", "disk", "tiles", "metadata"}, set(), "")
    version = doc["schema_version"]
    if version != SCHEMA_VERSION:
        raise VersionUnsupported(f"schema_version {version!r} unsupported "
                                 f"(expected {SCHEMA_VERSION})")
    _expect_keys(doc["disk"], {"cx", "cy", "r"}, set(), "/disk")
    cx = _number(doc["disk"], "cx", "/disk")
    cy = _number(doc["disk"], "cy", "/disk")
    r = _number(doc["disk"], "r", "/disk")
    if r <= 0:
        raise SchemaViolation("disk radius must be positive", "/disk/r")

    if not isinstance(doc["tiles"], list) or not doc["tiles"]:
        raise SchemaViolation("tiles must be a non-empty array", "/tiles")
    tiles: list[PlacedTile] = []
    for idx, rec in enumerate(doc["tiles"]):
        where = f"/tiles/{idx}"
        _expect_keys(rec, {"id", "orientation", "path"}, set(), where)
        tid = rec["id"]
        if not isinstance(tid, int) or isinstance(tid, bool):
            raise SchemaViolation("tile id must be an integer", where + "/id")
        if rec["orientation"] not in (Orientation.POSITIVE, Orientation.NEGATIVE):
            raise SchemaViolation("orientation must be 'positive' or 'negative'",
                                  where + "/orientation")
        if not isinstance(rec["path"], list) or not rec["path"]:
            raise SchemaViolation("path must be a non-empty array", where + "/path")
        segments = []
        for sidx, srec in enumerate(rec["path"]):
            segments.append(_load_segment(srec, f"{where}/path/{sidx}"))
        contour = Contour(segments)
        if not contour.is_closed():
            raise SchemaViolation(f"tile {tid}: contour is not closed", where + "/path")
        tiles.append(PlacedTile(id=tid, contour=contour, orientation=rec["orientation"]))

    meta = doc["metadata"]
    _expect_keys(meta, set(), _METADATA_KEYS, "/metadata")
    return Tiling(center=Point(cx, cy), radius=r, tiles=tiles, meta=dict(meta))


def _load_segment(rec: dict, where: str):
    if not isinstance(rec, dict) or "type" not in rec:
        raise SchemaViolation("segment record needs a 'type'", where)
    kind = rec["type"]
    if kind == "line":
        _expect_keys(rec, {"type", "x0", "y0", "x1", "y1"}, set(), where)
        return Line(Point(_number(rec, "x0", where), _number(rec, "y0", where)),
                    Point(_number(rec, "x1", where), _number(rec, "y1", where)))
    if kind == "arc":
        _expect_keys(rec, {"type", "cx", "cy", "r", "start", "sweep"}, set(), where)
        radius = _number(rec, "r", where)
        sweep = _number(rec, "sweep", where)
        if radius <= 0:
            raise SchemaViolation("arc radius must be positive", where + "/r")
        if not (0.0 < abs(sweep) < 2.0 * math.pi):
            raise SchemaViolation("arc sweep must satisfy 0 < |sweep| < 2*pi",
                                  where + "/sweep")
        return Arc(Point(_number(rec, "cx", where), _number(rec, "cy", where)),
                   radius, _number(rec, "start", where), sweep)
    raise SchemaViolation(f"unknown segment type {kind!r}", where + "/type")
