"""Covector and arrangement file formats.

Covector text format::

    # comment
    elements: h1,h2,h3
    +-0
    0+-

Each data line spells one sign vector with ``+``, ``0`` and ``-``.  The
header is optional (labels default to ``e1, e2, ...``); the empty sign
vector of an empty ground set is written ``()``.  The JSON form is
``{"elements": [...], "covectors": [[-1, 0, 1], ...]}``.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, Hyperplane, parse_number
from .errors import FormatError
from .signs import GroundSet, SignSystem, format_vector

_CHARS = {"+": 1, "0": 0, "-": -1}


def parse_covectors(text: str) -> SignSystem:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_covectors_json(stripped)
    labels = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("elements:"):
            if labels is not None or rows:
                raise FormatError(f"line {lineno}: header must precede all covectors")
            body = line.split(":", 1)[1].strip()
            labels = [s.strip() for s in body.split(",")] if body else []
            if any(not s for s in labels):
                raise FormatError(f"line {lineno}: empty element label")
            continue
        if line == "()":
            rows.append(())
            continue
        try:
            rows.append(tuple(_CHARS[c] for c in line))
        except KeyError as exc:
            raise FormatError(f"line {lineno}: unexpected character {exc.args[0]!r}") from None
    if labels is None:
        if not rows:
            raise FormatError("no covectors and no elements header")
        labels = GroundSet.default(len(rows[0])).labels
    return _system(labels, rows)


def _system(labels, rows):
    try:
        return SignSystem(GroundSet(tuple(labels)), tuple(rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_covectors_json(text: str) -> SignSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "covectors" not in data:
        raise FormatError('JSON covector file needs a "covectors" list')
    rows = [tuple(r) for r in data["covectors"]]
    labels = data.get("elements")
    if labels is None:
        if not rows:
            raise FormatError('no covectors and no "elements" list')
        labels = GroundSet.default(len(rows[0])).labels
    return _system(labels, rows)


def format_covectors(system: SignSystem) -> str:
    lines = [f"elements: {','.join(system.ground.labels)}"]
    lines.extend(format_vector(x) for x in system)
    return "\n".join(lines) + "\n"


def covectors_to_json(system: SignSystem) -> dict:
    return {"elements": list(system.ground.labels), "covectors": [list(x) for x in system]}


def _read(path) -> str:
    """File contents; ``-`` reads standard input."""
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def read_covectors(path) -> SignSystem:
    return parse_covectors(_read(path))


def parse_arrangement(text: str):
    """Return ``(arrangement, points)`` from the arrangement JSON document.

    JSON decimal literals are read as exact rationals, so ``0.5`` means 1/2.
    """
    try:
        data = json.loads(text, parse_float=Fraction)
    except (json.JSONDecodeError, ValueError) as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    try:
        hyperplanes = tuple(
            Hyperplane(tuple(h["coeffs"]), h.get("offset", 0), str(h.get("label", "")))
            for h in data["hyperplanes"]
        )
        arrangement = Arrangement(hyperplanes, data.get("dimension"))
        points = [tuple(parse_number(c) for c in p) for p in data.get("points", [])]
        for p in points:
            if len(p) != arrangement.dimension:
                raise ValueError(f"point {p} does not have dimension {arrangement.dimension}")
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid arrangement document: {exc}") from None
    return arrangement, points


def read_arrangement(path):
    return parse_arrangement(_read(path))
