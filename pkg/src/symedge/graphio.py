"""Reading graphs from edge-list text or a structured JSON document."""

from __future__ import annotations

import json
from typing import Optional

from .errors import ParseError
from .graphs import Basis, Graph, Ribbon, validate_basis, validate_ribbon


def parse_edge_list(text: str) -> Graph:
    """One \"u v\" pair per line; blank lines and #-comments are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        pairs.append((u, v))
    if not pairs:
        raise ParseError("no edges in input")
    try:
        return Graph.from_pairs(pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_graph_json(obj: dict) -> tuple[Graph, Optional[Ribbon], Optional[Basis]]:
    try:
        n = int(obj["n"])
        edges = tuple((int(u), int(v)) for u, v in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad JSON graph document: {exc}") from None
    try:
        g = Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None

    ribbon = None
    if "ribbon" in obj and obj["ribbon"] is not None:
        try:
            ribbon = Ribbon(tuple(tuple(int(e) for e in cyc) for cyc in obj["ribbon"]))
            validate_ribbon(g, ribbon)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad ribbon: {exc}") from None

    basis = None
    if "basis" in obj and obj["basis"] is not None:
        try:
            raw = obj["basis"]
            if isinstance(raw, dict):
                basis = Basis(int(raw["vertex"]), int(raw["edge"]))
            else:
                basis = Basis(int(raw[0]), int(raw[1]))
            validate_basis(g, basis)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ParseError(f"bad basis: {exc}") from None
    return g, ribbon, basis


def parse_graph(text: str) -> tuple[Graph, Optional[Ribbon], Optional[Basis]]:
    """Parse either input format, detecting JSON by its leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return parse_graph_json(obj)
    return parse_edge_list(text), None, None


def load_graph(path: str) -> tuple[Graph, Optional[Ribbon], Optional[Basis]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
