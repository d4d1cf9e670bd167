"""Minimal Graphviz DOT emitter: plain node and edge statements only."""

from __future__ import annotations


def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit(name: str, nodes, edges) -> str:
    """nodes: iterable of (id, label); edges: iterable of (lower_id, upper_id)."""
    lines = [f"digraph {_quote(name)} {{"]
    for nid, label in nodes:
        lines.append(f"  {_quote(nid)} [label={_quote(label)}];")
    for a, b in edges:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_edges(text: str) -> list:
    """Edge pairs of a document produced by :func:`emit` (used in tests)."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if "->" in line:
            a, b = line.rstrip(";").split("->")
            out.append((a.strip().strip('"'), b.strip().strip('"')))
    return out
