"""Graphviz output for extension digraphs."""

from __future__ import annotations

import hashlib
from typing import Mapping

from .morphisms import STRONG_EXTENSION, WEAK_EXTENSION, ExtensionDigraph


def form_hash(form: bytes) -> str:
    return "h" + hashlib.sha256(form).hexdigest()[:12]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: ExtensionDigraph, orders: Mapping[str, int] | None = None, title: str = "extensions") -> str:
    """Strong edges solid, weak-only edges dashed; output is byte-stable."""
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;", "  node [shape=box];"]
    if orders:
        by_order: dict[int, list[str]] = {}
        for name in graph.nodes:
            by_order.setdefault(orders[name], []).append(name)
        for n in sorted(by_order):
            members = " ".join(_quote(x) for x in sorted(by_order[n]))
            lines.append(f"  subgraph {_quote(f'order{n}')} {{ rank=same; {members}; }}")
    else:
        for name in sorted(graph.nodes):
            lines.append(f"  {_quote(name)};")
    strong = {(s, d) for s, d, k in graph.edges if k == STRONG_EXTENSION}
    weak = {(s, d) for s, d, k in graph.edges if k == WEAK_EXTENSION}
    for s, d in sorted(weak | strong):
        if (s, d) in strong:
            lines.append(f"  {_quote(s)} -> {_quote(d)} [style=solid, kind=strong];")
        else:
            lines.append(f"  {_quote(s)} -> {_quote(d)} [style=dashed, kind=weak];")
    lines.append("}")
    return "\n".join(lines) + "\n"
