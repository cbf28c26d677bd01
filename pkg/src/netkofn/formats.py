"""Text formats for graphs and construction scripts.

Graph file::

    # comment
    N M
    u v        (M lines, 0 <= u < v < N)

Script file: one ``leaf A`` or ``chord U V`` per line; the base edge 0-1
is implicit.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .errors import ParseError
from .graph import Chord, ConstructionScript, Graph, Leaf


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append((lineno, stripped.split()))
    return out


def _ints(lineno: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {len(fields)} fields")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    n, m = _ints(*lines[0], 2)
    if n < 0 or m < 0:
        raise ParseError(f"line {lines[0][0]}: negative header values")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    # loops, duplicates and range are validation errors raised by Graph
    edges = [tuple(_ints(lineno, fields, 2)) for lineno, fields in body]
    return Graph(n, tuple(edges))


def format_graph(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n_vertices} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_script(text: str) -> ConstructionScript:
    steps = []
    for lineno, fields in _data_lines(text):
        op = fields[0].lower()
        if op == "leaf":
            (a,) = _ints(lineno, fields[1:], 1)
            steps.append(Leaf(a))
        elif op == "chord":
            u, v = _ints(lineno, fields[1:], 2)
            steps.append(Chord(u, v))
        else:
            raise ParseError(f"line {lineno}: unknown step {fields[0]!r}")
    return ConstructionScript(tuple(steps))


def format_script(script: ConstructionScript) -> str:
    lines = []
    for s in script.steps:
        lines.append(f"leaf {s.attach}" if isinstance(s, Leaf) else f"chord {s.u} {s.v}")
    return "\n".join(lines) + ("\n" if lines else "")


def is_script_text(text: str) -> bool:
    lines = _data_lines(text)
    return not lines or lines[0][1][0].lower() in ("leaf", "chord")


def load(path: Union[str, Path]) -> Union[Graph, ConstructionScript]:
    """Read a graph or script file, telling them apart by the first data line."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_script(text) if is_script_text(text) else parse_graph(text)
