"""Text formats for graphs, matroids, catalogs, and report records.

Graph::

    GRAPH <n> <m>
    <u> <v>          # m lines, u <= v, line order = edge label

Matroid::

    MATROID <n> <r>
    CIRCUITS <k>
    <i> <j> ...      # k lines, strictly increasing, lexicographically sorted

Lines starting with ``#`` are comments and blank lines are ignored inside
a record.  A catalog is matroid records separated by blank lines.

Reports are sequences of flat records (dicts with a ``type`` key).  The
machine rendering is one JSON object per line; the text rendering puts
one ``field: <json>`` line per field under a ``[type]`` heading.  Both
carry the same fields and both parse back.
"""

from __future__ import annotations

import json
from typing import Iterator, Union

from ._bits import bits, to_mask
from .errors import CapacityError, MatroidAxiomError, ParseError
from .matroid import MAX_ELEMENTS, Matroid, from_circuits
from .multigraph import MAX_EDGES, Multigraph


def _content_lines(text: str, first_line: int = 1) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.split("\n"), start=first_line):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _ints(line: str, lineno: int, source: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno, source) from None


# -------------------------------------------------------------------- graphs


def write_graph(g: Multigraph) -> str:
    lines = [f"GRAPH {g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(text: str, source: str = "<input>") -> Multigraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file", 1, source)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "GRAPH":
        raise ParseError("expected 'GRAPH <n> <m>'", lineno, source)
    n, m = _ints(" ".join(parts[1:]), lineno, source)
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be non-negative", lineno, source)
    if m > MAX_EDGES:
        raise CapacityError(f"{m} edges exceeds the {MAX_EDGES}-edge cap")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header declares {m} edges, found {len(body)}", where, source)
    edges = []
    for ln, line in body:
        vals = _ints(line, ln, source)
        if len(vals) != 2:
            raise ParseError("an edge line has exactly two vertices", ln, source)
        u, v = vals
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", ln, source)
        if u > v:
            raise ParseError("edge endpoints must satisfy u <= v", ln, source)
        edges.append((u, v))
    return Multigraph(n, edges)


# ------------------------------------------------------------------ matroids


def write_matroid(m: Matroid) -> str:
    lines = [f"MATROID {m.n} {m.rank}", f"CIRCUITS {len(m.circuits)}"]
    lines += [" ".join(map(str, bits(c))) for c in m.circuits]
    return "\n".join(lines) + "\n"


def _parse_matroid_lines(lines: list[tuple[int, str]], source: str) -> Matroid:
    if len(lines) < 2:
        where = lines[-1][0] if lines else 1
        raise ParseError("expected 'MATROID <n> <r>' and 'CIRCUITS <k>' header lines", where, source)
    (l1, h1), (l2, h2) = lines[0], lines[1]
    p1, p2 = h1.split(), h2.split()
    if len(p1) != 3 or p1[0] != "MATROID":
        raise ParseError("expected 'MATROID <n> <r>'", l1, source)
    if len(p2) != 2 or p2[0] != "CIRCUITS":
        raise ParseError("expected 'CIRCUITS <k>'", l2, source)
    n, r = _ints(" ".join(p1[1:]), l1, source)
    (k,) = _ints(p2[1], l2, source)
    if n < 0 or k < 0:
        raise ParseError("counts must be non-negative", l1, source)
    if n > MAX_ELEMENTS:
        raise CapacityError(f"{n} elements exceeds the {MAX_ELEMENTS}-element cap")
    body = lines[2:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else l2)
        raise ParseError(f"header declares {k} circuits, found {len(body)}", where, source)
    circuits: list[list[int]] = []
    for ln, line in body:
        c = _ints(line, ln, source)
        if not c:
            raise ParseError("empty circuit", ln, source)
        if any(b <= a for a, b in zip(c, c[1:])):
            raise ParseError("circuit elements must be strictly increasing", ln, source)
        if c[0] < 0 or c[-1] >= n:
            raise ParseError(f"element out of range 0..{n - 1}", ln, source)
        if circuits and c <= circuits[-1]:
            raise ParseError("circuits must be listed in strictly increasing lexicographic order", ln, source)
        circuits.append(c)
    try:
        m = from_circuits(n, circuits)
    except MatroidAxiomError as exc:
        raise ParseError(f"not a matroid: {exc}", l2, source) from None
    if m.rank != r:
        raise ParseError(f"declared rank {r} but the circuits give rank {m.rank}", l1, source)
    return m


def read_matroid(text: str, source: str = "<input>") -> Matroid:
    return _parse_matroid_lines(_content_lines(text), source)


def _records(text: str) -> Iterator[list[tuple[int, str]]]:
    block: list[tuple[int, str]] = []
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            if block:
                yield block
                block = []
            continue
        if not line.startswith("#"):
            block.append((i, line))
    if block:
        yield block


def read_catalog(text: str, source: str = "<input>") -> list[Union[Matroid, CapacityError]]:
    """Blank-line separated matroid records.

    Oversized records come back as :class:`CapacityError` items (to be
    skipped by the caller); malformed ones raise :class:`ParseError`.
    """
    out: list[Union[Matroid, CapacityError]] = []
    for block in _records(text):
        try:
            out.append(_parse_matroid_lines(block, source))
        except CapacityError as exc:
            out.append(exc)
    return out


def write_catalog(ms) -> str:
    return "\n".join(write_matroid(m) for m in ms)


def matroid_from_lists(n: int, circuits) -> Matroid:
    return Matroid(n, [to_mask(c) for c in circuits])


# ------------------------------------------------------------------- reports


def _dump(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def render_machine(records: list[dict]) -> str:
    return "".join(_dump(r) + "\n" for r in records)


def parse_machine(text: str) -> list[dict]:
    out = []
    for i, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad record: {exc.msg}", i, "<report>") from None
        if not isinstance(rec, dict) or "type" not in rec:
            raise ParseError("record must be an object with a 'type' field", i, "<report>")
        out.append(rec)
    return out


def render_text(records: list[dict]) -> str:
    chunks = []
    for r in records:
        lines = [f"[{r['type']}]"]
        lines += [f"{key}: {_dump(r[key])}" for key in sorted(r) if key != "type"]
        chunks.append("\n".join(lines) + "\n")
    return "\n".join(chunks)


def parse_text(text: str) -> list[dict]:
    out: list[dict] = []
    cur = None
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            cur = {"type": line[1:-1]}
            out.append(cur)
            continue
        if cur is None or ": " not in line:
            raise ParseError("expected '[type]' or 'field: value'", i, "<report>")
        key, value = line.split(": ", 1)
        try:
            cur[key] = json.loads(value)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad value: {exc.msg}", i, "<report>") from None
    return out


def render(records: list[dict], fmt: str) -> str:
    return render_machine(records) if fmt == "machine" else render_text(records)
