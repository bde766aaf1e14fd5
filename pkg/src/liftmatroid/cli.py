"""Command-line interface.

Exit codes: 0 verdict true / all pass, 1 verdict false / counterexample,
2 usage or parse error, 3 resource cap exceeded (no verdict printed).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import __version__
from ._bits import bits
from .catalog import catalog_entry
from .enumeration import MAX_VERTICES
from .errors import CapacityError, ParseError, ResourceError
from .exminor import is_excluded_minor, scan_catalog_stream
from .formats import read_catalog, read_graph, read_matroid, render, render_text, write_matroid
from .lemmas import LEMMA_IDS, LemmaBudget, run_all
from .lift import lift_matroid
from .matroid import (
    connectivity_order,
    element_classes,
    is_binary,
    max_line_size,
)
from .membership import biclift_witness, is_graphic, membership_BL_bar
from .multigraph import (
    MAX_EDGES,
    cosimplify_graph,
    cut_edges,
    edge_classes,
    enumerate_cycles,
    simplify_graph,
    subdivision_profile,
)
from .realize import DEFAULT_CAPS, Caps
from .reports import certificate_record, lemma_record, matroid_record, scan_records, verdict_record

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _sets(masks) -> list[list[int]]:
    return [list(bits(x)) for x in masks]


def _positive(name, lo=1, hi=None):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < lo or (hi is not None and v > hi):
            bound = f"between {lo} and {hi}" if hi is not None else f"at least {lo}"
            raise argparse.ArgumentTypeError(f"{name} must be {bound}")
        return v

    return conv


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    s = argparse.SUPPRESS
    p.add_argument("--seed", type=int, default=s, help="seed for randomized families (default 0)")
    p.add_argument("--max-vertices", type=_positive("--max-vertices", 1, MAX_VERTICES), default=s)
    p.add_argument("--max-edges", type=_positive("--max-edges", 1, MAX_EDGES), default=s)
    p.add_argument("--max-parallel", type=_positive("--max-parallel", 1, MAX_EDGES), default=s)
    p.add_argument("--jobs", type=_positive("--jobs"), default=s, help="worker processes (default 1)")
    p.add_argument("--format", choices=("text", "machine"), default=s, help="report format (default text)")
    p.add_argument("--timing", action="store_true", default=s, help="include elapsed_ms in lemma reports")
    p.add_argument("--max-instances", type=_positive("--max-instances"), default=s)
    p.add_argument("--random-instances", type=_positive("--random-instances", 0), default=s)
    return p


DEFAULTS = {
    "seed": 0,
    "max_vertices": DEFAULT_CAPS.max_vertices,
    "max_edges": DEFAULT_CAPS.max_edges,
    "max_parallel": DEFAULT_CAPS.max_parallel,
    "jobs": 1,
    "format": "text",
    "timing": False,
    "max_instances": LemmaBudget().max_instances,
    "random_instances": LemmaBudget().random_instances,
}


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="liftmatroid",
        description="Bicircular lift matroids: construction, class membership, excluded minors, lemma checks.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"liftmatroid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="graph-side commands").add_subparsers(dest="action", required=True)
    for name, text in (("circuits", "print L(g) in matroid format"), ("info", "cycles, classes, si/co profiles")):
        p = graph.add_parser(name, help=text, parents=[common])
        p.add_argument("path")

    matroid = sub.add_parser("matroid", help="matroid-side commands").add_subparsers(dest="action", required=True)
    p = matroid.add_parser("info", help="rank, classes, connectivity", parents=[common])
    p.add_argument("path")

    check = sub.add_parser("check", help="class membership and exclusion").add_subparsers(
        dest="action", required=True
    )
    for name, text in (
        ("graphic", "is the matroid graphic"),
        ("biclift", "is the matroid a bicircular lift"),
        ("class", "graphic or bicircular lift"),
        ("excluded", "is the matroid an excluded minor of that class"),
    ):
        p = check.add_parser(name, help=text, parents=[common])
        p.add_argument("path", help="matroid file, or a catalog name such as F7")

    catalog = sub.add_parser("catalog", help="named matroids").add_subparsers(dest="action", required=True)
    p = catalog.add_parser("get", help="print a named matroid", parents=[common])
    p.add_argument("name")

    p = sub.add_parser("scan", help="certify the excluded minors in a catalog file", parents=[common])
    p.add_argument("path")

    p = sub.add_parser("verify", help="run lemma checks", parents=[common])
    p.add_argument("lemma_id", help=f"one of {', '.join(LEMMA_IDS)}, or 'all'")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_matroid(spec: str):
    if os.path.exists(spec):
        return read_matroid(_read(spec), spec)
    try:
        return catalog_entry(spec).matroid
    except KeyError:
        raise ParseError(f"no such file or catalog name: {spec!r}") from None


class Session:
    def __init__(self, args):
        self.args = args
        self.caps = Caps(args.max_vertices, args.max_edges, args.max_parallel)
        self.budget = LemmaBudget(self.caps, args.max_instances, args.random_instances)
        words = [args.command] + ([args.action] if getattr(args, "action", None) else [])
        self.header = {
            "type": "header",
            "tool": "liftmatroid",
            "version": __version__,
            "command": " ".join(words),
            "caps": self.caps.as_dict(),
            "seed": args.seed,
        }
        for key in ("path", "name", "lemma_id"):
            if hasattr(args, key):
                self.header["input"] = getattr(args, key)

    def emit(self, records: list[dict], out) -> None:
        out.write(render([self.header] + records, self.args.format))


def _graph_info(g) -> dict:
    cls = edge_classes(g)
    si, co = simplify_graph(g), cosimplify_graph(g)
    prof = subdivision_profile(g)
    lm = lift_matroid(g)
    return {
        "type": "graph_info",
        "n": g.n,
        "m": g.m,
        "cycles": _sets(sorted(enumerate_cycles(g), key=lambda c: list(bits(c)))),
        "cut_edges": list(bits(cut_edges(g))),
        "loops": list(bits(cls.loops)),
        "parallel_classes": _sets(cls.parallel),
        "series_classes": _sets(cls.series),
        "si": {"n": si.graph.n, "m": si.graph.m, "kept": list(si.labels)},
        "co": {"n": co.graph.n, "m": co.graph.m, "kept": list(co.labels)},
        "subdivision_profile": {"kind": prof.kind, "n": prof.n},
        "lift": {"rank": lm.rank, "corank": lm.corank, "circuits": len(lm.circuits)},
    }


def _matroid_info(m) -> dict:
    cls = element_classes(m)
    try:
        conn = connectivity_order(m).kind
    except ResourceError:
        conn = "unknown"
    return {
        "type": "matroid_info",
        "n": m.n,
        "rank": m.rank,
        "corank": m.corank,
        "circuits": len(m.circuits),
        "loops": list(bits(cls.loops)),
        "coloops": list(bits(cls.coloops)),
        "parallel_classes": _sets(cls.parallel),
        "series_classes": _sets(cls.series),
        "connectivity": conn,
        "binary": is_binary(m),
        "longest_line": max_line_size(m),
    }


def _dispatch(s: Session, out) -> int:
    a = s.args
    if a.command == "graph":
        g = read_graph(_read(a.path), a.path)
        if a.action == "circuits":
            lm = lift_matroid(g)
            if a.format == "text":
                head = "".join(f"# {line}\n" for line in render_text([s.header]).splitlines())
                out.write(head + write_matroid(lm))
            else:
                s.emit([matroid_record(lm)], out)
            return EXIT_TRUE
        s.emit([_graph_info(g)], out)
        return EXIT_TRUE
    if a.command == "matroid":
        s.emit([_matroid_info(_load_matroid(a.path))], out)
        return EXIT_TRUE
    if a.command == "catalog":
        try:
            entry = catalog_entry(a.name)
        except KeyError as exc:
            raise ParseError(str(exc.args[0]) if exc.args else f"unknown catalog name {a.name!r}") from None
        if a.format == "text":
            out.write(f"# {entry.name}: {entry.notes}\n" + write_matroid(entry.matroid))
        else:
            s.emit([{**matroid_record(entry.matroid), "name": entry.name, "notes": entry.notes}], out)
        return EXIT_TRUE
    if a.command == "check":
        m = _load_matroid(a.path)
        if a.action == "excluded":
            cert = is_excluded_minor(m, s.caps)
            if cert is None:
                s.emit([{"type": "exclusion", "excluded": False}], out)
                return EXIT_FALSE
            s.emit([certificate_record(cert)], out)
            return EXIT_TRUE
        decide = {"graphic": is_graphic, "biclift": lambda x: biclift_witness(x, s.caps),
                  "class": lambda x: membership_BL_bar(x, s.caps)}[a.action]
        v = decide(m)
        s.emit([verdict_record(a.action, v)], out)
        return EXIT_TRUE if v.member else EXIT_FALSE
    if a.command == "scan":
        items = read_catalog(_read(a.path), a.path)
        report = scan_catalog_stream(items, s.caps, a.jobs)
        s.emit(scan_records(report), out)
        return EXIT_TRUE
    if a.command == "verify":
        ids = None if a.lemma_id == "all" else (a.lemma_id,)
        if ids and ids[0] not in LEMMA_IDS:
            raise ParseError(f"unknown lemma id {a.lemma_id!r}; known: {', '.join(LEMMA_IDS)}")
        reports = run_all(s.budget, a.seed, a.jobs, a.timing, ids)
        recs = [lemma_record(r) for r in reports]
        recs.append({
            "type": "verify_summary",
            "rows": len(reports),
            "passed": sum(r.passed for r in reports),
            "failed": [r.lemma_id for r in reports if not r.passed and not r.error],
            "resource": [r.lemma_id for r in reports if r.error],
        })
        s.emit(recs, out)
        if any(not r.passed and not r.error for r in reports):
            return EXIT_FALSE
        if any(r.error for r in reports):
            return EXIT_RESOURCE
        return EXIT_TRUE
    raise AssertionError(a.command)


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    s = Session(args)
    try:
        return _dispatch(s, out)
    except (ParseError, CapacityError, OSError) as exc:
        err.write(f"liftmatroid: error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        s.emit([{"type": "resource_error", "message": str(exc), "frontier": exc.frontier}], out)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
