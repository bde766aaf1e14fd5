"""Conversion of result objects into flat report records (see :mod:`liftmatroid.formats`)."""

from __future__ import annotations

from typing import Optional

from ._bits import bits
from .exminor import ExclusionCertificate, ScanReport
from .lemmas import LemmaReport, graph_to_obj, matroid_to_obj
from .matroid import Matroid
from .membership import ClassVerdict, Witness


def _sets(masks) -> list[list[int]]:
    return [list(bits(x)) for x in masks]


def witness_obj(w: Optional[Witness]):
    if w is None:
        return None
    return {"graph": graph_to_obj(w.graph), "kind": w.kind, "map": list(w.map)}


def verdict_obj(v: ClassVerdict) -> dict:
    return {
        "member": v.member,
        "witness": witness_obj(v.witness),
        "search_exhausted": v.search_exhausted,
        "decided_by": v.decided_by,
        "complete": v.complete,
        "evidence": {k: v.evidence[k] for k in sorted(v.evidence)},
    }


def verdict_record(check: str, v: ClassVerdict) -> dict:
    return {"type": "verdict", "check": check, **verdict_obj(v)}


def matroid_record(m: Matroid) -> dict:
    return {"type": "matroid", "n": m.n, "rank": m.rank, "circuits": _sets(m.circuits)}


def certificate_record(cert: ExclusionCertificate, index: Optional[int] = None) -> dict:
    rec = {
        "type": "certificate",
        "matroid": matroid_to_obj(cert.matroid),
        "connectivity": cert.connectivity,
        "not_member": verdict_obj(cert.not_member_evidence),
        "per_element": [
            {"element": c.element, "deletion": verdict_obj(c.deletion), "contraction": verdict_obj(c.contraction)}
            for c in cert.per_element
        ],
    }
    if index is not None:
        rec["index"] = index
    return rec


def lemma_record(r: LemmaReport) -> dict:
    return {"type": "lemma_report", **r.as_dict()}


def scan_records(report: ScanReport) -> list[dict]:
    out: list[dict] = []
    events = [(i, 0, certificate_record(c, i)) for i, c in report.certificates]
    events += [(s.index, 1, {"type": "skip", "index": s.index, "reason": s.reason}) for s in report.skips]
    events += [(i, 2, {"type": "duplicate", "index": i, "first": j}) for i, j in report.duplicates]
    events += [
        (f.index, 3, {"type": "finding", "index": f.index, "kind": f.kind, "detail": f.detail})
        for f in report.findings
    ]
    for _, _, rec in sorted(events, key=lambda t: (t[0], t[1])):
        out.append(rec)
    out.append({
        "type": "scan_summary",
        "scanned": report.scanned,
        "certificates": len(report.certificates),
        "skips": len(report.skips),
        "duplicates": len(report.duplicates),
        "findings": len(report.findings),
    })
    return out
