"""Certificates that a matroid is an excluded minor for "graphic or bicircular lift".

The class is minor-closed, so a matroid outside it is an excluded minor
exactly when every single-element deletion and contraction is inside:
any proper minor is a minor of one of those.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .catalog import catalog_get, uniform
from .errors import CapacityError, ResourceError
from .matroid import (
    Matroid,
    connectivity_order,
    direct_sum,
    find_isomorphism,
    has_U25_restriction,
    matroid_minor,
)
from .membership import ClassVerdict, membership_BL_bar
from .realize import DEFAULT_CAPS, Caps

MAX_SCAN_RANK = 11
MAX_SCAN_SIZE = 224


@dataclass(frozen=True)
class ElementCheck:
    element: int
    deletion: ClassVerdict
    contraction: ClassVerdict


@dataclass(frozen=True)
class ExclusionCertificate:
    matroid: Matroid
    not_member_evidence: ClassVerdict
    per_element: tuple[ElementCheck, ...]
    connectivity: str = "unknown"

    def validate(self) -> bool:
        """Structural invariants of a certificate (not a re-run)."""
        if self.not_member_evidence.member or not self.not_member_evidence.search_exhausted:
            return False
        if [c.element for c in self.per_element] != list(range(self.matroid.n)):
            return False
        return all(c.deletion.member and c.contraction.member for c in self.per_element)


def _connectivity_label(m: Matroid) -> str:
    try:
        return connectivity_order(m).kind
    except ResourceError:
        return "unknown"


def is_excluded_minor(m: Matroid, caps: Caps = DEFAULT_CAPS) -> Optional[ExclusionCertificate]:
    top = membership_BL_bar(m, caps)
    if top.member:
        return None
    checks = []
    for e in range(m.n):
        d = membership_BL_bar(matroid_minor(m, delete=1 << e).matroid, caps)
        if not d.member:
            return None
        c = membership_BL_bar(matroid_minor(m, contract=1 << e).matroid, caps)
        if not c.member:
            return None
        checks.append(ElementCheck(e, d, c))
    return ExclusionCertificate(m, top, tuple(checks), _connectivity_label(m))


def recheck_certificate(cert: ExclusionCertificate, caps: Caps = DEFAULT_CAPS) -> bool:
    """Re-run every membership call and compare with the stored verdicts."""
    m = cert.matroid
    if membership_BL_bar(m, caps) != cert.not_member_evidence:
        return False
    for check in cert.per_element:
        e = check.element
        if membership_BL_bar(matroid_minor(m, delete=1 << e).matroid, caps) != check.deletion:
            return False
        if membership_BL_bar(matroid_minor(m, contract=1 << e).matroid, caps) != check.contraction:
            return False
    return True


NAMED_EXCLUDED = ("dualK5", "dualK33", "F7", "F7dual", "U24+loop")


def named_matroid(name: str) -> Matroid:
    if name == "U24+loop":
        return direct_sum(uniform(2, 4), uniform(0, 1))
    return catalog_get(name)


def verify_named_excluded(
    caps: Caps = DEFAULT_CAPS, names: tuple[str, ...] = NAMED_EXCLUDED
) -> list[tuple[str, ExclusionCertificate]]:
    out = []
    for name in names:
        try:
            cert = is_excluded_minor(named_matroid(name), caps)
        except ResourceError as exc:
            raise ResourceError(f"{name}: {exc}", exc.frontier) from exc
        if cert is None:
            raise AssertionError(f"{name} was not certified as an excluded minor")
        out.append((name, cert))
    return out


# ------------------------------------------------------------------ scanning


@dataclass(frozen=True)
class Skip:
    index: int
    reason: str


@dataclass(frozen=True)
class Finding:
    index: int
    kind: str
    detail: str


@dataclass
class ScanReport:
    certificates: list[tuple[int, ExclusionCertificate]] = field(default_factory=list)
    skips: list[Skip] = field(default_factory=list)
    duplicates: list[tuple[int, int]] = field(default_factory=list)  # (index, index of first copy)
    findings: list[Finding] = field(default_factory=list)
    scanned: int = 0


def _scan_one(args):
    m, caps = args
    if m.rank > MAX_SCAN_RANK or m.n > MAX_SCAN_SIZE:
        return ("skip", f"over input caps: rank {m.rank}, size {m.n}")
    try:
        return ("ok", is_excluded_minor(m, caps))
    except ResourceError as exc:
        return ("skip", f"resource cap: {exc}")
    except CapacityError as exc:
        return ("skip", f"capacity: {exc}")


def scan_catalog_stream(source: Iterable, caps: Caps = DEFAULT_CAPS, jobs: int = 1) -> ScanReport:
    """Certify the excluded minors in a stream of matroids.

    Items may be :class:`Matroid` values or exceptions (for example parse
    or capacity errors raised while reading); the latter become skips.
    Output follows input order whatever ``jobs`` is.
    """
    items = list(source)
    report = ScanReport(scanned=len(items))
    work = [(i, item) for i, item in enumerate(items) if isinstance(item, Matroid)]
    for i, item in enumerate(items):
        if not isinstance(item, Matroid):
            report.skips.append(Skip(i, f"unreadable: {item}"))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, [(m, caps) for _, m in work]))
    else:
        results = [_scan_one((m, caps)) for _, m in work]
    emitted: list[tuple[int, Matroid]] = []
    for (i, m), (status, value) in zip(work, results):
        if status == "skip":
            report.skips.append(Skip(i, value))
            continue
        if value is None:
            continue
        first = next((j for j, prev in emitted if find_isomorphism(prev, m) is not None), None)
        if first is not None:
            report.duplicates.append((i, first))
            continue
        emitted.append((i, m))
        report.certificates.append((i, value))
        if value.connectivity == "three_connected" and has_U25_restriction(m):
            report.findings.append(
                Finding(i, "u25_restriction_conflict", "3-connected certified excluded minor with a U(2,5) restriction")
            )
    report.skips.sort(key=lambda s: s.index)
    return report
