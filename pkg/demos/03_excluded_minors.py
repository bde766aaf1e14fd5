"""Certifying excluded minors of the class "graphic or bicircular lift".

A certificate holds a non-membership verdict for the matroid and a
membership witness for every single-element deletion and contraction.
Because the class is minor-closed, that is all minimality needs.

Run: python demos/03_excluded_minors.py
"""

from __future__ import annotations

import time

from liftmatroid import catalog_get, is_excluded_minor, recheck_certificate, scan_catalog_stream
from liftmatroid.exminor import NAMED_EXCLUDED, named_matroid
from liftmatroid.matroid import permute

for name in NAMED_EXCLUDED:
    m = named_matroid(name)
    start = time.perf_counter()
    cert = is_excluded_minor(m)
    secs = time.perf_counter() - start
    kinds = {c.deletion.witness.kind for c in cert.per_element} | {c.contraction.witness.kind for c in cert.per_element}
    print(f"{name:9s} n={m.n:2d} r={m.rank}: certified in {secs:.2f}s, "
          f"{cert.connectivity}, minors witnessed as {sorted(kinds)}; recheck {recheck_certificate(cert)}")

# whirl(3) passes the same test. It is not a named result, so it is shown
# here as a finding of the certifier.
w3 = catalog_get("whirl(3)")
cert = is_excluded_minor(w3)
print("whirl(3) certified:", cert is not None, cert and cert.connectivity)

# Scanning a stream: members produce nothing, isomorphic repeats are dropped.
f7d = catalog_get("F7dual")
stream = [catalog_get("uniform(2,4)"), catalog_get("F7"), catalog_get("MK4"), f7d, permute(f7d, (3, 1, 4, 0, 6, 5, 2))]
report = scan_catalog_stream(stream)
print("scan: certificates at", [i for i, _ in report.certificates], "duplicates", report.duplicates)
