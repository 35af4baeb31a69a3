"""
Exhaustive verification in small Grassmannians
==============================================

Each check loops over every ordered pair of partitions. Reports are the
same whatever the number of worker processes.
"""

import json

from qschubert import CHECKS, RectContext, run_check

for k, n in [(2, 4), (2, 5), (3, 6)]:
    ctx = RectContext(k, n)
    for name in CHECKS:
        report = run_check(name, ctx, jobs=2)
        print(f"Gr({k},{n}) {name:<10} {report.status:<5} cases={report.cases_run} "
              f"skipped={report.skipped} time={report.elapsed:.2f}s")

# the conjecture report also counts how often the end degrees agree with
# the classes built from the rotated pairs
report = run_check("conjecture", RectContext(3, 7), jobs=2)
print(json.dumps(report.to_dict(), indent=2))
