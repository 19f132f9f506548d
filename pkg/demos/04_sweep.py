"""Sweep the default catalog: structural predictions against both deciders.

Run: python demos/04_sweep.py
"""

from collections import Counter

from powerline.classify import SweepOptions, default_catalog, verify_sweep

catalog = default_catalog()
report = verify_sweep(catalog, SweepOptions(jobs=2))
print(f"{len(report.records)} groups checked")

by_theorem = Counter()
for r in report.records:
    for p in r["predictions"]:
        if p["applicable"]:
            by_theorem[p["theorem"], p["agree"]] += 1
for (theorem, agree), count in sorted(by_theorem.items()):
    print(f"{theorem:<20} agree={agree!s:<5} {count}")

print("groups with disagreements:", [r["id"] for r in report.disagreements])
