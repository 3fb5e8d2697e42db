"""Batch sweep over a grid of types, checking each row for Poincare duality."""

import json
import os
import tempfile

from cohsys.cli import main

os.environ.setdefault("COHSYS_THREADS", "2")
with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "sweep.jsonl")
    main(["sweep", "--n", "3:5", "--d", "1:11", "--g", "2:3", "--out", out])
    with open(out) as fh:
        rows = [json.loads(line) for line in fh]

print(f"{len(rows)} chamber rows")
bad = [r for r in rows if not r["poincare"]["palindrome"]]
print(f"rows failing duality: {len(bad)}")
top = max(rows, key=lambda r: r["poincare"]["degree"])
print(f"largest: n={top['n']} d={top['d']} g={top['g']} chamber {top['chamber']}, "
      f"degree {top['poincare']['degree']}, b(total) = "
      f"{sum(int(c) for c in top['poincare']['coeffs'])}")
