"""Topology reports with the hypotheses each statement depends on."""

from cohsys import SystemType, topology_report
from cohsys.report import render

cases = [
    (SystemType(4, 7, 2, 2), 3),   # coprime, above the only wall
    (SystemType(6, 4, 2, 3), "1/2"),  # gcd(n-k, d) = 4
    (SystemType(3, 2, 2, 2), 1),   # k = n-1, Brill-Noether range
    (SystemType(4, 6, 2, 2), 2),   # excluded case
]
for s, alpha in cases:
    r = topology_report(s, alpha, conjectures=True)
    print(f"\n{s} at alpha={alpha}")
    if not r.applicable:
        print(f"  not applicable: {r.reason}")
        continue
    if r.exceptions:
        print(f"  exceptions: {list(r.exceptions)}")
    for name in ("pic", "pic0", "pi1", "pi2"):
        f = getattr(r, name)
        if f is not None:
            print(f"  {name:4s} = {render(f.value)}")
    if r.fibration:
        print(f"  fibration over {r.fibration.base} with fibre {r.fibration.fibre}")
    if r.brill_noether:
        print(f"  Brill-Noether locus identified with {r.brill_noether}")
    for name, f in r.conjectures:
        print(f"  conjecturally {name} = {render(f.value)}")
