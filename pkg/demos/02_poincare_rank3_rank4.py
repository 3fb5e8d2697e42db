"""Betti numbers chamber by chamber.

The last chamber is a Grassmann bundle over M(2, d); crossing each wall
downward swaps one projective bundle for another, which changes the
Poincare polynomial by a computable correction. For rank 3 there are no
walls, for rank 4 there is exactly one.
"""

from cohsys import SystemType, beta, chamber_intervals, chamber_query, p_G_chamber
from cohsys.closed_forms import closed_form_n3, closed_form_n4

s3 = SystemType(3, 5, 1, 2)
p3 = p_G_chamber(chamber_query(s3, 0))
print(f"{s3}: one chamber {chamber_intervals(s3)}")
print(f"  P = {p3}")
print(f"  matches the rank-3 closed form: {p3 == closed_form_n3(5, 2)}")

s4 = SystemType(4, 7, 2, 2)
for i, (lo, hi) in enumerate(chamber_intervals(s4)):
    p = p_G_chamber(chamber_query(s4, i))
    name = "low" if i == 0 else "high"
    print(f"\n{s4} chamber {i} = ({lo}, {hi})")
    print(f"  Betti numbers b0..b{2 * beta(s4)}: {list(p.coeffs)}")
    print(f"  palindromic: {p.is_palindromic(2 * beta(s4))}, "
          f"matches closed form: {p == closed_form_n4(7, 2, name)}")
