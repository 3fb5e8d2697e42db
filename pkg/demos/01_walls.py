"""Walls for coherent systems of type (n, d, n-2).

Walks through the thresholds of one type, lists the numerical wall
candidates, then narrows them to the walls where an actual flip happens
and shows the codimension data on each side.
"""

from fractions import Fraction

from cohsys import (
    SystemType,
    alpha_I_bound,
    alpha_T,
    beta,
    candidate_critical_values,
    certified_walls_k_n_minus_2,
    check_codim_bounds,
    flip_locus_data,
)

s = SystemType(n=6, d=11, k=4, g=2)
print(f"type {s}: expected dimension {beta(s)}")
print(f"  alpha_T = {alpha_T(s)}, lower bound for alpha_I = {alpha_I_bound(s)}")

hi = Fraction(s.d, s.n - s.k)
cands = candidate_critical_values(s, alpha_T(s), hi)
print(f"\n{len(cands)} numerical candidates in ({alpha_T(s)}, {hi})")

walls = certified_walls_k_n_minus_2(s)
print(f"{len(walls)} of them are flip walls:")
for w in walls:
    fl = flip_locus_data(w, s)
    print(
        f"  alpha={w.alpha}: E1=(n1={w.n1}, d1={w.d1}), C12={w.c12}, C21={w.c21}, "
        f"codim G+={fl.codim_plus}, codim G-={fl.codim_minus}, "
        f"bounds hold: {check_codim_bounds(w, s)}"
    )
