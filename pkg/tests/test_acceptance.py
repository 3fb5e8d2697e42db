"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s -v`` to see the lines.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, gcd

from cohsys.closed_forms import closed_form_n3, closed_form_n4
from cohsys.moduli import (
    SystemType as S,
    alpha_I_bound,
    alpha_T,
    beta,
    certified_walls_k_n_minus_2,
    check_codim_bounds,
    codim_D,
    codim_D_partition_min,
)
from cohsys.poincare import chamber_intervals, chamber_query, p_G_chamber, p_grassmannian


@contextmanager
def criterion(label, budget=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"{label} took {elapsed:.2f}s (budget {budget}s)"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        print(f"\n{'PASS' if ok else 'FAIL'} {label} ({elapsed:.2f}s)")


def nonempty_k_n_minus_2(n, d, g):
    return d > 0 and g * (n - 2) <= g * n + d - n


def test_criterion_1_rank_three_closed_form():
    with criterion("1 rank-3 chamber polynomial equals closed form", budget=1.0):
        checked = 0
        for g in (2, 3, 4):
            for d in (1, 3, 5, 7, 9):
                if d < max(1, 3 - g) or not nonempty_k_n_minus_2(3, d, g):
                    continue
                s = S(3, d, 1, g)
                for i in range(len(chamber_intervals(s))):
                    got = p_G_chamber(chamber_query(s, i))
                    assert got.coeffs == closed_form_n3(d, g).coeffs, (d, g, i)
                    checked += 1
        assert checked >= 15


def test_criterion_2_rank_four_closed_forms():
    with criterion("2 rank-4 high/low chamber polynomials and wall data", budget=2.0):
        for g in (2, 3):
            for d in (3, 5, 7, 9):
                s = S(4, d, 2, g)
                assert len(chamber_intervals(s)) == 2
                low = p_G_chamber(chamber_query(s, 0))
                high = p_G_chamber(chamber_query(s, 1))
                assert high.coeffs == closed_form_n4(d, g, "high").coeffs
                assert low.coeffs == closed_form_n4(d, g, "low").coeffs
                (w,) = certified_walls_k_n_minus_2(s)
                assert w.alpha == Fraction(d - 2, 2)
                assert (w.n1, w.d1) == (1, (d - 1) // 2)
                assert w.c21 == g
                assert w.c12 == 3 * g + d - 5


def test_criterion_3_structural_checks():
    with criterion("3 constant term, degree, positivity, duality, Grassmannian counts", budget=30.0):
        count = 0
        for n in (3, 4, 5, 6):
            for d in range(1, 16, 2):
                for g in (2, 3, 4):
                    if not nonempty_k_n_minus_2(n, d, g):
                        continue
                    s = S(n, d, n - 2, g)
                    b = beta(s)
                    for i in range(len(chamber_intervals(s))):
                        p = p_G_chamber(chamber_query(s, i))
                        cs = p.coeffs
                        assert cs[0] == 1
                        assert p.degree == 2 * b
                        assert all(c >= 0 for c in cs)
                        if gcd(gcd(n, d), n - 2) == 1:
                            assert all(cs[j] == cs[2 * b - j] for j in range(2 * b + 1))
                        count += 1
        assert count > 100
        for N in range(13):
            for k in range(N + 1):
                assert p_grassmannian(k, N)(1) == comb(N, k)


def brute_force_walls(n, d, g):
    """Scan (n1, d1) over a box and keep solutions of the three wall conditions."""
    found = set()
    for n1 in range(1, n + 1):  # n1 is a rank, k1 = n1 - 1 >= 0
        if not 2 * n1 < n:
            continue
        for d1 in range(-3 * d - 10, 3 * d + 11):
            lower = max(Fraction(d + 2 * n1 - n), Fraction(2 * n1 * d, n))
            if not lower < 2 * d1 < d:
                continue
            n2, d2 = n - n1, d - d1
            # both factor types (r, e, r-1) need e >= 1 and e >= r - g
            if d1 < 1 or d1 < n1 - g or d2 < 1 or d2 < n2 - g:
                continue
            found.add((n1, d1, Fraction(n * d1 - n1 * d, n - 2 * n1)))
    return found


def grid_4():
    for n in range(3, 9):
        for d in range(1, 26):
            for g in range(2, 6):
                yield S(n, d, n - 2, g)


def test_criterion_4_wall_enumeration_oracle():
    with criterion("4 certified walls match brute force and pass codimension chains"):
        total = 0
        for s in grid_4():
            walls = certified_walls_k_n_minus_2(s)
            got = {(w.n1, w.d1, w.alpha) for w in walls}
            assert len(got) == len(walls)
            assert got == brute_force_walls(s.n, s.d, s.g), s
            for w in walls:
                assert alpha_T(s) < w.alpha < Fraction(s.d, 2)
                assert check_codim_bounds(w, s)
                assert w.c12 >= s.g + 1
                assert w.c21 >= s.g
                total += 1
        assert total > 0


def test_criterion_5_dimension_bookkeeping():
    with criterion("5 flip-locus dimensions add up to the expected dimension"):
        for s in grid_4():
            for w in certified_walls_k_n_minus_2(s):
                b1 = beta(S(w.n1, w.d1, w.n1 - 1, s.g))
                b2 = beta(S(w.n2, w.d2, w.n2 - 1, s.g))
                assert b1 + b2 + w.c12 + w.c21 - 1 == beta(s)


def compositions_min(m, g):
    best = math.inf

    def walk(remaining, parts):
        nonlocal best
        if remaining == 0:
            if len(parts) >= 2:
                cross = (sum(parts) ** 2 - sum(p * p for p in parts)) // 2
                best = min(best, cross * (g - 1))
            return
        for first in range(1, remaining + 1):
            walk(remaining - first, parts + [first])

    walk(m, [])
    return best


def test_criterion_6_partition_minimum():
    with criterion("6 closed-form codimension equals partition minimum"):
        for nk in range(2, 8):
            for g in range(2, 7):
                want = compositions_min(nk, g)
                assert codim_D(nk, g) == want == (nk - 1) * (g - 1)
                assert codim_D_partition_min(nk, g) == want


def test_criterion_7_threshold_properties():
    with criterion("7 alpha_I bound below alpha_T and below d(k-1)/(k(n-k+1))"):
        for n in range(3, 9):
            for k in range(2, n):
                for d in range(n + 1, 31):
                    for g in range(2, 6):
                        s = S(n, d, k, g)
                        a = alpha_I_bound(s)
                        assert a < alpha_T(s)
                        assert a <= Fraction(d * (k - 1), k * (n - k + 1))


def test_criterion_8_beta_decomposition():
    with criterion("8 beta(n,d,k) = beta(n-k,d,0) + k(N-k)"):
        for n in range(2, 11):
            for k in range(1, n):
                for d in range(-30, 31):
                    for g in range(2, 7):
                        s = S(n, d, k, g)
                        assert beta(s) == beta(S(n - k, d, 0, g)) + k * (s.N - k)
