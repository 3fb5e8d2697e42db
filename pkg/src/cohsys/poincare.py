"""Poincare polynomials and the wall-crossing engine for k = n - 2.

The building blocks are the Grassmannian (a Gaussian binomial in t^2), the
rank-2 odd-degree moduli space M(2, d), and ``P_{r,e}``, the last-chamber
space for type (r, e, r-1). For k = n - 2 and odd d the last chamber
``G_L`` fibres over M(2, d) with Grassmannian fibre, and every other
chamber differs from it by one term per wall crossed:

    P(G(a')) - P(G_L) = sum_{walls a > a'} (t^{2 c21} - t^{2 c12}) / (1 - t^2)
                                           * P_{n1,d1} * P_{n2,d2}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import CriticalAlpha, InvalidParams, NegativeCoefficient, OutOfRange, ParityError
from .exact import IntPoly, cyclotomic_product, poly_div_exact
from .moduli import (
    SystemType,
    WallPattern,
    alpha_T,
    certified_walls_k_n_minus_2,
    kbound_holds,
)

__all__ = [
    "ChamberQuery",
    "chamber_intervals",
    "chamber_query",
    "p_G_chamber",
    "p_GL",
    "p_grassmannian",
    "p_m2",
    "p_re",
    "wall_crossing_difference",
    "wall_term",
]

ONE = IntPoly.one()
T = IntPoly.t()


def p_grassmannian(k: int, N: int) -> IntPoly:
    """Poincare polynomial of Gr(k, N); degree 2k(N-k)."""
    if k < 0 or k > N:
        raise InvalidParams(f"need 0 <= k <= N, got k={k}, N={N}")
    num = cyclotomic_product([2 * j for j in range(N - k + 1, N + 1)])
    den = cyclotomic_product([2 * i for i in range(1, k + 1)])
    return poly_div_exact(num, den)


def p_m2(d: int, g: int) -> IntPoly:
    """Poincare polynomial of M(2, d) for odd d; degree 2(4g-3)."""
    if d % 2 == 0:
        raise ParityError(f"M(2, d) formula needs odd d, got d={d}")
    if g < 2:
        raise InvalidParams(f"need g >= 2, got g={g}")
    jac = (ONE + T) ** (2 * g)
    num = jac * ((ONE + T.shift(2)) ** (2 * g) - jac.shift(2 * g))
    return poly_div_exact(num, cyclotomic_product([2, 4]))


def p_re(r: int, e: int, g: int) -> IntPoly:
    """``P_{r,e}``: a Jacobian factor times Gr(r-1, e+g-1)."""
    if r < 1 or g < 2:
        raise InvalidParams(f"need r >= 1 and g >= 2, got r={r}, g={g}")
    if e < max(1, r - g):
        raise OutOfRange(f"G_L({r},{e},{r - 1}) is empty: need e >= max(1, r-g)")
    num = cyclotomic_product([2 * j for j in range(e + g - r + 1, e + g)])
    den = cyclotomic_product([2 * i for i in range(1, r)])
    return (ONE + T) ** (2 * g) * poly_div_exact(num, den)


def _require_k_n_minus_2(s: SystemType) -> None:
    if s.k != s.n - 2:
        raise InvalidParams(f"need k = n-2, got n={s.n}, k={s.k}")
    if s.d <= 0:
        raise OutOfRange(f"need d > 0, got d={s.d}")
    if not kbound_holds(s):
        raise OutOfRange(f"{s} violates k <= n + (d-n)/g; moduli are empty")


def p_GL(s: SystemType) -> IntPoly:
    """Last-chamber polynomial P(M(2, d)) * P(Gr(n-2, d+2g-2)), d odd."""
    _require_k_n_minus_2(s)
    if s.d % 2 == 0:
        raise ParityError(f"P(G_L) is only known for odd d, got d={s.d}")
    return p_m2(s.d, s.g) * p_grassmannian(s.k, s.N)


@dataclass(frozen=True)
class ChamberQuery:
    """A type with k = n-2 and a generic alpha' in (alpha_T, d/2)."""

    s: SystemType
    alpha_prime: Fraction

    def __post_init__(self):
        _require_k_n_minus_2(self.s)
        a = Fraction(self.alpha_prime)
        object.__setattr__(self, "alpha_prime", a)
        lo, hi = alpha_T(self.s), Fraction(self.s.d, 2)
        if not lo < a < hi:
            raise OutOfRange(f"alpha'={a} outside ({lo}, {hi})")


def wall_term(p: WallPattern, g: int) -> IntPoly:
    """Contribution of one wall: (t^{2c21} - t^{2c12})/(1 - t^2) * P_{n1,d1} P_{n2,d2}."""
    step = poly_div_exact(T ** (2 * p.c21) - T ** (2 * p.c12), ONE - T ** 2)
    return step * p_re(p.n1, p.d1, g) * p_re(p.n2, p.d2, g)


def _walls_above(q: ChamberQuery) -> List[WallPattern]:
    walls = certified_walls_k_n_minus_2(q.s)
    for w in walls:
        if w.alpha == q.alpha_prime:
            raise CriticalAlpha(f"alpha'={q.alpha_prime} is a wall for {q.s}")
    return [w for w in walls if w.alpha > q.alpha_prime]


def wall_crossing_difference(q: ChamberQuery) -> IntPoly:
    """``P(G(alpha')) - P(G_L)``; valid for either parity of d."""
    total = IntPoly.zero()
    for w in _walls_above(q):
        total = total + wall_term(w, q.s.g)
    return total


def p_G_chamber(q: ChamberQuery) -> IntPoly:
    """Poincare polynomial of G(alpha'; n, d, n-2) for odd d."""
    if q.s.d % 2 == 0:
        raise ParityError(f"P(G_L) is only known for odd d, got d={q.s.d}")
    result = p_GL(q.s) + wall_crossing_difference(q)
    if not result.has_nonnegative_coeffs():
        raise NegativeCoefficient(f"negative Betti number for {q.s} at {q.alpha_prime}: {result}")
    return result


def chamber_intervals(s: SystemType) -> List[Tuple[Fraction, Fraction]]:
    """Open chambers (lo, hi) of (alpha_T, d/2) cut by the certified walls, ascending."""
    _require_k_n_minus_2(s)
    cuts = [alpha_T(s)] + sorted({w.alpha for w in certified_walls_k_n_minus_2(s)})
    cuts.append(Fraction(s.d, 2))
    return list(zip(cuts[:-1], cuts[1:]))


def chamber_query(s: SystemType, index: int) -> ChamberQuery:
    """Query at the midpoint of chamber ``index`` (0 is the lowest; -1 is G_L)."""
    chambers = chamber_intervals(s)
    try:
        lo, hi = chambers[index]
    except IndexError:
        raise OutOfRange(f"{s} has {len(chambers)} chambers, no index {index}") from None
    return ChamberQuery(s, (lo + hi) / 2)


def as_query(s: SystemType, alpha: Union[Fraction, int, str]) -> ChamberQuery:
    return ChamberQuery(s, Fraction(alpha))
