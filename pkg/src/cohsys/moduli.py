"""Numeric invariants of moduli of coherent systems of type (n, d, k).

Everything here is a function of the four integers n (rank), d (degree),
k (number of sections) and g (genus of the curve). No sheaf-level object is
ever represented. Thresholds and walls are exact :class:`~fractions.Fraction`
values.

Walls come in two flavours. :func:`candidate_critical_values` lists every
numerical solution of the slope-equality equation (a superset of the actual
critical values, marked ``certified=False``). For ``k = n - 2``
:func:`certified_walls_k_n_minus_2` returns the walls that are known to be
realised by flips, marked ``certified=True``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Tuple, Union

from .errors import InvalidRange, InvalidType

__all__ = [
    "FlipLocusData",
    "SystemType",
    "WallPattern",
    "alpha_I_bound",
    "alpha_T",
    "alpha_max",
    "beta",
    "c12_k_n_minus_2",
    "c21_k_n_minus_2",
    "candidate_critical_values",
    "certified_walls_k_n_minus_2",
    "check_codim_bounds",
    "codim_D",
    "codim_D_partition_min",
    "factor_nonempty",
    "flip_constants",
    "flip_locus_data",
    "is_nonempty",
    "kbound_holds",
    "partitions",
    "wall_solutions_k_n_minus_2",
]


@dataclass(frozen=True, order=True)
class SystemType:
    """Type (n, d, k) of a coherent system on a curve of genus g."""

    n: int
    d: int
    k: int
    g: int

    def __post_init__(self):
        for name in ("n", "d", "k", "g"):
            if not isinstance(getattr(self, name), int):
                raise InvalidType(f"{name} must be an int")
        if self.g < 2:
            raise InvalidType(f"genus must be >= 2, got g={self.g}")
        if self.n < 1:
            raise InvalidType(f"rank must be >= 1, got n={self.n}")
        if self.k < 0:
            raise InvalidType(f"k must be >= 0, got k={self.k}")

    @property
    def N(self) -> int:
        """Dimension of the extension space, d + (n-k)(g-1)."""
        return self.d + (self.n - self.k) * (self.g - 1)

    def with_k(self, k: int) -> SystemType:
        return replace(self, k=k)


@dataclass(frozen=True)
class WallPattern:
    """A destabilizing numeric pattern (n1,d1,k1 | n2,d2,k2) at ``alpha``."""

    n1: int
    d1: int
    k1: int
    n2: int
    d2: int
    k2: int
    alpha: Fraction
    c12: int
    c21: int
    certified: bool = False

    def swapped(self) -> WallPattern:
        """Exchange the roles of sub and quotient."""
        return WallPattern(
            self.n2, self.d2, self.k2, self.n1, self.d1, self.k1,
            self.alpha, self.c21, self.c12, self.certified,
        )

    @property
    def sub(self) -> Tuple[int, int, int]:
        return (self.n1, self.d1, self.k1)

    @property
    def quotient(self) -> Tuple[int, int, int]:
        return (self.n2, self.d2, self.k2)


@dataclass(frozen=True)
class FlipLocusData:
    """Dimensions attached to one flip locus G^+(n1,d1) / G^-(n1,d1)."""

    pattern: WallPattern
    base_dim: int
    fibre_dim_plus: int
    fibre_dim_minus: int
    codim_plus: int
    codim_minus: int


def beta(s: SystemType) -> int:
    """Expected dimension n^2(g-1) + 1 - k(k - d + n(g-1))."""
    n, d, k, g = s.n, s.d, s.k, s.g
    return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1))


def _require_wall_range(s: SystemType) -> None:
    if not 0 < s.k < s.n:
        raise InvalidType(f"need 0 < k < n, got n={s.n}, k={s.k}")


def alpha_T(s: SystemType) -> Fraction:
    """Torsion-freeness threshold max{(d-n)/(n-k), 0}."""
    _require_wall_range(s)
    return max(Fraction(s.d - s.n, s.n - s.k), Fraction(0))


def alpha_max(s: SystemType) -> Fraction:
    """d/(n-k); moduli are empty above this value."""
    _require_wall_range(s)
    return Fraction(s.d, s.n - s.k)


def alpha_I_bound(s: SystemType) -> Fraction:
    """Upper bound for the injectivity threshold.

    Uses eps = min{k-1, g}, which packages the two Clifford / Riemann-Roch
    cases ``2 <= k <= g+1`` and ``k > g+1`` into one expression. For k = 1
    the threshold itself is 0.
    """
    n, d, k, g = s.n, s.d, s.k, s.g
    if not 1 <= k <= n:
        raise InvalidType(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == 1:
        return Fraction(0)
    eps = min(k - 1, g)
    return max(Fraction((k - 1) * (d - n) - n * eps, k * (n - k + 1)), Fraction(0))


def kbound_holds(s: SystemType, strict: bool = False) -> bool:
    """``k <= n + (d-n)/g`` (or ``<`` when ``strict``), decided in integers."""
    lhs, rhs = s.g * s.k, s.g * s.n + s.d - s.n
    return lhs < rhs if strict else lhs <= rhs


def is_nonempty(s: SystemType, alpha: Union[Fraction, int]) -> bool:
    """Whether G(alpha; n, d, k) is non-empty (0 < k <= n, n >= 2)."""
    n, d, k = s.n, s.d, s.k
    if n < 2 or not 0 < k <= n:
        raise InvalidType(f"need n >= 2 and 0 < k <= n, got n={n}, k={k}")
    alpha = Fraction(alpha)
    return (
        alpha > 0
        and (n - k) * alpha < d
        and kbound_holds(s)
        and not (d == n and k == n)
    )


def _c21(n1, d1, k1, n2, d2, k2, g) -> int:
    return (
        n1 * n2 * (g - 1) - d1 * n2 + d2 * n1
        + k2 * d1 - k2 * n1 * (g - 1) - k1 * k2
    )


def flip_constants(p: WallPattern, s: SystemType) -> Tuple[int, int]:
    """Return ``(c12, c21)`` for the pattern.

    When the pattern is a certified k = n-2 wall the closed specialisations
    in (n1, d1) are evaluated too and must agree with the general formula.
    """
    if (p.n1 + p.n2, p.d1 + p.d2, p.k1 + p.k2) != (s.n, s.d, s.k):
        raise InvalidType(f"pattern {p.sub}|{p.quotient} does not sum to {s}")
    c21 = _c21(p.n1, p.d1, p.k1, p.n2, p.d2, p.k2, s.g)
    c12 = _c21(p.n2, p.d2, p.k2, p.n1, p.d1, p.k1, s.g)
    if p.certified and s.k == s.n - 2:
        special = (
            c12_k_n_minus_2(s.n, s.d, s.g, p.n1, p.d1),
            c21_k_n_minus_2(s.n, s.d, s.g, p.n1, p.d1),
        )
        if special != (c12, c21):
            raise ArithmeticError(
                f"flip constants disagree for {p.sub}: general {(c12, c21)}, "
                f"specialised {special}"
            )
    return c12, c21


def c21_k_n_minus_2(n: int, d: int, g: int, n1: int, d1: int) -> int:
    return n1 * (g - 1) + d * n1 - d1 * (n1 + 1) - (n1 - 1) * (n - n1 - 1)


def c12_k_n_minus_2(n: int, d: int, g: int, n1: int, d1: int) -> int:
    return (n - n1) * (g - 1) - d + d1 * (n - n1 + 1) - (n1 - 1) * (n - n1 - 1)


def _make_pattern(s, n1, d1, k1, alpha, certified) -> WallPattern:
    p = WallPattern(n1, d1, k1, s.n - n1, s.d - d1, s.k - k1, alpha, 0, 0, certified)
    c12, c21 = flip_constants(p, s)
    return replace(p, c12=c12, c21=c21)


def _open_int_range(a: Fraction, b: Fraction) -> range:
    """Integers x with a < x < b."""
    return range(math.floor(a) + 1, math.ceil(b))


def candidate_critical_values(
    s: SystemType, lo: Union[Fraction, int], hi: Union[Fraction, int]
) -> List[Tuple[Fraction, List[WallPattern]]]:
    """All numerical solutions of the slope equality with alpha in (lo, hi).

    Each solution is a pattern (n1, d1, k1) with k1/n1 != k/n, grouped by its
    alpha. These are virtual walls: nothing here decides whether a subsystem
    of that type actually exists.
    """
    _require_wall_range(s)
    if s.d <= 0:
        raise InvalidType(f"need d > 0, got d={s.d}")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise InvalidRange(f"empty range ({lo}, {hi})")
    if hi > alpha_max(s):
        raise InvalidRange(f"hi={hi} exceeds d/(n-k)={alpha_max(s)}")
    n, d, k = s.n, s.d, s.k
    walls = {}
    for n1 in range(1, n):
        n2 = n - n1
        for k1 in range(0, min(k, n1) + 1):
            k2 = k - k1
            if k2 > n2:
                continue
            den = n1 * k - n * k1
            if den == 0:
                continue
            # alpha = (n*d1 - n1*d)/den is monotone in d1
            ends = sorted(((lo * den + n1 * d) / n, (hi * den + n1 * d) / n))
            for d1 in _open_int_range(*ends):
                alpha = Fraction(n * d1 - n1 * d, den)
                walls.setdefault(alpha, []).append(
                    _make_pattern(s, n1, d1, k1, alpha, certified=False)
                )
    return [
        (a, sorted(ps, key=lambda p: p.sub)) for a, ps in sorted(walls.items())
    ]


def wall_solutions_k_n_minus_2(s: SystemType) -> List[WallPattern]:
    """All integer solutions (n1, d1) of the k = n-2 wall conditions.

    ``2 n1 < n``, ``max{d + 2 n1 - n, 2 n1 d / n} < 2 d1 < d`` and
    ``alpha = (n d1 - n1 d)/(n - 2 n1)``, completed with ``k1 = n1 - 1``,
    ``k2 = n2 - 1``. Some solutions have an empty flip locus; see
    :func:`certified_walls_k_n_minus_2`.
    """
    n, d = s.n, s.d
    if s.k != n - 2:
        raise InvalidType(f"need k = n-2, got n={n}, k={s.k}")
    if n < 3:
        raise InvalidType(f"need n >= 3, got n={n}")
    if d <= 0:
        raise InvalidType(f"need d > 0, got d={d}")
    out = []
    for n1 in range(1, (n + 1) // 2):
        lower = max(Fraction(d + 2 * n1 - n), Fraction(2 * n1 * d, n))
        for d1 in _open_int_range(lower / 2, Fraction(d, 2)):
            alpha = Fraction(n * d1 - n1 * d, n - 2 * n1)
            out.append(_make_pattern(s, n1, d1, n1 - 1, alpha, certified=True))
    out.sort(key=lambda p: (p.alpha, p.sub))
    return out


def factor_nonempty(r: int, e: int, g: int) -> bool:
    """G_L(r, e, r-1) is non-empty iff e >= max{1, r-g}."""
    return e >= max(1, r - g)


def certified_walls_k_n_minus_2(s: SystemType) -> List[WallPattern]:
    """Flip walls for k = n-2 in (alpha_T, d/2), sorted by alpha.

    These are the solutions of :func:`wall_solutions_k_n_minus_2` whose flip
    locus is non-empty, i.e. both factor types (n_i, d_i, n_i - 1) admit
    stable coherent systems. A solution with an empty factor contributes
    nothing to the wall-crossing sum and is not a wall.
    """
    return [
        p for p in wall_solutions_k_n_minus_2(s)
        if factor_nonempty(p.n1, p.d1, s.g) and factor_nonempty(p.n2, p.d2, s.g)
    ]


def check_codim_bounds(p: WallPattern, s: SystemType, side: str = "both") -> bool:
    """Check the codimension inequality chains of a flip at ``p``.

    The pattern is first oriented so that its sub has the smaller ratio
    k1/n1; that orientation destabilizes on the ``plus`` side, and the
    ``minus`` side sees the same wall with sub and quotient exchanged.

    plus:  c12 >= (g-1)(n1-k1)(n2-k2) + d1 n2 - d2 n1 + 1 >= g + 1
    minus: c21 >= (g-1)(n1-k1)(n2-k2) + 1 >= g
    """
    if side not in ("plus", "minus", "both"):
        raise ValueError(f"side must be plus, minus or both, not {side!r}")
    if p.k1 * s.n > s.k * p.n1:
        p = p.swapped()
    g = s.g
    free = (p.n1 - p.k1) * (p.n2 - p.k2) * (g - 1)
    plus_mid = free + p.d1 * p.n2 - p.d2 * p.n1 + 1
    plus_ok = p.c12 >= plus_mid >= g + 1
    minus_ok = p.c21 >= free + 1 >= g
    if side == "plus":
        return plus_ok
    if side == "minus":
        return minus_ok
    return plus_ok and minus_ok


def flip_locus_data(p: WallPattern, s: SystemType) -> FlipLocusData:
    base = beta(SystemType(p.n1, p.d1, p.k1, s.g)) + beta(SystemType(p.n2, p.d2, p.k2, s.g))
    return FlipLocusData(
        pattern=p,
        base_dim=base,
        fibre_dim_plus=p.c21 - 1,
        fibre_dim_minus=p.c12 - 1,
        codim_plus=p.c12,
        codim_minus=p.c21,
    )


def codim_D(nk: int, g: int) -> Union[int, float]:
    """Codimension bound (n-k-1)(g-1) for the strictly semistable locus.

    Returns ``math.inf`` when n-k = 1: no splitting into two or more parts.
    """
    if nk < 1 or g < 2:
        raise InvalidType(f"need n-k >= 1 and g >= 2, got {nk}, {g}")
    if nk == 1:
        return math.inf
    return (nk - 1) * (g - 1)


def partitions(m: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``m`` as non-increasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def codim_D_partition_min(nk: int, g: int) -> Union[int, float]:
    """Brute-force minimum of (sum_{i<j} m_i m_j)(g-1) over partitions with >= 2 parts."""
    best = math.inf
    for parts in partitions(nk):
        if len(parts) < 2:
            continue
        val = sum(a * b for a, b in combinations(parts, 2)) * (g - 1)
        best = min(best, val)
    return best
