"""Condition-checked topology reports for G(alpha; n, d, k) with 0 < k < n.

A report states Pic, Pic^0, pi_1 and pi_2 of the moduli space, the
fibration structure when it is known, and the Brill-Noether identification
for k = n-1. A field is filled only when every hypothesis it depends on has
been verified in exact arithmetic; the hypotheses travel with the value.

Group structures are small dataclasses rather than strings so tests can
inspect them; :func:`render` turns them into text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

from .errors import InvalidType
from .moduli import (
    SystemType,
    alpha_T,
    alpha_max,
    certified_walls_k_n_minus_2,
    kbound_holds,
)

__all__ = [
    "Cyclic",
    "Extension",
    "Fact",
    "Fibration",
    "FreeAbelian",
    "GrassmannianHomotopy",
    "Named",
    "Product",
    "TopologyReport",
    "brill_noether_label",
    "render",
    "topology_report",
]

EXCEPTION_G2_EVEN = "g2_k_n-2_d_even_unknown"


@dataclass(frozen=True)
class FreeAbelian:
    rank: int
    label: Optional[str] = None


@dataclass(frozen=True)
class Cyclic:
    order: int


@dataclass(frozen=True)
class Named:
    """A group known only by name, e.g. ``Pic(M(2,7))`` or ``J(C)``."""

    symbol: str


@dataclass(frozen=True)
class Product:
    factors: Tuple


@dataclass(frozen=True)
class Extension:
    """The middle term of ``0 -> sub -> G -> quotient -> 0``, left unresolved."""

    sub: object
    quotient: object


@dataclass(frozen=True)
class GrassmannianHomotopy:
    """pi_i(Gr(k, N)); ``value`` is filled in for i = 2."""

    i: int
    k: int
    N: int
    value: object = None


Group = Union[FreeAbelian, Cyclic, Named, Product, Extension, GrassmannianHomotopy]


def render(grp) -> str:
    if isinstance(grp, FreeAbelian):
        if grp.rank == 0:
            return "0"
        return "Z" if grp.rank == 1 else f"Z^{grp.rank}"
    if isinstance(grp, Cyclic):
        return f"Z_{grp.order}"
    if isinstance(grp, Named):
        return grp.symbol
    if isinstance(grp, Product):
        return " x ".join(render(f) for f in grp.factors)
    if isinstance(grp, Extension):
        return f"ext(0 -> {render(grp.sub)} -> * -> {render(grp.quotient)} -> 0)"
    if isinstance(grp, GrassmannianHomotopy):
        base = f"pi_{grp.i}(Gr({grp.k},{grp.N}))"
        return base if grp.value is None else f"{base} = {render(grp.value)}"
    raise TypeError(f"not a group description: {grp!r}")


@dataclass(frozen=True)
class Fact:
    value: Group
    hypotheses: Tuple[str, ...]
    conjecture: bool = False


@dataclass(frozen=True)
class Fibration:
    base: str
    fibre: str
    hypotheses: Tuple[str, ...]
    note: Optional[str] = None


@dataclass(frozen=True)
class TopologyReport:
    s: SystemType
    alpha: Fraction
    applicable: bool
    reason: Optional[str] = None
    p: Optional[int] = None
    pic: Optional[Fact] = None
    pic0: Optional[Fact] = None
    pi1: Optional[Fact] = None
    pi2: Optional[Fact] = None
    fibration: Optional[Fibration] = None
    brill_noether: Optional[str] = None
    exceptions: Tuple[str, ...] = ()
    conjectures: Tuple[Tuple[str, Fact], ...] = field(default=())


def brill_noether_label(n: int, d: int, g: int) -> Optional[str]:
    """Classical variety identified with B(n, d, n-1) when n-g <= d < n."""
    if d > 0 and n - g <= d < n:
        return f"G^{d + g - n - 1}_{d + 2 * g - 2}"
    return None


def _grassmannian_pi2(k: int, N: int) -> GrassmannianHomotopy:
    # Gr(k, N) is simply connected; pi_2 = H_2 = Z unless it is a point
    return GrassmannianHomotopy(2, k, N, FreeAbelian(1 if 0 < k < N else 0))


def topology_report(
    s: SystemType, alpha: Union[Fraction, int, str], conjectures: bool = False
) -> TopologyReport:
    n, d, k, g = s.n, s.d, s.k, s.g
    if not 0 < k < n:
        raise InvalidType(f"need 0 < k < n, got n={n}, k={k}")
    alpha = Fraction(alpha)
    bn = brill_noether_label(n, d, g) if k == n - 1 else None

    def refuse(reason: str) -> TopologyReport:
        return TopologyReport(s, alpha, False, reason=reason, brill_noether=bn)

    if d <= 0:
        return refuse("d must be positive")
    if not kbound_holds(s):
        return refuse("k > n + (d-n)/g: moduli space is empty")
    lo, hi = alpha_T(s), alpha_max(s)
    if alpha in (lo, hi):
        return refuse("boundary value")
    if not lo < alpha < hi:
        return refuse(f"alpha outside ({lo}, {hi})")

    p = gcd(n - k, d)
    if g == 2 and k == n - 2 and d % 2 == 0:
        return TopologyReport(
            s, alpha, True, reason="excluded case g=2, k=n-2, d even",
            p=p, brill_noether=bn, exceptions=(EXCEPTION_G2_EVEN,),
        )

    strict = kbound_holds(s, strict=True)
    common = (
        "0 < k < n",
        "d > 0",
        "k < n + (d-n)/g" if strict else "k = n + (d-n)/g",
        "alpha_T < alpha < d/(n-k)",
    )
    if p == 1:
        common += ("gcd(n-k, d) = 1",)
    else:
        common += ("(n-k-1)(g-1) >= 2",)
    base = f"J^{d}" if n - k == 1 else f"M({n - k},{d})"

    pic_base = Named(f"Pic({base})")
    pic = Fact(Product((pic_base, FreeAbelian(1))) if strict else pic_base, common)
    pic0 = Fact(Named("J(C)"), common)
    pi1 = Fact(FreeAbelian(2 * g, label="H_1(C,Z)"), common)

    if k == n - 1:
        pi2 = Fact(_grassmannian_pi2(n - 1, d + g - 1), common + ("k = n-1",))
    elif p == 1:
        pi2 = Fact(Product((FreeAbelian(1), FreeAbelian(1))) if strict else FreeAbelian(1), common)
    elif strict:
        pi2 = Fact(Extension(FreeAbelian(1), Product((FreeAbelian(1), Cyclic(p)))), common)
    else:
        pi2 = Fact(Product((FreeAbelian(1), Cyclic(p))), common)

    fib = None
    if k == n - 1:
        fib = Fibration(
            base=f"J^{d}",
            fibre=f"Gr({n - 1},{d + g - 1})",
            hypotheses=("k = n-1", "d >= max(1, n-g)", "max(d-n, 0) < alpha < d"),
            note=(
                "Grassmann bundle of a Picard bundle; classically "
                f"G^{d + g - n - 1}_{d + 2 * g - 2}"
            ),
        )
    elif k == n - 2 and d % 2 == 1:
        walls = certified_walls_k_n_minus_2(s)
        if not walls or alpha > walls[-1].alpha:
            fib = Fibration(
                base=f"M(2,{d})",
                fibre=f"Gr({k},{s.N})",
                hypotheses=("k = n-2", "d odd", "alpha above every wall"),
            )

    conj = ()
    if conjectures and k <= n - 2:
        q = gcd(gcd(n, d), k)
        factors = (FreeAbelian(1), FreeAbelian(1)) if strict else (FreeAbelian(1),)
        if q > 1:
            factors += (Cyclic(q),)
        conj = (("pi2", Fact(Product(factors), common + ("0 < k <= n-2",), conjecture=True)),)

    return TopologyReport(
        s, alpha, True, p=p, pic=pic, pic0=pic0, pi1=pi1, pi2=pi2,
        fibration=fib, brill_noether=bn, conjectures=conj,
    )
