"""Closed-form Poincare polynomials for ranks 3 and 4, used as oracles.

These are transcribed directly from the displayed rational expressions and
share nothing with :mod:`cohsys.poincare` except the polynomial type, so
agreement between the two is a genuine cross-check.
"""

from __future__ import annotations

from .errors import OutOfRange, ParityError
from .exact import IntPoly

__all__ = ["closed_form_n3", "closed_form_n4"]

_1 = IntPoly.one()


def _t(e: int) -> IntPoly:
    return IntPoly.t(e)


def _m2_numerator(g: int) -> IntPoly:
    # (1+t)^{2g} ((1+t^3)^{2g} - t^{2g} (1+t)^{2g})
    a = (_1 + _t(1)) ** (2 * g)
    return a * ((_1 + _t(3)) ** (2 * g) - _t(2 * g) * a)


def _check(d: int, g: int) -> None:
    if d % 2 == 0:
        raise ParityError(f"closed forms need odd d, got d={d}")
    if d < 1 or g < 2:
        raise OutOfRange(f"need d >= 1 and g >= 2, got d={d}, g={g}")


def closed_form_n3(d: int, g: int) -> IntPoly:
    """Rank 3, two sections: every chamber equals the last one."""
    _check(d, g)
    num = _m2_numerator(g) * (_1 - _t(2 * (d + 2 * g - 2)))
    den = (_1 - _t(2)) * (_1 - _t(2)) * (_1 - _t(4))
    return num // den


def closed_form_n4(d: int, g: int, chamber: str) -> IntPoly:
    """Rank 4, two sections, in the ``"high"`` or ``"low"`` chamber.

    The low chamber lies below the single wall at (d-2)/2 and needs d >= 3.
    """
    _check(d, g)
    if chamber not in ("high", "low"):
        raise ValueError(f"chamber must be 'high' or 'low', not {chamber!r}")
    num = _m2_numerator(g) * (_1 - _t(2 * (d + 2 * g - 3))) * (_1 - _t(2 * (d + 2 * g - 2)))
    den = (_1 - _t(2)) ** 2 * (_1 - _t(4)) ** 2
    high = num // den
    if chamber == "high":
        return high
    if d < 3:
        raise OutOfRange(f"no low chamber for d={d}")
    corr_num = (
        (_t(2 * g) - _t(6 * g + 2 * d - 10))
        * (_1 - _t(d - 3 + 2 * g))
        * (_1 - _t(d - 1 + 2 * g))
        * (_1 + _t(1)) ** (4 * g)
    )
    corr_den = (_1 - _t(2)) ** 2 * (_1 - _t(4))
    return high + corr_num // corr_den
