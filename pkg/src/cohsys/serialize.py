"""JSON encoding of the exact payload types.

Rationals become ``{"num": int, "den": int}``; polynomial coefficients stay
JSON integers while they fit in a signed 64-bit word and become decimal
strings beyond that, so no consumer ever sees a rounded float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .exact import IntPoly
from .moduli import SystemType, WallPattern
from .report import Fact, TopologyReport, render

INT64_MAX = 2**63 - 1

__all__ = [
    "coeff_from_json",
    "coeff_to_json",
    "pattern_from_json",
    "pattern_to_json",
    "poincare_payload",
    "poly_from_json",
    "poly_to_json",
    "rational_from_json",
    "rational_to_json",
    "report_to_json",
    "type_to_json",
    "walls_to_json",
]


def rational_to_json(r: Optional[Fraction]):
    if r is None:
        return None
    r = Fraction(r)
    return {"num": r.numerator, "den": r.denominator}


def rational_from_json(obj) -> Optional[Fraction]:
    if obj is None:
        return None
    return Fraction(int(obj["num"]), int(obj["den"]))


def coeff_to_json(c: int):
    return c if -INT64_MAX - 1 <= c <= INT64_MAX else str(c)


def coeff_from_json(c) -> int:
    return int(c)


def poly_to_json(p: IntPoly) -> list:
    return [coeff_to_json(c) for c in p.coeffs]


def poly_from_json(obj) -> IntPoly:
    return IntPoly(coeff_from_json(c) for c in obj)


def type_to_json(s: SystemType) -> dict:
    return {"n": s.n, "d": s.d, "k": s.k, "g": s.g}


def pattern_to_json(p: WallPattern) -> dict:
    return {
        "n1": p.n1, "d1": p.d1, "k1": p.k1,
        "n2": p.n2, "d2": p.d2, "k2": p.k2,
        "alpha": rational_to_json(p.alpha),
        "c12": p.c12, "c21": p.c21,
        "certified": p.certified,
    }


def pattern_from_json(obj) -> WallPattern:
    return WallPattern(
        obj["n1"], obj["d1"], obj["k1"], obj["n2"], obj["d2"], obj["k2"],
        rational_from_json(obj["alpha"]), obj["c12"], obj["c21"], obj["certified"],
    )


def walls_to_json(groups) -> list:
    """``groups`` is a list of ``(alpha, [WallPattern, ...])``."""
    return [
        {"alpha": rational_to_json(a), "patterns": [pattern_to_json(p) for p in ps]}
        for a, ps in groups
    ]


def poincare_payload(poly: IntPoly, beta: int) -> dict:
    return {
        "coeffs": poly_to_json(poly),
        "degree": poly.degree,
        "beta": beta,
        "palindrome": poly.is_palindromic(2 * beta),
    }


def _fact_to_json(f: Optional[Fact]):
    if f is None:
        return None
    out = {"group": render(f.value), "hypotheses": list(f.hypotheses)}
    if f.conjecture:
        out["conjecture"] = True
    return out


def report_to_json(r: TopologyReport) -> dict:
    out = {
        "type": type_to_json(r.s),
        "alpha": rational_to_json(r.alpha),
        "applicable": r.applicable,
        "reason": r.reason,
        "p": r.p,
        "exceptions": list(r.exceptions),
        "brill_noether": r.brill_noether,
    }
    for name in ("pic", "pic0", "pi1", "pi2"):
        f = getattr(r, name)
        out[name] = None if f is None else render(f.value)
        out[name + "_detail"] = _fact_to_json(f)
    if r.fibration is None:
        out["fibration"] = None
    else:
        fb = r.fibration
        out["fibration"] = {
            "base": fb.base, "fibre": fb.fibre,
            "hypotheses": list(fb.hypotheses), "note": fb.note,
        }
    if r.conjectures:
        out["conjectures"] = {name: _fact_to_json(f) for name, f in r.conjectures}
    return out
