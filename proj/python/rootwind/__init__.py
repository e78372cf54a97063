"""Exact counting and isolation of complex polynomial roots in rectangles.

Every quantity crossing the boundary is exact: rationals are
``fractions.Fraction`` (or "p/q" strings / ints), complex polynomial
coefficients are ``(re, im)`` pairs of rationals, ascending by power.
Floats are rejected everywhere — exactness is the whole contract.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ._core import DomainError
from . import _core

__all__ = [
    "DomainError",
    "cauchy_index",
    "count_all_roots",
    "count_roots",
    "degree_bounds",
    "isolate",
    "subresultants",
    "sufficient_radius",
    "winding",
]


def _rat(x) -> str:
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"exact rational required, got {type(x).__name__}: {x!r}")
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"exact rational required, got {type(x).__name__}: {x!r}")


def _coeff(c) -> list[str]:
    if isinstance(c, tuple) and len(c) == 2:
        return [_rat(c[0]), _rat(c[1])]
    if isinstance(c, complex):
        raise TypeError("complex floats are inexact; pass (re, im) rational pairs")
    return [_rat(c), "0"]


def _poly(coeffs) -> str:
    return json.dumps([_coeff(c) for c in coeffs])


def _unipoly(coeffs) -> str:
    return json.dumps([_rat(c) for c in coeffs])


def _rect(rect) -> list[str]:
    x0, x1, y0, y1 = rect
    return [_rat(x0), _rat(x1), _rat(y0), _rat(y1)]


def count_roots(coeffs, rect) -> int:
    """Roots strictly inside rect = (x0, x1, y0, y1), with multiplicity."""
    return _core.count_roots(_poly(coeffs), *_rect(rect))


def count_all_roots(coeffs) -> int:
    """All complex roots with multiplicity (equals the degree)."""
    return _core.count_all_roots(_poly(coeffs))


def sufficient_radius(coeffs) -> Fraction:
    """Half-width m such that [-m, m]^2 contains every root."""
    return Fraction(_core.sufficient_radius(_poly(coeffs)))


def winding(coeffs, rect) -> dict:
    """Boundary winding report; 'value' is a Fraction."""
    doc = json.loads(_core.winding(_poly(coeffs), *_rect(rect)))
    doc["value"] = Fraction(doc["value"])
    doc["edges"] = {k: Fraction(v) for k, v in doc["edges"].items()}
    return doc


def isolate(coeffs, rect, min_width) -> list[dict]:
    """Disjoint boxes around every interior root, sorted by corner."""
    boxes = json.loads(_core.isolate(_poly(coeffs), *_rect(rect), _rat(min_width)))
    for b in boxes:
        b["box"] = tuple(Fraction(v) for v in b["box"])
    return boxes


def cauchy_index(q, p, a, b) -> Fraction:
    """Cauchy index of Q/P over [a, b] (a half-integer Fraction)."""
    return Fraction(_core.cauchy_index(_unipoly(q), _unipoly(p), _rat(a), _rat(b)))


def subresultants(p, q, method: str = "structured") -> dict:
    """Subresultant sequence of (P, Q); coefficients come back as Fractions."""
    doc = json.loads(_core.subresultants(_unipoly(p), _unipoly(q), method))
    doc["sresp"] = [[Fraction(c) for c in poly] for poly in doc["sresp"]]
    doc["sres"] = [Fraction(c) for c in doc["sres"]]
    doc["tcoef"] = [Fraction(c) for c in doc["tcoef"]]
    return doc


def degree_bounds(d: int) -> dict:
    """Degree-function values; huge integers come back as ints."""
    doc = json.loads(_core.degree_bounds(d))
    doc["beta"] = int(doc["beta"])
    doc["gamma"] = int(doc["gamma"])
    return doc
