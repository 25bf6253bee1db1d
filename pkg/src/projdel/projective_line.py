"""Points of the real projective line and their embedding in a circle.

Exact points are stored in canonical form: ``(x/y : 1)`` when ``y != 0``
and ``(1 : 0)`` otherwise, so equality is field comparison.  For numeric
work every point is mapped to the circle of radius 1/2 centred at
``(0, 1/2)`` by ``psi(x:y) = y/(x^2+y^2) * (x, y)``; that circle is compact,
so the point at infinity needs no special casing when matching roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .binary_forms import Matrix2
from .errors import ParseError
from .poly import as_rat, format_rat, parse_rat

__all__ = [
    "ProjPoint",
    "NumProjPoint",
    "from_affine",
    "infinity",
    "moebius_point",
    "embed_circle",
    "embed_circle_float",
    "chordal_distance",
]


@dataclass(frozen=True)
class ProjPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        x, y = as_rat(self.x), as_rat(self.y)
        if not x and not y:
            raise ValueError("(0:0) is not a point of the projective line")
        if y:
            x, y = x / y, Fraction(1)
        else:
            x = Fraction(1)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def is_infinity(self) -> bool:
        return not self.y

    def to_affine(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("the point at infinity has no affine coordinate")
        return self.x

    def __str__(self):
        return f"({format_rat(self.x)}:{format_rat(self.y)})"

    def to_json(self) -> dict:
        return {"x": format_rat(self.x), "y": format_rat(self.y)}

    @classmethod
    def from_json(cls, data: Mapping) -> "ProjPoint":
        try:
            return cls(parse_rat(str(data["x"])), parse_rat(str(data["y"])))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed projective point JSON: {exc}") from exc


@dataclass(frozen=True)
class NumProjPoint:
    """Image of a projective point on the circle ``u^2 + v^2 = v``."""

    u: float
    v: float


def from_affine(x) -> ProjPoint:
    return ProjPoint(as_rat(x), Fraction(1))


def infinity() -> ProjPoint:
    return ProjPoint(Fraction(1), Fraction(0))


def moebius_point(A: Matrix2, p: ProjPoint) -> ProjPoint:
    """``(x:y) -> pi(A (x, y)^T)``."""
    return ProjPoint(*A.apply(p.x, p.y))


def embed_circle_float(x: float, y: float) -> NumProjPoint:
    r2 = x * x + y * y
    if r2 == 0.0:
        raise ValueError("(0:0) is not a point of the projective line")
    s = y / r2
    return NumProjPoint(s * x, s * y)


def embed_circle(p: ProjPoint) -> NumProjPoint:
    if p.is_infinity:
        return NumProjPoint(0.0, 0.0)
    x = p.x
    # Exact arithmetic first; large affine coordinates would overflow x*x in floats.
    r2 = x * x + 1
    return NumProjPoint(float(x / r2), float(1 / r2))


def chordal_distance(p: NumProjPoint, q: NumProjPoint) -> float:
    return math.hypot(p.u - q.u, p.v - q.v)
