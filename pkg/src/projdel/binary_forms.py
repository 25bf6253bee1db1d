"""Binary forms in ``(x_n, y)``, homogenization, pull-back and GL(2) actions.

The reference degree ``d`` is always an explicit argument.  Pulling back a
degree-3 form and homogenizing the result with respect to degree 2 does not
give the original form back, so nothing here infers ``d`` from an operand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DegreeBoundError, DimensionError, ParseError
from .poly import MultiPoly, as_rat, format_rat, parse_rat

__all__ = [
    "Matrix2",
    "BinaryForm",
    "homogenize",
    "pullback",
    "compose_right",
    "moebius_transform",
    "pullback_wrt",
    "homogenize_wrt",
]


@dataclass(frozen=True)
class Matrix2:
    """Invertible 2x2 rational matrix ``[[a11, a12], [a21, a22]]``."""

    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if not self.det:
            raise ValueError(f"singular matrix {self.rows()}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix2":
        (a11, a12), (a21, a22) = rows
        return cls(a11, a12, a21, a22)

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, k) -> "Matrix2":
        return cls(k, 0, 0, k)

    @property
    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self) -> tuple:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "Matrix2":
        d = self.det
        return Matrix2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def apply(self, x, y):
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def to_json(self) -> dict:
        return {"a": [[format_rat(v) for v in row] for row in self.rows()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Matrix2":
        try:
            rows = [[parse_rat(str(v)) for v in row] for row in data["a"]]
            if len(rows) != 2 or any(len(r) != 2 for r in rows):
                raise ParseError("matrix must be 2x2")
            return cls.from_rows(rows)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed matrix JSON: {exc}") from exc
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from exc


class BinaryForm:
    """Degree-``d`` form ``sum_k coeffs[k] * x_n**k * y**(d-k)``.

    ``coeffs`` are polynomials in the base variables ``x_1..x_{n-1}``;
    ``var`` names ``x_n``.
    """

    __slots__ = ("degree", "coeffs", "var", "y")

    def __init__(self, degree: int, coeffs: Sequence[MultiPoly], var: str = "x", y: str = "y"):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        coeffs = tuple(coeffs)
        if len(coeffs) != degree + 1:
            raise DimensionError(
                f"a degree-{degree} form needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        base = coeffs[0].vars
        if any(c.vars != base for c in coeffs):
            raise DimensionError("coefficients must share base variables")
        if var in base or y in base or var == y:
            raise ValueError("form variable names clash with base variables")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def base_vars(self) -> tuple:
        return self.coeffs[0].vars

    @property
    def vars(self) -> tuple:
        """Variables of the pulled-back polynomial (base variables then ``x_n``)."""
        return self.base_vars + (self.var,)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.degree, self.coeffs, self.var) == (other.degree, other.coeffs, other.var)

    def __hash__(self):
        return hash((self.degree, self.coeffs, self.var))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(self.degree, [a.scale(c) for a in self.coeffs], self.var, self.y)

    def at_direction(self, a, b) -> MultiPoly:
        """Evaluate at ``(x_n, y) = (a, b)``, leaving the base variables symbolic."""
        a, b = as_rat(a), as_rat(b)
        d = self.degree
        acc = MultiPoly.zero(self.base_vars)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + c.scale(a ** k * b ** (d - k))
        return acc

    def to_multipoly(self) -> MultiPoly:
        """Flat polynomial in ``base_vars + (x_n, y)``."""
        d = self.degree
        terms = {}
        for k, c in enumerate(self.coeffs):
            for e, a in c.terms.items():
                terms[e + (k, d - k)] = a
        return MultiPoly(self.base_vars + (self.var, self.y), terms)

    @classmethod
    def from_multipoly(cls, g: MultiPoly, degree: int) -> "BinaryForm":
        """Inverse of :meth:`to_multipoly`; ``g``'s last two variables are ``(x_n, y)``."""
        if g.nvars < 2:
            raise DimensionError("need at least the two form variables")
        base = g.vars[:-2]
        coeffs = [dict() for _ in range(degree + 1)]
        for e, a in g.terms.items():
            k, j = e[-2], e[-1]
            if k + j != degree:
                raise ValueError(f"{g} is not homogeneous of degree {degree} in the form variables")
            coeffs[k][e[:-2]] = a
        return cls(degree, [MultiPoly(base, c) for c in coeffs], g.vars[-2], g.vars[-1])

    def __repr__(self):
        return f"BinaryForm({self})"

    def __str__(self):
        return str(self.to_multipoly())

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "var": self.var,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BinaryForm":
        try:
            coeffs = [MultiPoly.from_json(c) for c in data["coeffs"]]
            return cls(int(data["degree"]), coeffs, str(data.get("var", "x")))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed binary form JSON: {exc}") from exc
        except (ValueError, DimensionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from exc


def _check_degree(P: MultiPoly, d: int):
    if d < 0:
        raise DegreeBoundError("reference degree must be nonnegative")
    if not P.is_zero() and P.degree_in_last() > d:
        raise DegreeBoundError(
            f"degree {P.degree_in_last()} in {P.vars[-1]} exceeds reference degree {d}"
        )


def homogenize(P: MultiPoly, d: int) -> BinaryForm:
    """Homogenize ``P`` in its last variable with respect to degree ``d``."""
    _check_degree(P, d)
    return BinaryForm(d, P.coefficients_in_last(d), P.vars[-1])


def pullback(g: BinaryForm) -> MultiPoly:
    """Set ``y = 1``."""
    return MultiPoly.from_coefficients_in_last(g.coeffs, g.vars)


def compose_right(g: BinaryForm, A: Matrix2) -> BinaryForm:
    """The form ``(x_n, y) -> g(A (x_n, y)^T)``.

    Computed by substitution in the flat representation; the transform
    :func:`moebius_transform` uses a separate binomial expansion, so the two
    can be checked against each other.
    """
    flat = g.to_multipoly()
    vars = flat.vars
    xn = MultiPoly.variable(vars, g.var)
    y = MultiPoly.variable(vars, g.y)
    subs = [MultiPoly.variable(vars, v) for v in g.base_vars]
    subs.append(xn.scale(A.a11) + y.scale(A.a12))
    subs.append(xn.scale(A.a21) + y.scale(A.a22))
    return BinaryForm.from_multipoly(flat.compose(subs), g.degree)


def _linear_power_coeffs(a: Fraction, b: Fraction, k: int) -> list:
    """Coefficients of ``(a t + b)**k`` in increasing powers of ``t``."""
    return [math.comb(k, j) * a ** j * b ** (k - j) for j in range(k + 1)]


def moebius_transform(P: MultiPoly, A: Matrix2, d: int) -> MultiPoly:
    """``sum_k c_k (a11 x_n + a12)^k (a21 x_n + a22)^(d-k)``.

    >>> P = MultiPoly.parse("(x1*x2 - 1)*(x2 + x1^3)", ["x1", "x2"])
    >>> Q = moebius_transform(P, Matrix2(1, 0, 1, 1), 2)
    >>> Q == MultiPoly.parse("((x1-1)*x2 - 1)*((1+x1^3)*x2 + x1^3)", ["x1", "x2"])
    True
    """
    _check_degree(P, d)
    coeffs = P.coefficients_in_last(d)
    base = P.vars[:-1]
    out = [MultiPoly.zero(base) for _ in range(d + 1)]
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        up = _linear_power_coeffs(A.a11, A.a12, k)
        down = _linear_power_coeffs(A.a21, A.a22, d - k)
        weights = [Fraction(0)] * (d + 1)
        for i, u in enumerate(up):
            if u:
                for j, v in enumerate(down):
                    weights[i + j] += u * v
        for j, w in enumerate(weights):
            if w:
                out[j] = out[j] + c.scale(w)
    return MultiPoly.from_coefficients_in_last(out, P.vars)


def pullback_wrt(g: BinaryForm, A: Matrix2) -> MultiPoly:
    """Pull back along the line ``x -> A (x, 1)^T``."""
    return pullback(compose_right(g, A))


def homogenize_wrt(P: MultiPoly, A: Matrix2, d: int) -> BinaryForm:
    """Inverse of :func:`pullback_wrt` for the same ``A`` and ``d``."""
    return compose_right(homogenize(P, d), A.inverse())
