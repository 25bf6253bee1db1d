"""Classical and projective projection sets, and the one-dimensional cell demo.

The classical set holds leading coefficients, discriminants and pairwise
resultants; the projective set drops the leading coefficients.  Generators
are stored as primitive parts, so polynomials equal up to a rational factor
merge into one generator carrying every provenance tag.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .elimination import discriminant_fixed, resultant_fixed
from .errors import DimensionError, PreconditionError, ZeroPolynomialError
from .poly import MultiPoly, as_rat, format_rat
from .roots import IsolatedRoot, compare_root, compare_roots, isolate_real_roots

__all__ = [
    "Generator",
    "ProjectionSet",
    "project_classical",
    "project_projective",
    "project",
    "CellBound",
    "Cell",
    "cell_bounds_1d",
]


@dataclass(frozen=True)
class Generator:
    poly: MultiPoly
    provenance: tuple

    def kinds(self) -> set:
        return {p.split("(", 1)[0] for p in self.provenance}

    def to_json(self) -> dict:
        return {"provenance": ", ".join(self.provenance), "poly": self.poly.to_json()}


@dataclass(frozen=True)
class ProjectionSet:
    mode: str
    generators: tuple

    def __len__(self):
        return len(self.generators)

    @property
    def polys(self) -> frozenset:
        return frozenset(g.poly for g in self.generators)

    def to_json(self) -> dict:
        return {"mode": self.mode, "generators": [g.to_json() for g in self.generators]}


def _validate(F: Sequence[MultiPoly]) -> tuple:
    F = list(F)
    if not F:
        raise PreconditionError("projection of an empty set")
    vars = F[0].vars
    for P in F:
        if P.vars != vars:
            raise DimensionError(f"variable mismatch: {P.vars} vs {vars}")
        if P.is_zero():
            raise ZeroPolynomialError("projection of the zero polynomial")
        if P.degree_in_last() < 1:
            raise PreconditionError(f"{P} does not involve {vars[-1]}")
    if len(vars) < 2:
        raise DimensionError("projection needs at least two variables")
    return vars


def project(F: Sequence[MultiPoly], mode: str, names: Sequence[str] | None = None) -> ProjectionSet:
    if mode not in ("classical", "projective"):
        raise ValueError(f"unknown projection mode {mode!r}")
    F = list(F)
    _validate(F)
    names = list(names) if names is not None else [f"P{i + 1}" for i in range(len(F))]
    polys: dict = {}  # primitive part -> provenance list, insertion ordered

    def add(poly: MultiPoly, tag: str):
        if poly.is_constant():
            return
        _, prim = poly.primitive()
        polys.setdefault(prim, []).append(tag)

    for P, name in zip(F, names):
        d = P.degree_in_last()
        if mode == "classical":
            add(P.coefficient_in_last(d), f"lc({name})")
        if d >= 2:
            add(discriminant_fixed(P, d), f"disc({name})")
    for (P, a), (Q, b) in itertools.combinations(zip(F, names), 2):
        add(resultant_fixed(P, Q, P.degree_in_last(), Q.degree_in_last()), f"res({a},{b})")
    gens = tuple(Generator(p, tuple(tags)) for p, tags in polys.items())
    return ProjectionSet(mode, gens)


def project_classical(F: Sequence[MultiPoly], names: Sequence[str] | None = None) -> ProjectionSet:
    return project(F, "classical", names)


def project_projective(F: Sequence[MultiPoly], names: Sequence[str] | None = None) -> ProjectionSet:
    return project(F, "projective", names)


# ---------------------------------------------------------------------------
# cells over the line
# ---------------------------------------------------------------------------

CellBound = Fraction | IsolatedRoot | None


def _bound_json(b: CellBound, side: str):
    if b is None:
        return side
    if isinstance(b, Fraction):
        return format_rat(b)
    if b.is_exact:
        return format_rat(b.lo)
    return {
        "root_of": b.factor.to_json(),
        "interval": [format_rat(b.lo), format_rat(b.hi)],
    }


@dataclass(frozen=True)
class Cell:
    """Open interval ``(lower, upper)``; ``None`` means an infinite end."""

    mode: str
    sample: Fraction
    lower: CellBound
    upper: CellBound

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "sample": format_rat(self.sample),
            "interval": [_bound_json(self.lower, "-inf"), _bound_json(self.upper, "inf")],
        }

    def endpoint_values(self) -> tuple:
        """Exact endpoints where rational, floats otherwise, ``-inf``/``inf`` at infinity."""
        def val(b, inf):
            if b is None:
                return inf
            if isinstance(b, Fraction):
                return b
            return b.lo if b.is_exact else b.approx()
        return val(self.lower, float("-inf")), val(self.upper, float("inf"))


def cell_bounds_1d(F: Sequence[MultiPoly], s, mode: str = "classical") -> Cell:
    """Maximal open interval around ``s`` free of real roots of the projection set."""
    F = list(F)
    vars = _validate(F)
    if len(vars) != 2:
        raise DimensionError("cell_bounds_1d needs polynomials in exactly two variables")
    s = as_rat(s)
    lower = upper = None
    for g in project(F, mode).generators:
        u = g.poly.to_unipoly()
        for r in isolate_real_roots(u):
            c = compare_root(r, s)
            if c == 0:
                raise PreconditionError(
                    f"sample {format_rat(s)} is a root of {g.poly} ({', '.join(g.provenance)})"
                )
            if c < 0 and (lower is None or compare_roots(r, lower) > 0):
                lower = r
            if c > 0 and (upper is None or compare_roots(r, upper) < 0):
                upper = r
    lower = lower.lo if lower is not None and lower.is_exact else lower
    upper = upper.lo if upper is not None and upper.is_exact else upper
    return Cell(mode, s, lower, upper)
