"""Projective roots above base points and exact checks over finite base sets.

Over a finite set of base points every function is continuous, so (projective)
delineability reduces to the root multiplicities: ``P`` is delineable on a
finite ``S`` iff the multiset of real-root multiplicities is the same above
every point, and projectively delineable iff the same holds for projective
roots (the root at infinity included).  A multiplicity-preserving bijection
between root sets exists exactly when the multisets agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .binary_forms import Matrix2, homogenize, moebius_transform
from .errors import NullifiedError
from .poly import MultiPoly, as_rat
from .roots import ProjRootSet, projective_roots

__all__ = [
    "projective_roots_above",
    "FiniteSetVerdict",
    "check_finite_set",
    "Desingularization",
    "candidate_directions",
    "desingularize_at",
]


def projective_roots_above(P: MultiPoly, x0: Sequence) -> ProjRootSet:
    """Projective roots of ``E_x0(P)`` with respect to the global ``deg_{x_n}(P)``.

    The reference degree is never the degree of the evaluated polynomial:
    above ``x1 = 0`` the polynomial ``x1*x2 - 1`` has the root at infinity.
    """
    x0 = tuple(as_rat(v) for v in x0)
    d = P.degree_in_last()
    u = P.evaluate_partial(x0)
    if u.is_zero():
        raise NullifiedError(f"{P} is nullified above {list(map(str, x0))}", point=x0)
    return projective_roots(u, d)


@dataclass(frozen=True)
class FiniteSetVerdict:
    delineable: bool
    projectively_delineable: bool
    real_multisets: tuple
    projective_multisets: tuple

    def to_json(self) -> dict:
        return {
            "delineable": self.delineable,
            "projectively_delineable": self.projectively_delineable,
            "real_multisets": [list(m) for m in self.real_multisets],
            "projective_multisets": [list(m) for m in self.projective_multisets],
        }


def check_finite_set(P: MultiPoly, points: Sequence[Sequence]) -> FiniteSetVerdict:
    if not points:
        raise ValueError("need at least one base point")
    root_sets = [projective_roots_above(P, x) for x in points]
    real = tuple(r.real_multiset() for r in root_sets)
    proj = tuple(r.multiset() for r in root_sets)
    return FiniteSetVerdict(
        delineable=len(set(real)) == 1,
        projectively_delineable=len(set(proj)) == 1,
        real_multisets=real,
        projective_multisets=proj,
    )


@dataclass(frozen=True)
class Desingularization:
    """A unimodular ``matrix`` removing the root at infinity above ``point``.

    ``neighborhood`` is the base polynomial ``H^d(P)(x, (a11, a21))``; the
    transformed polynomial has no root at infinity wherever it is nonzero.
    """

    matrix: Matrix2
    neighborhood: MultiPoly
    transformed: MultiPoly
    point: tuple


def candidate_directions() -> Iterator[tuple[int, int]]:
    """``(1,0), (0,1), (1,1), (1,-1), (1,2), (1,-2), ...``: pairwise distinct points."""
    yield (1, 0)
    yield (0, 1)
    for k in itertools.count(1):
        yield (1, k)
        yield (1, -k)


def _complete(a11: Fraction, a21: Fraction) -> Matrix2:
    if a11:
        return Matrix2(a11, 0, a21, 1 / a11)
    return Matrix2(0, -1 / a21, a21, 0)


def desingularize_at(P: MultiPoly, s: Sequence) -> Desingularization:
    """Choose a unimodular ``A`` with ``H^d(P)(s, (a11, a21)) != 0``.

    ``E_s(P)`` has at most ``d`` projective roots, so among the first ``d + 1``
    candidate directions one is not a root; the search is deterministic.
    """
    s = tuple(as_rat(v) for v in s)
    d = P.degree_in_last()
    if P.evaluate_partial(s).is_zero():
        raise NullifiedError(f"{P} is nullified above {list(map(str, s))}", point=s)
    H = homogenize(P, d)
    for a11, a21 in candidate_directions():
        lead = H.at_direction(a11, a21)
        if lead.evaluate(s):
            A = _complete(Fraction(a11), Fraction(a21))
            return Desingularization(A, lead, moebius_transform(P, A, d), s)
    raise AssertionError("unreachable: finitely many projective roots")
