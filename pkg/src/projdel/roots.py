"""Real root isolation and projective roots with multiplicities.

Everything is exact.  Real roots of a nonzero univariate polynomial are
isolated one squarefree factor at a time by Descartes' rule of signs and
bisection over the rationals.  A root is stored as an exact point when it
is rational, otherwise as an open isolating interval whose endpoints are
not roots.  The root at infinity gets multiplicity ``d - deg(u)`` with
respect to the reference degree ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import DegreeBoundError, ZeroPolynomialError
from .poly import UniPoly, as_rat, format_rat, univariate_gcd
from .projective_line import NumProjPoint, ProjPoint, embed_circle, from_affine, infinity

__all__ = [
    "IsolatedRoot",
    "ProjRootSet",
    "squarefree_decomposition",
    "isolate_real_roots",
    "projective_roots",
    "refine",
    "sign_at_root",
    "compare_root",
    "compare_roots",
    "count_roots_in",
]

# Rational-root detection refines an interval to width 1/(2 Q^2), Q being the
# leading coefficient of the integer primitive factor.  Beyond this many bits
# of Q the root is kept as an interval.
MAX_RATIONAL_DETECTION_BITS = 256


@dataclass(frozen=True)
class IsolatedRoot:
    """A real root of the squarefree ``factor``.

    If ``lo == hi`` the root is that rational number.  Otherwise it is the
    only root of ``factor`` in the open interval ``(lo, hi)``, and ``factor``
    changes sign between the endpoints.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: UniPoly = field(compare=False)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("root is irrational; use an interval")
        return self.lo

    def approx(self) -> float:
        if self.is_exact:
            return float(self.lo)
        r = refine(self, Fraction(1, 1 << 52) * max(1, abs(self.lo), abs(self.hi)))
        return float((r.lo + r.hi) / 2)

    def to_proj(self) -> ProjPoint:
        return from_affine(self.value)

    def to_json(self) -> dict:
        if self.is_exact:
            return {"point": format_rat(self.lo), "multiplicity": self.multiplicity}
        return {
            "interval": [format_rat(self.lo), format_rat(self.hi)],
            "multiplicity": self.multiplicity,
        }

    def __str__(self):
        if self.is_exact:
            return format_rat(self.lo)
        return f"({format_rat(self.lo)}, {format_rat(self.hi)})"


@dataclass(frozen=True)
class ProjRootSet:
    reference_degree: int
    real_roots: tuple
    infinity_multiplicity: int

    def __post_init__(self):
        object.__setattr__(self, "real_roots", tuple(self.real_roots))
        if self.infinity_multiplicity < 0:
            raise ValueError("negative multiplicity at infinity")
        if self.total_multiplicity() > self.reference_degree:
            raise ValueError("multiplicities exceed the reference degree")

    def __len__(self):
        return len(self.real_roots) + (1 if self.infinity_multiplicity else 0)

    def entries(self) -> Iterator[tuple]:
        """``(root, multiplicity)`` pairs; the root at infinity is ``None``, last."""
        for r in self.real_roots:
            yield r, r.multiplicity
        if self.infinity_multiplicity:
            yield None, self.infinity_multiplicity

    def multiplicities(self) -> list[int]:
        return [m for _, m in self.entries()]

    def multiset(self) -> tuple:
        return tuple(sorted(self.multiplicities()))

    def real_multiset(self) -> tuple:
        return tuple(sorted(r.multiplicity for r in self.real_roots))

    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.real_roots) + self.infinity_multiplicity

    def exact_points(self) -> dict:
        """``{ProjPoint: multiplicity}``; requires every real root to be rational."""
        out = {r.to_proj(): r.multiplicity for r in self.real_roots}
        if self.infinity_multiplicity:
            out[infinity()] = self.infinity_multiplicity
        return out

    def embedded(self) -> list[tuple]:
        """``(NumProjPoint, multiplicity, root)`` for every projective root."""
        out = []
        for r, m in self.entries():
            if r is None:
                out.append((embed_circle(infinity()), m, None))
            elif r.is_exact:
                out.append((embed_circle(from_affine(r.lo)), m, r))
            else:
                out.append((_embed_interval_root(r), m, r))
        return out

    def to_json(self) -> list:
        out = [r.to_json() for r in self.real_roots]
        if self.infinity_multiplicity:
            out.append({"infinity": True, "multiplicity": self.infinity_multiplicity})
        return out


def _embed_interval_root(r: IsolatedRoot) -> NumProjPoint:
    # psi has Lipschitz constant 1 on affine points, so 2^-40 is plenty
    r = refine(r, Fraction(1, 1 << 40))
    return embed_circle(from_affine((r.lo + r.hi) / 2))


# ---------------------------------------------------------------------------
# squarefree decomposition
# ---------------------------------------------------------------------------


def squarefree_decomposition(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm.

    Returns monic, pairwise coprime, squarefree factors with their
    multiplicities, in increasing multiplicity; the product of
    ``factor**mult`` equals ``u`` up to the leading coefficient.

    >>> squarefree_decomposition(UniPoly([-1, -1, 1, 1]))  # (x+1)^2 (x-1)
    [(UniPoly(x - 1), 1), (UniPoly(x + 1), 2)]
    """
    if u.is_zero():
        raise ZeroPolynomialError("squarefree decomposition of the zero polynomial")
    if len(u.coeffs) == 1:
        return []
    f = u.monic()
    df = f.derivative()
    a = univariate_gcd(f, df)
    b = f.exquo(a)
    c = df.exquo(a)
    d = c - b.derivative()
    out = []
    i = 1
    while len(b.coeffs) > 1:
        a = univariate_gcd(b, d)
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        if len(a.coeffs) > 1:
            out.append((a, i))
        i += 1
    return out


# ---------------------------------------------------------------------------
# isolation
# ---------------------------------------------------------------------------


def _cauchy_bound(f: UniPoly) -> Fraction:
    lc = abs(f.coeffs[-1])
    m = max((abs(a) for a in f.coeffs[:-1]), default=Fraction(0))
    b = 1 + m / lc
    # round up to an integer so interval endpoints stay simple
    return Fraction(-((-b.numerator) // b.denominator))


def _descartes_count(f: UniPoly, a: Fraction, b: Fraction) -> int:
    """Sign variations bounding the number of roots of ``f`` in ``(a, b)``."""
    g = f.taylor_shift(a).scale_var(b - a).reverse(len(f.coeffs) - 1).taylor_shift(1)
    return g.sign_variations()


def count_roots_in(f: UniPoly, a, b) -> int:
    """Exact number of distinct real roots of ``f`` in the open interval ``(a, b)``."""
    a, b = as_rat(a), as_rat(b)
    if f.is_zero():
        raise ZeroPolynomialError("root count of the zero polynomial")
    total = 0
    for g, _ in squarefree_decomposition(f):
        total += len(_isolate_squarefree(g, a, b))
    return total


def _isolate_squarefree(f: UniPoly, lo: Fraction, hi: Fraction) -> list[tuple]:
    """Disjoint isolating data for the roots of squarefree ``f`` in ``(lo, hi)``.

    Returns ``(a, b)`` pairs; ``a == b`` marks an exact root.
    """
    if len(f.coeffs) == 2:
        r = -f.coeffs[0] / f.coeffs[1]
        return [(r, r)] if lo < r < hi else []
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        v = _descartes_count(f, a, b)
        if v == 0:
            continue
        if v == 1:
            out.append(_clear_endpoints(f, a, b))
            continue
        m = (a + b) / 2
        if not f(m):
            out.append((m, m))
        stack.append((a, m))
        stack.append((m, b))
    out.sort()
    return out


def _clear_endpoints(f: UniPoly, a: Fraction, b: Fraction):
    """Shrink ``(a, b)``, holding one root, until neither endpoint is a root.

    Endpoints are roots when an earlier midpoint was an exact root; bisection
    needs a sign change between the endpoints.
    """
    k = 1
    while not f(a):
        c = a + (b - a) / (1 << k)
        if f(c) and _descartes_count(f, c, b) == 1:
            a = c
        k += 1
    k = 1
    while not f(b):
        c = b - (b - a) / (1 << k)
        if f(c) and _descartes_count(f, a, c) == 1:
            b = c
        k += 1
    return a, b


def _bisect_once(f: UniPoly, a: Fraction, b: Fraction):
    m = (a + b) / 2
    fm = f(m)
    if not fm:
        return m, m
    if (f(a) > 0) == (fm > 0):
        return m, b
    return a, m


def _rational_root(f: UniPoly, a: Fraction, b: Fraction):
    """Find a rational root of squarefree ``f`` in ``(a, b)``, else refine.

    Returns ``(a, b)`` with ``a == b`` when the root is rational.
    """
    ints = f.primitive_integer()
    Q = abs(ints[-1])
    if Q.bit_length() > MAX_RATIONAL_DETECTION_BITS:
        return a, b
    target = Fraction(1, 2 * Q * Q)
    while True:
        cand = ((a + b) / 2).limit_denominator(Q)
        if a < cand < b and not f(cand):
            return cand, cand
        if b - a < target:
            return a, b
        a, b = _bisect_once(f, a, b)
        if a == b:
            return a, b


def _separate(items: list) -> list:
    """Refine intervals (from coprime factors) until they are pairwise disjoint."""
    items.sort(key=lambda t: (t[0], t[1]))
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            a1, b1, f1, m1 = items[i]
            a2, b2, f2, m2 = items[i + 1]
            if b1 > a2 or (a1 == b1 and a2 == b2 and a1 == a2):
                if a1 == b1 and a2 == b2:
                    raise AssertionError("coprime factors share a root")
                if a1 != b1:
                    a1, b1 = _bisect_once(f1, a1, b1)
                if a2 != b2:
                    a2, b2 = _bisect_once(f2, a2, b2)
                items[i] = (a1, b1, f1, m1)
                items[i + 1] = (a2, b2, f2, m2)
                changed = True
        items.sort(key=lambda t: (t[0], t[1]))
    return items


def isolate_real_roots(u: UniPoly) -> list[IsolatedRoot]:
    """Isolate all real roots of ``u``, in increasing order, with multiplicities."""
    if u.is_zero():
        raise ZeroPolynomialError("root isolation of the zero polynomial")
    items = []
    for f, mult in squarefree_decomposition(u):
        B = _cauchy_bound(f)
        for a, b in _isolate_squarefree(f, -B, B):
            if a != b:
                a, b = _rational_root(f, a, b)
            items.append((a, b, f, mult))
    items = _separate(items)
    return [IsolatedRoot(a, b, m, f) for a, b, f, m in items]


def refine(root: IsolatedRoot, eps) -> IsolatedRoot:
    """Bisect until the interval is at most ``eps`` wide (nested in the original)."""
    eps = as_rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    a, b, f = root.lo, root.hi, root.factor
    while b - a > eps:
        a, b = _bisect_once(f, a, b)
    return IsolatedRoot(a, b, root.multiplicity, f)


def compare_root(root: IsolatedRoot, s) -> int:
    """Sign of ``root - s``, decided exactly."""
    s = as_rat(s)
    a, b, f = root.lo, root.hi, root.factor
    while True:
        if a == b:
            return (a > s) - (a < s)
        if s <= a:
            return 1
        if s >= b:
            return -1
        if not f(s):
            return 0
        a, b = _bisect_once(f, a, b)


def compare_roots(r1: IsolatedRoot, r2: IsolatedRoot) -> int:
    """Sign of ``r1 - r2``, decided exactly (equal algebraic numbers give 0)."""
    if r1.is_exact:
        return -compare_root(r2, r1.lo)
    if r2.is_exact:
        return compare_root(r1, r2.lo)
    a1, b1, f1 = r1.lo, r1.hi, r1.factor
    a2, b2, f2 = r2.lo, r2.hi, r2.factor
    g = univariate_gcd(f1, f2)
    while True:
        if b1 <= a2:
            return -1
        if b2 <= a1:
            return 1
        # overlapping: a common root in the overlap is the root of both
        lo, hi = max(a1, a2), min(b1, b2)
        if len(g.coeffs) > 1 and lo < hi and count_roots_in(g, lo, hi):
            return 0
        a1, b1 = _bisect_once(f1, a1, b1)
        a2, b2 = _bisect_once(f2, a2, b2)
        if a1 == b1 or a2 == b2:
            return compare_roots(
                IsolatedRoot(a1, b1, r1.multiplicity, f1),
                IsolatedRoot(a2, b2, r2.multiplicity, f2),
            )


def sign_at_root(g: UniPoly, root: IsolatedRoot) -> int:
    """Exact sign of ``g`` at the (possibly irrational) ``root``."""
    if g.is_zero():
        return 0
    if root.is_exact:
        return g.sign_at(root.lo)
    f = root.factor
    h = univariate_gcd(f, g)
    if len(h.coeffs) > 1 and h.sign_at(root.lo) * h.sign_at(root.hi) < 0:
        return 0
    a, b = root.lo, root.hi
    while _descartes_count(g, a, b) > 0:
        a, b = _bisect_once(f, a, b)
        if a == b:
            return g.sign_at(a)
    return g.sign_at((a + b) / 2)


# ---------------------------------------------------------------------------
# projective roots
# ---------------------------------------------------------------------------


def projective_roots(u: UniPoly, d: int) -> ProjRootSet:
    """Projective roots of ``u`` with respect to degree ``d``."""
    if u.is_zero():
        raise ZeroPolynomialError("the zero polynomial has every point as a root (nullified)")
    deg = len(u.coeffs) - 1
    if deg > d:
        raise DegreeBoundError(f"degree {deg} exceeds the reference degree {d}")
    return ProjRootSet(d, isolate_real_roots(u), d - deg)
