"""Shared generators and the independent sympy oracle."""

import random
from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from projdel import Matrix2, MultiPoly


def to_sympy(P: MultiPoly):
    syms = sp.symbols(P.vars)
    if len(P.vars) == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    expr = sp.Integer(0)
    for e, a in P.terms.items():
        term = sp.Rational(a.numerator, a.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        expr += term
    return expr, syms


def from_sympy(expr, vars) -> MultiPoly:
    poly = sp.Poly(sp.expand(expr), *sp.symbols(vars))
    terms = {}
    for monom, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(monom)] = Fraction(int(c.p), int(c.q))
    return MultiPoly(vars, terms)


def oracle_resultant(P: MultiPoly, Q: MultiPoly, p: int, q: int) -> MultiPoly:
    """Padded Sylvester determinant by sympy's Berkowitz algorithm."""
    expr_p, syms = to_sympy(P)
    expr_q, _ = to_sympy(Q)
    x = syms[-1]
    a = [sp.Poly(expr_p, x).coeff_monomial(x ** k) for k in range(p, -1, -1)]
    b = [sp.Poly(expr_q, x).coeff_monomial(x ** k) for k in range(q, -1, -1)]
    n = p + q
    rows = []
    for i in range(q):
        rows.append([0] * i + a + [0] * (n - p - 1 - i))
    for i in range(p):
        rows.append([0] * i + b + [0] * (n - q - 1 - i))
    det = sp.Matrix(rows).det(method="berkowitz")
    return from_sympy(det, P.vars[:-1])


def oracle_discriminant(P: MultiPoly, p: int) -> MultiPoly:
    """Binary-form discriminant via a symbolic perturbation of the top coefficient.

    ``P + t*x^p`` has degree exactly ``p`` generically, so sympy's discriminant
    applies; the result is polynomial in ``t`` and ``t = 0`` gives ``Disc^p(P)``.
    """
    expr, syms = to_sympy(P)
    x = syms[-1]
    t = sp.Symbol("_t")
    disc = sp.discriminant(sp.Poly(expr + t * x ** p, x))
    return from_sympy(sp.expand(disc.as_expr().subs(t, 0)), P.vars[:-1])


def rand_poly(rng: random.Random, vars, deg_last: int, deg_base: int = 2, coeff: int = 9, terms: int = 6):
    """Random polynomial with exact ``x_n``-degree ``deg_last`` (when ``deg_last >= 0``)."""
    nb = len(vars) - 1
    while True:
        out = {}
        for _ in range(terms):
            e = tuple(rng.randint(0, deg_base) for _ in range(nb)) + (rng.randint(0, deg_last),)
            out[e] = Fraction(rng.randint(-coeff, coeff))
        top = tuple(rng.randint(0, deg_base) for _ in range(nb)) + (deg_last,)
        c = rng.choice([v for v in range(-coeff, coeff + 1) if v])
        out[top] = Fraction(c)
        P = MultiPoly(vars, out)
        if not P.is_zero() and P.degree_in_last() == deg_last:
            return P


def rand_matrix(rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix2:
    while True:
        a = [rng.randint(lo, hi) for _ in range(4)]
        if a[0] * a[3] - a[1] * a[2]:
            return Matrix2(*a)


small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def polys(draw, vars=("x1", "x2"), max_last=3, max_base=2, max_terms=6):
    nb = len(vars) - 1
    exps = st.tuples(*([st.integers(0, max_base)] * nb + [st.integers(0, max_last)]))
    d = draw(st.dictionaries(exps, small_ints.filter(bool), min_size=1, max_size=max_terms))
    return MultiPoly(vars, {e: Fraction(c) for e, c in d.items()})


@st.composite
def matrices(draw):
    a = draw(st.lists(st.integers(-4, 4), min_size=4, max_size=4).filter(lambda a: a[0] * a[3] != a[1] * a[2]))
    return Matrix2(*a)
