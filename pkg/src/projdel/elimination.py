"""Fixed-degree resultants and discriminants.

Coefficient vectors are padded to the caller's reference degrees before the
Sylvester matrix is built, so ``resultant_fixed(P, Q, p, q)`` depends on
``(p, q)`` and not only on the polynomials.  Determinants are taken with
fraction-free Bareiss elimination over the base polynomial ring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DegreeBoundError, DimensionError, NullifiedError, PreconditionError
from .poly import MultiPoly, UniPoly, as_rat

__all__ = [
    "sylvester_matrix",
    "bareiss_determinant",
    "resultant_fixed",
    "discriminant_fixed",
    "univariate_resultant",
    "univariate_discriminant",
    "evaluate_then_eliminate",
]


def _padded(coeffs: list, degree: int, zero) -> list:
    """Descending coefficient vector of length ``degree + 1``."""
    out = list(coeffs) + [zero] * (degree + 1 - len(coeffs))
    return out[::-1]


def _sylvester_rows(a_desc: list, b_desc: list, zero) -> list:
    p = len(a_desc) - 1
    q = len(b_desc) - 1
    size = p + q
    rows = []
    for i in range(q):
        rows.append([zero] * i + a_desc + [zero] * (size - p - 1 - i))
    for i in range(p):
        rows.append([zero] * i + b_desc + [zero] * (size - q - 1 - i))
    return rows


def _check(P: MultiPoly, p: int, name: str):
    if p < 0:
        raise DegreeBoundError(f"reference degree of {name} must be nonnegative")
    if not P.is_zero() and P.degree_in_last() > p:
        raise DegreeBoundError(
            f"{name} has degree {P.degree_in_last()} in {P.vars[-1]}, above the reference degree {p}"
        )


def sylvester_matrix(P: MultiPoly, Q: MultiPoly, p: int, q: int) -> list[list[MultiPoly]]:
    """``(p+q) x (p+q)`` Sylvester matrix with base-polynomial entries."""
    if P.vars != Q.vars:
        raise DimensionError(f"variable mismatch: {P.vars} vs {Q.vars}")
    _check(P, p, "P")
    _check(Q, q, "Q")
    if p + q < 1:
        raise PreconditionError("resultant needs p + q >= 1")
    zero = MultiPoly.zero(P.vars[:-1])
    a = _padded(P.coefficients_in_last(p), p, zero)
    b = _padded(Q.coefficients_in_last(q), q, zero)
    return _sylvester_rows(a, b, zero)


def bareiss_determinant(matrix: Sequence[Sequence]):
    """Determinant by fraction-free Bareiss elimination.

    Entries are either all rationals or all :class:`MultiPoly` over the same
    variables.  Polynomial matrices are scaled row-wise to integer
    coefficients and eliminated with exact division in ``Z[x]``.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if isinstance(matrix[0][0], MultiPoly):
        return _poly_determinant(matrix)
    return _bareiss([[as_rat(x) for x in row] for row in matrix], _FieldOps)


class _FieldOps:
    zero = Fraction(0)

    @staticmethod
    def size(a):
        return 1 if a else 0

    @staticmethod
    def fma(a, pivot, b, c, prev):
        # (a*pivot - b*c) / prev
        v = a * pivot - b * c
        return v if prev is None else v / prev


class _PackedOps:
    """Integer polynomials as ``{packed monomial: int}`` dicts.

    Monomials are packed into one integer, first variable most significant,
    so adding exponents is integer addition and lex order is integer order.
    Each field carries a guard bit to detect non-divisible monomials.
    """

    zero: dict = {}
    guard = 0

    @staticmethod
    def size(a):
        return len(a)

    @staticmethod
    def mul_into(out, a, b, sign):
        get = out.get
        for e1, c1 in a.items():
            c1 = c1 * sign
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = get(e, 0) + c1 * c2

    @classmethod
    def fma(cls, a, pivot, b, c, prev):
        out: dict = {}
        if a and pivot:
            cls.mul_into(out, a, pivot, 1)
        if b and c:
            cls.mul_into(out, b, c, -1)
        out = {e: v for e, v in out.items() if v}
        if prev is None or not out:
            return out
        return cls.exquo(out, prev)

    @classmethod
    def exquo(cls, num, den):
        guard = cls.guard
        if len(den) == 1:
            (eb, cb), = den.items()
            out = {}
            for e, v in num.items():
                d = (e | guard) - eb
                q, r = divmod(v, cb)
                if (d & guard) != guard or r:
                    raise ArithmeticError("inexact division in Bareiss elimination")
                out[d ^ guard] = q
            return out
        lt = max(den)
        lc = den[lt]
        rest = [(e, c) for e, c in den.items() if e != lt]
        r = dict(num)
        q = {}
        while r:
            m = max(r)
            d = (m | guard) - lt
            coef, rem = divmod(r.pop(m), lc)
            if (d & guard) != guard or rem:
                raise ArithmeticError("inexact division in Bareiss elimination")
            d ^= guard
            q[d] = coef
            for e, c in rest:
                e2 = e + d
                v = r.get(e2, 0) - coef * c
                if v:
                    r[e2] = v
                else:
                    r.pop(e2, None)
        return q


def _bareiss(M, ops):
    n = len(M)
    sign = 1
    prev = None
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            if M[i][k]:
                if best is None or ops.size(M[i][k]) < ops.size(M[best][k]):
                    best = i
        if best is None:
            return ops.zero
        if best != k:
            M[k], M[best] = M[best], M[k]
            sign = -sign
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = ops.fma(row_i[j], pivot, mik, row_k[j], prev)
            row_i[k] = ops.zero
        prev = pivot
    det = M[n - 1][n - 1]
    if sign < 0:
        det = {e: -v for e, v in det.items()} if isinstance(det, dict) else -det
    return det


def _poly_determinant(matrix) -> MultiPoly:
    vars = matrix[0][0].vars
    k = len(vars)
    width = 24
    max_exp = 0
    for row in matrix:
        for x in row:
            if x.vars != vars:
                raise DimensionError("matrix entries must share variables")
            for e in x.terms:
                if e:
                    max_exp = max(max_exp, max(e))
    # minors of size n have exponents <= n * max_exp; products of two minors
    # appear before each exact division
    while (2 * len(matrix) * max_exp + 1) >= (1 << (width - 1)):
        width *= 2
    shifts = [width * (k - 1 - i) for i in range(k)]
    guard = sum(1 << (s + width - 1) for s in shifts)

    def pack(e):
        return sum(x << s for x, s in zip(e, shifts))

    scale = Fraction(1)
    rows = []
    for row in matrix:
        den = 1
        for x in row:
            for c in x.terms.values():
                den = den * c.denominator // math.gcd(den, c.denominator)
        scale *= den
        rows.append([{pack(e): int(c * den) for e, c in x.terms.items()} for x in row])

    ops = type("_Ops", (_PackedOps,), {"guard": guard})
    det = _bareiss(rows, ops)
    mask = (1 << (width - 1)) - 1
    terms = {}
    for e, v in det.items():
        terms[tuple((e >> s) & mask for s in shifts)] = Fraction(v) / scale
    return MultiPoly(vars, terms)


def resultant_fixed(P: MultiPoly, Q: MultiPoly, p: int, q: int) -> MultiPoly:
    """``Res^{p,q}(P, Q)`` as a polynomial in the base variables."""
    return bareiss_determinant(sylvester_matrix(P, Q, p, q))


def discriminant_fixed(P: MultiPoly, p: int) -> MultiPoly:
    """Discriminant of the degree-``p`` binary form ``H^p(P)``.

    Equal to ``(-1)^(p(p-1)/2) Res^{p,p-1}(P, P') / c_p``.  The division by
    the leading coefficient ``c_p`` is done structurally: the first column of
    the Sylvester matrix is ``c_p * e`` with ``e = (1, 0.., p, 0..)``, so it is
    replaced by ``e``.  The result is therefore polynomial even where ``c_p``
    vanishes, and vanishes exactly where ``H^p(P)`` has a repeated projective
    root.
    """
    if p < 2:
        raise PreconditionError("discriminant needs reference degree p >= 2")
    _check(P, p, "P")
    dP = P.derivative(len(P.vars) - 1)
    M = sylvester_matrix(P, dP, p, p - 1)
    base = P.vars[:-1]
    zero = MultiPoly.zero(base)
    for i, row in enumerate(M):
        row[0] = zero
    M[0][0] = MultiPoly.constant(base, 1)
    M[p - 1][0] = MultiPoly.constant(base, p)
    det = bareiss_determinant(M)
    return -det if (p * (p - 1) // 2) % 2 else det


def univariate_resultant(u: UniPoly, v: UniPoly, p: int, q: int) -> Fraction:
    """Fixed-degree resultant of two univariate polynomials."""
    if p + q < 1:
        raise PreconditionError("resultant needs p + q >= 1")
    if len(u.coeffs) - 1 > p or len(v.coeffs) - 1 > q:
        raise DegreeBoundError("polynomial degree exceeds reference degree")
    zero = Fraction(0)
    a = _padded(list(u.coeffs), p, zero)
    b = _padded(list(v.coeffs), q, zero)
    return bareiss_determinant(_sylvester_rows(a, b, zero))


def univariate_discriminant(u: UniPoly, p: int) -> Fraction:
    if p < 2:
        raise PreconditionError("discriminant needs reference degree p >= 2")
    if len(u.coeffs) - 1 > p:
        raise DegreeBoundError("polynomial degree exceeds reference degree")
    zero = Fraction(0)
    a = _padded(list(u.coeffs), p, zero)
    b = _padded(list(u.derivative().coeffs), p - 1, zero)
    M = _sylvester_rows(a, b, zero)
    for row in M:
        row[0] = zero
    M[0][0] = Fraction(1)
    M[p - 1][0] = Fraction(p)
    det = bareiss_determinant(M)
    return -det if (p * (p - 1) // 2) % 2 else det


def evaluate_then_eliminate(
    P: MultiPoly, Q: MultiPoly, p: int, q: int, x0: Sequence
) -> Fraction:
    """Resultant of the evaluated pair ``E_x0(P), E_x0(Q)`` w.r.t. ``(p, q)``.

    Agrees with ``resultant_fixed(P, Q, p, q).evaluate(x0)``; both polynomials
    must be non-nullified at ``x0``.
    """
    x0 = [as_rat(v) for v in x0]
    u = P.evaluate_partial(x0)
    v = Q.evaluate_partial(x0)
    for name, w in (("P", u), ("Q", v)):
        if w.is_zero():
            raise NullifiedError(f"{name} vanishes identically above {x0}", point=x0)
    return univariate_resultant(u, v, p, q)
