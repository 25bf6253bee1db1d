"""Exact polynomial arithmetic over the rationals.

Two representations are used throughout the package:

* :class:`MultiPoly` is a sparse multivariate polynomial.  Its variable
  order is fixed at construction and the *last* variable is the projection
  variable ``x_n``; every operator of the package acts on that variable.
* :class:`UniPoly` is a dense univariate polynomial used for root work.

Coefficients are :class:`fractions.Fraction` values.  Instances are
immutable and safe to share.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, ParseError, ZeroPolynomialError

Rat = Fraction

__all__ = [
    "Rat",
    "MultiPoly",
    "UniPoly",
    "as_rat",
    "format_rat",
    "parse_rat",
    "evaluate_partial",
    "degree_in_last",
    "coefficient_in_last",
    "order_of_vanishing",
    "derivative_in",
    "univariate_gcd",
]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: every value entering the exact core must be
    representable without rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed rational {text!r}") from exc


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rat(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lc=1) -> "UniPoly":
        out = cls([lc])
        for r in roots:
            out = out * cls([-as_rat(r), 1])
        return out

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    # -- ring operations ----------------------------------------------------

    def __neg__(self):
        return UniPoly._raw([-a for a in self.coeffs])

    def __add__(self, other):
        other = _uni(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _uni(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _uni(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return UniPoly()
            return UniPoly._raw([a * other for a in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lcb = other.coeffs[-1]
        if len(r) - 1 < db:
            return UniPoly(), self
        q = [Fraction(0)] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            c = c / lcb
            q[i - db] = c
            for j, b in enumerate(other.coeffs):
                r[i - db + j] -= c * b
        return UniPoly._raw(q), UniPoly._raw(r[:db] if db else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([k * a for k, a in enumerate(self.coeffs)][1:])

    # -- transformations used by root isolation -----------------------------

    def taylor_shift(self, a) -> "UniPoly":
        """Return ``f(x + a)``."""
        a = as_rat(a)
        c = list(self.coeffs)
        n = len(c)
        if not a:
            return self
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                c[k] += a * c[k + 1]
        return UniPoly._raw(c)

    def scale_var(self, s) -> "UniPoly":
        """Return ``f(s*x)``."""
        s = as_rat(s)
        out, p = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p *= s
        return UniPoly._raw(out)

    def reverse(self, n: int | None = None) -> "UniPoly":
        """Return ``x**n * f(1/x)``; ``n`` defaults to the degree."""
        if n is None:
            n = len(self.coeffs) - 1
        c = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UniPoly._raw(c[::-1])

    def sign_variations(self) -> int:
        prev, count = 0, 0
        for a in self.coeffs:
            if not a:
                continue
            s = 1 if a > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
        return count

    def primitive_integer(self) -> list[int]:
        """Integer coefficients proportional to ``self`` with content 1."""
        if not self.coeffs:
            return []
        den = 1
        for a in self.coeffs:
            den = den * a.denominator // math.gcd(den, a.denominator)
        ints = [int(a * den) for a in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return [v // g for v in ints]

    # -- display / serialisation -------------------------------------------

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return self.to_str("x")

    def to_str(self, var: str = "x") -> str:
        terms = [((k,), a) for k, a in enumerate(self.coeffs) if a]
        terms.reverse()
        return _format_terms(terms, (var,))

    def to_json(self) -> dict:
        return {"coeffs": [format_rat(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "UniPoly":
        try:
            return cls(parse_rat(str(s)) for s in data["coeffs"])
        except (KeyError, TypeError) as exc:
            raise ParseError("UniPoly JSON needs a 'coeffs' list") from exc


def _uni(value):
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return UniPoly([value])
    return None


def univariate_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q; ``gcd(0, 0) = 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# multivariate
# ---------------------------------------------------------------------------


def _add_exps(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


class MultiPoly:
    """Sparse polynomial in ``vars``; the last variable is ``x_n``.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    rational coefficients, so equal polynomials have equal term maps.

    >>> P = MultiPoly.parse("x1*x2 - 1", ["x1", "x2"])
    >>> P.degree_in_last(), str(P.coefficient_in_last(1))
    (1, 'x1')
    """

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping | None = None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars):
                raise DimensionError(
                    f"exponent vector {exps} does not match {len(vars)} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rat(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "vars", vars)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars) -> "MultiPoly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars, c) -> "MultiPoly":
        vars = tuple(vars)
        c = as_rat(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, vars, name: str) -> "MultiPoly":
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)})

    @classmethod
    def parse(cls, text: str, vars: Sequence[str]) -> "MultiPoly":
        """Parse an arithmetic expression such as ``"x1^2 + 3/4*x2 - 1"``."""
        return _ExprParser(tuple(vars)).parse(text)

    @classmethod
    def from_coefficients_in_last(
        cls, coeffs: Sequence["MultiPoly"], vars: Sequence[str]
    ) -> "MultiPoly":
        """Assemble ``sum coeffs[k] * x_n**k`` from base-variable coefficients."""
        vars = tuple(vars)
        terms = {}
        for k, c in enumerate(coeffs):
            if c.vars != vars[:-1]:
                raise DimensionError(
                    f"coefficient variables {c.vars} do not match base {vars[:-1]}"
                )
            for e, a in c._terms.items():
                terms[e + (k,)] = a
        return cls._raw(vars, terms)

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def degree_in(self, var) -> int:
        i = self._index(var)
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(e[i] for e in self._terms)

    def degree_in_last(self) -> int:
        """Least ``d`` such that ``self`` has degree at most ``d`` in ``x_n``."""
        if not self.vars:
            raise DimensionError("polynomial has no variables")
        return self.degree_in(len(self.vars) - 1)

    def coefficient_in_last(self, k: int) -> "MultiPoly":
        """Coefficient ``c_k`` of ``x_n**k`` as a polynomial in the base variables."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        base = self.vars[:-1]
        return MultiPoly._raw(
            base, {e[:-1]: a for e, a in self._terms.items() if e[-1] == k}
        )

    def coefficients_in_last(self, d: int | None = None) -> list["MultiPoly"]:
        if d is None:
            d = self.degree_in_last()
        base = self.vars[:-1]
        out = [dict() for _ in range(d + 1)]
        for e, a in self._terms.items():
            if e[-1] > d:
                raise ValueError(f"degree in {self.vars[-1]} exceeds {d}")
            out[e[-1]][e[:-1]] = a
        return [MultiPoly._raw(base, t) for t in out]

    def leading_term(self):
        """Lexicographically largest ``(exponents, coefficient)``."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def _index(self, var) -> int:
        if isinstance(var, int):
            if not 0 <= var < len(self.vars):
                raise DimensionError(f"variable index {var} out of range")
            return var
        try:
            return self.vars.index(var)
        except ValueError:
            raise DimensionError(f"unknown variable {var!r}") from None

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == MultiPoly.constant(self.vars, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.vars, frozenset(self._terms.items())))
            )
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise DimensionError(
                    f"variable mismatch: {self.vars} vs {other.vars}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self.vars, other)
        return None

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -a for e, a in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, a in other._terms.items():
            v = out.get(e, 0) + a
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = as_rat(c)
        if not c:
            return MultiPoly.zero(self.vars)
        return MultiPoly._raw(self.vars, {e: a * c for e, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        get = out.get
        for e1, a in self._terms.items():
            for e2, b in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + a * b
        return MultiPoly._raw(self.vars, {e: a for e, a in out.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def exquo(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient ``self / other``; raises ``ValueError`` if inexact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other._terms) == 1:
            (eb, cb), = other._terms.items()
            out = {}
            for e, a in self._terms.items():
                q = tuple(x - y for x, y in zip(e, eb))
                if min(q, default=0) < 0:
                    raise ValueError("inexact polynomial division")
                out[q] = a / cb
            return MultiPoly._raw(self.vars, out)
        lt_b = max(other._terms)
        lc_b = other._terms[lt_b]
        rest_b = [(e, c) for e, c in other._terms.items() if e != lt_b]
        r = dict(self._terms)
        q = {}
        while r:
            m = max(r)
            shift = tuple(x - y for x, y in zip(m, lt_b))
            if min(shift, default=0) < 0:
                raise ValueError("inexact polynomial division")
            coef = r.pop(m) / lc_b
            q[shift] = coef
            for e, c in rest_b:
                e2 = tuple(x + y for x, y in zip(e, shift))
                v = r.get(e2, 0) - coef * c
                if v:
                    r[e2] = v
                else:
                    r.pop(e2, None)
        return MultiPoly._raw(self.vars, q)

    def derivative(self, var) -> "MultiPoly":
        i = self._index(var)
        out = {}
        for e, a in self._terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = a * e[i]
        return MultiPoly._raw(self.vars, out)

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.vars):
            raise DimensionError(
                f"point has {len(point)} coordinates, expected {len(self.vars)}"
            )
        pt = [as_rat(p) for p in point]
        total = Fraction(0)
        for e, a in self._terms.items():
            v = a
            for p, k in zip(pt, e):
                if k:
                    v *= p ** k
            total += v
        return total

    def evaluate_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for e, a in self._terms.items():
            v = float(a)
            for p, k in zip(point, e):
                if k:
                    v *= p ** k
            total += v
        return total

    def evaluate_partial(self, x0: Sequence) -> UniPoly:
        """Substitute ``x0`` for the first ``n-1`` variables."""
        if len(x0) != len(self.vars) - 1:
            raise DimensionError(
                f"base point has {len(x0)} coordinates, expected {len(self.vars) - 1}"
            )
        pt = [as_rat(p) for p in x0]
        if not self._terms:
            return UniPoly()
        d = max(e[-1] for e in self._terms)
        out = [Fraction(0)] * (d + 1)
        for e, a in self._terms.items():
            v = a
            for p, k in zip(pt, e):
                if k:
                    v *= p ** k
            out[e[-1]] += v
        return UniPoly._raw(out)

    def substitute(self, values: Mapping) -> "MultiPoly":
        """Substitute rationals for some variables, keeping the variable list."""
        idx = {self._index(k): as_rat(v) for k, v in values.items()}
        out = {}
        for e, a in self._terms.items():
            v = a
            e2 = list(e)
            for i, p in idx.items():
                if e[i]:
                    v *= p ** e[i]
                e2[i] = 0
            if v:
                t = tuple(e2)
                s = out.get(t, 0) + v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return MultiPoly._raw(self.vars, out)

    def compose(self, polys: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable ``i`` by ``polys[i]`` (all sharing one variable list)."""
        if len(polys) != len(self.vars):
            raise DimensionError("need one polynomial per variable")
        target = polys[0].vars if polys else ()
        for p in polys:
            if p.vars != target:
                raise DimensionError("substituted polynomials must share variables")
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = polys[i] ** k
            return cache[key]

        acc = MultiPoly.zero(target)
        for e, a in self._terms.items():
            t = MultiPoly.constant(target, a)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            acc = acc + t
        return acc

    def compose_linear(self, matrix: Sequence[Sequence]) -> "MultiPoly":
        """Return ``f(M x)`` for a square rational matrix ``M``."""
        n = len(self.vars)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionError(f"need a {n}x{n} matrix")
        lin = []
        for row in matrix:
            terms = {}
            for j, m in enumerate(row):
                m = as_rat(m)
                if m:
                    e = [0] * n
                    e[j] = 1
                    terms[tuple(e)] = m
            lin.append(MultiPoly._raw(self.vars, terms))
        return self.compose(lin)

    def shift(self, point: Sequence) -> "MultiPoly":
        """Return ``f(x + point)``."""
        if len(point) != len(self.vars):
            raise DimensionError(
                f"point has {len(point)} coordinates, expected {len(self.vars)}"
            )
        pt = [as_rat(p) for p in point]
        out = {}
        for e, a in self._terms.items():
            partial = {(): a}
            for p, k in zip(pt, e):
                expansion = [(j, math.comb(k, j) * p ** (k - j)) for j in range(k + 1)]
                nxt = {}
                for pre, c in partial.items():
                    for j, b in expansion:
                        if b:
                            key = pre + (j,)
                            nxt[key] = nxt.get(key, 0) + c * b
                partial = nxt
            for key, c in partial.items():
                v = out.get(key, 0) + c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return MultiPoly._raw(self.vars, out)

    def order_of_vanishing(self, point: Sequence) -> int:
        """Order of ``self`` at ``point``: lowest total degree after shifting."""
        if not self._terms:
            raise ZeroPolynomialError("order is undefined for the zero polynomial")
        shifted = self.shift(point)
        return min(sum(e) for e in shifted._terms)

    # -- variable bookkeeping ----------------------------------------------

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over a superset (or reordering) of the current variables."""
        vars = tuple(vars)
        pos = []
        for v in self.vars:
            if v not in vars:
                raise DimensionError(f"variable {v!r} missing from {vars}")
            pos.append(vars.index(v))
        out = {}
        for e, a in self._terms.items():
            e2 = [0] * len(vars)
            for p, k in zip(pos, e):
                e2[p] = k
            out[tuple(e2)] = a
        return MultiPoly._raw(vars, out)

    def drop_unused_last(self) -> "MultiPoly":
        """Drop ``x_n`` from a polynomial that does not involve it."""
        if any(e[-1] for e in self._terms):
            raise ValueError(f"polynomial involves {self.vars[-1]}")
        return MultiPoly._raw(self.vars[:-1], {e[:-1]: a for e, a in self._terms.items()})

    def to_unipoly(self) -> UniPoly:
        if len(self.vars) != 1:
            raise DimensionError("to_unipoly needs a univariate polynomial")
        return self.evaluate_partial(())

    @classmethod
    def from_unipoly(cls, u: UniPoly, var: str = "x") -> "MultiPoly":
        return cls._raw((var,), {(k,): a for k, a in enumerate(u.coeffs) if a})

    def primitive(self) -> tuple[Fraction, "MultiPoly"]:
        """Split into ``(content, primitive part)``.

        The primitive part has coprime integer coefficients and a positive
        lexicographically-leading coefficient.
        """
        if not self._terms:
            return Fraction(0), self
        den = 1
        for a in self._terms.values():
            den = den * a.denominator // math.gcd(den, a.denominator)
        g = 0
        for a in self._terms.values():
            g = math.gcd(g, int(a * den))
        content = Fraction(g, den)
        if self._terms[max(self._terms)] < 0:
            content = -content
        return content, MultiPoly._raw(
            self.vars, {e: a / content for e, a in self._terms.items()}
        )

    # -- display / serialisation -------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={list(self.vars)})"

    def __str__(self):
        return _format_terms(self.sorted_terms(), self.vars)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {
                    "exps": list(e),
                    "num": str(a.numerator),
                    "den": str(a.denominator),
                }
                for e, a in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        try:
            vars = [str(v) for v in data["vars"]]
            terms = {}
            for t in data["terms"]:
                e = tuple(int(x) for x in t["exps"])
                c = Fraction(int(t["num"]), int(t.get("den", "1")))
                if e in terms:
                    raise ParseError(f"duplicate exponent vector {list(e)}")
                terms[e] = c
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed polynomial JSON: {exc}") from exc
        try:
            return cls(vars, terms)
        except (ValueError, DimensionError) as exc:
            raise ParseError(str(exc)) from exc


def _format_terms(terms, vars) -> str:
    if not terms:
        return "0"
    parts = []
    for e, a in terms:
        mono = "*".join(
            v if k == 1 else f"{v}**{k}" for v, k in zip(vars, e) if k
        )
        mag = abs(a)
        if not mono:
            body = format_rat(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rat(mag)}*{mono}"
        parts.append(("-" if a < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class _ExprParser:
    """Parse arithmetic expressions into MultiPoly using Python's ``ast``."""

    def __init__(self, vars: tuple):
        self.vars = vars

    def parse(self, text: str) -> MultiPoly:
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ParseError(f"cannot parse {text!r}: {exc.msg}") from exc
        return self._visit(tree.body)

    def _visit(self, node) -> MultiPoly:
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"only integer literals are allowed, got {node.value!r}")
            return MultiPoly.constant(self.vars, node.value)
        if isinstance(node, ast.Name):
            if node.id not in self.vars:
                raise ParseError(f"unknown variable {node.id!r}; declared {list(self.vars)}")
            return MultiPoly.variable(self.vars, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self._visit(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = self._visit(node.left)
            if isinstance(node.op, ast.Pow):
                right = self._visit(node.right)
                if not right.is_constant() or right.constant_value().denominator != 1:
                    raise ParseError("exponents must be integer constants")
                k = int(right.constant_value())
                if k < 0:
                    raise ParseError("negative exponents are not polynomial")
                return left ** k
            right = self._visit(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not right.is_constant() or not right.constant_value():
                    raise ParseError("division only by nonzero constants")
                return left.scale(1 / right.constant_value())
        raise ParseError(f"unsupported syntax: {ast.dump(node)}")


# -- functional aliases -----------------------------------------------------


def evaluate_partial(P: MultiPoly, x0: Sequence) -> UniPoly:
    return P.evaluate_partial(x0)


def degree_in_last(P: MultiPoly) -> int:
    return P.degree_in_last()


def coefficient_in_last(P: MultiPoly, k: int) -> MultiPoly:
    return P.coefficient_in_last(k)


def order_of_vanishing(f: MultiPoly, point: Sequence) -> int:
    return f.order_of_vanishing(point)


def derivative_in(P: MultiPoly, var) -> MultiPoly:
    return P.derivative(var)
