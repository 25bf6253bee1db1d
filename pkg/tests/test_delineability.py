import random
from fractions import Fraction

import pytest

from projdel import (
    Matrix2,
    MultiPoly,
    NullifiedError,
    check_finite_set,
    desingularize_at,
    homogenize,
    projective_roots_above,
)
from projdel.delineability import candidate_directions

from helpers import rand_poly

V = ("x1", "x2")
V3 = ("x1", "x2", "x3")


def test_roots_above_use_global_degree():
    rs = projective_roots_above(MultiPoly.parse("x1*x2 - 1", V), [0])
    assert rs.real_roots == () and rs.infinity_multiplicity == 1


def test_cubic_hyperbola_roots_above_two():
    rs = projective_roots_above(MultiPoly.parse("(x1*x2 - 1)*(x2 + x1^3)", V), [2])
    assert [r.value for r in rs.real_roots] == [-8, Fraction(1, 2)]
    assert rs.infinity_multiplicity == 0


def test_lc_line_triple_root_at_infinity():
    P = MultiPoly.parse("x1*x3^3 + (x1^2 + x2^2)*x3^2 + 1", V3)
    rs = projective_roots_above(P, [0, 0])
    assert rs.multiset() == (3,) and rs.infinity_multiplicity == 3


def test_nullified():
    with pytest.raises(NullifiedError) as exc:
        projective_roots_above(MultiPoly.parse("x1*x2 + x1", V), [0])
    assert exc.value.point == (0,)


def test_finite_set_counterexample():
    P = MultiPoly.parse("(x1*x2 - 1)*((x1 - 1)*x2 - 1)^2", V)
    v = check_finite_set(P, [[0], [1]])
    assert not v.delineable and v.projectively_delineable
    assert v.real_multisets == ((2,), (1,))
    assert v.projective_multisets == ((1, 2), (1, 2))


def test_finite_set_circle_and_singleton():
    P = MultiPoly.parse("x1^2 + x2^2 - 1", V)
    v = check_finite_set(P, [[Fraction(-1, 2)], [Fraction(1, 2)]])
    assert v.delineable and v.projectively_delineable
    v = check_finite_set(MultiPoly.parse("x1*x2^3 - 1", V), [[0]])
    assert v.delineable and v.projectively_delineable


def test_candidate_directions_are_distinct_points():
    dirs = [d for _, d in zip(range(12), candidate_directions())]
    assert dirs[:4] == [(1, 0), (0, 1), (1, 1), (1, -1)]
    ratios = {Fraction(b, a) if a else None for a, b in dirs}
    assert len(ratios) == len(dirs)


def test_desingularize_examples():
    P = MultiPoly.parse("(x1*x2 - 1)*(x2 + x1^3)", V)
    D = desingularize_at(P, [0])
    assert D.matrix == Matrix2(1, 0, 1, 1)
    assert D.transformed == MultiPoly.parse("((x1-1)*x2 - 1)*((1+x1^3)*x2 + x1^3)", V)
    assert desingularize_at(MultiPoly.parse("x2^2 + x1", V), [3]).matrix == Matrix2.identity()
    D = desingularize_at(MultiPoly.parse("x1*x2 - 1", V), [0])
    assert D.matrix.a21 != 0 and D.neighborhood.evaluate([0]) == -D.matrix.a21


def test_desingularize_removes_root_at_infinity():
    rng = random.Random(9)
    for _ in range(40):
        d = rng.randint(1, 4)
        P = rand_poly(rng, V, d)
        s = [Fraction(rng.randint(-3, 3))]
        if P.evaluate_partial(s).is_zero():
            continue
        D = desingularize_at(P, s)
        assert D.matrix.det == 1
        assert D.neighborhood == homogenize(P, d).at_direction(D.matrix.a11, D.matrix.a21)
        assert projective_roots_above(D.transformed, s).infinity_multiplicity == 0
        assert D.transformed.coefficient_in_last(d).evaluate(s) != 0
