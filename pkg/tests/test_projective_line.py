import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from projdel import Matrix2, ProjPoint, chordal_distance, embed_circle, from_affine, infinity, moebius_point

from helpers import matrices, rationals


def test_canonical_form():
    assert ProjPoint(2, 4) == from_affine(Fraction(1, 2))
    assert ProjPoint(-3, 0) == infinity()
    with pytest.raises(ValueError):
        ProjPoint(0, 0)


def test_embedding_lies_on_circle():
    for p in (from_affine(0), from_affine(Fraction(-7, 3)), infinity(), from_affine(10 ** 30)):
        q = embed_circle(p)
        assert math.isclose(q.u ** 2 + q.v ** 2, q.v, abs_tol=1e-15)


def test_infinity_is_the_origin_and_far_points_approach_it():
    assert embed_circle(infinity()) == embed_circle(ProjPoint(1, 0))
    assert chordal_distance(embed_circle(from_affine(10 ** 9)), embed_circle(infinity())) < 1e-8
    assert chordal_distance(embed_circle(from_affine(-10 ** 9)), embed_circle(infinity())) < 1e-8


def test_json():
    p = from_affine(Fraction(-2, 3))
    assert ProjPoint.from_json(p.to_json()) == p
    assert infinity().to_json() == {"x": "1", "y": "0"}


@settings(max_examples=100, deadline=None)
@given(matrices(), matrices(), rationals)
def test_moebius_action_is_a_group_action(A, B, x):
    p = from_affine(x)
    assert moebius_point(A @ B, p) == moebius_point(A, moebius_point(B, p))
    assert moebius_point(A.inverse(), moebius_point(A, p)) == p


def test_diameter_is_one():
    assert math.isclose(chordal_distance(embed_circle(from_affine(0)), embed_circle(infinity())), 1.0)
