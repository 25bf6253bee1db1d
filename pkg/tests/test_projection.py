import itertools
import random
from fractions import Fraction

import pytest

from projdel import (
    DimensionError,
    MultiPoly,
    PreconditionError,
    cell_bounds_1d,
    discriminant_fixed,
    project_classical,
    project_projective,
)

from helpers import rand_poly

V = ("x1", "x2")
SCC = [MultiPoly.parse("x1^2 + x2^2 - 1", V), MultiPoly.parse("x1*x2 - 1", V)]


def test_scc_projection_sets():
    c = project_classical(SCC)
    tags = {t: str(g.poly) for g in c.generators for t in g.provenance}
    assert tags == {"disc(P1)": "x1**2 - 1", "lc(P2)": "x1", "res(P1,P2)": "x1**4 - x1**2 + 1"}
    p = project_projective(SCC)
    assert {t for g in p.generators for t in g.provenance} == {"disc(P1)", "res(P1,P2)"}


def test_duplicates_merge():
    # both leading coefficients and the resultant are proportional to x1
    F = [MultiPoly.parse("x1*x2 + 1", V), MultiPoly.parse("-3*x1*x2 - 6", V)]
    (g,) = project_classical(F).generators
    assert g.provenance == ("lc(P1)", "lc(P2)", "res(P1,P2)")
    assert str(g.poly) == "x1"
    assert len(project_projective(F).generators) == 1


def test_monic_single_polynomial():
    P = MultiPoly.parse("x2^3 - x1*x2 + 1", V)
    assert project_classical([P]).polys == project_projective([P]).polys


def test_pair_count():
    rng = random.Random(1)
    F = [rand_poly(rng, V, 2) for _ in range(4)]
    tags = [t for g in project_projective(F).generators for t in g.provenance]
    assert sum(t.startswith("res") for t in tags) <= 6
    assert len({t for t in tags if t.startswith("res")}) == len([t for t in tags if t.startswith("res")])


def test_projective_subset_of_classical():
    rng = random.Random(2)
    for _ in range(20):
        F = [rand_poly(rng, V, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        assert project_projective(F).polys <= project_classical(F).polys


def test_validation():
    with pytest.raises(PreconditionError):
        project_classical([MultiPoly.parse("x1 + 1", V)])
    with pytest.raises(PreconditionError):
        project_classical([MultiPoly.zero(V)])


def test_cell_bounds():
    assert cell_bounds_1d(SCC, Fraction(-1, 2), "classical").to_json()["interval"] == ["-1", "0"]
    assert cell_bounds_1d(SCC, Fraction(-1, 2), "projective").to_json()["interval"] == ["-1", "1"]
    assert cell_bounds_1d([MultiPoly.parse("x2", V)], 7).to_json()["interval"] == ["-inf", "inf"]


def test_cell_irrational_bounds():
    cell = cell_bounds_1d([MultiPoly.parse("x2^2 - x1^2 + 2", V)], 0)
    lo, hi = cell.endpoint_values()
    assert abs(lo + 2 ** 0.5) < 1e-12 and abs(hi - 2 ** 0.5) < 1e-12
    assert "root_of" in cell.to_json()["interval"][0]


def test_cell_errors():
    with pytest.raises(PreconditionError):
        cell_bounds_1d(SCC, 1, "classical")
    with pytest.raises(DimensionError):
        cell_bounds_1d([MultiPoly.parse("x3 + x1", ("x1", "x2", "x3"))], 0)
