import math
from fractions import Fraction

import pytest

from projdel import (
    BasePath,
    Matrix2,
    MultiPoly,
    NullifiedError,
    TrackingError,
    embed_circle,
    moebius_point,
    moebius_transform,
    section_sign_check,
    track_roots,
)
from projdel.projective_line import ProjPoint, chordal_distance
from projdel.tracking import cycle_notation

V = ("x1", "x2")
V3 = ("x1", "x2", "x3")
CUB = "(x1*x2 - 1)*(x2 + x1^3)"


def test_path_validation():
    with pytest.raises(ValueError):
        BasePath.segment([0], [1], samples=8)
    with pytest.raises(ValueError):
        BasePath.circle([0, 0], 0)


def test_circle_samples_are_exact_points_on_the_circle():
    path = BasePath.circle([1, 2], Fraction(3, 2), samples=64)
    for s in path.grid():
        x, y = s.point
        assert (x - 1) ** 2 + (y - 2) ** 2 == Fraction(9, 4)
        assert math.isclose(float(x), 1 + 1.5 * math.cos(s.t), abs_tol=1e-5)


def test_restrict_on_segment_and_circle():
    path = BasePath.segment([-1], [1], 16)
    assert str(path.restrict(MultiPoly.parse("x1", ("x1",)))) == str(MultiPoly.parse("2*t - 1", ("t",)).to_unipoly())
    circle = BasePath.circle([0, 0], 1, 16)
    # x1^2 + x2^2 - 1 vanishes identically on the unit circle
    assert circle.restrict(MultiPoly.parse("x1^2 + x2^2 - 1", V)).is_zero()


def test_cubic_hyperbola_consistent():
    P = MultiPoly.parse(CUB, V)
    res = track_roots(P, BasePath.segment([-2], [2], 256))
    v = res.verdict
    assert v.status == "CONSISTENT" and v.branch_count == 2 and v.multiplicity_vector == (1, 1)
    inf_rows = [r for r in res.trace.rows if r.is_infinity]
    assert inf_rows and all(r.base_point == (0,) for r in inf_rows)
    # a single branch passes through infinity
    assert len({r.branch_id for r in inf_rows}) == 1


def test_trace_invariants():
    P = MultiPoly.parse(CUB, V)
    res = track_roots(P, BasePath.segment([-2], [2], 64))
    by_branch = res.trace.branches()
    for rows in by_branch.values():
        for a, b in zip(rows, rows[1:]):
            assert chordal_distance(a.point, b.point) <= 0.2
    # ids partition each sample's root set
    for t in res.trace.parameters():
        ids = [r.branch_id for r in res.trace.rows if r.t == t]
        assert len(ids) == len(set(ids)) == 2


def test_circle_quartic_monodromy():
    P = MultiPoly.parse("(1-x1)*x3^4 + 4*x2*x3^3 + (2+6*x1)*x3^2 - 4*x2*x3 + (1-x1)", V3)
    v = track_roots(P, BasePath.circle([0, 0], 1, 96)).verdict
    assert v.monodromy == "(1 2)" and v.status == "VIOLATION" and v.reason == "monodromy"
    assert v.multiplicity_vector == (2, 2)


def test_trivial_monodromy_on_circle():
    P = MultiPoly.parse("x3^2 - 4", V3)
    v = track_roots(P, BasePath.circle([0, 0], 1, 32)).verdict
    assert v.status == "CONSISTENT" and v.monodromy == "()"


def test_projective_vs_real_counterexamples():
    seg = BasePath.segment([-1], [1], 64)
    P = MultiPoly.parse("x1^2*x2^2 + 1", V)
    v = track_roots(P, seg).verdict
    assert v.status == "VIOLATION" and v.reason == "branch_count_change" and v.witness_point == (0,)
    assert track_roots(P, seg, mode="real").verdict.consistent
    Q = MultiPoly.parse("x1*x2 - 1", V)
    assert track_roots(Q, seg).verdict.consistent
    assert not track_roots(Q, seg, mode="real").verdict.consistent


def test_real_and_projective_agree_when_lc_never_vanishes():
    P = MultiPoly.parse("x2^2 - x1^2 - 1", V)
    seg = BasePath.segment([-2], [2], 64)
    a = track_roots(P, seg)
    b = track_roots(P, seg, mode="real")
    assert a.verdict.consistent and b.verdict.consistent
    assert [(r.t, r.branch_id, r.point) for r in a.trace.rows] == [(r.t, r.branch_id, r.point) for r in b.trace.rows]


def test_moebius_transport_of_branches():
    P = MultiPoly.parse(CUB, V)
    A = Matrix2(1, 0, 1, 1)
    Q = moebius_transform(P, A, 2)
    seg = BasePath.segment([Fraction(1, 2)], [2], 32)
    tp, tq = track_roots(P, seg).trace, track_roots(Q, seg).trace
    # Q has an extra critical sample where its leading coefficient vanishes
    shared = set(tp.parameters()) & set(tq.parameters())
    assert len(shared) == 33
    # map Q's (rational) roots by mu_A and compare with P's sample roots
    for t in sorted(shared):
        ps = sorted((r.point.u, r.point.v) for r in tp.rows if r.t == t)
        qs = []
        for r in tq.rows:
            if r.t != t:
                continue
            u, v = r.point.u, r.point.v
            pt = ProjPoint(1, 0) if not v else ProjPoint(Fraction(u / v), 1)
            img = embed_circle(moebius_point(A, pt))
            qs.append((img.u, img.v))
        for a, b in zip(ps, sorted(qs)):
            assert math.hypot(a[0] - b[0], a[1] - b[1]) < 1e-6


def test_nullified_sample():
    P = MultiPoly.parse("x1*x2 + x1", V)
    with pytest.raises(NullifiedError) as exc:
        track_roots(P, BasePath.segment([-1], [1], 16))
    assert exc.value.point == (0,)


def test_cycle_notation():
    assert cycle_notation([]) == "()"
    assert cycle_notation([2, 3, 1]) == "(1 2 3)"


def test_section_sign_check():
    seg = BasePath.segment([Fraction(-9, 10)], [Fraction(9, 10)], 64)
    P = MultiPoly.parse("x1^2 + x2^2 - 1", V)
    Q = MultiPoly.parse("x1*x2 - 1", V)
    assert {r.classification for r in section_sign_check(P, Q, seg)} == {"never_vanishes"}
    assert {r.classification for r in section_sign_check(P, P, seg)} == {"vanishes_identically"}


def test_section_designated_branch():
    seg = BasePath.segment([Fraction(1, 2)], [2], 32)
    P = MultiPoly.parse("(x2 + x1^3)*(x2 - 5)", V)
    reports = section_sign_check(P, MultiPoly.parse("x2 + x1^3", V), seg)
    assert sorted(r.classification for r in reports) == ["never_vanishes", "vanishes_identically"]


def test_section_mixed_and_tracking_failure():
    seg = BasePath.segment([-1], [1], 32)
    P = MultiPoly.parse("x2^2 - 4", V)
    reports = section_sign_check(P, MultiPoly.parse("x2 - 2 - x1", V), seg)
    mixed = [r for r in reports if r.classification == "MIXED"]
    assert len(mixed) == 1 and mixed[0].witness == 0.5
    with pytest.raises(TrackingError):
        section_sign_check(MultiPoly.parse("x1^2*x2^2 + 1", V), P, seg)
