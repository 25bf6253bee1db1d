"""Golden-example reproduction: recompute each worked example and compare."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .binary_forms import Matrix2, moebius_transform
from .delineability import check_finite_set, desingularize_at, projective_roots_above
from .elimination import discriminant_fixed
from .goldens import GOLDENS
from .poly import MultiPoly, format_rat
from .projection import cell_bounds_1d, project_classical
from .tracking import DEFAULT_JUMP_THRESHOLD, DEFAULT_SAMPLES, BasePath, track_roots

__all__ = ["EXAMPLES", "Report", "reproduce"]

X2 = ["x1", "x2"]
X3 = ["x1", "x2", "x3"]
CIRCLE_QUARTIC = "(1-x1)*x3^4 + 4*x2*x3^3 + (2+6*x1)*x3^2 - 4*x2*x3 + (1-x1)"


@dataclass
class Report:
    id: str
    checks: list = field(default_factory=list)

    def check(self, name: str, expected, actual):
        self.checks.append({"name": name, "expected": expected, "actual": actual, "pass": expected == actual})

    @property
    def status(self) -> str:
        return "PASS" if all(c["pass"] for c in self.checks) else "FAIL"

    def to_json(self) -> dict:
        return {"id": self.id, "status": self.status, "checks": self.checks}


def _bounds(cell) -> list:
    return cell.to_json()["interval"]


def _scc(rep: Report, samples: int, jump: float):
    g = GOLDENS["scc"]
    F = [MultiPoly.parse("x1^2 + x2^2 - 1", X2), MultiPoly.parse("x1*x2 - 1", X2)]
    s = Fraction(-1, 2)
    rep.check("classical interval", g["classical"], _bounds(cell_bounds_1d(F, s, "classical")))
    rep.check("projective interval", g["projective"], _bounds(cell_bounds_1d(F, s, "projective")))
    polys = {p: str(gen.poly) for gen in project_classical(F).generators for p in gen.provenance}
    rep.check("disc(P1)", g["disc"], polys.get("disc(P1)"))
    rep.check("res(P1,P2)", g["res"], polys.get("res(P1,P2)"))
    rep.check("lc(P2)", g["lc"], polys.get("lc(P2)"))


def _cub_hyp(rep: Report, samples: int, jump: float):
    g = GOLDENS["cub-hyp"]
    P = MultiPoly.parse("(x1*x2 - 1)*(x2 + x1^3)", X2)
    expected = MultiPoly.parse("((x1-1)*x2 - 1)*((1+x1^3)*x2 + x1^3)", X2)
    rep.check("Moebius transform", True, moebius_transform(P, Matrix2(1, 0, 1, 1), 2) == expected)
    roots = sorted(format_rat(r.value) for r in projective_roots_above(P, [2]).real_roots)
    rep.check("roots above x1=2", g["roots_above_2"], roots)
    rep.check("multiset above x1=0", g["multiset_above_0"], list(projective_roots_above(P, [0]).multiset()))
    rep.check("desingularizing matrix", [["1", "0"], ["1", "1"]], desingularize_at(P, [0]).matrix.to_json()["a"])
    v = track_roots(P, BasePath.segment([-2], [2], samples), jump_threshold=jump).verdict
    rep.check("status", "CONSISTENT", v.status)
    rep.check("branch count", g["branch_count"], v.branch_count)
    rep.check("multiplicities", g["multiplicities"], list(v.multiplicity_vector))


def _circle_quartic(rep: Report, samples: int, jump: float):
    g = GOLDENS["prop4-circle"]
    P = MultiPoly.parse(CIRCLE_QUARTIC, X3)
    disc = discriminant_fixed(P, 4)
    target = MultiPoly.parse("2^14*(x1^2 + x2^2 - 1)^2*(x1^2 + x2^2)", X2)
    rep.check("discriminant", True, disc == target.scale(Fraction(g["disc_constant"])))
    pts = [(1, 0), (0, 1), (Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13))]
    rep.check("orders on circle", g["orders"], [disc.order_of_vanishing(p) for p in pts])
    v = track_roots(P, BasePath.circle([0, 0], 1, max(samples, 720)), jump_threshold=jump).verdict
    rep.check("branch count", g["branch_count"], v.branch_count)
    rep.check("multiplicities", g["multiplicities"], list(v.multiplicity_vector))
    rep.check("monodromy", g["monodromy"], v.monodromy)


def _finite_01(rep: Report, samples: int, jump: float):
    g = GOLDENS["finite-01"]
    P = MultiPoly.parse("(x1*x2 - 1)*((x1 - 1)*x2 - 1)^2", X2)
    v = check_finite_set(P, [[0], [1]])
    rep.check("delineable", g["delineable"], v.delineable)
    rep.check("projectively delineable", g["projectively_delineable"], v.projectively_delineable)
    for i, pt in enumerate(("0", "1")):
        rep.check(f"real multiset above {pt}", g[pt]["real"], list(v.real_multisets[i]))
        rep.check(f"projective multiset above {pt}", g[pt]["projective"], list(v.projective_multisets[i]))


def _lc_line(rep: Report, samples: int, jump: float):
    g = GOLDENS["lc-line"]
    P = MultiPoly.parse("x1*x3^3 + (x1^2 + x2^2)*x3^2 + 1", X3)
    rep.check("multiset above (0,0)", g["multiset_at_0"], list(projective_roots_above(P, [0, 0]).multiset()))
    rep.check(
        "multiset above (0,1/2)", g["multiset_generic"],
        list(projective_roots_above(P, [0, Fraction(1, 2)]).multiset()),
    )
    v = track_roots(P, BasePath.segment([0, -1], [0, 1], samples), jump_threshold=jump).verdict
    rep.check("status", "VIOLATION", v.status)
    wp = None if v.witness_point is None else [format_rat(c) for c in v.witness_point]
    rep.check("witness point", g["witness_point"], wp)


def _p_del_not_proj(rep: Report, samples: int, jump: float):
    for expr, g in GOLDENS["p-del-not-proj"].items():
        P = MultiPoly.parse(expr, X2)
        path = BasePath.segment([-1], [1], samples)
        for mode, key in (("real", "real_consistent"), ("projective", "projective_consistent")):
            v = track_roots(P, path, jump_threshold=jump, mode=mode).verdict
            rep.check(f"{expr} {mode} consistent", g[key], v.consistent)
            if not v.consistent:
                wp = [format_rat(c) for c in v.witness_point]
                rep.check(f"{expr} {mode} witness", g["witness_point"], wp)


EXAMPLES = {
    "scc": _scc,
    "cub-hyp": _cub_hyp,
    "prop4-circle": _circle_quartic,
    "finite-01": _finite_01,
    "lc-line": _lc_line,
    "p-del-not-proj": _p_del_not_proj,
}


def reproduce(
    example_id: str,
    samples: int = DEFAULT_SAMPLES,
    jump_threshold: float = DEFAULT_JUMP_THRESHOLD,
) -> Report:
    if example_id not in EXAMPLES:
        raise KeyError(f"unknown example {example_id!r}; choose from {sorted(EXAMPLES)}")
    rep = Report(example_id)
    EXAMPLES[example_id](rep, samples, jump_threshold)
    return rep
