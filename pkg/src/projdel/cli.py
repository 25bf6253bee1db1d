"""Command-line front end.

Polynomial arguments are a JSON file, ``-`` for JSON on stdin, or an
expression when ``--vars`` names the variables (last one is ``x_n``)::

    projdel transform "(x1*x2-1)*(x2+x1^3)" --vars x1,x2 --matrix "1,0;1,1" --degree 2
    projdel track "x1^2*x2^2+1" --vars x1,x2 --segment=-1;1 --format csv

Exit codes: 0 success, 1 failed reproduction, 2 input error, 3 precondition
failure (nullification, degree bound, unresolved tracking).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__
from .binary_forms import BinaryForm, Matrix2, homogenize, moebius_transform, pullback
from .delineability import check_finite_set, projective_roots_above
from .elimination import discriminant_fixed, resultant_fixed
from .errors import DimensionError, ParseError, ProjDelError
from .poly import MultiPoly, UniPoly, parse_rat
from .projection import cell_bounds_1d, project
from .reproduce import EXAMPLES, reproduce
from .roots import projective_roots
from .tracking import (
    DEFAULT_JUMP_THRESHOLD,
    DEFAULT_SAMPLES,
    MIN_SAMPLES,
    BasePath,
    section_sign_check,
    track_roots,
)

__all__ = ["Config", "main", "plot_data"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


@dataclass(frozen=True)
class Config:
    samples: int = DEFAULT_SAMPLES
    jump_threshold: float = DEFAULT_JUMP_THRESHOLD
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.samples < MIN_SAMPLES:
            raise ValueError(f"samples must be at least {MIN_SAMPLES}")
        if not 0 < self.jump_threshold < 1:
            raise ValueError("jump threshold must lie in (0, 1)")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------


def _read_json(source: str):
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: malformed JSON: {exc}") from exc


def _vars(args) -> list | None:
    if not getattr(args, "vars", None):
        return None
    return [v.strip() for v in args.vars.split(",") if v.strip()]


def load_poly(source: str, vars: Sequence[str] | None) -> MultiPoly:
    if source == "-" or os.path.isfile(source):
        data = _read_json(source)
        if not isinstance(data, dict) or "vars" not in data:
            raise ParseError(f"{source}: expected a polynomial JSON object with 'vars'")
        return MultiPoly.from_json(data)
    if vars is None:
        raise ParseError(f"{source!r} is not a file; pass --vars to read it as an expression")
    return MultiPoly.parse(source, vars)


def load_univariate(source: str, vars: Sequence[str] | None) -> UniPoly:
    if source == "-" or os.path.isfile(source):
        data = _read_json(source)
        if isinstance(data, dict) and "vars" not in data and "coeffs" in data:
            return UniPoly.from_json(data)
    P = load_poly(source, vars)
    if P.nvars != 1:
        raise DimensionError("expected a univariate polynomial")
    return P.to_unipoly()


def _rats(text: str) -> list[Fraction]:
    try:
        return [parse_rat(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational list {text!r}") from exc


def _points(text: str) -> list[list[Fraction]]:
    return [_rats(p) for p in text.split(";") if p.strip()]


def _matrix(text: str) -> Matrix2:
    if os.path.isfile(text) or text == "-":
        return Matrix2.from_json(_read_json(text))
    rows = _points(text)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ParseError("matrix must look like 'a11,a12;a21,a22'")
    try:
        return Matrix2.from_rows(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _path(args, cfg: Config) -> BasePath:
    if args.segment and args.circle:
        raise ParseError("give either --segment or --circle")
    if args.segment:
        pts = _points(args.segment)
        if len(pts) != 2:
            raise ParseError("segment must look like 'a1,..;b1,..'")
        return BasePath.segment(pts[0], pts[1], cfg.samples)
    if args.circle:
        parts = _points(args.circle)
        if len(parts) != 2 or len(parts[1]) != 1:
            raise ParseError("circle must look like 'c1,c2;r'")
        return BasePath.circle(parts[0], parts[1][0], cfg.samples)
    raise ParseError("a base path is required (--segment or --circle)")


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dump_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


TRACK_HEADER = ["t", "branch_id", "u", "v", "multiplicity", "is_infinity"]


def plot_data(polys: Sequence[MultiPoly], path: BasePath, jump_threshold: float = DEFAULT_JUMP_THRESHOLD) -> str:
    """Wide CSV: ``t`` then ``p{k}b{i}_u, p{k}b{i}_v`` per branch; blanks where absent."""
    columns: dict = {}
    ts: dict = {}
    for k, P in enumerate(polys, 1):
        trace = track_roots(P, path, jump_threshold=jump_threshold).trace
        for row in trace.rows:
            key = (k, row.branch_id)
            columns.setdefault(key, {})[row.t] = row.point
            ts[row.t] = None
    keys = sorted(columns)
    header = ["t"]
    for k, b in keys:
        header += [f"p{k}b{b}_u", f"p{k}b{b}_v"]
    if not keys:
        return _dump_csv(header, [])
    rows = []
    for t in sorted(ts):
        row = [repr(t)]
        for key in keys:
            pt = columns[key].get(t)
            row += ["", ""] if pt is None else [repr(pt.u), repr(pt.v)]
        rows.append(row)
    return _dump_csv(header, rows)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_homogenize(args, cfg):
    P = load_poly(args.poly, _vars(args))
    d = args.degree if args.degree is not None else P.degree_in_last()
    return _dump_json(homogenize(P, d).to_json())


def _cmd_pullback(args, cfg):
    return _dump_json(pullback(BinaryForm.from_json(_read_json(args.form))).to_json())


def _cmd_transform(args, cfg):
    P = load_poly(args.poly, _vars(args))
    d = args.degree if args.degree is not None else P.degree_in_last()
    return _dump_json(moebius_transform(P, _matrix(args.matrix), d).to_json())


def _cmd_resultant(args, cfg):
    vs = _vars(args)
    P, Q = load_poly(args.p_poly, vs), load_poly(args.q_poly, vs)
    p = args.p if args.p is not None else P.degree_in_last()
    q = args.q if args.q is not None else Q.degree_in_last()
    return _dump_json(resultant_fixed(P, Q, p, q).to_json())


def _cmd_discriminant(args, cfg):
    P = load_poly(args.poly, _vars(args))
    p = args.p if args.p is not None else P.degree_in_last()
    return _dump_json(discriminant_fixed(P, p).to_json())


def _cmd_roots(args, cfg):
    u = load_univariate(args.poly, _vars(args))
    d = args.degree if args.degree is not None else len(u.coeffs) - 1
    return _dump_json(projective_roots(u, d).to_json())


def _cmd_roots_above(args, cfg):
    P = load_poly(args.poly, _vars(args))
    return _dump_json(projective_roots_above(P, _rats(args.point)).to_json())


def _cmd_track(args, cfg):
    P = load_poly(args.poly, _vars(args))
    res = track_roots(P, _path(args, cfg), jump_threshold=cfg.jump_threshold, mode=args.mode)
    if cfg.format == "csv":
        return _dump_csv(TRACK_HEADER, res.trace.to_csv_rows())
    rows = [dict(zip(TRACK_HEADER, r)) for r in res.trace.to_csv_rows()]
    return _dump_json({"verdict": res.verdict.to_json(), "trace": rows})


def _cmd_check_finite(args, cfg):
    P = load_poly(args.poly, _vars(args))
    return _dump_json(check_finite_set(P, _points(args.points)).to_json())


def _cmd_project(args, cfg):
    vs = _vars(args)
    F = [load_poly(s, vs) for s in args.polys]
    return _dump_json(project(F, args.mode).to_json())


def _cmd_cell(args, cfg):
    vs = _vars(args)
    F = [load_poly(s, vs) for s in args.polys]
    return _dump_json(cell_bounds_1d(F, parse_rat(args.sample), args.mode).to_json())


def _cmd_section_check(args, cfg):
    vs = _vars(args)
    P, Q = load_poly(args.p_poly, vs), load_poly(args.q_poly, vs)
    reports = section_sign_check(P, Q, _path(args, cfg), jump_threshold=cfg.jump_threshold)
    return _dump_json({"branches": [r.to_json() for r in reports]})


def _cmd_plot_data(args, cfg):
    vs = _vars(args)
    F = [load_poly(s, vs) for s in args.polys]
    return plot_data(F, _path(args, cfg), cfg.jump_threshold)


def _cmd_reproduce(args, cfg):
    ids = sorted(EXAMPLES) if args.id == "all" else [args.id]
    reports = [reproduce(i, cfg.samples, cfg.jump_threshold) for i in ids]
    payload = reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]}
    ok = all(r.status == "PASS" for r in reports)
    return _dump_json(payload), (EXIT_OK if ok else EXIT_FAIL)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < MIN_SAMPLES:
        raise argparse.ArgumentTypeError(f"samples must be at least {MIN_SAMPLES}")
    return v


def _threshold(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("jump threshold must lie in (0, 1)")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variables; enables expression input")
    common.add_argument("--samples", type=_positive_int, default=Config.samples)
    common.add_argument("--jump-threshold", type=_threshold, default=Config.jump_threshold)
    common.add_argument("--format", choices=("json", "csv"), default=Config.format)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    pathopts = argparse.ArgumentParser(add_help=False)
    pathopts.add_argument("--segment", help="'a1,..;b1,..' (use --segment=... for negative starts)")
    pathopts.add_argument("--circle", help="'c1,c2;r'")

    parser = argparse.ArgumentParser(prog="projdel", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, parents=(common,)):
        p = sub.add_parser(name, help=help, parents=list(parents))
        p.set_defaults(func=func)
        return p

    p = add("homogenize", _cmd_homogenize, "binary form H^d(P)")
    p.add_argument("poly")
    p.add_argument("--degree", type=int)

    p = add("pullback", _cmd_pullback, "pull a binary form back to y = 1")
    p.add_argument("form", help="binary form JSON file or '-'")

    p = add("transform", _cmd_transform, "Moebius transform A^{*d} P")
    p.add_argument("poly")
    p.add_argument("--matrix", required=True, help="'a11,a12;a21,a22' or a JSON file")
    p.add_argument("--degree", type=int)

    p = add("resultant", _cmd_resultant, "fixed-degree resultant Res^{p,q}")
    p.add_argument("p_poly", metavar="P")
    p.add_argument("q_poly", metavar="Q")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)

    p = add("discriminant", _cmd_discriminant, "fixed-degree discriminant Disc^p")
    p.add_argument("poly")
    p.add_argument("--p", type=int)

    p = add("roots", _cmd_roots, "projective roots of a univariate polynomial")
    p.add_argument("poly")
    p.add_argument("--degree", type=int)

    p = add("roots-above", _cmd_roots_above, "projective roots above a base point")
    p.add_argument("poly")
    p.add_argument("--point", required=True, help="'a1,a2,..'")

    p = add("track", _cmd_track, "track root branches along a path", (common, pathopts))
    p.add_argument("poly")
    p.add_argument("--mode", choices=("projective", "real"), default="projective")

    p = add("check-finite", _cmd_check_finite, "delineability over a finite base set")
    p.add_argument("poly")
    p.add_argument("--points", required=True, help="'a1,..;b1,..;...'")

    p = add("project", _cmd_project, "classical or projective projection set")
    p.add_argument("polys", nargs="+")
    p.add_argument("--mode", choices=("classical", "projective"), default="classical")

    p = add("cell", _cmd_cell, "one-dimensional cell around a sample")
    p.add_argument("polys", nargs="+")
    p.add_argument("--sample", required=True)
    p.add_argument("--mode", choices=("classical", "projective"), default="classical")

    p = add("section-check", _cmd_section_check, "vanishing of Q on the branches of P", (common, pathopts))
    p.add_argument("p_poly", metavar="P")
    p.add_argument("q_poly", metavar="Q")

    p = add("reproduce", _cmd_reproduce, "recompute a worked example against goldens")
    p.add_argument("id", choices=sorted(EXAMPLES) + ["all"])

    p = add("plot-data", _cmd_plot_data, "CSV of branch coordinates for plotting", (common, pathopts))
    p.add_argument("polys", nargs="+")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = Config(args.samples, args.jump_threshold, args.output, args.format)
    try:
        out = args.func(args, cfg)
    except (ParseError, DimensionError) as exc:
        print(f"projdel: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProjDelError as exc:
        print(f"projdel: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OSError, ValueError) as exc:
        print(f"projdel: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
