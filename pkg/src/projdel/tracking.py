"""Sampled tracking of projective root branches along one-parameter base paths.

Sample points are exact rationals and the root set above each sample is
exact; only the circle embedding and the matching between consecutive
samples use floats.  A CONSISTENT verdict is sampled evidence of projective
delineability, a VIOLATION is a certificate at the witnessed sample.

Besides the uniform grid, every path samples the rational parameters where
the path meets the zero set of the leading coefficient or of the fixed-degree
discriminant, so degenerate fibres at rational parameters are never stepped
over.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .elimination import discriminant_fixed
from .errors import AmbiguousMatchError, DimensionError, NullifiedError, TrackingError
from .poly import MultiPoly, UniPoly, as_rat, format_rat
from .projective_line import NumProjPoint, chordal_distance
from .roots import isolate_real_roots, sign_at_root
from .delineability import projective_roots_above

__all__ = [
    "DEFAULT_SAMPLES",
    "DEFAULT_JUMP_THRESHOLD",
    "BasePath",
    "TraceRow",
    "RootTrace",
    "TrackVerdict",
    "TrackResult",
    "track_roots",
    "BranchReport",
    "section_sign_check",
    "cycle_notation",
]

DEFAULT_SAMPLES = 256
DEFAULT_JUMP_THRESHOLD = 0.2
MIN_SAMPLES = 16
# denominators of rational circle parameters u = tan(theta/2)
_CIRCLE_DENOMINATOR = 10 ** 6

LIMITATIONS = (
    "nullification checked at samples only",
    "order-invariance not verified symbolically; checked at samples only",
)


@dataclass(frozen=True)
class _Sample:
    t: float            # reported parameter: [0, 1] on segments, angle on circles
    key: Fraction | None  # exact parameter (segment t, circle u; None for u = inf)
    point: tuple
    depth: int = 0


@dataclass(frozen=True)
class BasePath:
    """A segment ``start + t (end - start)``, ``t in [0, 1]``, or a circle.

    Circles lie in the ``(x1, x2)`` plane of the base space, traversed
    counter-clockwise from ``center + (radius, 0)``; the parameter is the
    angle in ``[0, 2 pi]``.
    """

    kind: str
    start: tuple = ()
    end: tuple = ()
    center: tuple = ()
    radius: Fraction = Fraction(0)
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if self.kind not in ("segment", "circle"):
            raise ValueError(f"unknown path kind {self.kind!r}")
        if self.samples < MIN_SAMPLES:
            raise ValueError(f"need at least {MIN_SAMPLES} samples, got {self.samples}")
        if self.kind == "segment":
            s = tuple(as_rat(v) for v in self.start)
            e = tuple(as_rat(v) for v in self.end)
            if len(s) != len(e) or not s:
                raise DimensionError("segment endpoints must have the same positive dimension")
            object.__setattr__(self, "start", s)
            object.__setattr__(self, "end", e)
        else:
            c = tuple(as_rat(v) for v in self.center)
            if len(c) != 2:
                raise DimensionError("circles live in a two-dimensional base")
            r = as_rat(self.radius)
            if r <= 0:
                raise ValueError("radius must be positive")
            object.__setattr__(self, "center", c)
            object.__setattr__(self, "radius", r)

    @classmethod
    def segment(cls, start: Sequence, end: Sequence, samples: int = DEFAULT_SAMPLES) -> "BasePath":
        return cls("segment", start=tuple(start), end=tuple(end), samples=samples)

    @classmethod
    def circle(cls, center: Sequence, radius, samples: int = DEFAULT_SAMPLES) -> "BasePath":
        return cls("circle", center=tuple(center), radius=radius, samples=samples)

    def with_samples(self, samples: int) -> "BasePath":
        return BasePath(self.kind, self.start, self.end, self.center, self.radius, samples)

    @property
    def closed(self) -> bool:
        return self.kind == "circle"

    @property
    def dim(self) -> int:
        return len(self.start) if self.kind == "segment" else 2

    def to_json(self) -> dict:
        if self.kind == "segment":
            return {
                "kind": "segment",
                "start": [format_rat(v) for v in self.start],
                "end": [format_rat(v) for v in self.end],
                "samples": self.samples,
            }
        return {
            "kind": "circle",
            "center": [format_rat(v) for v in self.center],
            "radius": format_rat(self.radius),
            "samples": self.samples,
        }

    # -- exact points ------------------------------------------------------

    def point_at(self, key) -> tuple:
        """Base point at exact parameter ``key`` (circle: ``u``, ``None`` is ``u = inf``)."""
        if self.kind == "segment":
            t = as_rat(key)
            return tuple(a + t * (b - a) for a, b in zip(self.start, self.end))
        (c1, c2), r = self.center, self.radius
        if key is None:
            return (c1 - r, c2)
        u = as_rat(key)
        den = 1 + u * u
        return (c1 + r * (1 - u * u) / den, c2 + r * 2 * u / den)

    def _sample(self, t: float, key, depth: int = 0) -> _Sample:
        return _Sample(t, key, self.point_at(key), depth)

    def _sample_at_angle(self, theta: float, depth: int = 0) -> _Sample:
        if math.isclose(theta, math.pi, rel_tol=0, abs_tol=1e-15):
            return self._sample(math.pi, None, depth)
        u = Fraction(math.tan(theta / 2)).limit_denominator(_CIRCLE_DENOMINATOR)
        return self._sample(_angle(u, theta >= math.pi), u, depth)

    def grid(self) -> list[_Sample]:
        n = self.samples
        if self.kind == "segment":
            return [self._sample(k / n, Fraction(k, n)) for k in range(n + 1)]
        out = [self._sample(0.0, Fraction(0))]
        for k in range(1, n):
            out.append(self._sample_at_angle(2 * math.pi * k / n))
        if n % 2 == 0:
            out[n // 2] = self._sample(math.pi, None)
        out.append(_Sample(2 * math.pi, Fraction(0), out[0].point))
        return out

    def midpoint(self, a: _Sample, b: _Sample) -> _Sample:
        depth = max(a.depth, b.depth) + 1
        if self.kind == "segment":
            return self._sample((a.t + b.t) / 2, (a.key + b.key) / 2, depth)
        return self._sample_at_angle((a.t + b.t) / 2, depth)

    # -- critical parameters -----------------------------------------------

    def restrict(self, f: MultiPoly) -> UniPoly:
        """``f`` along the path as a polynomial in the exact parameter.

        For circles the result is the numerator of ``f`` in ``u = tan(theta/2)``
        after clearing the denominator ``(1 + u^2)^deg f``.
        """
        if f.nvars != self.dim:
            raise DimensionError(f"{f.vars} do not match a {self.dim}-dimensional path")
        if self.kind == "segment":
            coords = [
                UniPoly([a, b - a]) for a, b in zip(self.start, self.end)
            ]
            acc = UniPoly()
            for e, c in f.terms.items():
                term = UniPoly.constant(c)
                for p, k in zip(coords, e):
                    if k:
                        term = term * p ** k
                acc = acc + term
            return acc
        (c1, c2), r = self.center, self.radius
        D = UniPoly([1, 0, 1])
        N1 = UniPoly([c1 + r, 0, c1 - r])
        N2 = UniPoly([c2, 2 * r, c2])
        T = f.total_degree() if not f.is_zero() else 0
        acc = UniPoly()
        for (i, j), c in f.terms.items():
            acc = acc + UniPoly.constant(c) * N1 ** i * N2 ** j * D ** (T - i - j)
        return acc

    def critical_samples(self, polys: Sequence[MultiPoly]) -> list[_Sample]:
        keys = set()
        for f in polys:
            g = self.restrict(f)
            if g.is_zero() or len(g.coeffs) == 1:
                continue
            for r in isolate_real_roots(g):
                if r.is_exact:
                    keys.add(r.lo)
        out = []
        for k in sorted(keys):
            if self.kind == "segment":
                if 0 < k < 1:
                    out.append(self._sample(float(k), k))
            else:
                theta = _angle(k, k < 0)
                if 0 < theta < 2 * math.pi:
                    out.append(self._sample(theta, k))
        return out

    def samples_with_critical(self, polys: Sequence[MultiPoly]) -> list[_Sample]:
        grid = self.grid()
        seen = {s.key for s in grid[:-1]} if self.closed else {s.key for s in grid}
        extra = [s for s in self.critical_samples(polys) if s.key not in seen]
        if not extra:
            return grid
        last = grid[-1]
        body = sorted(grid[:-1] + extra, key=lambda s: s.t)
        return body + [last]


def _angle(u: Fraction, upper: bool) -> float:
    theta = 2 * math.atan(float(u))
    if theta < 0 or (upper and theta == 0):
        theta += 2 * math.pi
    return theta


# ---------------------------------------------------------------------------
# traces and verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceRow:
    t: float
    branch_id: int
    point: NumProjPoint
    multiplicity: int
    is_infinity: bool
    base_point: tuple


@dataclass
class RootTrace:
    """Per-sample branch data; ``rows`` are ordered by ``(t, branch_id)``."""

    rows: list = field(default_factory=list)

    def branches(self) -> dict:
        out: dict = {}
        for r in self.rows:
            out.setdefault(r.branch_id, []).append(r)
        return out

    def parameters(self) -> list[float]:
        seen = []
        for r in self.rows:
            if not seen or seen[-1] != r.t:
                seen.append(r.t)
        return seen

    def to_csv_rows(self) -> list[list[str]]:
        return [
            [
                repr(r.t),
                str(r.branch_id),
                repr(r.point.u),
                repr(r.point.v),
                str(r.multiplicity),
                "1" if r.is_infinity else "0",
            ]
            for r in self.rows
        ]


@dataclass(frozen=True)
class TrackVerdict:
    status: str
    branch_count: int
    multiplicity_vector: tuple
    monodromy: str | None = None
    witness: float | None = None
    witness_point: tuple | None = None
    reason: str | None = None
    samples_used: int = 0
    mode: str = "projective"
    limitations: tuple = LIMITATIONS

    @property
    def consistent(self) -> bool:
        return self.status == "CONSISTENT"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "mode": self.mode,
            "branch_count": self.branch_count,
            "multiplicity_vector": list(self.multiplicity_vector),
            "monodromy": self.monodromy,
            "witness": self.witness,
            "witness_point": (
                None if self.witness_point is None else [format_rat(v) for v in self.witness_point]
            ),
            "reason": self.reason,
            "samples_used": self.samples_used,
            "limitations": list(self.limitations),
        }


@dataclass
class TrackResult:
    trace: RootTrace
    verdict: TrackVerdict

    def __iter__(self):
        yield self.trace
        yield self.verdict


def cycle_notation(perm: Sequence[int]) -> str:
    """``perm[i]`` is the image of ``i + 1`` (1-based); identity is ``"()"``.

    >>> cycle_notation([2, 1])
    '(1 2)'
    >>> cycle_notation([1, 3, 2, 4])
    '(2 3)'
    """
    seen = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        if len(cyc) > 1:
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


@dataclass
class _Fibre:
    sample: _Sample
    points: list  # NumProjPoint
    mults: list
    roots: list  # IsolatedRoot or None for infinity


def _fibre(P: MultiPoly, s: _Sample, mode: str) -> _Fibre:
    try:
        rs = projective_roots_above(P, s.point)
    except NullifiedError as exc:
        raise NullifiedError(str(exc), point=s.point, parameter=s.t) from exc
    pts, mults, roots = [], [], []
    for num, m, r in rs.embedded():
        if r is None and mode == "real":
            continue
        pts.append(num)
        mults.append(m)
        roots.append(r)
    return _Fibre(s, pts, mults, roots)


_OK, _AMBIGUOUS, _JUMP = "ok", "ambiguous", "jump"


def _match(prev: _Fibre, nxt: _Fibre, threshold: float, margin: float):
    """Greedy nearest matching; returns ``(status, {prev index: next index})``.

    A match at distance ``d`` is ambiguous when a competing candidate lies
    within ``min(margin, d)`` of it: for small steps the competitor must be
    closer than the step itself, so resampling resolves near-ties between
    well-separated branches.
    """
    pairs = sorted(
        (chordal_distance(a, b), i, j)
        for i, a in enumerate(prev.points)
        for j, b in enumerate(nxt.points)
    )
    used_i, used_j, mapping = set(), set(), {}
    status = _OK
    for d, i, j in pairs:
        if d > threshold:
            break
        if i in used_i or j in used_j:
            continue
        used_i.add(i)
        used_j.add(j)
        mapping[i] = j
        tol = min(margin, d)
        for d2, i2, j2 in pairs:
            if d2 > d + tol:
                break
            if (i2 == i) != (j2 == j) and d2 <= threshold:
                status = _AMBIGUOUS
    if len(mapping) < min(len(prev.points), len(nxt.points)) and status == _OK:
        status = _JUMP
    return status, mapping


def track_roots(
    P: MultiPoly,
    path: BasePath,
    *,
    jump_threshold: float = DEFAULT_JUMP_THRESHOLD,
    matching_margin: float | None = None,
    mode: str = "projective",
    resample_rounds: int = 1,
) -> TrackResult:
    """Track the projective (``mode="real"``: affine real) roots of ``P`` along ``path``.

    Raises :class:`NullifiedError` on a nullified sample and
    :class:`AmbiguousMatchError` when matching stays ambiguous after
    ``resample_rounds`` rounds of bisection.
    """
    if not 0 < jump_threshold < 1:
        raise ValueError("jump_threshold must lie in (0, 1)")
    if mode not in ("projective", "real"):
        raise ValueError(f"unknown tracking mode {mode!r}")
    if P.is_zero() or P.degree_in_last() < 1:
        raise TrackingError("tracking needs positive degree in the last variable")
    if P.nvars - 1 != path.dim:
        raise DimensionError(f"{P.vars} do not match a {path.dim}-dimensional base path")
    margin = 0.25 * jump_threshold if matching_margin is None else matching_margin
    d = P.degree_in_last()
    crit = [P.coefficient_in_last(d)]
    if d >= 2:
        crit.append(discriminant_fixed(P, d))
    samples = path.samples_with_critical(crit)

    trace = RootTrace()
    first = _fibre(P, samples[0], mode)
    ids = list(range(1, len(first.points) + 1))
    next_id = len(ids) + 1
    start_mults = tuple(first.mults)
    _emit(trace, first, ids)

    violation = None
    used = 1
    cur = first
    queue = deque(samples[1:])
    while queue:
        s = queue[0]
        fib = _fibre(P, s, mode)
        status, mapping = _match(cur, fib, jump_threshold, margin)
        same_count = len(fib.points) == len(cur.points)
        if same_count and status != _OK:
            if max(cur.sample.depth, s.depth) < resample_rounds:
                queue.appendleft(path.midpoint(cur.sample, s))
                continue
            if status == _AMBIGUOUS:
                raise AmbiguousMatchError(
                    f"ambiguous branch matching between t={cur.sample.t} and t={s.t}",
                    parameter=s.t,
                )
        queue.popleft()
        used += 1
        new_ids = [0] * len(fib.points)
        for i, j in mapping.items():
            new_ids[j] = ids[i]
        for j in range(len(new_ids)):
            if not new_ids[j]:
                new_ids[j] = next_id
                next_id += 1
        if violation is None:
            if not same_count:
                violation = ("branch_count_change", s)
            elif status == _JUMP:
                violation = ("discontinuity", s)
            elif any(cur.mults[i] != fib.mults[j] for i, j in mapping.items()):
                violation = ("multiplicity_change", s)
        _emit(trace, fib, new_ids)
        ids, cur = new_ids, fib

    monodromy = None
    if path.closed and violation is None:
        # the last sample is the first base point again, same root order
        perm = [ids.index(b) + 1 for b in range(1, len(ids) + 1)] if ids else []
        monodromy = cycle_notation(perm)
        if monodromy != "()":
            violation = ("monodromy", cur.sample)

    if violation is None:
        verdict = TrackVerdict(
            "CONSISTENT", len(start_mults), start_mults, monodromy,
            samples_used=used, mode=mode,
        )
    else:
        reason, s = violation
        verdict = TrackVerdict(
            "VIOLATION", len(start_mults), start_mults, monodromy,
            witness=s.t, witness_point=s.point, reason=reason,
            samples_used=used, mode=mode,
        )
    return TrackResult(trace, verdict)


def _emit(trace: RootTrace, fib: _Fibre, ids: list):
    for j in sorted(range(len(ids)), key=lambda j: ids[j]):
        trace.rows.append(
            TraceRow(
                fib.sample.t, ids[j], fib.points[j], fib.mults[j],
                fib.roots[j] is None, fib.sample.point,
            )
        )


# ---------------------------------------------------------------------------
# sections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BranchReport:
    branch_id: int
    classification: str  # vanishes_identically | never_vanishes | MIXED
    zero_samples: int
    total_samples: int
    witness: float | None = None

    def to_json(self) -> dict:
        return {
            "branch_id": self.branch_id,
            "classification": self.classification,
            "zero_samples": self.zero_samples,
            "total_samples": self.total_samples,
            "witness": self.witness,
        }


def section_sign_check(
    P: MultiPoly,
    Q: MultiPoly,
    path: BasePath,
    *,
    jump_threshold: float = DEFAULT_JUMP_THRESHOLD,
) -> list[BranchReport]:
    """Classify each branch of ``P`` by whether ``H^q(Q)`` vanishes on it.

    Vanishing is decided exactly at every sample: at an affine root ``r``
    through the sign of ``E_x(Q)`` at ``r``, at infinity through ``c_q(x)``.
    """
    if P.vars != Q.vars:
        raise DimensionError(f"variable mismatch: {P.vars} vs {Q.vars}")
    result = track_roots(P, path, jump_threshold=jump_threshold)
    if not result.verdict.consistent:
        raise TrackingError(
            f"tracking of P failed ({result.verdict.reason} at t={result.verdict.witness})"
        )
    q = Q.degree_in_last() if not Q.is_zero() else 0
    lead_q = Q.coefficient_in_last(q)
    cache: dict = {}
    rows_by_branch = result.trace.branches()
    # roots are recomputed from the sample's base point to get exact data
    reports = []
    for b, rows in sorted(rows_by_branch.items()):
        zeros = 0
        witness_zero = witness_nonzero = None
        for row in rows:
            vanishes = _q_vanishes(P, Q, lead_q, row, cache)
            if vanishes:
                zeros += 1
                witness_zero = row.t if witness_zero is None else witness_zero
            elif witness_nonzero is None:
                witness_nonzero = row.t
        if zeros == len(rows):
            cls, w = "vanishes_identically", None
        elif zeros == 0:
            cls, w = "never_vanishes", None
        else:
            cls, w = "MIXED", witness_zero
        reports.append(BranchReport(b, cls, zeros, len(rows), w))
    return reports


def _q_vanishes(P, Q, lead_q, row: TraceRow, cache: dict) -> bool:
    x = row.base_point
    if x not in cache:
        v = Q.evaluate_partial(x)
        if v.is_zero():
            raise NullifiedError(f"Q is nullified above {[format_rat(c) for c in x]}", point=x)
        rs = projective_roots_above(P, x)
        cache[x] = (v, [r for _, _, r in rs.embedded()], [p for p, _, _ in rs.embedded()])
    v, roots, pts = cache[x]
    # locate the exact root behind this row by its embedded point
    k = min(range(len(pts)), key=lambda i: chordal_distance(pts[i], row.point))
    r = roots[k]
    if r is None:
        return not lead_q.evaluate(x)
    return sign_at_root(v, r) == 0
