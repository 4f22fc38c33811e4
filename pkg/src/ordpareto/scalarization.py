"""Weighted-sum scalarization and ordinal weight space decomposition.

Two weight conventions coexist: lambda weights act on tail vectors, mu
weights act directly on counting vectors. The two are linked by prefix
summation plus a positive normalization, so their argmin sets coincide.
All arithmetic is in exact rationals; cell boundaries are measure zero and
would be misclassified by floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Sequence

from ordpareto.core import DimensionMismatchError, OrdparetoError
from ordpareto.nondominance import PointSet, supporting_weights


def _as_fractions(weights: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(w) for w in weights)


def check_lambda(weights: Sequence) -> tuple[Fraction, ...]:
    """Validate a lambda vector: strictly positive, summing to one."""
    w = _as_fractions(weights)
    if any(x <= 0 for x in w):
        raise OrdparetoError(f"lambda weights must be strictly positive: {w}")
    if sum(w) != 1:
        raise OrdparetoError(f"lambda weights must sum to 1: {w}")
    return w


def check_mu(weights: Sequence) -> tuple[Fraction, ...]:
    """Validate a mu vector: strictly increasing, positive, summing to one."""
    w = _as_fractions(weights)
    if any(x <= 0 for x in w):
        raise OrdparetoError(f"mu weights must be strictly positive: {w}")
    if any(a >= b for a, b in zip(w, w[1:])):
        raise OrdparetoError(f"mu weights must be strictly increasing: {w}")
    if sum(w) != 1:
        raise OrdparetoError(f"mu weights must sum to 1: {w}")
    return w


def weighted_sum_solve(
    ps: PointSet, weights: Sequence
) -> tuple[Fraction, PointSet]:
    """Exact minimum of the weighted sum over a point set and all argmins."""
    lam = check_lambda(weights)
    if not ps.points:
        raise OrdparetoError("point set is empty")
    if len(lam) != len(ps.points[0]):
        raise DimensionMismatchError(
            f"{len(lam)} weights for points of dimension {len(ps.points[0])}"
        )
    values = [
        sum(l * y for l, y in zip(lam, point)) for point in ps.points
    ]
    best = min(values)
    keep = [i for i, v in enumerate(values) if v == best]
    return best, ps._sorted(keep, ps.space_tag)


def lambda_to_mu(weights: Sequence) -> tuple[Fraction, ...]:
    """Convert tail-space weights to normalized counting-space weights.

    mu_i is the prefix sum of lambda up to i, divided by
    sum_j (K - j + 1) * lambda_j so the result sums to one. The weighted
    sums under mu (over counting vectors) and lambda (over tails) differ by
    this positive factor only, so argmin sets coincide.
    """
    lam = check_lambda(weights)
    K = len(lam)
    denom = sum((K - j) * lam[j] for j in range(K))
    acc = Fraction(0)
    mu = []
    for l in lam:
        acc += l
        mu.append(acc / denom)
    return tuple(mu)


def mu_to_lambda(weights: Sequence) -> tuple[Fraction, ...]:
    """Convert counting-space weights back to normalized tail-space weights."""
    mu = check_mu(weights)
    lam = [mu[0]] + [b - a for a, b in zip(mu, mu[1:])]
    total = sum(lam)
    return tuple(l / total for l in lam)


@dataclass(frozen=True)
class Halfspace:
    """Inequality coeffs . lambda <= rhs over the full K-dimensional weight
    vector (no simplex substitution applied)."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def contains(self, lam: Sequence[Fraction]) -> bool:
        return sum(c * l for c, l in zip(self.coeffs, lam)) <= self.rhs


@dataclass(frozen=True)
class WeightCell:
    """The weights for which one non-dominated value is weighted-sum optimal.

    ``halfspaces`` describe the closed cell inside the weight simplex; for
    K <= 3 ``vertices`` lists the cell's corner points projected to
    (lambda_1,) or (lambda_1, lambda_2), in convex order. ``mu_vertices``
    are their full-length images under :func:`lambda_to_mu`.
    """

    value: tuple[int, ...]
    halfspaces: tuple[Halfspace, ...]
    vertices: tuple[tuple[Fraction, ...], ...] = ()
    mu_vertices: tuple[tuple[Fraction, ...], ...] = ()

    def contains(self, lam: Sequence) -> bool:
        lam = check_lambda(lam)
        return all(h.contains(lam) for h in self.halfspaces)


def _lift(projected: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(projected) + (1 - sum(projected),)


def _cell_vertices_k2(
    halfspaces: Sequence[Halfspace],
) -> list[tuple[Fraction, ...]]:
    # One free coordinate lambda_1 in [0, 1]; each halfspace restricts it to
    # an interval. Intersect them all.
    lo, hi = Fraction(0), Fraction(1)
    for h in halfspaces:
        # coeffs.(x, 1-x) <= rhs  ->  (c0 - c1) x <= rhs - c1
        a = h.coeffs[0] - h.coeffs[1]
        b = h.rhs - h.coeffs[1]
        if a > 0:
            hi = min(hi, b / a)
        elif a < 0:
            lo = max(lo, b / a)
        elif b < 0:
            return []
    if lo > hi:
        return []
    return [(lo,)] if lo == hi else [(lo,), (hi,)]


def _cell_vertices_k3(
    halfspaces: Sequence[Halfspace],
) -> list[tuple[Fraction, ...]]:
    # Work in (x, y) = (lambda_1, lambda_2), lambda_3 = 1 - x - y. Each
    # halfspace becomes a line a x + b y <= c; the simplex contributes
    # x >= 0, y >= 0, x + y <= 1. Enumerate pairwise line intersections and
    # keep the feasible ones.
    lines: list[tuple[Fraction, Fraction, Fraction]] = []
    for h in halfspaces:
        c0, c1, c2 = h.coeffs
        lines.append((c0 - c2, c1 - c2, h.rhs - c2))
    lines.append((Fraction(-1), Fraction(0), Fraction(0)))  # x >= 0
    lines.append((Fraction(0), Fraction(-1), Fraction(0)))  # y >= 0
    lines.append((Fraction(1), Fraction(1), Fraction(1)))  # x + y <= 1

    def feasible(x: Fraction, y: Fraction) -> bool:
        return all(a * x + b * y <= c for a, b, c in lines)

    vertices: list[tuple[Fraction, Fraction]] = []
    for (a1, b1, c1), (a2, b2, c2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = (c1 * b2 - c2 * b1) / det
        y = (a1 * c2 - a2 * c1) / det
        if feasible(x, y) and (x, y) not in vertices:
            vertices.append((x, y))
    if len(vertices) <= 2:
        return [tuple(v) for v in vertices]
    # Order counterclockwise around the centroid; exact comparisons only
    # (half-plane split, then cross products), no trig.
    cx = sum(v[0] for v in vertices) / len(vertices)
    cy = sum(v[1] for v in vertices) / len(vertices)

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def cmp(v, w):
        if half(v) != half(w):
            return half(v) - half(w)
        c = (v[0] - cx) * (w[1] - cy) - (v[1] - cy) * (w[0] - cx)
        return 0 if c == 0 else (-1 if c > 0 else 1)

    vertices.sort(key=cmp_to_key(cmp))
    return [tuple(v) for v in vertices]


def weight_space_decomposition(
    ps: PointSet, with_vertices: bool = True
) -> list[WeightCell]:
    """Decompose the open weight simplex into one cell per supported value.

    ``ps`` must already be Pareto-non-dominated (tail space, minimization).
    Each cell is the exact polyhedron of weights under which its value is
    weighted-sum minimal, intersected with the simplex. For K in {2, 3} the
    cell's vertices (and their mu-space images) are enumerated; for larger K
    only the halfspace description is returned.
    """
    if not ps.points:
        raise OrdparetoError("point set is empty")
    K = len(ps.points[0])
    values = sorted(set(ps.points))
    cells: list[WeightCell] = []
    for y in values:
        if supporting_weights(y, ps) is None:
            continue
        halfspaces = tuple(
            Halfspace(tuple(Fraction(a - b) for a, b in zip(y, other)), Fraction(0))
            for other in values
            if other != y
        )
        vertices: tuple = ()
        mu_vertices: tuple = ()
        if with_vertices and K in (2, 3):
            enum = _cell_vertices_k2 if K == 2 else _cell_vertices_k3
            verts = enum(list(halfspaces))
            vertices = tuple(verts)
            mus = []
            for v in verts:
                lam = _lift(v)
                if any(x <= 0 for x in lam):
                    # Boundary vertex: the mu map extends continuously.
                    mu = _prefix_normalize(lam)
                else:
                    mu = lambda_to_mu(lam)
                mus.append(tuple(mu))
            mu_vertices = tuple(mus)
        cells.append(WeightCell(tuple(y), halfspaces, vertices, mu_vertices))
    return cells


def _prefix_normalize(lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
    K = len(lam)
    denom = sum((K - j) * lam[j] for j in range(K))
    if denom == 0:
        raise OrdparetoError("degenerate weight vector")
    acc = Fraction(0)
    out = []
    for l in lam:
        acc += l
        out.append(acc / denom)
    return tuple(out)
