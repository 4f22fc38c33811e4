"""Non-dominated subsets of finite point sets under Pareto, tail and head cones.

The filters work on :class:`PointSet`, a list of integer vectors with stable
ids. Duplicated values are all retained by the filters; collapsing
value-equal *solutions* is the solvers' job.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ordpareto.core import (
    A_HEAD,
    A_TAIL,
    ConeMatrix,
    DimensionMismatchError,
    OrdparetoError,
    pareto_dominates,
)
from ordpareto.simplex import OPTIMAL, solve_lp

COUNTING = "counting"
TAIL = "tail"
HEAD = "head"
MIXED = "mixed"


class EmptyPointSetError(OrdparetoError):
    """Filters require at least one point."""


@dataclass(frozen=True)
class PointSet:
    """A finite list of equal-length integer vectors with stable ids."""

    points: tuple[tuple[int, ...], ...]
    ids: tuple = ()
    space_tag: str = TAIL

    def __post_init__(self):
        points = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", points)
        ids = self.ids or tuple(range(len(points)))
        if len(ids) != len(points):
            raise OrdparetoError(
                f"{len(ids)} ids for {len(points)} points"
            )
        if len(set(ids)) != len(ids):
            raise OrdparetoError("point ids must be unique")
        object.__setattr__(self, "ids", tuple(ids))
        if points:
            dim = len(points[0])
            if any(len(p) != dim for p in points):
                raise DimensionMismatchError("points have differing lengths")

    def __len__(self) -> int:
        return len(self.points)

    def _sorted(self, keep: list[int], tag: str) -> "PointSet":
        order = sorted(keep, key=lambda i: (self.points[i], self.ids[i]))
        return PointSet(
            tuple(self.points[i] for i in order),
            tuple(self.ids[i] for i in order),
            tag,
        )


def _require_nonempty(ps: PointSet) -> None:
    if not ps.points:
        raise EmptyPointSetError("point set is empty")


def pareto_filter(ps: PointSet, sense: str = "min") -> PointSet:
    """Keep the points without a strict Pareto dominator, sorted
    lexicographically. Duplicates of a retained value are all retained."""
    _require_nonempty(ps)
    if sense not in ("min", "max"):
        raise OrdparetoError(f"sense must be 'min' or 'max': {sense!r}")
    pts = ps.points
    keep = []
    for i, p in enumerate(pts):
        if sense == "min":
            dominated = any(pareto_dominates(q, p) for q in pts)
        else:
            dominated = any(pareto_dominates(p, q) for q in pts)
        if not dominated:
            keep.append(i)
    return ps._sorted(keep, ps.space_tag)


def cone_filter(ps: PointSet, cone: ConeMatrix, sense: str = "min") -> PointSet:
    """Keep the points not cone-dominated by any other point.

    Dominance is evaluated directly from the definition: u dominates y
    (minimization) iff A(y - u) >= 0 and u != y. This is the oracle side of
    the non-dominance mapping theorem; it never transforms the points.
    """
    _require_nonempty(ps)
    if sense not in ("min", "max"):
        raise OrdparetoError(f"sense must be 'min' or 'max': {sense!r}")

    def dominates(u, y):
        if u == y:
            return False
        diff = (
            tuple(a - b for a, b in zip(y, u))
            if sense == "min"
            else tuple(a - b for a, b in zip(u, y))
        )
        return all(component >= 0 for component in cone.apply(diff))

    keep = [
        i
        for i, p in enumerate(ps.points)
        if not any(dominates(q, p) for q in ps.points)
    ]
    return ps._sorted(keep, ps.space_tag)


def tail_filter(ps: PointSet) -> PointSet:
    """Cone filter under the ordinal (tail) cone, minimization."""
    dim = len(ps.points[0]) if ps.points else 1
    return cone_filter(ps, ConeMatrix(dim, A_TAIL), "min")


def head_filter(ps: PointSet) -> PointSet:
    """Cone filter under the head cone, maximization."""
    dim = len(ps.points[0]) if ps.points else 1
    return cone_filter(ps, ConeMatrix(dim, A_HEAD), "max")


def mapping_check(ps: PointSet, cone: ConeMatrix) -> bool:
    """Verify the non-dominance mapping on one point set.

    Compares, as multisets of values, the transformed cone-non-dominated
    points with the Pareto-non-dominated points of the transformed set. The
    two sides are computed independently and must agree whenever the cone
    matrix has full rank (true for the tail matrix by construction).
    """
    _require_nonempty(ps)
    left = sorted(cone.apply(p) for p in cone_filter(ps, cone).points)
    transformed = PointSet(
        tuple(cone.apply(p) for p in ps.points), ps.ids, ps.space_tag
    )
    right = sorted(pareto_filter(transformed).points)
    return left == right


def is_supported(y: Sequence[int], ps: PointSet, sense: str = "min") -> bool:
    """Whether a non-dominated point attains some strictly positive
    weighted-sum minimum over the point set.

    Decided exactly: maximize t subject to lambda_i >= t,
    sum(lambda) = 1 and lambda.(y - y') <= 0 for every y' in the set;
    y is supported iff the optimum t is positive. Requires y to be
    Pareto-non-dominated in ps (precondition error otherwise).
    """
    _require_nonempty(ps)
    y = tuple(y)
    nondom = set(pareto_filter(ps, sense).points)
    if y not in nondom:
        raise OrdparetoError(f"{y} is not non-dominated in the point set")
    return supporting_weights(y, ps, sense) is not None


def supporting_weights(
    y: Sequence[int], ps: PointSet, sense: str = "min"
) -> tuple[Fraction, ...] | None:
    """A strictly positive weight vector under which y attains the
    weighted-sum optimum over the point set, or None if no such weights
    exist.

    Decided exactly: maximize t subject to lambda_i >= t, sum(lambda) = 1
    and lambda.(y - y') <= 0 for every y' in the set (reversed for
    maximization); weights exist iff the optimum t is positive.
    """
    _require_nonempty(ps)
    y = tuple(y)
    k = len(y)
    # Variables: lambda_1..lambda_k, t; all >= 0 in the LP, strict
    # positivity of lambda is captured by t > 0 at the optimum.
    c = [Fraction(0)] * k + [Fraction(1)]
    rows: list[list[Fraction]] = []
    b: list[Fraction] = []
    for other in ps.points:
        if tuple(other) == y:
            continue
        diff = [Fraction(a - o) for a, o in zip(y, other)]
        if sense == "max":
            diff = [-d for d in diff]
        rows.append(diff + [Fraction(0)])
        b.append(Fraction(0))
    for i in range(k):
        row = [Fraction(0)] * (k + 1)
        row[i] = Fraction(-1)
        row[k] = Fraction(1)
        rows.append(row)  # t - lambda_i <= 0
        b.append(Fraction(0))
    ones = [Fraction(1)] * k + [Fraction(0)]
    rows.append(ones)
    b.append(Fraction(1))
    rows.append([-v for v in ones])
    b.append(Fraction(-1))
    # Cap t so the LP stays bounded.
    rows.append([Fraction(0)] * k + [Fraction(1)])
    b.append(Fraction(1))

    status, objective, x = solve_lp(c, rows, b)
    if status != OPTIMAL or objective <= 0:
        return None
    return tuple(x[:k])
