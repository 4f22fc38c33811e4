"""A tiny exact linear program solver over fractions.

Solves  max c.x  s.t.  A x <= b,  x >= 0  with a two-phase tableau simplex
using Bland's rule. Everything is kept in ``fractions.Fraction``, so results
are exact; intended for the desk-scale feasibility questions in this package
(supportedness tests, weight-cell interiors), not for large programs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"
OPTIMAL = "optimal"


def solve_lp(
    c: Sequence[Fraction],
    a_rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> tuple[str, Fraction | None, list[Fraction] | None]:
    """Maximize c.x subject to A x <= b, x >= 0.

    Returns (status, objective, x). ``objective`` and ``x`` are None unless
    status is "optimal".
    """
    n = len(c)
    m = len(a_rows)
    c = [Fraction(v) for v in c]
    rows = [[Fraction(v) for v in row] for row in a_rows]
    b = [Fraction(v) for v in b]

    # Tableau columns: n structural + m slack + 1 rhs. Negative rhs rows are
    # handled by phase 1 with artificial variables.
    width = n + m
    tableau = []
    basis = []
    artificial: list[int] = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [b[i]]
        row[n + i] = Fraction(1)
        if b[i] < 0:
            row = [-v for v in row]
        tableau.append(row)
        basis.append(n + i)

    # Rows whose slack got negated need an artificial basic variable.
    for i in range(m):
        if tableau[i][basis[i]] != 1:
            col = width + len(artificial)
            artificial.append(col)
            for j, row in enumerate(tableau):
                row.insert(col, Fraction(1 if j == i else 0))
            basis[i] = col
    width += len(artificial)

    def pivot(row_idx: int, col_idx: int) -> None:
        piv = tableau[row_idx][col_idx]
        tableau[row_idx] = [v / piv for v in tableau[row_idx]]
        for r in range(m):
            if r != row_idx and tableau[r][col_idx] != 0:
                factor = tableau[r][col_idx]
                tableau[r] = [
                    v - factor * w for v, w in zip(tableau[r], tableau[row_idx])
                ]
        basis[row_idx] = col_idx

    def run_simplex(obj: list[Fraction]) -> str:
        # obj has width entries; reduced costs computed against the basis.
        while True:
            reduced = list(obj)
            for r in range(m):
                coef = obj[basis[r]]
                if coef != 0:
                    reduced = [
                        rc - coef * tv
                        for rc, tv in zip(reduced, tableau[r][:width])
                    ]
            enter = next((j for j in range(width) if reduced[j] > 0), None)
            if enter is None:
                return OPTIMAL
            ratios = [
                (tableau[r][width] / tableau[r][enter], basis[r], r)
                for r in range(m)
                if tableau[r][enter] > 0
            ]
            if not ratios:
                return UNBOUNDED
            _, _, leave = min(ratios)  # Bland: min ratio, then min basis index
            pivot(leave, enter)

    if artificial:
        phase1 = [Fraction(0)] * width
        for col in artificial:
            phase1[col] = Fraction(-1)
        run_simplex(phase1)
        infeas = sum(
            tableau[r][width] for r in range(m) if basis[r] in artificial
        )
        if infeas != 0:
            return INFEASIBLE, None, None
        # Drive remaining artificial variables out of the basis if possible.
        for r in range(m):
            if basis[r] in artificial:
                enter = next(
                    (
                        j
                        for j in range(n + m)
                        if j not in artificial and tableau[r][j] != 0
                    ),
                    None,
                )
                if enter is not None:
                    pivot(r, enter)

    phase2 = [Fraction(0)] * width
    for j in range(n):
        phase2[j] = c[j]
    for col in artificial:
        phase2[col] = Fraction(-10**9)  # keep artificials at zero
    status = run_simplex(phase2)
    if status != OPTIMAL:
        return status, None, None

    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tableau[r][width]
    objective = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, objective, x
