"""Exact feasibility simplex over the rationals.

The tableau is kept integer: every entry is a minor of the scaled constraint
matrix and the true value is ``entry / det`` where ``det`` is the last pivot.
Pivots use Bland's rule (lowest entering column, lowest leaving basic
variable on ratio ties), so the run is finite and reproducible. Only phase 1
is needed because the programs have no objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

import structlog

logger = structlog.get_logger(__name__)

SENSES = ("==", "<=", ">=")


@dataclass(frozen=True)
class LinearConstraint:
    """``coeffs . x  sense  rhs`` with exact rational data."""

    coeffs: Tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    label: str = ""

    def __post_init__(self) -> None:
        if self.sense not in SENSES:
            raise ValueError(f"unknown constraint sense {self.sense!r}")

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, x) if c), Fraction(0))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = self.value(x)
        if self.sense == "==":
            return lhs == self.rhs
        if self.sense == "<=":
            return lhs <= self.rhs
        return lhs >= self.rhs


@dataclass
class LPResult:
    feasible: bool
    values: Optional[Tuple[Fraction, ...]]
    pivots: int
    residual: Fraction


def _scaled(c: LinearConstraint) -> Tuple[List[int], str, int]:
    scale = lcm(*(f.denominator for f in c.coeffs), c.rhs.denominator)
    coeffs = [int(f * scale) for f in c.coeffs]
    rhs = int(c.rhs * scale)
    sense = c.sense
    if rhs < 0:
        coeffs = [-a for a in coeffs]
        rhs = -rhs
        sense = {"==": "==", "<=": ">=", ">=": "<="}[sense]
    return coeffs, sense, rhs


class IntegerTableau:
    """Phase-1 tableau for ``A x (sense) b, x >= 0`` with integer entries."""

    def __init__(self, num_vars: int, constraints: Sequence[LinearConstraint]):
        scaled = [_scaled(c) for c in constraints]
        num_slack = sum(1 for _, sense, _ in scaled if sense != "==")
        num_art = sum(1 for _, sense, _ in scaled if sense != "<=")
        self.num_vars = num_vars
        self.art_start = num_vars + num_slack
        self.width = self.art_start + num_art
        self.det = 1
        self.pivots = 0
        self.rows: List[List[int]] = []
        self.basis: List[int] = []

        slack = num_vars
        art = self.art_start
        objective = [0] * (self.width + 1)
        for coeffs, sense, rhs in scaled:
            row = coeffs + [0] * (self.width - num_vars) + [rhs]
            if sense == "<=":
                row[slack] = 1
                self.basis.append(slack)
                slack += 1
            else:
                if sense == ">=":
                    row[slack] = -1
                    slack += 1
                row[art] = 1
                self.basis.append(art)
                art += 1
                for j in range(self.art_start):
                    objective[j] -= row[j]
                objective[-1] -= rhs
            self.rows.append(row)
        self.objective = objective

    def _entering(self) -> Optional[int]:
        for j in range(self.art_start):
            if self.objective[j] < 0:
                return j
        return None

    def _leaving(self, q: int) -> Optional[int]:
        best: Optional[int] = None
        for i, row in enumerate(self.rows):
            a = row[q]
            if a <= 0:
                continue
            if best is None:
                best = i
                continue
            b_row = self.rows[best]
            # row[-1] / a against b_row[-1] / b_row[q]
            lhs = row[-1] * b_row[q]
            rhs = b_row[-1] * a
            if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                best = i
        return best

    def pivot(self, p: int, q: int) -> None:
        piv = self.rows[p][q]
        det = self.det
        pivot_row = self.rows[p]
        for i, row in enumerate(self.rows):
            if i == p:
                continue
            f = row[q]
            self.rows[i] = [(piv * a - f * b) // det for a, b in zip(row, pivot_row)]
        f = self.objective[q]
        self.objective = [(piv * a - f * b) // det for a, b in zip(self.objective, pivot_row)]
        self.det = piv
        self.basis[p] = q
        self.pivots += 1

    def solve(self) -> LPResult:
        while self.objective[-1] != 0:
            q = self._entering()
            if q is None:
                break
            p = self._leaving(q)
            if p is None:
                raise ArithmeticError("phase-1 objective is unbounded below")
            self.pivot(p, q)
        residual = Fraction(-self.objective[-1], self.det)
        if residual != 0:
            return LPResult(feasible=False, values=None, pivots=self.pivots, residual=residual)
        values = [Fraction(0)] * self.num_vars
        for i, b in enumerate(self.basis):
            if b < self.num_vars:
                values[b] = Fraction(self.rows[i][-1], self.det)
        return LPResult(feasible=True, values=tuple(values), pivots=self.pivots, residual=residual)


def find_feasible_point(num_vars: int, constraints: Sequence[LinearConstraint]) -> LPResult:
    """A vertex of ``{x >= 0 : constraints}`` or an infeasibility verdict."""
    for c in constraints:
        if len(c.coeffs) != num_vars:
            raise ValueError(f"constraint {c.label!r} has {len(c.coeffs)} coefficients")
    result = IntegerTableau(num_vars, constraints).solve()
    logger.debug(
        "LP relaxation solved",
        constraints=len(constraints),
        feasible=result.feasible,
        pivots=result.pivots,
    )
    return result
