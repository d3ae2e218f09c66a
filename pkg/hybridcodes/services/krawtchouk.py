"""Integer transform matrices for quaternary weight enumerators.

``krawtchouk_matrix(n)[j][i]`` is the coefficient of X^(n-j) Y^j in
(X + 3Y)^(n-i) (X - Y)^i, so the MacWilliams transform of A is K @ A / |C|.
``shadow_matrix(n)`` uses (Y - X) in place of (X - Y).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Tuple

Matrix = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def krawtchouk_matrix(n: int) -> Matrix:
    rows = []
    for j in range(n + 1):
        row = []
        for i in range(n + 1):
            row.append(
                sum(
                    (-1) ** s * comb(i, s) * comb(n - i, j - s) * 3 ** (j - s)
                    for s in range(0, min(i, j) + 1)
                )
            )
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def shadow_matrix(n: int) -> Matrix:
    rows = []
    for j in range(n + 1):
        row = []
        for i in range(n + 1):
            row.append(
                sum(
                    (-1) ** (i - s) * comb(i, s) * comb(n - i, j - s) * 3 ** (j - s)
                    for s in range(0, min(i, j) + 1)
                )
            )
        rows.append(tuple(row))
    return tuple(rows)


def apply_matrix(matrix: Matrix, coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, coeffs)) for row in matrix)
