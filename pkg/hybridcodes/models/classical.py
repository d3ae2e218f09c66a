"""Binary linear codes given by a generator matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from ..core.config import get_settings
from ..core.exceptions import CapacityError, DimensionError
from .symplectic import rref_bitrows


@dataclass(frozen=True)
class ClassicalCode:
    """Generator matrix over GF(2); bit j of a row is the entry in column j."""

    n: int
    rows: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError(f"negative code length {self.n}")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise DimensionError(f"row {i} is longer than {self.n}")

    @classmethod
    def from_strings(cls, lines: Sequence[str], n: Optional[int] = None) -> "ClassicalCode":
        rows = []
        for line in lines:
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
            if n is None:
                n = len(line)
        return cls(n or 0, tuple(rows))

    @classmethod
    def repetition(cls, n: int) -> "ClassicalCode":
        """[n, 1, n]."""
        return cls(n, ((1 << n) - 1,) if n else ())

    @classmethod
    def single_parity_check(cls, n: int) -> "ClassicalCode":
        """[n, n-1, 2]: rows e_j + e_{n-1}."""
        last = 1 << (n - 1)
        return cls(n, tuple((1 << j) | last for j in range(n - 1)))

    @property
    def rank(self) -> int:
        rows, _ = rref_bitrows(self.rows)
        return len(rows)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def row_strings(self) -> Iterable[str]:
        for row in self.rows:
            yield "".join("1" if (row >> j) & 1 else "0" for j in range(self.n))

    def minimum_distance(self, cap: Optional[int] = None) -> int:
        """Exact minimum weight of a nonzero codeword; n + 1 for the zero code."""
        cap = get_settings().enumeration_rank_cap if cap is None else cap
        basis, _ = rref_bitrows(self.rows)
        if len(basis) > cap:
            raise CapacityError("classical code dimension", len(basis), cap)
        best = self.n + 1
        word = 0
        for t in range(1, 1 << len(basis)):
            word ^= basis[(t & -t).bit_length() - 1]
            w = bin(word).count("1")
            if w < best:
                best = w
        return best

    def to_text(self) -> str:
        lines = [f"length {self.n}"]
        lines.extend(self.row_strings())
        return "\n".join(lines) + "\n"
