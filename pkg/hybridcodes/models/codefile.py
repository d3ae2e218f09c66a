"""Text formats for hybrid codes, seed codes and classical generator matrices.

Code file::

    # comment
    n k m q [d]
    <n-k stabilizer rows>
    ---
    <2k logical rows: X1 Z1 X2 Z2 ...>
    ===
    <m translation rows>

Seed file: header ``n count`` followed by ``count`` blocks of n Pauli strings.
Classical matrix file: optional ``length N`` line, then rows of 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import structlog

from ..core.exceptions import CodeFileError, InvalidCodeError
from .classical import ClassicalCode
from .hybrid_code import HybridCode
from .symplectic import PauliVector, is_self_orthogonal, rref

logger = structlog.get_logger(__name__)

PathLike = Union[str, Path]

STABILIZER_END = "---"
LOGICALS_END = "==="


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _parse_row(line: str, n: int, number: int, path: Optional[str]) -> PauliVector:
    if len(line) != n:
        raise CodeFileError(f"row has length {len(line)}, expected {n}", line=number, path=path)
    try:
        return PauliVector.from_string(line)
    except ValueError as e:
        raise CodeFileError(str(e), line=number, path=path) from None


def _parse_ints(line: str, count: Tuple[int, int], number: int, path: Optional[str]) -> List[int]:
    parts = line.split()
    if not count[0] <= len(parts) <= count[1]:
        raise CodeFileError(f"malformed header {line!r}", line=number, path=path)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise CodeFileError(f"malformed header {line!r}", line=number, path=path) from None


def parse(text: str, path: Optional[str] = None) -> HybridCode:
    """Parse a code file into a HybridCode (not yet validated)."""
    lines = _content_lines(text)
    if not lines:
        raise CodeFileError("empty code file", line=1, path=path)
    number, header = lines[0]
    values = _parse_ints(header, (4, 5), number, path)
    n, k, m, q = values[:4]
    claimed_d = values[4] if len(values) == 5 else None
    if n < 1 or k < 0 or m < 0 or k > n:
        raise CodeFileError(f"invalid parameters in header {header!r}", line=number, path=path)

    sections: List[List[Tuple[int, str]]] = [[], [], []]
    markers = {STABILIZER_END: 1, LOGICALS_END: 2}
    current = 0
    for number, line in lines[1:]:
        if line in markers:
            expected = markers[line]
            if expected != current + 1:
                raise CodeFileError(f"unexpected section marker {line!r}", line=number, path=path)
            current = expected
            continue
        sections[current].append((number, line))
    last_line = lines[-1][0]
    if current == 0:
        raise CodeFileError(f"missing section marker {STABILIZER_END!r}", line=last_line, path=path)
    if current == 1:
        raise CodeFileError(f"missing section marker {LOGICALS_END!r}", line=last_line, path=path)

    expected_counts = (n - k, 2 * k, m)
    names = ("stabilizer", "logical", "translation")
    for rows, count, name in zip(sections, expected_counts, names):
        if len(rows) != count:
            where = rows[-1][0] if rows else last_line
            raise CodeFileError(
                f"expected {count} {name} rows, found {len(rows)}", line=where, path=path
            )

    stabilizer, logical_rows, translations = (
        [_parse_row(line, n, number, path) for number, line in rows] for rows in sections
    )
    try:
        return HybridCode.from_rows(
            n, stabilizer, logical_rows, translations, q=q, claimed_d=claimed_d
        )
    except InvalidCodeError as e:
        raise CodeFileError(str(e), line=sections[1][0][0] if sections[1] else None, path=path)


def serialize(h: HybridCode) -> str:
    """Inverse of ``parse`` on codes whose logicals are stored in pair order."""
    header = [h.n, h.k, h.m, h.q]
    if h.claimed_d is not None:
        header.append(h.claimed_d)
    out = [" ".join(str(v) for v in header)]
    out.extend(str(row) for row in h.stabilizer)
    out.append(STABILIZER_END)
    out.extend(str(row) for row in h.logical_rows)
    out.append(LOGICALS_END)
    out.extend(str(row) for row in h.translations)
    return "\n".join(out) + "\n"


def load_code(path: PathLike) -> HybridCode:
    p = Path(path)
    return parse(p.read_text(encoding="utf-8"), path=str(p))


def save_code(h: HybridCode, path: PathLike) -> None:
    Path(path).write_text(serialize(h), encoding="utf-8")


def parse_classical(text: str, path: Optional[str] = None) -> ClassicalCode:
    """Parse a 0/1 generator matrix; ``length N`` is needed only for empty matrices."""
    lines = _content_lines(text)
    n: Optional[int] = None
    rows: List[str] = []
    for number, line in lines:
        if line.startswith("length"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit() or rows:
                raise CodeFileError(f"malformed length line {line!r}", line=number, path=path)
            n = int(parts[1])
            continue
        if set(line) - {"0", "1"}:
            raise CodeFileError("classical rows must contain only 0 and 1", line=number, path=path)
        if n is None:
            n = len(line)
        if len(line) != n:
            raise CodeFileError(f"row has length {len(line)}, expected {n}", line=number, path=path)
        rows.append(line)
    if n is None:
        raise CodeFileError("classical matrix file has no rows and no length line", path=path)
    return ClassicalCode.from_strings(rows, n=n)


def parse_pauli_rows(text: str, path: Optional[str] = None) -> List[PauliVector]:
    """Bare list of equal-length Pauli strings, one per line."""
    lines = _content_lines(text)
    if not lines:
        return []
    n = len(lines[0][1])
    return [_parse_row(line, n, number, path) for number, line in lines]


def load_pauli_rows(path: PathLike) -> List[PauliVector]:
    p = Path(path)
    return parse_pauli_rows(p.read_text(encoding="utf-8"), path=str(p))


def load_classical(path: PathLike) -> ClassicalCode:
    p = Path(path)
    return parse_classical(p.read_text(encoding="utf-8"), path=str(p))


@dataclass(frozen=True)
class SeedCode:
    """A self-dual additive code: n commuting, independent generators."""

    n: int
    generators: Tuple[PauliVector, ...]
    source_id: str = ""

    def is_self_dual(self) -> bool:
        return (
            len(self.generators) == self.n
            and is_self_orthogonal(self.generators)
            and rref(self.generators, self.n).rank == self.n
        )


def parse_seeds(text: str, path: Optional[str] = None, source: str = "seeds") -> List[SeedCode]:
    lines = _content_lines(text)
    if not lines:
        raise CodeFileError("empty seed file", line=1, path=path)
    number, header = lines[0]
    n, count = _parse_ints(header, (2, 2), number, path)
    if n < 1 or count < 0:
        raise CodeFileError(f"invalid seed header {header!r}", line=number, path=path)
    body = lines[1:]
    if len(body) != n * count:
        where = body[-1][0] if body else number
        raise CodeFileError(
            f"expected {count} blocks of {n} rows, found {len(body)} rows", line=where, path=path
        )
    seeds = []
    for block in range(count):
        rows = body[block * n : (block + 1) * n]
        gens = tuple(_parse_row(line, n, num, path) for num, line in rows)
        seed = SeedCode(n=n, generators=gens, source_id=f"{source}#{block}")
        if not seed.is_self_dual():
            raise InvalidCodeError("block is not a self-dual code", section="seed", index=block)
        seeds.append(seed)
    logger.info("Seeds loaded", n=n, count=len(seeds), source=source)
    return seeds


def load_seeds(path: PathLike) -> List[SeedCode]:
    """Read and validate a seed file."""
    p = Path(path)
    return parse_seeds(p.read_text(encoding="utf-8"), path=str(p), source=p.stem)


def serialize_seeds(seeds: List[SeedCode]) -> str:
    if not seeds:
        raise ValueError("no seeds to write")
    n = seeds[0].n
    out = [f"{n} {len(seeds)}"]
    for seed in seeds:
        out.append(f"# {seed.source_id}")
        out.extend(str(g) for g in seed.generators)
    return "\n".join(out) + "\n"
