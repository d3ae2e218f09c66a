"""Bit-packed span enumeration and low-weight Pauli sweeps on numpy uint64 arrays.

Spans are enumerated in blocks: the first ``block_rank`` generators are
tabulated once, and block ``h`` is that table XORed with the combination of
the remaining generators selected by the bits of ``h``. Element ``t`` of the
span is the XOR of the generators at the set bits of ``t``. Blocks are
independent, so they can be spread over threads; reductions run in block
order so results do not depend on the thread count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Optional, Sequence, Set, Tuple, TypeVar

import numpy as np
import structlog

from ..core.config import get_settings
from ..core.exceptions import CapacityError
from ..models.symplectic import PauliVector, symplectic_product

logger = structlog.get_logger(__name__)

T = TypeVar("T")

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_TWO = np.uint64(2)
_FOUR = np.uint64(4)
_FIFTY_SIX = np.uint64(56)


def popcount64(a: np.ndarray) -> np.ndarray:
    """Per-element population count of a uint64 array."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a)
    a = a - ((a >> _ONE) & _M1)
    a = (a & _M2) + ((a >> _TWO) & _M2)
    a = (a + (a >> _FOUR)) & _M4
    return (a * _H01) >> _FIFTY_SIX


def run_ordered(fn: Callable[[int], T], count: int, threads: int) -> List[T]:
    """Evaluate ``fn(0..count-1)`` and return results in index order."""
    if threads <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(count)))


class SpanEnumerator:
    """Block-wise enumeration of the GF(2) span of independent generators."""

    def __init__(
        self,
        n: int,
        generators: Sequence[PauliVector],
        block_rank: Optional[int] = None,
        threads: Optional[int] = None,
        cap: Optional[int] = None,
    ):
        settings = get_settings()
        cap = settings.enumeration_rank_cap if cap is None else cap
        if len(generators) > cap:
            raise CapacityError("span rank", len(generators), cap)
        self.n = n
        self.generators = list(generators)
        self.rank = len(self.generators)
        self.threads = settings.threads if threads is None else threads
        block_rank = settings.enumeration_block_rank if block_rank is None else block_rank
        self.low_rank = min(self.rank, max(block_rank, 0))

        x = np.zeros(1, dtype=np.uint64)
        z = np.zeros(1, dtype=np.uint64)
        for g in self.generators[: self.low_rank]:
            x = np.concatenate([x, x ^ np.uint64(g.x)])
            z = np.concatenate([z, z ^ np.uint64(g.z)])
        self._x_low = x
        self._z_low = z
        self._local = np.arange(1 << self.low_rank, dtype=np.uint64)

    @property
    def num_blocks(self) -> int:
        return 1 << (self.rank - self.low_rank)

    def _offset(self, h: int) -> Tuple[int, int]:
        ox = oz = 0
        for j, g in enumerate(self.generators[self.low_rank :]):
            if (h >> j) & 1:
                ox ^= g.x
                oz ^= g.z
        return ox, oz

    def block(self, h: int) -> Tuple[np.ndarray, np.ndarray]:
        ox, oz = self._offset(h)
        return self._x_low ^ np.uint64(ox), self._z_low ^ np.uint64(oz)

    def block_weights(self, h: int) -> np.ndarray:
        x, z = self.block(h)
        return popcount64(x | z).astype(np.int64)

    def _included(self, h: int, skip: Optional[int]) -> Optional[np.ndarray]:
        """Mask of block entries with (index >> skip) != 0; None means all of them."""
        if skip is None:
            return None
        if skip >= self.low_rank:
            keep = (h >> (skip - self.low_rank)) != 0
            return None if keep else np.zeros(len(self._local), dtype=bool)
        if h != 0:
            return None
        return (self._local >> np.uint64(skip)) != 0

    def element(self, index: int) -> PauliVector:
        x = z = 0
        for j, g in enumerate(self.generators):
            if (index >> j) & 1:
                x ^= g.x
                z ^= g.z
        return PauliVector(self.n, x, z)

    def histogram(self, skip: Optional[int] = None) -> List[int]:
        """Weight counts over elements whose index has a set bit at position >= skip."""

        def count(h: int) -> np.ndarray:
            weights = self.block_weights(h)
            mask = self._included(h, skip)
            if mask is not None:
                weights = weights[mask]
            return np.bincount(weights, minlength=self.n + 1)

        total = np.zeros(self.n + 1, dtype=np.int64)
        for part in run_ordered(count, self.num_blocks, self.threads):
            total += part
        return [int(c) for c in total]

    def min_weight(self, skip: Optional[int] = None) -> Tuple[int, int]:
        """(weight, index) of the lightest included element; lowest index wins ties.

        Returns (n + 1, -1) when no element is included.
        """
        block_size = len(self._local)

        def best(h: int) -> Tuple[int, int]:
            weights = self.block_weights(h)
            mask = self._included(h, skip)
            if mask is not None:
                if not mask.any():
                    return self.n + 1, -1
                weights = np.where(mask, weights, self.n + 1)
            pos = int(np.argmin(weights))
            w = int(weights[pos])
            if w > self.n:
                return self.n + 1, -1
            return w, h * block_size + pos

        result = (self.n + 1, -1)
        for w, index in run_ordered(best, self.num_blocks, self.threads):
            if index >= 0 and w < result[0]:
                result = (w, index)
        return result


# Single-qubit Paulis in sweep order
SWEEP_PAULIS = ("X", "Z", "Y")


def syndrome_table(n: int, checks: Sequence[PauliVector]) -> np.ndarray:
    """Array (n, 3, words) of syndrome bits of X, Z, Y on each qubit against ``checks``."""
    words = max(1, math.ceil(len(checks) / 64))
    table = np.zeros((n, 3, words), dtype=np.uint64)
    for j, g in enumerate(checks):
        word, bit = divmod(j, 64)
        for p in range(n):
            gx = (g.x >> p) & 1
            gz = (g.z >> p) & 1
            # X anticommutes with a Z component, Z with an X component
            for c, flips in enumerate((gz, gx, gx ^ gz)):
                if flips:
                    table[p, c, word] |= np.uint64(1 << bit)
    return table


def syndrome_bits(v: PauliVector, checks: Sequence[PauliVector]) -> int:
    """Syndrome of ``v`` as an integer; bit j is set iff v anticommutes with checks[j]."""
    bits = 0
    for j, g in enumerate(checks):
        if symplectic_product(v, g):
            bits |= 1 << j
    return bits


def pack_words(rows: np.ndarray) -> List[int]:
    """Rows of uint64 syndrome words as Python integers (word i holds bits 64i..64i+63)."""
    return [sum(int(w) << (64 * i) for i, w in enumerate(row)) for row in rows]


def sweep_size(n: int, max_weight: int) -> int:
    """Number of Pauli vectors with weight 1..max_weight."""
    return sum(math.comb(n, w) * 3**w for w in range(1, max_weight + 1))


def check_sweep_cap(n: int, max_weight: int, cap: Optional[int] = None) -> int:
    cap = get_settings().sweep_cap if cap is None else cap
    size = sweep_size(n, max_weight)
    if size > cap:
        raise CapacityError("sweep size", size, cap)
    return size


class WeightBatch:
    """Pauli vectors of one weight on a run of consecutive supports.

    Candidate order inside a batch is support first (lexicographic), then the
    Pauli pattern in ``itertools.product`` order over X, Z, Y.
    """

    def __init__(self, weight: int, combos: np.ndarray):
        self.weight = weight
        self.combos = combos
        self.patterns: List[Tuple[int, ...]] = list(itertools.product(range(3), repeat=weight))

    def __len__(self) -> int:
        return len(self.combos) * len(self.patterns)

    def syndromes(self, table: np.ndarray, pattern: Tuple[int, ...]) -> np.ndarray:
        out = np.zeros((len(self.combos), table.shape[2]), dtype=np.uint64)
        for i, c in enumerate(pattern):
            out ^= table[self.combos[:, i], c]
        return out

    def all_syndromes(self, table: np.ndarray) -> np.ndarray:
        """Array (supports, patterns, words) of syndromes."""
        return np.stack([self.syndromes(table, p) for p in self.patterns], axis=1)

    def first(self, hits: np.ndarray) -> Optional[int]:
        """Position in candidate order of the first True in a (supports, patterns) mask."""
        flat = hits.reshape(-1)
        if not flat.any():
            return None
        return int(np.argmax(flat))

    def vector(self, n: int, position: int) -> PauliVector:
        row, pattern_index = divmod(position, len(self.patterns))
        v = PauliVector.identity(n)
        for p, c in zip(self.combos[row], self.patterns[pattern_index]):
            v = v * PauliVector.single(n, int(p), SWEEP_PAULIS[c])
        return v


def iter_weight_batches(
    n: int, min_weight: int, max_weight: int, batch_size: Optional[int] = None
) -> Iterator[WeightBatch]:
    """Supports of weight min_weight..max_weight in lexicographic order, in batches."""
    batch_size = get_settings().sweep_batch_size if batch_size is None else batch_size
    for w in range(max(min_weight, 1), max_weight + 1):
        rows = max(1, batch_size // 3**w)
        combos = itertools.combinations(range(n), w)
        while True:
            chunk = list(itertools.islice(combos, rows))
            if not chunk:
                break
            yield WeightBatch(w, np.array(chunk, dtype=np.int64).reshape(len(chunk), w))


def low_weight_syndromes(
    n: int,
    checks: Sequence[PauliVector],
    max_weight: int,
    cap: Optional[int] = None,
) -> Set[int]:
    """Syndromes of every Pauli with weight 1..max_weight."""
    if max_weight < 1:
        return set()
    check_sweep_cap(n, max_weight, cap)
    table = syndrome_table(n, checks)
    seen: Set[int] = set()
    for batch in iter_weight_batches(n, 1, max_weight):
        for pattern in batch.patterns:
            seen.update(pack_words(np.unique(batch.syndromes(table, pattern), axis=0)))
    return seen


def first_hybrid_violation(
    n: int,
    dual_checks: Sequence[PauliVector],
    coset_checks: Sequence[PauliVector],
    max_weight: int,
    threads: Optional[int] = None,
    cap: Optional[int] = None,
) -> Optional[PauliVector]:
    """Lightest Pauli of weight 1..max_weight with zero syndrome on ``dual_checks``
    and, if ``coset_checks`` is non-empty, a nonzero syndrome on them.

    Ties are broken by lexicographic support, then Pauli pattern, so the
    witness depends neither on the batch size nor on the thread count.
    """
    if max_weight < 1:
        return None
    size = check_sweep_cap(n, max_weight, cap)
    threads = get_settings().threads if threads is None else threads
    dual_table = syndrome_table(n, dual_checks)
    coset_table = syndrome_table(n, coset_checks) if coset_checks else None
    logger.debug("Sweep started", n=n, max_weight=max_weight, size=size, threads=threads)

    def scan(batch: WeightBatch) -> Optional[PauliVector]:
        hits = ~batch.all_syndromes(dual_table).any(axis=2)
        if coset_table is not None and hits.any():
            hits &= batch.all_syndromes(coset_table).any(axis=2)
        position = batch.first(hits)
        return None if position is None else batch.vector(n, position)

    for w in range(1, max_weight + 1):
        batches = list(iter_weight_batches(n, w, w))
        results = run_ordered(lambda i: scan(batches[i]), len(batches), threads)
        found = [v for v in results if v is not None]
        if found:
            return found[0]
    return None
