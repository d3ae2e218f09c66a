"""Pauli operators modulo phase and additive codes over GF(4) in (x|z) form.

A ``PauliVector`` stores two n-bit masks; bit ``i`` of ``x``/``z`` is the X/Z
component on qubit ``i + 1``. Linear algebra runs on an interleaved key in
which bit ``2i`` is ``x_i`` and bit ``2i + 1`` is ``z_i``. Taking the lowest
set bit of a key as pivot gives the canonical pivot order x1, z1, x2, z2, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..core.config import get_settings
from ..core.exceptions import CapacityError, DimensionError

MAX_QUBITS = 64

_PAULI_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_PAULI = {bits: char for char, bits in _PAULI_TO_BITS.items()}

_EVEN_128 = 0x55555555555555555555555555555555


def _spread(v: int) -> int:
    """Move bit i of a 64-bit word to bit 2i."""
    v = (v | (v << 32)) & 0x00000000FFFFFFFF00000000FFFFFFFF
    v = (v | (v << 16)) & 0x0000FFFF0000FFFF0000FFFF0000FFFF
    v = (v | (v << 8)) & 0x00FF00FF00FF00FF00FF00FF00FF00FF
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0F0F0F0F0F0F0F0F0F
    v = (v | (v << 2)) & 0x33333333333333333333333333333333
    v = (v | (v << 1)) & _EVEN_128
    return v


def _compact(v: int) -> int:
    """Inverse of ``_spread``: gather the even bits of a 128-bit word."""
    v &= _EVEN_128
    v = (v | (v >> 1)) & 0x33333333333333333333333333333333
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0F0F0F0F0F0F0F0F0F
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FF00FF00FF00FF00FF
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFF0000FFFF0000FFFF
    v = (v | (v >> 16)) & 0x00000000FFFFFFFF00000000FFFFFFFF
    v = (v | (v >> 32)) & 0xFFFFFFFFFFFFFFFF
    return v


def _swap_xz(key: int) -> int:
    return ((key & _EVEN_128) << 1) | ((key >> 1) & _EVEN_128)


def _check_n(n: int) -> None:
    if n < 1 or n > MAX_QUBITS:
        raise DimensionError(f"number of qubits must be in [1, {MAX_QUBITS}], got {n}")


@dataclass(frozen=True)
class PauliVector:
    """An n-qubit Pauli operator modulo phase."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        _check_n(self.n)
        full = (1 << self.n) - 1
        if self.x < 0 or self.z < 0 or self.x & ~full or self.z & ~full:
            raise DimensionError(f"mask bits beyond qubit {self.n}")

    @classmethod
    def identity(cls, n: int) -> "PauliVector":
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, text: str) -> "PauliVector":
        """Parse a Pauli string such as ``XIIZYYZ`` (qubit 1 first)."""
        text = text.strip()
        x = z = 0
        for i, char in enumerate(text):
            try:
                xb, zb = _PAULI_TO_BITS[char.upper()]
            except KeyError:
                raise ValueError(f"invalid Pauli character {char!r} at position {i + 1}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(text), x, z)

    @classmethod
    def from_key(cls, n: int, key: int) -> "PauliVector":
        return cls(n, _compact(key), _compact(key >> 1))

    @classmethod
    def single(cls, n: int, qubit: int, pauli: str) -> "PauliVector":
        """Single-qubit Pauli ``pauli`` on ``qubit`` (0-based)."""
        xb, zb = _PAULI_TO_BITS[pauli]
        return cls(n, xb << qubit, zb << qubit)

    @property
    def key(self) -> int:
        return _spread(self.x) | (_spread(self.z) << 1)

    @property
    def support(self) -> int:
        return self.x | self.z

    def weight(self) -> int:
        return bin(self.x | self.z).count("1")

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def __mul__(self, other: "PauliVector") -> "PauliVector":
        _same_n(self, other)
        return PauliVector(self.n, self.x ^ other.x, self.z ^ other.z)

    def pad(self, extra: int, x: int = 0, z: int = 0) -> "PauliVector":
        """Extend by ``extra`` qubits carrying the given masks (identity by default)."""
        return PauliVector(self.n + extra, self.x | (x << self.n), self.z | (z << self.n))

    def __str__(self) -> str:
        return "".join(
            _BITS_TO_PAULI[((self.x >> i) & 1, (self.z >> i) & 1)] for i in range(self.n)
        )


def _same_n(a: PauliVector, b: PauliVector) -> None:
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} != {b.n}")


def symplectic_product(a: PauliVector, b: PauliVector) -> int:
    """0 if the operators commute, 1 if they anticommute."""
    _same_n(a, b)
    return bin((a.x & b.z) ^ (a.z & b.x)).count("1") & 1


def weight(a: PauliVector) -> int:
    return a.weight()


def rref_bitrows(rows: Iterable[int]) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form of GF(2) bit-rows; pivot = lowest set bit."""
    basis: dict = {}
    for row in rows:
        v = row
        while v:
            pivot = (v & -v).bit_length() - 1
            if pivot in basis:
                v ^= basis[pivot]
            else:
                basis[pivot] = v
                break
    pivots = sorted(basis)
    for p in pivots:
        bit = 1 << p
        row = basis[p]
        for q in pivots:
            if q != p and basis[q] & bit:
                basis[q] ^= row
    return [basis[p] for p in pivots], pivots


def nullspace_bitrows(rref_rows: Sequence[int], pivots: Sequence[int], ncols: int) -> List[int]:
    """Basis of ker(H) for H given in reduced echelon form."""
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        bit = 1 << free
        v = bit
        for row, pcol in zip(rref_rows, pivots):
            if row & bit:
                v |= 1 << pcol
        basis.append(v)
    return basis


@dataclass(frozen=True)
class AdditiveCode:
    """A GF(2)-linear span of Pauli vectors, stored in canonical echelon form."""

    n: int
    generators: Tuple[PauliVector, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.rank

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple((g.key & -g.key).bit_length() - 1 for g in self.generators)

    def __contains__(self, v: PauliVector) -> bool:
        return contains(self, v)

    def __le__(self, other: "AdditiveCode") -> bool:
        return all(contains(other, g) for g in self.generators)

    def __str__(self) -> str:
        return "\n".join(str(g) for g in self.generators)


def zero_code(n: int) -> AdditiveCode:
    _check_n(n)
    return AdditiveCode(n, ())


def rref(gens: Iterable[PauliVector], n: Optional[int] = None) -> AdditiveCode:
    """Canonical reduced echelon basis of the span; empty input gives the zero code."""
    gens = list(gens)
    if not gens:
        if n is None:
            raise DimensionError("rref of an empty list needs an explicit n")
        return zero_code(n)
    length = gens[0].n if n is None else n
    for g in gens:
        if g.n != length:
            raise DimensionError(f"length mismatch: {g.n} != {length}")
    rows, _ = rref_bitrows(g.key for g in gens)
    return AdditiveCode(length, tuple(PauliVector.from_key(length, r) for r in rows))


def rank_of(gens: Sequence[PauliVector], n: int) -> int:
    return rref(gens, n).rank


def symplectic_dual(c: AdditiveCode) -> AdditiveCode:
    """All vectors commuting with every element of ``c``."""
    # v commutes with g iff v . swap(g) = 0 under the plain dot product on keys
    rows, pivots = rref_bitrows(_swap_xz(g.key) for g in c.generators)
    kernel = nullspace_bitrows(rows, pivots, 2 * c.n)
    canonical, _ = rref_bitrows(kernel)
    return AdditiveCode(c.n, tuple(PauliVector.from_key(c.n, k) for k in canonical))


def _reduce_key(c: AdditiveCode, key: int) -> int:
    for g, pivot in zip(c.generators, c.pivots):
        if (key >> pivot) & 1:
            key ^= g.key
    return key


def contains(c: AdditiveCode, v: PauliVector) -> bool:
    """Membership by reduction against the echelon basis."""
    if v.n != c.n:
        raise DimensionError(f"length mismatch: {v.n} != {c.n}")
    return _reduce_key(c, v.key) == 0


def is_self_orthogonal(gens: Sequence[PauliVector]) -> bool:
    return all(
        symplectic_product(gens[i], gens[j]) == 0
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )


def coset_basis(sub: AdditiveCode, sup: Iterable[PauliVector]) -> List[PauliVector]:
    """Vectors of ``sup`` that extend a basis of ``sub``, in order; they span sup/sub."""
    current = sub
    picked = []
    for v in sup:
        if not contains(current, v):
            picked.append(v)
            current = rref(list(current.generators) + [v], sub.n)
    return picked


def enumerate_span(
    c: AdditiveCode,
    start: int = 0,
    stop: Optional[int] = None,
    cap: Optional[int] = None,
) -> Iterator[PauliVector]:
    """Yield the elements with Gray-code indices in [start, stop).

    The full range yields every element of ``c`` exactly once. Disjoint index
    ranges can be handed to independent consumers.
    """
    cap = get_settings().enumeration_rank_cap if cap is None else cap
    if c.rank > cap:
        raise CapacityError("span rank", c.rank, cap)
    total = c.size
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    gens = c.generators
    gray = start ^ (start >> 1)
    x = z = 0
    for j, g in enumerate(gens):
        if (gray >> j) & 1:
            x ^= g.x
            z ^= g.z
    yield PauliVector(c.n, x, z)
    for t in range(start + 1, stop):
        j = (t & -t).bit_length() - 1
        x ^= gens[j].x
        z ^= gens[j].z
        yield PauliVector(c.n, x, z)


def symplectic_gram_schmidt(
    vectors: Sequence[PauliVector],
) -> Tuple[List[Tuple[PauliVector, PauliVector]], List[PauliVector]]:
    """Split vectors into anticommuting pairs plus a leftover isotropic list.

    Each pair commutes with every other pair. A list that is already in
    pair order (X1, Z1, X2, Z2, ...) with that structure is returned unchanged.
    """
    rest = list(vectors)
    pairs: List[Tuple[PauliVector, PauliVector]] = []
    isotropic: List[PauliVector] = []
    while rest:
        a = rest.pop(0)
        partner = next((i for i, b in enumerate(rest) if symplectic_product(a, b)), None)
        if partner is None:
            isotropic.append(a)
            continue
        b = rest.pop(partner)
        updated = []
        for c in rest:
            if symplectic_product(c, b):
                c = c * a
            if symplectic_product(c, a):
                c = c * b
            updated.append(c)
        rest = updated
        pairs.append((a, b))
    return pairs, isotropic
