"""State-vector check of the hybrid error-correction conditions for small codes.

Every translated code t_v C0 gets an orthonormal basis; for each pair of
errors (E_k, E_l) the matrix of <c_i^(v)| E_k^dag E_l |c_j^(u)> must vanish
between different translated codes and be a multiple alpha_kl^(v) of the
identity inside each one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ..core.config import get_settings
from ..core.exceptions import CapacityError, InvalidCodeError, PreconditionError
from ..models.hybrid_code import HybridCode
from ..models.symplectic import PauliVector
from .enumeration import SWEEP_PAULIS, popcount64

logger = structlog.get_logger(__name__)

AlphaKey = Tuple[int, int, int]
Violation = Tuple[int, int, int, int, int, int, complex]


@dataclass
class DenseVerificationReport:
    ok: bool
    alpha: Dict[AlphaKey, complex] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    def hybrid_signatures(self, threshold: float = 0.5) -> List[Tuple[int, int, int, int]]:
        """(v, u, k, l) with k != l and |alpha_kl^(v) - alpha_kl^(u)| > threshold."""
        by_pair: Dict[Tuple[int, int], Dict[int, complex]] = {}
        for (nu, k, ell), value in self.alpha.items():
            by_pair.setdefault((k, ell), {})[nu] = value
        found = []
        for (k, ell), values in sorted(by_pair.items()):
            if k == ell:
                continue
            for nu, mu in itertools.combinations(sorted(values), 2):
                if abs(values[nu] - values[mu]) > threshold:
                    found.append((nu, mu, k, ell))
        return found


def _pauli_action(p: PauliVector) -> Tuple[np.ndarray, np.ndarray]:
    """Permutation and coefficients of the Hermitian Pauli i^|x&z| X^x Z^z.

    ``P |b> = coeff[b] |perm[b]>`` with qubit i stored in bit i of b.
    """
    index = np.arange(1 << p.n, dtype=np.uint64)
    phase = 1j ** (bin(p.x & p.z).count("1") % 4)
    parity = popcount64(index & np.uint64(p.z)).astype(np.int64) & 1
    coeff = phase * (1 - 2 * parity)
    perm = (index ^ np.uint64(p.x)).astype(np.int64)
    return perm, coeff


def apply_pauli(p: PauliVector, states: np.ndarray) -> np.ndarray:
    """Apply ``p`` to every row of ``states`` (shape (count, 2^n))."""
    perm, coeff = _pauli_action(p)
    out = np.zeros_like(states)
    out[:, perm] = states * coeff
    return out


def code_basis(h: HybridCode, tolerance: float) -> np.ndarray:
    """Orthonormal rows spanning the +1 eigenspace of the stabilizer."""
    dim = 1 << h.n
    projected = np.eye(dim, dtype=np.complex128)
    for s in h.stabilizer:
        projected = (projected + apply_pauli(s, projected)) / 2
    wanted = 1 << h.k
    basis: List[np.ndarray] = []
    # rows of the projector are the projections of |b> in lexicographic order
    for row in projected:
        v = row.copy()
        for u in basis:
            v = v - np.vdot(u, v) * u
        norm = np.linalg.norm(v)
        if norm > tolerance:
            basis.append(v / norm)
            if len(basis) == wanted:
                break
    if len(basis) != wanted:
        raise InvalidCodeError(
            f"stabilizer projector has rank {len(basis)}, expected {wanted}", section="stabilizer"
        )
    return np.array(basis)


def translation_product(h: HybridCode, nu: int) -> PauliVector:
    t = PauliVector.identity(h.n)
    for j, g in enumerate(h.translations):
        if (nu >> j) & 1:
            t = t * g
    return t


def low_weight_errors(n: int, max_weight: int) -> List[PauliVector]:
    """Identity followed by every Pauli of weight 1..max_weight."""
    errors = [PauliVector.identity(n)]
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for pattern in itertools.product(SWEEP_PAULIS, repeat=w):
                e = PauliVector.identity(n)
                for qubit, pauli in zip(support, pattern):
                    e = e * PauliVector.single(n, qubit, pauli)
                errors.append(e)
    return errors


def dense_verify(
    h: HybridCode,
    max_error_weight: int = 1,
    errors: Optional[Sequence[PauliVector]] = None,
    tolerance: Optional[float] = None,
    max_qubits: Optional[int] = None,
) -> DenseVerificationReport:
    """Evaluate the correction conditions for all error pairs on explicit state vectors."""
    settings = get_settings()
    tolerance = settings.dense_tolerance if tolerance is None else tolerance
    max_qubits = settings.dense_max_qubits if max_qubits is None else max_qubits
    if h.n > max_qubits:
        raise CapacityError("dense verifier qubits", h.n, max_qubits)
    if errors is None:
        if max_error_weight < 1:
            raise PreconditionError(f"max_error_weight must be at least 1, got {max_error_weight}")
        errors = low_weight_errors(h.n, max_error_weight)
    errors = list(errors)

    base = code_basis(h, tolerance)
    codes = 1 << h.m
    per_code = base.shape[0]
    states = np.concatenate([apply_pauli(translation_product(h, nu), base) for nu in range(codes)])
    logger.info(
        "Dense verification started",
        n=h.n,
        translated_codes=codes,
        code_dimension=per_code,
        errors=len(errors),
    )

    # images[e] has the states E_e |c> as rows
    images = np.stack([apply_pauli(e, states) for e in errors])
    report = DenseVerificationReport(ok=True, errors=[str(e) for e in errors])
    eye = np.eye(per_code)
    for k in range(len(errors)):
        gram = np.einsum("ad,lbd->lab", images[k].conj(), images)
        blocks = gram.reshape(len(errors), codes, per_code, codes, per_code)
        for ell in range(len(errors)):
            block = blocks[ell]
            expected = np.zeros_like(block)
            for nu in range(codes):
                alpha = np.trace(block[nu, :, nu, :]) / per_code
                report.alpha[(nu, k, ell)] = complex(alpha)
                expected[nu, :, nu, :] = alpha * eye
            bad = np.argwhere(np.abs(block - expected) > tolerance)
            for nu, i, mu, j in bad:
                report.violations.append(
                    (int(nu), int(mu), int(i), int(j), k, ell, complex(block[nu, i, mu, j]))
                )
    report.ok = not report.violations
    logger.info("Dense verification completed", ok=report.ok, violations=len(report.violations))
    return report
