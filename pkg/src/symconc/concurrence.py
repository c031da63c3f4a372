"""Wootters concurrence and entanglement of formation for two qubits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import jacobi_eigh, jacobi_singular_values
from .pair import assemble_dense

INPUT_TOL = 1e-8
CLIP_TOL = 1e-12

SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


@dataclass(frozen=True)
class PairEntanglement:
    concurrence: float
    eof: float
    lambdas: tuple[float, float, float, float]


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entanglement_of_formation(concurrence: float) -> float:
    c = min(max(float(concurrence), 0.0), 1.0)
    return binary_entropy((1 + math.sqrt(1 - c * c)) / 2)


def _check_density_matrix(rho: np.ndarray) -> None:
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > INPUT_TOL:
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1) > INPUT_TOL:
        raise ValueError(f"density matrix has trace {tr!r}")


def spin_flip_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho (Y rho* Y), descending.

    Uses sqrt(rho) Y sqrt(rho)* whose singular values are exactly these
    numbers, so eigenvalues near zero do not suffer a square-root loss of
    precision.  Eigenvalues of rho below ``CLIP_TOL`` are set to zero.
    """
    rho = np.asarray(rho, dtype=complex)
    _check_density_matrix(rho)
    evals, evecs = jacobi_eigh(rho)
    if evals[0] < -INPUT_TOL:
        raise ValueError(f"density matrix is not positive semidefinite (eigenvalue {evals[0]:.3e})")
    root = np.where(evals < CLIP_TOL, 0.0, np.sqrt(np.clip(evals, 0.0, None)))
    sqrt_rho = (evecs * root) @ evecs.conj().T
    return jacobi_singular_values(sqrt_rho @ SIGMA_YY @ sqrt_rho.conj())


def wootters_general(rho) -> PairEntanglement:
    lam = spin_flip_lambdas(rho)
    c = min(max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3])), 1.0)
    return PairEntanglement(c, entanglement_of_formation(c), tuple(float(x) for x in lam))


def _sqrt_product(v_plus: float, v_minus: float) -> float:
    if min(v_plus, v_minus) < -INPUT_TOL:
        raise ValueError(f"negative diagonal populations v+={v_plus}, v-={v_minus}")
    return math.sqrt(max(v_plus, 0.0) * max(v_minus, 0.0))


def concurrence_xy_form(v_plus: float, v_minus: float, w: float, y) -> float:
    """Concurrence of the symmetric X state with x+- = u = 0 and real y.

    The coherence enters through |y|, so antiferromagnetic correlations
    (negative y) count as well as ferromagnetic ones.
    """
    y = complex(y)
    if abs(y.imag) > INPUT_TOL:
        raise ValueError(f"y must be real, got {y!r}")
    return 2.0 * max(0.0, abs(y.real) - _sqrt_product(v_plus, v_minus))


def concurrence_xu_form(v_plus: float, v_minus: float, w: float, u) -> float:
    """Concurrence of the symmetric X state with x+- = 0 and y = w."""
    root = _sqrt_product(v_plus, v_minus)
    mag = abs(complex(u))
    if 2 * w < root + mag:
        return 2.0 * max(0.0, mag - w)
    return 2.0 * max(0.0, w - root)


def dicke_concurrence(n_qubits: int, m) -> float:
    """Closed-form pair concurrence of the Dicke state |N/2, M>."""
    m = Fraction(m).limit_denominator(2)
    if n_qubits < 2:
        raise ValueError(f"need N >= 2, got {n_qubits}")
    if abs(m) > Fraction(n_qubits, 2) or (Fraction(n_qubits, 2) - m).denominator != 1:
        raise ValueError(f"M={m} is not valid for N={n_qubits}")
    n = n_qubits
    a = n * n - 4 * m * m
    b = (n - 2) ** 2 - 4 * m * m
    return float(a - math.sqrt(max(float(a * b), 0.0))) / (2 * n * (n - 1))


def pair_entanglement(pair) -> PairEntanglement:
    """General Wootters result for a structured pair matrix."""
    return wootters_general(assemble_dense(pair))
