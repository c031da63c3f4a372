"""Pure permutation-symmetric states: spin coherent, Dicke and one-axis twisted."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .collective import CollectiveMoments, CollectiveVector, SpinSector, spin_matrix

_DIRECT_BINOMIAL_MAX = 30


def spin_coherent(n_qubits: int, eta: float) -> CollectiveVector:
    """Rotated product state sum_n C(N,n)^(1/2) eta^n |n>, normalized.

    Each qubit is in (eta|0> + |1>) / sqrt(1 + eta^2).
    """
    sector = SpinSector.symmetric(n_qubits)
    eta = float(eta)
    n = np.arange(n_qubits + 1)
    if eta == 0.0:
        amps = np.zeros(n_qubits + 1)
        amps[0] = 1.0
    elif n_qubits <= _DIRECT_BINOMIAL_MAX:
        binom = np.array([math.comb(n_qubits, k) for k in n], dtype=float)
        amps = np.sqrt(binom) * eta**n / (1 + eta * eta) ** (n_qubits / 2)
    else:
        log_binom = np.array(
            [math.lgamma(n_qubits + 1) - math.lgamma(k + 1) - math.lgamma(n_qubits - k + 1) for k in n]
        )
        log_amp = 0.5 * log_binom + n * math.log(abs(eta)) - 0.5 * n_qubits * math.log1p(eta * eta)
        amps = np.sign(eta) ** n * np.exp(log_amp)
    return CollectiveVector(sector, amps)


def dicke_state(n_qubits: int, m) -> CollectiveVector:
    """The symmetric Dicke state |N/2, M>, i.e. the number state n = M + N/2."""
    sector = SpinSector.symmetric(n_qubits)
    index = Fraction(m).limit_denominator(2) + sector.total_spin
    if index.denominator != 1 or not 0 <= index < sector.dimension:
        raise ValueError(f"M={m} is not valid for N={n_qubits}")
    amps = np.zeros(sector.dimension, dtype=complex)
    amps[int(index)] = 1.0
    return CollectiveVector(sector, amps)


def w_state(n_qubits: int) -> CollectiveVector:
    return dicke_state(n_qubits, Fraction(-n_qubits, 2) + 1)


def twisted_state(n_qubits: int, mu: float) -> CollectiveVector:
    """exp(-i (mu/2) S_x^2) |0>_N, with mu = 2 chi t.

    S_x is diagonalized once; its eigenvectors also diagonalize S_x^2 and its
    eigenvalues are exact (half-)integers, so the phases are evaluated on
    m^2 rather than on a numerically squared spectrum.
    """
    if n_qubits < 2:
        raise ValueError(f"need N >= 2, got {n_qubits}")
    sector = SpinSector.symmetric(n_qubits)
    _, vecs = np.linalg.eigh(spin_matrix(sector, "x"))
    # eigh returns ascending eigenvalues; they are exactly -S..S
    m = sector.m_values()
    phases = np.exp(-0.5j * mu * m * m)
    start = np.zeros(sector.dimension, dtype=complex)
    start[0] = 1.0
    amps = vecs @ (phases * (vecs.conj().T @ start))
    return CollectiveVector(sector, amps / np.linalg.norm(amps))


def twist_moments(n_qubits: int, mu: float) -> CollectiveMoments:
    """Closed-form collective moments of the one-axis twisted state."""
    if n_qubits < 2:
        raise ValueError(f"need N >= 2, got {n_qubits}")
    n = n_qubits
    half = mu / 2
    cos_mu = math.cos(mu) ** (n - 2)
    sy2 = (n * n + n - n * (n - 1) * cos_mu) / 8
    sz2 = (n * n + n + n * (n - 1) * cos_mu) / 8
    sx2 = n / 4
    anti_xy = 0.5 * n * (n - 1) * math.cos(half) ** (n - 2) * math.sin(half)
    return CollectiveMoments(
        n_qubits=n,
        sz=-(n / 2) * math.cos(half) ** (n - 1),
        sz2=sz2,
        sp=0j,
        sp2=complex(sx2 - sy2, anti_xy),
        sxy2=sx2 + sy2,
        sp_sz_anti=0j,
    )
