"""Brute-force verification in the full 2^N Hilbert space.

Bit convention: bit value 0 means qubit state |0>, and qubit 0 is the least
significant bit of the basis index.  Nothing here uses the collective-basis
machinery; it only needs binomials, Pauli algebra and dense linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

MAX_VECTOR_QUBITS = 12
MAX_THERMAL_QUBITS = 10


@dataclass(frozen=True)
class FullState:
    n_qubits: int
    data: np.ndarray

    def __post_init__(self):
        dim = 2**self.n_qubits
        data = np.asarray(self.data, dtype=complex)
        if data.shape == (dim,):
            norm = float(np.vdot(data, data).real)
        elif data.shape == (dim, dim):
            norm = float(np.trace(data).real)
            if np.abs(data - data.conj().T).max() > 1e-10:
                raise ValueError("density matrix is not Hermitian")
        else:
            raise ValueError(f"shape {data.shape} does not fit {self.n_qubits} qubits")
        if abs(norm - 1) > 1e-10:
            raise ValueError(f"state normalization is {norm!r}")
        object.__setattr__(self, "data", data)

    @property
    def is_pure(self) -> bool:
        return self.data.ndim == 1


def _zeros_count(n_qubits: int) -> np.ndarray:
    idx = np.arange(2**n_qubits)
    ones = np.zeros_like(idx)
    for q in range(n_qubits):
        ones += (idx >> q) & 1
    return n_qubits - ones


def symmetrized_full_state(v) -> FullState:
    """Expand a symmetric-sector vector over all bit strings.

    Amplitude a_n of the number state |n>_N is spread evenly over the C(N, n)
    strings with exactly n qubits in |0>.
    """
    n_qubits = v.sector.n_qubits
    if not v.sector.is_symmetric:
        raise ValueError("only S = N/2 vectors can be expanded")
    if n_qubits > MAX_VECTOR_QUBITS:
        raise ValueError(f"N={n_qubits} exceeds the oracle cap of {MAX_VECTOR_QUBITS} qubits")
    zeros = _zeros_count(n_qubits)
    amps = np.asarray(v.amplitudes)
    norms = np.array([math.sqrt(math.comb(n_qubits, k)) for k in range(n_qubits + 1)])
    return FullState(n_qubits, amps[zeros] / norms[zeros])


def partial_trace_pair(s: FullState, i: int = 0, j: int = 1) -> np.ndarray:
    """Reduced state of qubits (i, j), basis |00>, |01>, |10>, |11> with qubit i first."""
    n = s.n_qubits
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"invalid qubit pair ({i}, {j}) for N={n}")
    # reshape puts qubit q on tensor axis n - 1 - q
    ax_i, ax_j = n - 1 - i, n - 1 - j
    if s.is_pure:
        psi = s.data.reshape((2,) * n)
        psi = np.moveaxis(psi, (ax_i, ax_j), (0, 1)).reshape(4, -1)
        return psi @ psi.conj().T
    rho = s.data.reshape((2,) * (2 * n))
    rest = [a for a in range(n) if a not in (ax_i, ax_j)]
    rho = np.transpose(rho, [ax_i, ax_j, *rest, n + ax_i, n + ax_j, *(n + a for a in rest)])
    rho = rho.reshape(4, 2 ** (n - 2), 4, 2 ** (n - 2))
    return np.einsum("akbk->ab", rho)


def pair_symmetry_deviation(s: FullState) -> float:
    """Largest elementwise difference between reduced states of distinct pairs."""
    ref = partial_trace_pair(s, 0, 1)
    worst = 0.0
    for i, j in combinations(range(s.n_qubits), 2):
        worst = max(worst, float(np.abs(partial_trace_pair(s, i, j) - ref).max()))
        worst = max(worst, float(np.abs(partial_trace_pair(s, j, i) - ref).max()))
    return worst


def pauli_expectations(s: FullState, i: int = 0, j: int = 1):
    """(one_site, two_site) Pauli expectations of qubits i and j."""
    rho = partial_trace_pair(s, i, j)
    paulis = [
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    eye = np.eye(2)
    one = np.array([np.trace(rho @ np.kron(p, eye)).real for p in paulis])
    two = np.array([[np.trace(rho @ np.kron(a, b)).real for b in paulis] for a in paulis])
    return one, two


def _heisenberg_energies(n_qubits: int, coupling: float, anisotropy: float, sz_function):
    """Diagonal and hopping parts of the all-to-all Hamiltonian.

    H = (J/4) sum_{i != j} s_i . s_j + 3NJ/4 + (anisotropy term), where the
    constant makes the isotropic part equal J S^2 exactly.
    """
    dim = 2**n_qubits
    idx = np.arange(dim)
    bits = [(idx >> q) & 1 for q in range(n_qubits)]
    h = np.zeros((dim, dim))
    diag = np.full(dim, 3 * n_qubits * coupling / 4)
    for p, q in combinations(range(n_qubits), 2):
        differ = bits[p] != bits[q]
        # z z on an ordered pair counted twice in sum_{i != j}
        diag += 2 * (coupling / 4) * np.where(differ, -1.0, 1.0)
        # (x x + y y)|ab> = 2|ba> when a != b
        flipped = idx ^ ((1 << p) | (1 << q))
        src = idx[differ]
        h[flipped[differ], src] += 2 * (coupling / 4) * 2
    m = (n_qubits - 2 * sum(bits)) / 2
    if sz_function is not None:
        diag += np.array([sz_function(float(x)) for x in m])
    else:
        diag += coupling * (anisotropy - 1) * m * m
    h[idx, idx] += diag
    return h


@lru_cache(maxsize=32)
def _spectrum(n_qubits: int, coupling: float, anisotropy: float, sz_function):
    h = _heisenberg_energies(n_qubits, coupling, anisotropy, sz_function)
    return np.linalg.eigh(h)


def full_hamiltonian(model) -> np.ndarray:
    if model.n_qubits > MAX_THERMAL_QUBITS:
        raise ValueError(f"N={model.n_qubits} exceeds the thermal oracle cap of {MAX_THERMAL_QUBITS}")
    return _heisenberg_energies(model.n_qubits, model.coupling, model.anisotropy, model.sz_function)


def full_log_partition(model) -> float:
    if model.n_qubits > MAX_THERMAL_QUBITS:
        raise ValueError(f"N={model.n_qubits} exceeds the thermal oracle cap of {MAX_THERMAL_QUBITS}")
    energies, _ = _spectrum(model.n_qubits, model.coupling, model.anisotropy, model.sz_function)
    expo = -model.beta * energies
    top = expo.max()
    return float(top + np.log(np.exp(expo - top).sum()))


def full_thermal_state(model) -> FullState:
    """Gibbs state exp(-beta H) / Z built by exact diagonalization."""
    if model.n_qubits > MAX_THERMAL_QUBITS:
        raise ValueError(f"N={model.n_qubits} exceeds the thermal oracle cap of {MAX_THERMAL_QUBITS}")
    energies, vecs = _spectrum(model.n_qubits, model.coupling, model.anisotropy, model.sz_function)
    expo = -model.beta * energies
    weights = np.exp(expo - expo.max())
    weights /= weights.sum()
    rho = (vecs * weights) @ vecs.T
    return FullState(model.n_qubits, rho)
