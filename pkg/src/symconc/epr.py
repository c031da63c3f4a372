"""Two N-qubit ensembles in the EPR-correlated state sum_n |n>|n> / sqrt(N+1).

The pair here takes one qubit from each ensemble.  Within an ensemble the
state is symmetric, so <s1z s2z> = 4 <J1z J2z> / N^2 and
<s1+ s2+> = <J1+ J2+> / N^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collective import SpinSector, spin_matrix
from .pair import SymmetricPairMatrix


@dataclass(frozen=True)
class EprPairMatrix:
    v: float
    w: float
    u: complex
    n_per_ensemble: int

    def __post_init__(self):
        if abs(2 * self.v + 2 * self.w - 1) > 1e-12:
            raise ValueError(f"trace 2v + 2w = {2 * self.v + 2 * self.w!r}, expected 1")
        if abs(self.u) > self.v + 1e-12:
            raise ValueError(f"|u| = {abs(self.u)} exceeds v = {self.v}")

    def as_pair_matrix(self) -> SymmetricPairMatrix:
        # middle block is diagonal: no |01><10| coherence between ensembles
        return SymmetricPairMatrix(
            v_plus=self.v, v_minus=self.v, x_plus=0j, x_minus=0j, w=self.w, y=0j, u=self.u,
            n_source_qubits=2 * self.n_per_ensemble,
        )


def epr_state(n_per_ensemble: int) -> np.ndarray:
    """Amplitudes psi[n1, n2] over the product of two symmetric sectors."""
    if n_per_ensemble < 1:
        raise ValueError(f"need N >= 1, got {n_per_ensemble}")
    dim = n_per_ensemble + 1
    return np.eye(dim, dtype=complex) / np.sqrt(dim)


def ensemble_operators(n_per_ensemble: int) -> dict[str, np.ndarray]:
    """J_1a and J_2a acting on the (N+1)^2-dimensional product space."""
    sector = SpinSector.symmetric(n_per_ensemble)
    eye = np.eye(sector.dimension)
    ops = {}
    for a in ("x", "y", "z", "+", "-"):
        single = spin_matrix(sector, a)
        ops["1" + a] = np.kron(single, eye)
        ops["2" + a] = np.kron(eye, single)
    return ops


def constraint_residuals(n_per_ensemble: int) -> dict[str, float]:
    """Norms of the operators that should annihilate the EPR state applied to it."""
    psi = epr_state(n_per_ensemble).reshape(-1)
    ops = ensemble_operators(n_per_ensemble)
    combos = {
        "J1x - J2x": ops["1x"] - ops["2x"],
        "J1y + J2y": ops["1y"] + ops["2y"],
        "J1+ - J2-": ops["1+"] - ops["2-"],
        "J1- - J2+": ops["1-"] - ops["2+"],
        "J1z - J2z": ops["1z"] - ops["2z"],
    }
    return {name: float(np.linalg.norm(op @ psi)) for name, op in combos.items()}


def correlations_closed_form(n_per_ensemble: int) -> tuple[float, float]:
    """(<J1z J2z>, <J1+ J2+>) from explicit sums over the number states."""
    s = n_per_ensemble / 2
    ms = np.arange(n_per_ensemble + 1) - s
    zz = float(np.sum(ms * ms)) / (n_per_ensemble + 1)
    # <n+1|<n+1| J1+ J2+ |n>|n> is the squared ladder coefficient
    pp = float(np.sum(s * (s + 1) - ms[:-1] * (ms[:-1] + 1))) / (n_per_ensemble + 1)
    return zz, pp


def correlations_contracted(n_per_ensemble: int) -> tuple[complex, complex, float]:
    """(<J1z J2z>, <J1+ J2+>, <J1z>) by contracting the amplitude tensor."""
    psi = epr_state(n_per_ensemble)
    sector = SpinSector.symmetric(n_per_ensemble)
    jz, jp = spin_matrix(sector, "z"), spin_matrix(sector, "+")
    zz = np.einsum("ab,ac,bd,cd->", psi.conj(), jz, jz, psi)
    pp = np.einsum("ab,ac,bd,cd->", psi.conj(), jp, jp, psi)
    z1 = np.einsum("ab,ac,cb->", psi.conj(), jz, psi)
    return complex(zz), complex(pp), float(np.real(z1))


def epr_pair_matrix(n_per_ensemble: int) -> EprPairMatrix:
    zz, pp = correlations_closed_form(n_per_ensemble)
    zz_c, pp_c, z1 = correlations_contracted(n_per_ensemble)
    if abs(zz - zz_c) > 1e-12 * max(1.0, abs(zz)) or abs(pp - pp_c) > 1e-12 * max(1.0, abs(pp)):
        raise RuntimeError("closed-form and contracted EPR correlations disagree")
    if abs(z1) > 1e-12:
        raise RuntimeError(f"<J1z> = {z1} should vanish")
    n2 = n_per_ensemble**2
    w = 0.25 - zz / n2
    return EprPairMatrix(v=(1 - 2 * w) / 2, w=w, u=complex(pp / n2), n_per_ensemble=n_per_ensemble)


def epr_concurrence(p: EprPairMatrix) -> float:
    return 2.0 * max(0.0, abs(p.u) - p.w)
