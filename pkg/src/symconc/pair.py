"""Two-qubit reduced state of an exchange-symmetric N-qubit state."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collective import CollectiveMoments, ConsistencyError

PSD_TOL = 1e-10
TRACE_TOL = 1e-10


@dataclass(frozen=True)
class SymmetricPairMatrix:
    """Structured 4x4 pair density matrix in the basis |00>, |01>, |10>, |11>.

    Layout::

        v+   x+*  x+*  u*
        x+   w    y*   x-*
        x+   y    w    x-*
        u    x-   x-   v-
    """

    v_plus: float
    v_minus: float
    x_plus: complex
    x_minus: complex
    w: float
    y: complex
    u: complex
    n_source_qubits: int | None = None

    @property
    def trace(self) -> float:
        return self.v_plus + self.v_minus + 2 * self.w

    def dense(self) -> np.ndarray:
        return assemble_dense(self)

    def validate(self, tol: float = PSD_TOL) -> None:
        if abs(self.trace - 1.0) > TRACE_TOL:
            raise ValueError(f"pair matrix trace is {self.trace!r}, expected 1")
        eigs = np.linalg.eigvalsh(assemble_dense(self))
        if eigs[0] < -tol * max(1.0, abs(self.trace)):
            raise ValueError(f"pair matrix is not positive semidefinite (min eigenvalue {eigs[0]:.3e})")


def assemble_dense(p: SymmetricPairMatrix) -> np.ndarray:
    xp, xm, y, u = complex(p.x_plus), complex(p.x_minus), complex(p.y), complex(p.u)
    return np.array(
        [
            [p.v_plus, xp.conjugate(), xp.conjugate(), u.conjugate()],
            [xp, p.w, y.conjugate(), xm.conjugate()],
            [xp, y, p.w, xm.conjugate()],
            [u, xm, xm, p.v_minus],
        ],
        dtype=complex,
    )


def pair_from_moments(m: CollectiveMoments, *, validate: bool = True) -> SymmetricPairMatrix:
    """Pair state from collective moments; valid for any permutation-symmetric state."""
    n = m.n_qubits
    if n < 2:
        raise ValueError(f"need at least two qubits, got N={n}")
    d = n * (n - 1)
    y = (2 * m.sxy2 - n) / (2 * d)
    if abs(np.imag(y)) > 1e-10:
        raise ConsistencyError(f"y = {y!r} is not real")
    pair = SymmetricPairMatrix(
        v_plus=(n * n - 2 * n + 4 * m.sz2 + 4 * m.sz * (n - 1)) / (4 * d),
        v_minus=(n * n - 2 * n + 4 * m.sz2 - 4 * m.sz * (n - 1)) / (4 * d),
        x_plus=((n - 1) * m.sp + m.sp_sz_anti) / (2 * d),
        x_minus=((n - 1) * m.sp - m.sp_sz_anti) / (2 * d),
        w=(n * n - 4 * m.sz2) / (4 * d),
        y=complex(np.real(y)),
        u=complex(m.sp2) / d,
        n_source_qubits=n,
    )
    if validate:
        pair.validate()
    return pair


def pauli_pair_matrix(one_site, two_site, *, validate: bool = True) -> SymmetricPairMatrix:
    """Pair state from Pauli expectations.

    ``one_site`` is (<s1x>, <s1y>, <s1z>) and ``two_site[a][b]`` is
    <s1a s2b> for a, b in (x, y, z).  Exchange symmetry means the one-site
    values are shared by both qubits.  Raising operator is s+ = |0><1|.
    """
    rx, ry, rz = (float(v) for v in one_site)
    t = np.asarray(two_site, dtype=float)
    if t.shape != (3, 3):
        raise ValueError(f"two_site must be 3x3, got shape {t.shape}")
    plus = (rx + 1j * ry) / 2
    plus_z = (t[0, 2] + 1j * t[1, 2]) / 2
    y = (t[0, 0] + t[1, 1] + 1j * (t[1, 0] - t[0, 1])) / 4
    if abs(y.imag) > 1e-10:
        raise ValueError(f"<s1+ s2-> = {y!r} is not real; state is not exchange symmetric")
    pair = SymmetricPairMatrix(
        v_plus=(1 + 2 * rz + t[2, 2]) / 4,
        v_minus=(1 - 2 * rz + t[2, 2]) / 4,
        x_plus=(plus + plus_z) / 2,
        x_minus=(plus - plus_z) / 2,
        w=(1 - t[2, 2]) / 4,
        y=complex(y.real),
        u=(t[0, 0] - t[1, 1] + 2j * t[0, 1]) / 4,
    )
    if validate:
        pair.validate()
    return pair
