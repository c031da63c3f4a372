"""Collective spin basis |S, M> for N qubits.

Amplitudes are indexed by ``n = M + S`` in ascending order.  In the top sector
``S = N/2`` the index ``n`` counts the qubits sitting in ``|0>``, so the
lowest-weight vector ``n = 0`` is ``|11...1>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

MAX_QUBITS = 60
NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-10


class ConsistencyError(RuntimeError):
    """An internal identity that must hold exactly was violated numerically."""


def _as_half_integer(value) -> Fraction:
    frac = Fraction(value).limit_denominator(2)
    if abs(float(frac) - float(value)) > 1e-12 or frac.denominator not in (1, 2):
        raise ValueError(f"{value!r} is not an integer or half-integer")
    return frac


@dataclass(frozen=True)
class SpinSector:
    n_qubits: int
    total_spin: Fraction

    def __post_init__(self):
        if not isinstance(self.n_qubits, (int, np.integer)) or self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        if self.n_qubits > MAX_QUBITS:
            raise ValueError(f"n_qubits={self.n_qubits} exceeds the supported maximum {MAX_QUBITS}")
        spin = _as_half_integer(self.total_spin)
        gap = Fraction(self.n_qubits, 2) - spin
        if spin < 0 or gap < 0 or gap.denominator != 1:
            raise ValueError(f"S={spin} is not an allowed total spin for N={self.n_qubits}")
        object.__setattr__(self, "n_qubits", int(self.n_qubits))
        object.__setattr__(self, "total_spin", spin)

    @classmethod
    def symmetric(cls, n_qubits: int) -> "SpinSector":
        """The fully symmetric sector S = N/2."""
        return cls(n_qubits, Fraction(n_qubits, 2))

    @property
    def spin(self) -> float:
        return float(self.total_spin)

    @property
    def dimension(self) -> int:
        return int(2 * self.total_spin) + 1

    @property
    def is_symmetric(self) -> bool:
        return 2 * self.total_spin == self.n_qubits

    def m_values(self) -> np.ndarray:
        return np.arange(self.dimension) - self.spin


@dataclass(frozen=True)
class CollectiveVector:
    sector: SpinSector
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (self.sector.dimension,):
            raise ValueError(
                f"expected {self.sector.dimension} amplitudes, got shape {amps.shape}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: |psi|^2 = {norm2!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_qubits(self) -> int:
        return self.sector.n_qubits


@dataclass(frozen=True)
class CollectiveMoments:
    """Collective expectation values that determine a symmetric pair state.

    ``sp2`` carries <S_x^2 - S_y^2> in its real part and <[S_x, S_y]_+> in its
    imaginary part.
    """

    n_qubits: int
    sz: float
    sz2: float
    sp: complex
    sp2: complex
    sxy2: float
    sp_sz_anti: complex

    @property
    def casimir(self) -> float:
        return self.sz2 + self.sxy2

    def check(self, tol: float = 1e-9) -> None:
        """Raise ``ValueError`` if the moments violate a necessary bound."""
        n = self.n_qubits
        smax2 = (n / 2) * (n / 2 + 1)
        if self.sz2 < -tol or self.sz2 - self.sz**2 < -tol:
            raise ValueError(f"negative S_z variance: sz={self.sz}, sz2={self.sz2}")
        if self.casimir > smax2 + tol:
            raise ValueError(f"<S^2>={self.casimir} exceeds (N/2)(N/2+1)={smax2}")
        if abs(self.sp) > n / 2 + tol:
            raise ValueError(f"|<S_+>|={abs(self.sp)} exceeds N/2")


def spin_matrix(sector: SpinSector, which: str) -> np.ndarray:
    """Matrix of ``which`` in {'x', 'y', 'z', '+', '-'} in the |S, M> basis.

    Rows and columns run over increasing M.  Ladder elements are the
    Condon-Shortley values sqrt(S(S+1) - M(M+1)), all real and positive.
    """
    s = sector.spin
    m = sector.m_values()
    dim = sector.dimension
    if which == "z":
        return np.diag(m).astype(complex)
    # <M+1|S_+|M> on the subdiagonal since M increases with the index
    ladder = np.sqrt(np.maximum(s * (s + 1) - m[:-1] * (m[:-1] + 1), 0.0))
    splus = np.zeros((dim, dim), dtype=complex)
    splus[np.arange(1, dim), np.arange(dim - 1)] = ladder
    if which == "+":
        return splus
    sminus = splus.T.copy()
    if which == "-":
        return sminus
    if which == "x":
        return (splus + sminus) / 2
    if which == "y":
        return (splus - sminus) / 2j
    raise ValueError(f"unknown spin component {which!r}")


def _expect(amps: np.ndarray, op: np.ndarray) -> complex:
    return complex(np.vdot(amps, op @ amps))


def _real(value: complex, label: str) -> float:
    if abs(value.imag) > HERMITIAN_TOL:
        raise ConsistencyError(f"<{label}> has imaginary part {value.imag!r}")
    return float(value.real)


def moments_of_vector(state: CollectiveVector) -> CollectiveMoments:
    if not state.sector.is_symmetric:
        raise ValueError("pure symmetric states must live in the S = N/2 sector")
    amps = state.amplitudes
    sz = spin_matrix(state.sector, "z")
    sp = spin_matrix(state.sector, "+")
    sx = spin_matrix(state.sector, "x")
    sy = spin_matrix(state.sector, "y")
    return CollectiveMoments(
        n_qubits=state.n_qubits,
        sz=_real(_expect(amps, sz), "S_z"),
        sz2=_real(_expect(amps, sz @ sz), "S_z^2"),
        sp=_expect(amps, sp),
        sp2=_expect(amps, sp @ sp),
        sxy2=_real(_expect(amps, sx @ sx + sy @ sy), "S_x^2 + S_y^2"),
        sp_sz_anti=_expect(amps, sp @ sz + sz @ sp),
    )


def sector_multiplicity(n_qubits: int, k: int) -> int:
    """Number of spin-(N/2 - k) irreducible blocks among N qubits."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    if not 0 <= k <= n_qubits // 2:
        raise ValueError(f"k must be in [0, {n_qubits // 2}], got {k}")
    return math.comb(n_qubits, k) - (math.comb(n_qubits, k - 1) if k > 0 else 0)


def sectors(n_qubits: int) -> list[tuple[SpinSector, int]]:
    """All (sector, multiplicity) pairs, from S = N/2 downward."""
    return [
        (SpinSector(n_qubits, Fraction(n_qubits, 2) - k), sector_multiplicity(n_qubits, k))
        for k in range(n_qubits // 2 + 1)
    ]
