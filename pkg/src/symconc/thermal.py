"""Gibbs states of all-to-all Heisenberg models in the collective basis.

Energies are E(S, M) = J S(S+1) + J(Delta - 1) M^2, or J S(S+1) + f(M) when a
function of S_z is supplied.  Each (S, M) level carries the multiplicity of
its sector, and every Boltzmann sum is evaluated in log-sum-exp form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .collective import CollectiveMoments, sector_multiplicity
from .concurrence import concurrence_xy_form
from .pair import SymmetricPairMatrix, pair_from_moments


@dataclass(frozen=True)
class ThermalModel:
    """``coupling`` J > 0 is antiferromagnetic; ``beta`` = 1/T with k = 1."""

    n_qubits: int
    coupling: float = 1.0
    anisotropy: float = 1.0
    beta: float = 0.0
    sz_function: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        if not 1 <= self.n_qubits <= 60:
            raise ValueError(f"n_qubits must be in [1, 60], got {self.n_qubits}")
        if not math.isfinite(self.beta):
            raise ValueError("beta must be finite")
        if not math.isfinite(self.coupling) or not math.isfinite(self.anisotropy):
            raise ValueError("coupling and anisotropy must be finite")

    @classmethod
    def from_x(cls, n_qubits: int, x: float, anisotropy: float = 1.0, sz_function=None) -> "ThermalModel":
        """Model at reduced inverse temperature x = beta J, with |J| = 1."""
        coupling = -1.0 if x < 0 else 1.0
        return cls(n_qubits, coupling, anisotropy, abs(x), sz_function)

    @property
    def x(self) -> float:
        return self.beta * self.coupling


def _levels(model: ThermalModel):
    """(log multiplicity, energy, S, M) arrays over every (k, m) level."""
    n = model.n_qubits
    log_mult, energy, spin, mag = [], [], [], []
    for k in range(n // 2 + 1):
        s = n / 2 - k
        ms = np.arange(n - 2 * k + 1) - s
        if model.sz_function is not None:
            shift = np.array([model.sz_function(float(m)) for m in ms])
        else:
            shift = model.coupling * (model.anisotropy - 1) * ms * ms
        log_mult.append(np.full(ms.size, math.log(sector_multiplicity(n, k))))
        energy.append(model.coupling * s * (s + 1) + shift)
        spin.append(np.full(ms.size, s))
        mag.append(ms)
    return tuple(np.concatenate(a) for a in (log_mult, energy, spin, mag))


def _log_weights(model: ThermalModel):
    log_mult, energy, spin, mag = _levels(model)
    expo = log_mult - model.beta * energy
    top = expo.max()
    log_z = top + math.log(np.exp(expo - top).sum())
    return expo - log_z, log_z, spin, mag


def log_partition_function(model: ThermalModel) -> float:
    return float(_log_weights(model)[1])


def thermal_moments(model: ThermalModel) -> CollectiveMoments:
    """Boltzmann-averaged collective moments.

    All three Hamiltonians conserve S_z, so every coherence between different
    M vanishes: <S_+> = <S_+^2> = <[S_+, S_z]_+> = 0.  <S_z> is zero unless
    a supplied f(S_z) is odd in part.
    """
    logw, _, spin, mag = _log_weights(model)
    p = np.exp(logw)
    sz2 = float(p @ (mag * mag))
    return CollectiveMoments(
        n_qubits=model.n_qubits,
        sz=0.0 if model.sz_function is None else float(p @ mag),
        sz2=sz2,
        sp=0j,
        sp2=0j,
        sxy2=float(p @ (spin * (spin + 1) - mag * mag)),
        sp_sz_anti=0j,
    )


def thermal_pair(model: ThermalModel) -> SymmetricPairMatrix:
    return pair_from_moments(thermal_moments(model))


def sign_quantity(n_qubits: int, sz2: float, sxy2: Optional[float] = None) -> float:
    """A = 2|2<S_x^2+S_y^2> - N| - N^2 + 2N - 4<S_z^2>; C = max(0, A) / (2N(N-1)).

    Without ``sxy2`` the isotropic relation <S_x^2+S_y^2> = 2<S_z^2> is used.
    """
    n = n_qubits
    if sxy2 is None:
        sxy2 = 2 * sz2
    return 2 * abs(2 * sxy2 - n) - n * n + 2 * n - 4 * sz2


def thermal_concurrence(model: ThermalModel) -> float:
    if model.n_qubits < 2:
        raise ValueError("need at least two qubits")
    m = thermal_moments(model)
    n = model.n_qubits
    if model.sz_function is None:
        return max(0.0, sign_quantity(n, m.sz2, m.sxy2)) / (2 * n * (n - 1))
    # a non-even f(S_z) polarizes the pair, so v+ != v-
    pair = pair_from_moments(m)
    return concurrence_xy_form(pair.v_plus, pair.v_minus, pair.w, pair.y)


def critical_x(
    n_qubits: int,
    anisotropy: float = 0.0,
    x_max: float = 50.0,
    side: str = "ferro",
    tol: float = 1e-6,
    scan_points: int = 200,
    threshold: float = 1e-12,
) -> float:
    """Reduced inverse temperature |x| = |beta J| at which pairwise entanglement sets in.

    Concurrence is zero at high temperature (small |x|).  A coarse scan over
    |x| in (0, x_max] locates the last point where C <= ``threshold`` before
    the entangled region that extends to ``x_max``; bisection then refines
    the crossing to ``tol``.  Returns the magnitude |x_c|.
    """
    if side not in ("ferro", "antiferro"):
        raise ValueError(f"side must be 'ferro' or 'antiferro', got {side!r}")
    sign = -1.0 if side == "ferro" else 1.0

    def conc(mag: float) -> float:
        return thermal_concurrence(ThermalModel.from_x(n_qubits, sign * mag, anisotropy))

    grid = np.linspace(0.0, x_max, scan_points + 1)
    values = np.array([conc(g) for g in grid])
    positive = values > threshold
    if not positive[-1] or positive.all():
        raise ValueError(
            f"no entanglement onset for N={n_qubits}, Delta={anisotropy} on the {side} side within |x| <= {x_max}")
    # last zero before the entangled tail
    lo_index = int(np.flatnonzero(~positive).max())
    lo, hi = grid[lo_index], grid[lo_index + 1]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if conc(mid) > threshold:
            hi = mid
        else:
            lo = mid
    return float(0.5 * (lo + hi))
