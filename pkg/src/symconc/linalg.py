"""Cyclic Jacobi routines for small dense complex matrices."""

from __future__ import annotations

import math

import numpy as np

OFF_TOL = 1e-14
MAX_SWEEPS = 60


class ConvergenceError(RuntimeError):
    pass


def _rotation(app: float, aqq: float, apq: complex) -> tuple[float, float, complex]:
    """(c, s, phase) for the unitary that zeroes ``apq`` of a Hermitian 2x2 block.

    The block [[app, apq], [conj(apq), aqq]] is annihilated off the diagonal
    by J = [[c, s], [-s * conj(phase), c * conj(phase)]].
    """
    mag = abs(apq)
    phase = apq / mag
    tau = (aqq - app) / (2.0 * mag)
    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    return c, t * c, phase


def jacobi_eigh(a, tol: float = OFF_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as columns, matching ``numpy.linalg.eigh``.  Sweeps stop once
    the off-diagonal Frobenius norm drops below ``tol`` times the full norm.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    a = (a + a.conj().T) / 2
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(a[~np.eye(n, dtype=bool)])
        if off <= tol * scale or scale == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                c, s, ph = _rotation(a[p, p].real, a[q, q].real, apq)
                cph = ph.conjugate()
                # columns: A <- A J
                colp, colq = a[:, p].copy(), a[:, q]
                a[:, p] = c * colp - s * cph * colq
                a[:, q] = s * colp + c * cph * colq
                # rows: A <- J^H A
                rowp, rowq = a[p, :].copy(), a[q, :]
                a[p, :] = c * rowp - s * ph * rowq
                a[q, :] = s * rowp + c * ph * rowq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q]
                v[:, p] = c * vp - s * cph * vq
                v[:, q] = s * vp + c * cph * vq
    else:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    evals = np.diag(a).real.copy()
    order = np.argsort(evals)
    return evals[order], v[:, order]


def jacobi_singular_values(m, tol: float = OFF_TOL) -> np.ndarray:
    """Singular values (descending) by one-sided Hestenes-Jacobi.

    Columns are orthogonalized pairwise; the final column norms are the
    singular values, with absolute error of order machine epsilon times the
    largest one.
    """
    u = np.array(m, dtype=complex)
    n = u.shape[1]
    # columns below this squared norm cannot move any singular value by more
    # than machine precision relative to the largest one
    negligible = (np.finfo(float).eps * np.linalg.norm(u)) ** 2
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                up, uq = u[:, p], u[:, q]
                alpha = float(np.vdot(up, up).real)
                beta = float(np.vdot(uq, uq).real)
                gamma = complex(np.vdot(up, uq))
                if min(alpha, beta) <= negligible or abs(gamma) <= tol * math.sqrt(alpha * beta):
                    continue
                rotated = True
                c, s, ph = _rotation(alpha, beta, gamma)
                cph = ph.conjugate()
                newp = c * up - s * cph * uq
                u[:, q] = s * up + c * cph * uq
                u[:, p] = newp
        if not rotated:
            break
    else:
        raise ConvergenceError(f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps")
    return np.sort(np.linalg.norm(u, axis=0))[::-1]
