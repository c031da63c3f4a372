"""Collective operators built directly as Pauli sums on 2^N amplitudes.

Shares nothing with the library's collective basis, so it can serve as an
independent reference for moments.  Qubit 0 is the least significant bit and
bit value 0 is |0>, the +1 eigenstate of sigma_z.
"""

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def site_operator(op, site, n):
    out = np.eye(1)
    for q in reversed(range(n)):
        out = np.kron(out, op if q == site else np.eye(2))
    return out


def collective(n):
    s = {a: sum(site_operator(p, q, n) for q in range(n)) / 2 for a, p in zip("xyz", (SX, SY, SZ))}
    s["+"] = s["x"] + 1j * s["y"]
    return s


def moments(psi, n):
    s = collective(n)

    def ev(op):
        return complex(np.vdot(psi, op @ psi))

    return {
        "sz": ev(s["z"]).real,
        "sz2": ev(s["z"] @ s["z"]).real,
        "sp": ev(s["+"]),
        "sp2": ev(s["+"] @ s["+"]),
        "sxy2": ev(s["x"] @ s["x"] + s["y"] @ s["y"]).real,
        "sp_sz_anti": ev(s["+"] @ s["z"] + s["z"] @ s["+"]),
    }


def random_density_matrix(rng, dim=4, rank=None):
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def haar_unitary(rng, dim=2):
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
