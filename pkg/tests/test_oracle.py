import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symconc.collective import CollectiveVector, SpinSector
from symconc.concurrence import wootters_general
from symconc.oracle import (
    MAX_THERMAL_QUBITS,
    MAX_VECTOR_QUBITS,
    FullState,
    full_log_partition,
    full_thermal_state,
    pair_symmetry_deviation,
    partial_trace_pair,
    pauli_expectations,
    symmetrized_full_state,
)
from symconc.states import dicke_state, spin_coherent, w_state
from symconc.thermal import ThermalModel

import fullspace


def test_bit_convention():
    # |0>_3 has every qubit in |1>, so only the all-ones index survives
    v = symmetrized_full_state(dicke_state(3, -1.5))
    assert abs(v.data[0b111]) == pytest.approx(1)
    # a single qubit in |0> on qubit 0 sets sigma_z of qubit 0 to +1
    psi = np.zeros(4, dtype=complex)
    psi[0b10] = 1
    one, _ = pauli_expectations(FullState(2, psi), 0, 1)
    assert one[2] == pytest.approx(1)
    one, _ = pauli_expectations(FullState(2, psi), 1, 0)
    assert one[2] == pytest.approx(-1)


def test_symmetrized_norm_and_sz():
    for n in (2, 5, 8):
        v = dicke_state(n, 1 - n / 2)
        full = symmetrized_full_state(v)
        s = fullspace.collective(n)
        assert np.vdot(full.data, full.data).real == pytest.approx(1)
        assert np.vdot(full.data, s["z"] @ full.data).real == pytest.approx(1 - n / 2)


def test_ghz_pair():
    n = 4
    amps = np.zeros(n + 1, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    v = CollectiveVector(SpinSector.symmetric(n), amps)
    rho = partial_trace_pair(symmetrized_full_state(v))
    np.testing.assert_allclose(rho, np.diag([0.5, 0, 0, 0.5]), atol=1e-14)
    assert wootters_general(rho).concurrence < 1e-12


def test_w_three_qubits():
    rho = partial_trace_pair(symmetrized_full_state(w_state(3)))
    assert wootters_general(rho).concurrence == pytest.approx(2 / 3, abs=1e-12)


@given(st.integers(2, 7), st.floats(-3, 3))
@settings(max_examples=30, deadline=None)
def test_pair_choice_irrelevant(n, eta):
    assert pair_symmetry_deviation(symmetrized_full_state(spin_coherent(n, eta))) < 1e-12


def test_mixed_partial_trace_matches_pure():
    full = symmetrized_full_state(dicke_state(4, 0))
    mixed = FullState(4, np.outer(full.data, full.data.conj()))
    for i, j in ((0, 1), (2, 3), (3, 1)):
        np.testing.assert_allclose(partial_trace_pair(full, i, j), partial_trace_pair(mixed, i, j), atol=1e-14)


def test_caps():
    with pytest.raises(ValueError):
        symmetrized_full_state(dicke_state(MAX_VECTOR_QUBITS + 1, 0.5))
    with pytest.raises(ValueError):
        full_thermal_state(ThermalModel(MAX_THERMAL_QUBITS + 1, beta=1.0))
    with pytest.raises(ValueError):
        full_log_partition(ThermalModel(MAX_THERMAL_QUBITS + 1, beta=1.0))


def test_invalid_inputs():
    with pytest.raises(ValueError):
        FullState(2, np.ones(4))
    with pytest.raises(ValueError):
        FullState(2, np.ones(3) / math.sqrt(3))
    with pytest.raises(ValueError):
        partial_trace_pair(symmetrized_full_state(w_state(3)), 1, 1)


def test_infinite_temperature_is_identity():
    for n in (2, 4):
        rho = full_thermal_state(ThermalModel(n, 1.0, 0.3, 0.0)).data
        np.testing.assert_allclose(rho, np.eye(2**n) / 2**n, atol=1e-14)
        assert full_log_partition(ThermalModel(n)) == pytest.approx(n * math.log(2))


def test_two_qubit_partition():
    for beta in (0.2, 1.0, 3.0):
        z = 1 + 3 * math.exp(-2 * beta)
        assert full_log_partition(ThermalModel(2, 1.0, 1.0, beta)) == pytest.approx(math.log(z))
