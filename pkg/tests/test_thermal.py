import math

import numpy as np
import pytest

from symconc.concurrence import concurrence_xy_form, wootters_general
from symconc.oracle import full_log_partition, full_thermal_state, partial_trace_pair
from symconc.pair import assemble_dense
from symconc.thermal import (
    ThermalModel,
    critical_x,
    log_partition_function,
    sign_quantity,
    thermal_concurrence,
    thermal_moments,
    thermal_pair,
)

import fullspace


def field(m):
    return 0.8 * m


def quadratic(m):
    return -0.6 * m * m + 0.3 * m


@pytest.mark.parametrize("n", [1, 2, 5, 12, 40])
def test_infinite_temperature(n):
    for model in (ThermalModel(n), ThermalModel(n, -1.0, 0.0), ThermalModel(n, 1.0, sz_function=field)):
        assert log_partition_function(model) == pytest.approx(n * math.log(2), abs=1e-12)
        assert thermal_moments(model).sz2 == pytest.approx(n / 4, abs=1e-12)


def test_two_qubit_isotropic_partition():
    for x in (-3.0, -0.5, 0.7, 2.0):
        model = ThermalModel.from_x(2, x)
        assert math.exp(log_partition_function(model)) == pytest.approx(3 * math.exp(-2 * x) + 1, rel=1e-12)


def test_two_qubit_oracle_gibbs_weights():
    # singlet energy 0, triplet 2J: weights 1 : 3 exp(-2 beta J)
    model = ThermalModel(2, 1.0, 1.0, 0.8)
    rho = full_thermal_state(model).data
    z = 1 + 3 * math.exp(-1.6)
    singlet = np.array([0, 1, -1, 0]) / math.sqrt(2)
    assert np.vdot(singlet, rho @ singlet).real == pytest.approx(1 / z)
    assert np.trace(rho).real == pytest.approx(1)


def test_four_qubit_xx_partition_oracle():
    model = ThermalModel.from_x(4, 1.0, 0.0)
    assert log_partition_function(model) == pytest.approx(full_log_partition(model), rel=1e-10)


def test_oracle_hamiltonian_is_collective():
    # the all-pairs Hamiltonian plus its constant equals J S^2 + J(Delta-1) S_z^2 exactly
    from symconc.oracle import full_hamiltonian

    n, delta = 4, 0.3
    s = fullspace.collective(n)
    h = full_hamiltonian(ThermalModel(n, 1.7, delta, 1.0))
    expected = 1.7 * (s["x"] @ s["x"] + s["y"] @ s["y"] + s["z"] @ s["z"]) + 1.7 * (delta - 1) * s["z"] @ s["z"]
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_antiferromagnet_ground_singlet():
    m = thermal_moments(ThermalModel(4, 1.0, 1.0, 50.0))
    assert m.sz2 < 1e-15
    assert m.sxy2 < 1e-15


@pytest.mark.parametrize("x", [-1.0, 1.0])
def test_xx_two_qubit_oracle(x):
    model = ThermalModel.from_x(2, x, 0.0)
    rho = full_thermal_state(model).data
    s = fullspace.collective(2)
    m = thermal_moments(model)
    assert m.sz2 == pytest.approx(np.trace(rho @ s["z"] @ s["z"]).real, abs=1e-10)
    assert m.sxy2 == pytest.approx(np.trace(rho @ (s["x"] @ s["x"] + s["y"] @ s["y"])).real, abs=1e-10)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("delta", [0.0, 0.5, 1.0, 2.0])
def test_oracle_equivalence(n, delta):
    s = fullspace.collective(n) if n <= 6 else None
    for x in np.linspace(-5, 5, 11):
        model = ThermalModel.from_x(n, x, delta)
        full = full_thermal_state(model)
        assert log_partition_function(model) == pytest.approx(full_log_partition(model), abs=1e-9)
        rho12 = partial_trace_pair(full)
        np.testing.assert_allclose(assemble_dense(thermal_pair(model)), rho12, atol=1e-9)
        assert thermal_concurrence(model) == pytest.approx(wootters_general(rho12).concurrence, abs=1e-9)
        if s is not None:
            m = thermal_moments(model)
            assert m.sz2 == pytest.approx(np.trace(full.data @ s["z"] @ s["z"]).real, abs=1e-9)


@pytest.mark.parametrize("f", [field, quadratic])
def test_general_sz_function_oracle(f):
    for n in (2, 3, 5):
        for x in (-3.0, -0.5, 0.5, 2.5):
            model = ThermalModel.from_x(n, x, sz_function=f)
            full = full_thermal_state(model)
            rho12 = partial_trace_pair(full)
            assert log_partition_function(model) == pytest.approx(full_log_partition(model), abs=1e-9)
            np.testing.assert_allclose(assemble_dense(thermal_pair(model)), rho12, atol=1e-9)
            assert thermal_concurrence(model) == pytest.approx(wootters_general(rho12).concurrence, abs=1e-9)


def test_field_polarizes():
    m = thermal_moments(ThermalModel(4, 1.0, beta=2.0, sz_function=field))
    assert m.sz < -0.1


def test_field_can_generate_entanglement():
    # -h S_z^2 favours M = 0 Dicke levels for a ferromagnet, as the XX model does
    model = ThermalModel(6, -1.0, beta=3.0, sz_function=lambda m: 1.0 * m * m)
    assert thermal_concurrence(model) > 0.05


@pytest.mark.parametrize("n", range(2, 13))
def test_concurrence_matches_xy_form(n):
    for delta in (0.0, 1.0, 1.7):
        for x in np.linspace(-5, 5, 21):
            model = ThermalModel.from_x(n, x, delta)
            p = thermal_pair(model)
            assert thermal_concurrence(model) == pytest.approx(
                concurrence_xy_form(p.v_plus, p.v_minus, p.w, p.y), abs=1e-12)


@pytest.mark.parametrize("n", range(3, 13))
def test_isotropic_no_entanglement(n):
    for x in np.linspace(-5, 5, 101):
        model = ThermalModel.from_x(n, x)
        m = thermal_moments(model)
        assert thermal_concurrence(model) == 0
        assert sign_quantity(n, m.sz2) <= 1e-10
        assert m.sz2 <= (n / 2) * (n / 2 + 1) / 3 + 1e-12
        # isotropy: first and second forms of the sign quantity coincide
        assert sign_quantity(n, m.sz2, m.sxy2) == pytest.approx(sign_quantity(n, m.sz2), abs=1e-10)


def test_isotropic_two_qubits_antiferro_only():
    assert thermal_concurrence(ThermalModel.from_x(2, 3.0)) > 0.9
    assert thermal_concurrence(ThermalModel.from_x(2, -3.0)) == 0


def test_delta_one_is_isotropic():
    for n in (3, 6):
        for x in (-2.0, 0.5):
            a = thermal_moments(ThermalModel(n, math.copysign(1, x), 1.0, abs(x)))
            b = thermal_moments(ThermalModel.from_x(n, x))
            assert a == b


def test_xx_two_qubits_symmetric():
    for x in np.linspace(0, 5, 51):
        c_plus = thermal_concurrence(ThermalModel.from_x(2, x, 0.0))
        c_minus = thermal_concurrence(ThermalModel.from_x(2, -x, 0.0))
        assert c_plus == pytest.approx(c_minus, abs=1e-9)


@pytest.mark.parametrize("n", range(3, 9))
def test_xx_ferromagnetic_only(n):
    xs = np.linspace(-5, 5, 101)
    cs = np.array([thermal_concurrence(ThermalModel.from_x(n, x, 0.0)) for x in xs])
    assert np.all(cs[xs > 0] == 0)
    assert cs[xs < 0].max() > 0


def test_xx_low_temperature_limit_is_dicke():
    # the ferromagnetic XX ground level is |N/2, 0>, concurrence 1/(N-1)
    assert thermal_concurrence(ThermalModel.from_x(6, -50.0, 0.0)) == pytest.approx(1 / 5, abs=1e-12)


def test_large_n_no_overflow():
    for n, x in ((25, 5.0), (25, -5.0), (60, 50.0), (60, -50.0)):
        model = ThermalModel.from_x(n, x, 0.0)
        assert math.isfinite(log_partition_function(model))
        assert 0 <= thermal_concurrence(model) <= 1


def test_two_qubit_critical_both_sides():
    ferro = critical_x(2, 0.0, x_max=10)
    anti = critical_x(2, 0.0, x_max=10, side="antiferro")
    assert ferro == pytest.approx(anti, abs=2e-6)
    # tanh(x_c) = 1/sqrt(2)... equivalently sinh(x_c) = 1 for the two-qubit XX model
    assert ferro == pytest.approx(math.asinh(1.0), abs=2e-6)


def test_critical_signed_x_increases_with_n():
    # on the ferromagnetic side x_c < 0 moves towards zero as N grows
    signed = [-critical_x(n, 0.0, x_max=10) for n in (5, 15, 25)]
    assert signed[0] < signed[1] < signed[2] < 0


@pytest.mark.parametrize("n", [5, 8])
def test_critical_point_against_oracle(n):
    xc = critical_x(n, 0.0, x_max=10)
    for mag, entangled in ((xc * 1.02, True), (xc * 0.98, False)):
        rho12 = partial_trace_pair(full_thermal_state(ThermalModel.from_x(n, -mag, 0.0)))
        c = wootters_general(rho12).concurrence
        assert (c > 1e-9) is entangled


def test_critical_requires_onset():
    with pytest.raises(ValueError):
        critical_x(6, 1.0, x_max=10)
    with pytest.raises(ValueError):
        critical_x(6, 0.0, x_max=10, side="antiferro")


def test_invalid_models():
    with pytest.raises(ValueError):
        ThermalModel(3, beta=math.inf)
    with pytest.raises(ValueError):
        ThermalModel(0)
    with pytest.raises(ValueError):
        thermal_concurrence(ThermalModel(1))
