"""Oracle-equivalence suites: collective-basis results against brute force."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import collective, concurrence, epr, oracle, pair, states, thermal

LEVELS = {"quick": {"pure_max": 5, "thermal_max": 5}, "full": {"pure_max": 8, "thermal_max": 8}}
ETAS = (-2.0, -0.5, 0.3, 1.0, 2.5)
MUS = tuple(np.linspace(0.0, 2 * np.pi, 9)[1:-1])
DELTAS = (0.0, 0.5, 1.0, 2.0)
XS = (-5.0, -2.0, -0.6, 0.0, 0.4, 1.5, 5.0)


@dataclass
class SuiteResult:
    name: str
    max_deviation: float
    tolerance: float
    cases: int
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.max_deviation <= self.tolerance


@dataclass
class Report:
    level: str
    suites: list[SuiteResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def lines(self) -> list[str]:
        out = []
        for s in self.suites:
            status = "PASS" if s.passed else "FAIL"
            detail = f"  ({s.error})" if s.error else ""
            out.append(f"{s.name:<22} cases={s.cases:<5d} max_dev={s.max_deviation:.3e} "
                       f"tol={s.tolerance:.0e}  {status}{detail}")
        out.append(f"verify --level {self.level}: {'PASS' if self.passed else 'FAIL'} in {self.seconds:.2f} s")
        return out


def _pure_states(n: int):
    yield from (("coherent", eta, states.spin_coherent(n, eta)) for eta in ETAS)
    for k in range(n + 1):
        yield "dicke", k - n / 2, states.dicke_state(n, k - n / 2)
    yield from (("twist", mu, states.twisted_state(n, mu)) for mu in MUS)


def _run(name: str, tolerance: float, body) -> SuiteResult:
    worst, cases = 0.0, 0
    try:
        for dev in body():
            worst = max(worst, float(dev))
            cases += 1
    except Exception as exc:  # a crash inside a suite is a reported failure
        return SuiteResult(name, math.inf, tolerance, cases, f"{type(exc).__name__}: {exc}")
    return SuiteResult(name, worst, tolerance, cases)


def pure_roundtrip(n_max: int):
    for n in range(2, n_max + 1):
        for _, _, v in _pure_states(n):
            mine = pair.assemble_dense(pair.pair_from_moments(collective.moments_of_vector(v)))
            ref = oracle.partial_trace_pair(oracle.symmetrized_full_state(v))
            yield np.abs(mine - ref).max()


def pure_concurrence(n_max: int):
    for n in range(2, n_max + 1):
        for family, param, v in _pure_states(n):
            mine = pair.assemble_dense(pair.pair_from_moments(collective.moments_of_vector(v)))
            ref = oracle.partial_trace_pair(oracle.symmetrized_full_state(v))
            c_ref = concurrence.wootters_general(ref).concurrence
            yield abs(concurrence.wootters_general(mine).concurrence - c_ref)
            if family == "dicke":
                yield abs(concurrence.dicke_concurrence(n, param) - c_ref)
            elif family == "twist":
                p = pair.pair_from_moments(states.twist_moments(n, param))
                yield abs(concurrence.concurrence_xu_form(p.v_plus, p.v_minus, p.w, p.u) - c_ref)
            elif family == "coherent":
                yield c_ref


def thermal_equivalence(n_max: int):
    for n in range(2, n_max + 1):
        for delta in DELTAS:
            for x in XS:
                model = thermal.ThermalModel.from_x(n, x, delta)
                ref_rho = oracle.partial_trace_pair(oracle.full_thermal_state(model))
                mine = pair.assemble_dense(pair.pair_from_moments(thermal.thermal_moments(model)))
                yield abs(thermal.log_partition_function(model) - oracle.full_log_partition(model))
                yield np.abs(mine - ref_rho).max()
                yield abs(thermal.thermal_concurrence(model)
                          - concurrence.wootters_general(ref_rho).concurrence)


def epr_checks(n_max: int):
    for n in range(1, 3 * n_max + 1):
        yield abs(n * epr.epr_concurrence(epr.epr_pair_matrix(n)) - 1.0)
        if n <= 2 * n_max:
            yield max(epr.constraint_residuals(n).values())


def run_verification(level: str = "quick") -> Report:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; choose from {sorted(LEVELS)}")
    cfg = LEVELS[level]
    start = time.perf_counter()
    report = Report(level)
    report.suites.append(_run("pure-roundtrip", 1e-10, lambda: pure_roundtrip(cfg["pure_max"])))
    report.suites.append(_run("pure-concurrence", 1e-9, lambda: pure_concurrence(cfg["pure_max"])))
    report.suites.append(_run("thermal-oracle", 1e-9, lambda: thermal_equivalence(cfg["thermal_max"])))
    report.suites.append(_run("epr", 1e-10, lambda: epr_checks(cfg["pure_max"])))
    report.seconds = time.perf_counter() - start
    return report
