"""Print the closed-form values the package reproduces."""

from symconc import (
    ThermalModel,
    dicke_concurrence,
    epr_concurrence,
    epr_pair_matrix,
    pair_entanglement,
    pair_from_moments,
    thermal_concurrence,
    twist_moments,
)

for n in (2, 4, 10, 30):
    print(f"Dicke N={n:2d}: C(M=0) = {dicke_concurrence(n, 0):.12f}   1/(N-1) = {1 / (n - 1):.12f}")
for n in (3, 10, 30):
    print(f"W     N={n:2d}: C = {dicke_concurrence(n, n / 2 - 1):.12f}   2/N = {2 / n:.12f}")
for n in (1, 2, 10, 30):
    print(f"EPR   N={n:2d}: C = {epr_concurrence(epr_pair_matrix(n)):.12f}   1/N = {1 / n:.12f}")
for n in (3, 7):
    c = max(pair_entanglement(pair_from_moments(twist_moments(n, mu / 100))).concurrence for mu in range(629))
    print(f"twist N={n}: max C over mu = {c:.6f}")
print("isotropic N=6 at x=-5, 0, 5:", [thermal_concurrence(ThermalModel.from_x(6, x)) for x in (-5, 0, 5)])
