"""Pairwise entanglement of qubit pairs drawn from symmetric N-qubit states."""

from .collective import (
    CollectiveMoments,
    CollectiveVector,
    SpinSector,
    moments_of_vector,
    sector_multiplicity,
    spin_matrix,
)
from .concurrence import (
    PairEntanglement,
    concurrence_xu_form,
    concurrence_xy_form,
    dicke_concurrence,
    entanglement_of_formation,
    pair_entanglement,
    wootters_general,
)
from .epr import epr_concurrence, epr_pair_matrix, epr_state
from .pair import SymmetricPairMatrix, assemble_dense, pair_from_moments, pauli_pair_matrix
from .states import dicke_state, spin_coherent, twist_moments, twisted_state, w_state
from .thermal import (
    ThermalModel,
    critical_x,
    log_partition_function,
    thermal_concurrence,
    thermal_moments,
)

__version__ = "0.1.0"
