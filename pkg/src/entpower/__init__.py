"""Two-qubit quantum-correlation lab: entangling power of Cartan-kernel
gates over purity-constrained zero-entanglement state families."""

from .entanglement import (
    EntanglementReport,
    binary_entropy,
    concurrence,
    eof,
    eof_from_concurrence,
    report,
    spin_flip,
    wootters_lambdas,
)
from .epower import (
    AnalyticCheck,
    FamilyKind,
    SweepConfig,
    SweepCurve,
    SweepPoint,
    entangling_power,
    gap_to_mems,
    state_from_descriptor,
    sweep,
    verify_analytic,
)
from .gates import (
    CartanAngles,
    TwoQubitGate,
    apply_gate,
    cartan_kernel,
    parse_angle,
    random_local_unitary,
)
from .linalg import (
    EigenSystem,
    ID2,
    ID4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dag,
    hermitian_eig,
    max_abs,
    psd_sqrt,
    tensor,
)
from .states import (
    MeasurementBasisPair,
    basis_vectors,
    cc_state,
    check_density_matrix,
    check_prob_vector,
    check_qubit_state,
    mdms,
    mems,
    mems_eof_curve,
    mems_gamma_for_purity,
    product_state,
    purity,
    qubit_state,
    rho_c,
    rho_diag,
    rho_s,
    sample_bloch_directions,
    sample_prob_vector,
    sample_prob_vectors,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
