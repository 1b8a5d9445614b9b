"""Lower and upper bounds on the quantum capacity of thermal attenuators.

Qubit (generalized amplitude damping) and single-mode bosonic Gaussian
attenuator channels, with brute-force dilation oracles behind every closed
form.  All entropies and rates are in bits.
"""

from .bounds import (
    BoundsReport,
    gauss_lower,
    gauss_upper_extended,
    gauss_upper_plob,
    gauss_upper_swat,
    gauss_upper_twist,
    qubit_lower,
    qubit_lower_audit_2d,
    qubit_upper_extended,
    report,
)
from .gaussian import (
    GaussianState,
    PhaseInsensitiveParams,
    TwistedFactors,
    apply_amplifier_gaussian,
    apply_attenuator_gaussian,
    apply_phase_insensitive,
    attenuator_as_phase_insensitive,
    coherent_info_attenuator_gaussian,
    coherent_info_extended_gaussian,
    extended_attenuator_moments,
    g_function,
    gaussian_entropy,
    is_entanglement_breaking,
    symplectic_eigenvalues,
    thermal_state,
    twisted_decompose,
    two_mode_squeezed_cov,
)
from .linalg import (
    DensityMatrix,
    InvalidStateError,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    von_neumann_entropy,
)
from .optimize import EvaluationError, ScalarMaxResult, maximize_scalar
from .qubit import (
    QubitAttenuatorParams,
    QubitState,
    apply_attenuator,
    beamsplitter_unitary,
    coherent_information_qubit,
    complementary_output,
    dilated_state,
    extended_output,
    phase_damping,
    purified_environment,
    thermal_qubit,
    weak_complementary_output,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DensityMatrix",
    "EvaluationError",
    "GaussianState",
    "InvalidStateError",
    "PhaseInsensitiveParams",
    "QubitAttenuatorParams",
    "QubitState",
    "ScalarMaxResult",
    "TwistedFactors",
    "apply_amplifier_gaussian",
    "apply_attenuator",
    "apply_attenuator_gaussian",
    "apply_phase_insensitive",
    "attenuator_as_phase_insensitive",
    "beamsplitter_unitary",
    "coherent_info_attenuator_gaussian",
    "coherent_info_extended_gaussian",
    "coherent_information_qubit",
    "complementary_output",
    "dilated_state",
    "extended_attenuator_moments",
    "extended_output",
    "g_function",
    "gauss_lower",
    "gauss_upper_extended",
    "gauss_upper_plob",
    "gauss_upper_swat",
    "gauss_upper_twist",
    "gaussian_entropy",
    "hermitian_eigenvalues",
    "is_entanglement_breaking",
    "kron",
    "maximize_scalar",
    "partial_trace",
    "phase_damping",
    "purified_environment",
    "qubit_lower",
    "qubit_lower_audit_2d",
    "qubit_upper_extended",
    "report",
    "symplectic_eigenvalues",
    "thermal_qubit",
    "thermal_state",
    "twisted_decompose",
    "two_mode_squeezed_cov",
    "von_neumann_entropy",
    "weak_complementary_output",
]
