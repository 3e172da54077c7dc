"""Universal symmetric 1-to-M qubit cloners derived from no-signaling constraints."""

from ._core import (
    BlochVector,
    ClonerSpec,
    MixtureGeometry,
    SpectralGapError,
    allowed_interval,
    apply_mixed,
    apply_pure,
    brute_force_single_clone,
    clone_overlap_weight,
    compose_predict,
    convex_equality_check,
    dicke_ket,
    eigen_residual,
    embed_full_space,
    fidelity_from_probs,
    fidelity_of,
    linear_identity_check,
    make_named,
    mixture_geometry,
    ns_matrix,
    parity_check,
    prime_fidelity,
    prime_multiplicativity_check,
    prob_vector,
    run_verification,
    schmidt_amplitudes,
    sequential_simulate,
    single_clone,
    solution_space_dim,
    spin_rotation,
    t_from_fidelity,
    wigner_d,
)

__all__ = [
    "BlochVector",
    "ClonerSpec",
    "MixtureGeometry",
    "SpectralGapError",
    "allowed_interval",
    "apply_mixed",
    "apply_pure",
    "brute_force_single_clone",
    "clone_overlap_weight",
    "compose_predict",
    "convex_equality_check",
    "dicke_ket",
    "eigen_residual",
    "embed_full_space",
    "fidelity_from_probs",
    "fidelity_of",
    "linear_identity_check",
    "make_named",
    "mixture_geometry",
    "ns_matrix",
    "parity_check",
    "prime_fidelity",
    "prime_multiplicativity_check",
    "prob_vector",
    "run_verification",
    "schmidt_amplitudes",
    "sequential_simulate",
    "single_clone",
    "solution_space_dim",
    "spin_rotation",
    "t_from_fidelity",
    "wigner_d",
]
