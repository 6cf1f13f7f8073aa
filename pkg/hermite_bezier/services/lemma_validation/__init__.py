from hermite_bezier.services.lemma_validation.closed_forms import (
    AngleTriple,
    d_value,
    d_value_arrays,
    gradient_probe,
    in_omega,
    in_omega_arrays,
    measured_theta_tilde,
    q_value,
    realize_configuration,
    sigma_half,
    theta_tilde,
    theta_tilde_arrays,
)
from hermite_bezier.services.lemma_validation.search import (
    GradientEstimate,
    VerificationCertificate,
    estimate_gradient_bound,
    grid_dump,
    sample_omega,
    verify_nonnegativity,
)

__all__ = [
    "AngleTriple",
    "GradientEstimate",
    "VerificationCertificate",
    "d_value",
    "d_value_arrays",
    "estimate_gradient_bound",
    "gradient_probe",
    "grid_dump",
    "in_omega",
    "in_omega_arrays",
    "measured_theta_tilde",
    "q_value",
    "realize_configuration",
    "sample_omega",
    "sigma_half",
    "theta_tilde",
    "theta_tilde_arrays",
    "verify_nonnegativity",
]
