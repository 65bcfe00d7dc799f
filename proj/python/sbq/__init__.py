"""Segal-Bargmann transform on compact quotients: multipliers, spectral models, transform checks."""

from ._sbq import (
    CapabilityError,
    ConfigError,
    ConvergenceError,
    DomainError,
    SpectralFunction,
    SpectralModel,
    __version__,
    alpha,
    beta,
    beta_limit,
    circle_model,
    global_inversion_l2,
    heat,
    holo_change_check_circle,
    isometry_G,
    isometry_geometric,
    j_c_radial,
    j_radial_complex,
    lemma5_check,
    list_experiments,
    partial_inversion_geometric,
    partial_inversion_spectral,
    positivity_radius,
    r_infinity,
    run_config,
    sb_eval,
    surjectivity_reconstruct,
    synthetic_quotient_model,
    torus_model,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
