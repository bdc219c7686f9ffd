"""Thue-Morse diffraction measure: exact autocorrelation, distribution function routes, plots."""

from ._core import (
    Distribution,
    ResourceCapError,
    apply_phi_sampled,
    cross_validate,
    direct_autocorrelation,
    empirical_distribution,
    eta,
    eta_table,
    figure_svg,
    fourier_distribution,
    functional_equation_residual,
    periodogram,
    phi,
    plateau_probe,
    riesz_density,
    riesz_density_sine_form,
    riesz_integral,
    run_cli,
    thue_morse_prefix,
    total_variation_distance,
    volterra_coefficients,
    volterra_distribution,
    wiener_average_decay,
    wiener_decay_bound_exponent,
    wiener_sum,
)

__all__ = [
    "Distribution",
    "ResourceCapError",
    "apply_phi_sampled",
    "cross_validate",
    "direct_autocorrelation",
    "empirical_distribution",
    "eta",
    "eta_table",
    "figure_svg",
    "fourier_distribution",
    "functional_equation_residual",
    "periodogram",
    "phi",
    "plateau_probe",
    "riesz_density",
    "riesz_density_sine_form",
    "riesz_integral",
    "run_cli",
    "thue_morse_prefix",
    "total_variation_distance",
    "volterra_coefficients",
    "volterra_distribution",
    "wiener_average_decay",
    "wiener_decay_bound_exponent",
    "wiener_sum",
]
