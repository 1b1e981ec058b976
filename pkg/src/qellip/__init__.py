"""Generalized q-numbers, binomial coefficients and their elliptic extensions."""
from ._base import DEFAULT_POLICY, HIGH_POLICY, DomainError, PoleError, PrecisionPolicy
from .binomials import (
    abq_binomial,
    aq_binomial,
    bq_binomial,
    continuous_binomial,
    continuous_binomial_product,
    q_binomial,
)
from .elliptic import (
    EllipticParamSet,
    elliptic_binomial,
    elliptic_number,
    elliptic_weight,
    kernel_interval,
    log_derivative_terms,
    theta_kernel,
    theta_kernel_d1_closed,
    theta_kernel_d2,
)
from .numbers import (
    KernelSpec,
    ParamSet,
    abq_number,
    abq_number_negative,
    abq_weight,
    aq_number,
    bq_number,
    f_kernel,
    f_kernel_d1,
    f_kernel_d2,
    q_number,
    quantum_number,
    turan_ratio,
)
from .theta import (
    SigmaContext,
    eta_constant,
    pp_squared,
    q_pochhammer,
    q_pochhammer_inf,
    sigma,
    theta,
    theta_pochhammer,
    thetas,
    wp,
    zeta_w,
)

__all__ = [
    "DEFAULT_POLICY",
    "HIGH_POLICY",
    "DomainError",
    "EllipticParamSet",
    "KernelSpec",
    "ParamSet",
    "PoleError",
    "PrecisionPolicy",
    "SigmaContext",
    "abq_binomial",
    "abq_number",
    "abq_number_negative",
    "abq_weight",
    "aq_binomial",
    "aq_number",
    "bq_binomial",
    "bq_number",
    "continuous_binomial",
    "continuous_binomial_product",
    "elliptic_binomial",
    "elliptic_number",
    "elliptic_weight",
    "eta_constant",
    "f_kernel",
    "f_kernel_d1",
    "f_kernel_d2",
    "kernel_interval",
    "log_derivative_terms",
    "pp_squared",
    "q_binomial",
    "q_number",
    "q_pochhammer",
    "q_pochhammer_inf",
    "quantum_number",
    "sigma",
    "theta",
    "theta_kernel",
    "theta_kernel_d1_closed",
    "theta_kernel_d2",
    "theta_pochhammer",
    "thetas",
    "turan_ratio",
    "wp",
    "zeta_w",
]

__version__ = "0.1.0"
