from src.dirichlet.coefficients import an_coefficients, convolution_coefficients, liouville
from src.dirichlet.lambdas import conductor_scale, digamma_int, lambda_k, lambda_k_derivative_at_1
from src.dirichlet.series import DirichletData, LValue, L_D_at_1, L_D_derivative_at_1, L_D_value, abel_partial_sum
from src.dirichlet.sieve import build_sieve

__all__ = [
    "an_coefficients",
    "convolution_coefficients",
    "liouville",
    "conductor_scale",
    "digamma_int",
    "lambda_k",
    "lambda_k_derivative_at_1",
    "DirichletData",
    "LValue",
    "L_D_at_1",
    "L_D_derivative_at_1",
    "L_D_value",
    "abel_partial_sum",
    "build_sieve",
]
