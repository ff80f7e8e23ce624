from src.kernels.contour import DecayCertificate, LineIntegral, gamma_decay_certificate, vertical_line_integral
from src.kernels.gamma import complex_inc_gamma, inc_gamma_ratio, log_kernel, log_kernel_ratio
from src.kernels.milleryang import miller_yang_I
from src.kernels.zeta import zeta_line

__all__ = [
    "DecayCertificate",
    "LineIntegral",
    "gamma_decay_certificate",
    "vertical_line_integral",
    "complex_inc_gamma",
    "inc_gamma_ratio",
    "log_kernel",
    "log_kernel_ratio",
    "miller_yang_I",
    "zeta_line",
]
