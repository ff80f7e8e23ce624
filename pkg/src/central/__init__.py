from src.central.approximations import C_term, I1, I1_contour, I2, R1_liouville_route, Rk, Rk_contour, Term
from src.central.functional_equation import RootNumber, lambda_smoothed, root_number
from src.central.report import central_derivative, central_quantity, central_report, central_value, predicted_order

__all__ = [
    "C_term",
    "I1",
    "I1_contour",
    "I2",
    "R1_liouville_route",
    "Rk",
    "Rk_contour",
    "Term",
    "RootNumber",
    "lambda_smoothed",
    "root_number",
    "central_derivative",
    "central_quantity",
    "central_report",
    "central_value",
    "predicted_order",
]
