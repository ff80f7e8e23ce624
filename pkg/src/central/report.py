import logging
from typing import Literal, Optional, Union

from src.api_models.reports import CentralReport, Order
from src.character.canonical import EpsCharacter, make_character
from src.config.settings import get_setting
from src.exceptions import RouteMismatchError
from src.utilities.messages import derivative_not_meaningful, value_not_meaningful
from src.central.approximations import I1, I2, C_term, Rk
from src.central.functional_equation import root_number

logger = logging.getLogger(__name__)
settings = get_setting()

Route = Literal["value", "derivative"]


def nonvanishing_threshold(tol: float, scale: float) -> float:
    return max(10 * tol, 1e-6 * scale)


def predicted_order(W: int, central: Optional[float], tol: float, scale: float) -> Order:
    """0 when W = +1 and L is visibly nonzero, 1 when W = -1 and L' is; otherwise inconclusive."""
    if central is None or abs(central) <= nonvanishing_threshold(tol, scale):
        return "inconclusive"
    return 0 if W == 1 else 1


def central_report(
    D: int,
    d: int = 1,
    k: int = 1,
    variant: int = 0,
    tol: Optional[float] = None,
    threads: Optional[int] = None,
    route: Route = "value",
    char: Optional[EpsCharacter] = None,
) -> CentralReport:
    """
    Root number first, then the decomposition that root number makes
    meaningful: I1 + I2 when W = +1, Rk + C when W = -1.
    """
    tol = tol or settings.tol
    threads = threads or settings.threads
    char = char or make_character(D, d, k, variant)
    rn = root_number(D, d, k, char, tol, threads)
    notes = []
    fields = {}
    budgets = {}
    norm_bound = rn.norm_bound

    if rn.W == 1:
        if route == "derivative":
            logger.warning(derivative_not_meaningful)
            notes.append(derivative_not_meaningful)
        i1 = I1(D, d, k, tol)
        i2 = I2(D, d, k, char, tol, threads)
        L_central = 2 * (i1.value + i2.value)
        gap = abs(L_central - rn.afe_value)
        if gap > 10 * tol * max(1.0, rn.scale):
            raise RouteMismatchError(
                "central value routes disagree", witness={"decomposition": L_central, "afe": rn.afe_value, "gap": gap}
            )
        fields.update(I1=i1.value, I2=i2.value, L_central=L_central)
        budgets.update(I1=i1.budget, I2=i2.budget)
        norm_bound = max(norm_bound, i1.norm_bound, i2.norm_bound)
        central = L_central
    else:
        if route == "value":
            logger.warning(value_not_meaningful)
            notes.append(value_not_meaningful)
        rk = Rk(D, d, k, tol)
        c = C_term(D, d, k, char, tol, threads)
        L_deriv = 2 * (rk.value + c.value)
        notes.extend(c.notes)
        fields.update(Rk=rk.value, C=c.value, L_deriv_central=L_deriv)
        fields.update(r1_route_gap=rk.r1_route_gap, r1_lower_bound_holds=rk.r1_lower_bound_holds)
        budgets.update(Rk=rk.budget, C=c.budget)
        norm_bound = max(norm_bound, rk.norm_bound, c.norm_bound)
        central = L_deriv

    order = predicted_order(rn.W, central, tol, rn.scale)
    if order == "inconclusive":
        logger.warning("D=%s d=%s k=%s: central quantity %.3e below threshold, order inconclusive", D, d, k, central)

    return CentralReport(
        D=D,
        d=d,
        k=k,
        h=char.field.h,
        variant_index=char.variant_index,
        W=rn.W,
        W_solved=rn.W_solved,
        W_residual=rn.W_residual,
        budgets=budgets,
        afe_value=rn.afe_value,
        afe_residual=rn.afe_residual,
        scale=rn.scale,
        predicted_order=order,
        tol=tol,
        norm_bound=norm_bound,
        notes=notes,
        **fields,
    )


def central_value(D: int, d: int = 1, k: int = 1, variant: int = 0, tol: Optional[float] = None, threads: Optional[int] = None) -> CentralReport:
    return central_report(D, d, k, variant, tol, threads, route="value")


def central_derivative(D: int, d: int = 1, k: int = 1, variant: int = 0, tol: Optional[float] = None, threads: Optional[int] = None) -> CentralReport:
    return central_report(D, d, k, variant, tol, threads, route="derivative")


def central_quantity(report: CentralReport) -> Union[float, None]:
    return report.L_central if report.W == 1 else report.L_deriv_central
