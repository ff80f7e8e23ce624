from typing import Iterable, Mapping

color_codes = {
    "red": "\033[0;31m",
    "green": "\033[0;32m",
    "teal": "\033[0;36m",
    "yellow": "\033[0;33m",
    "blue": "\033[0;34m",
    "purple": "\033[0;35m",
    "white": "\033[0;37m",
    "gold": "\033[1;33m",
    "bold_red": "\033[1;31m",
    "bold_green": "\033[1;32m",
    "bold_cyan": "\033[1;36m",
    "bold_white": "\033[1;37m",
    "reset": "\033[0m",
}


def printer(message, color="white"):
    color_code = color_codes.get(color.lower(), color_codes["white"])
    print(f"{color_code}{message}{color_codes['reset']}")


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def print_table(title: str, rows: Mapping, keys: Iterable[str] = None, color: str = "teal"):
    """Aligned key/value block under a gold title; None values are skipped."""
    printer(title, "gold")
    keys = list(keys) if keys is not None else list(rows)
    width = max((len(k) for k in keys), default=0)
    for key in keys:
        value = rows.get(key)
        if value is None:
            continue
        printer(f"  {key.ljust(width)}  {_fmt(value)}", color)


def print_report(report) -> None:
    """Human-readable rendering of a CentralReport."""
    data = report.model_dump()
    sign = "+1" if report.W == 1 else "-1"
    print_table(
        f"L(k, chi, p) at the center  D={report.D} d={report.d} k={report.k} variant={report.variant_index}",
        data,
        ["h", "W_solved", "W_residual", "I1", "I2", "L_central", "Rk", "C", "L_deriv_central",
         "afe_value", "afe_residual", "scale", "norm_bound", "r1_route_gap", "r1_lower_bound_holds"],
    )
    printer(f"  root number W = {sign}, predicted order {report.predicted_order}",
            "bold_green" if report.predicted_order != "inconclusive" else "bold_red")
    for name, budget in report.budgets.items():
        printer(f"  budget {name}: achieved {budget.achieved_bound:.3e} <= {budget.abs_tol:.1e}", "white")
    for note in report.notes:
        printer(f"  note: {note}", "yellow")
