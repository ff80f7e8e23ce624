from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from src.config.settings import get_setting

settings = get_setting()

Order = Union[Literal[0, 1], Literal["inconclusive"]]


class AccuracyBudget(BaseModel):
    abs_tol: float
    achieved_bound: float
    truncation_height: float = 0.0

    @property
    def ok(self) -> bool:
        return self.achieved_bound <= self.abs_tol


class ValidationReport(BaseModel):
    D: int
    d: int
    variant_index: int
    passed: bool
    checks: Dict[str, bool]
    witnesses: Dict[str, Any] = Field(default_factory=dict)


class CentralReport(BaseModel):
    """Everything computed for one (D, d, k, variant)."""

    D: int
    d: int
    k: int
    h: int
    variant_index: int
    W: int
    W_solved: float
    W_residual: float
    I1: Optional[float] = None
    I2: Optional[float] = None
    Rk: Optional[float] = None
    C: Optional[float] = None
    budgets: Dict[str, AccuracyBudget] = Field(default_factory=dict)
    L_central: Optional[float] = None
    L_deriv_central: Optional[float] = None
    afe_value: float
    afe_residual: float
    scale: float
    predicted_order: Order
    tol: float
    norm_bound: float
    r1_route_gap: Optional[float] = None
    r1_lower_bound_holds: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)


class SweepRecord(BaseModel):
    """One JSON line of a sweep; unknown keys are rejected on read."""

    model_config = ConfigDict(extra="forbid")

    schema_version: int = settings.SCHEMA_VERSION
    D: int
    d: int
    k: int
    h: int
    variant_index: int
    W: int
    value: float
    predicted_order: Order
    tol: float
    norm_bound: float
    scale: float
    afe_residual: float
    error: Optional[str] = None
    wall_time: Optional[float] = None

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return self.D, self.d, self.k, self.variant_index

    @property
    def order_matches_root_number(self) -> bool:
        return self.error is None and self.predicted_order == (1 - self.W) // 2


class CharSumRecord(BaseModel):
    D: int
    d: int
    v: int
    M: int
    w: int
    sum_value: float
    n_terms: int
    bound_ratio: float


class ReductionCheck(BaseModel):
    passed: bool
    direct: int
    reduced: int
    witness: Optional[Tuple[int, int]] = None


class DyadicReport(BaseModel):
    passed: bool
    blocks: int
    block_bound: float
    full: float
    reassembled: float
    difference: float
