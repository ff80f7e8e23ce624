from src.charsum.sums import char_sum, dyadic_consistency, reduction_identity_check
from src.charsum.survey import SurveyTable, burgess_ratio_survey, write_survey_csv, write_survey_summary

__all__ = [
    "char_sum",
    "dyadic_consistency",
    "reduction_identity_check",
    "SurveyTable",
    "burgess_ratio_survey",
    "write_survey_csv",
    "write_survey_summary",
]
