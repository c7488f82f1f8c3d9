"""
verify-all 校验套件
"""

from .suites import (
    VerifyPlan,
    run_verify_all,
    suite_classification,
    suite_closed_forms,
    suite_constructions,
    suite_freeness,
    suite_properties,
    suite_reproducibility,
    suite_theorem,
)

__all__ = [
    "VerifyPlan",
    "run_verify_all",
    "suite_classification",
    "suite_closed_forms",
    "suite_constructions",
    "suite_freeness",
    "suite_properties",
    "suite_reproducibility",
    "suite_theorem",
]
