"""
在 T₅³(n) 上运行对称化并审计
"""

from typing import Any, Dict

from ...core.config import settings
from ..families.constructions import build_turan_t53
from .audit import audit_properties
from .process import symmetrize


class SymmetrizeService:
    @staticmethod
    def turan_run(
        n: int,
        alpha: float = settings.SYMMETRIZE_ALPHA,
        audit: bool = True,
        random_order: bool = False,
        seed: int = settings.DEFAULT_SEED,
    ) -> Dict[str, Any]:
        log = symmetrize(build_turan_t53(n), alpha=alpha, random_order=random_order, seed=seed)
        payload = log.to_dict()
        if audit:
            payload["audit"] = audit_properties(log).to_dict()
        return payload
