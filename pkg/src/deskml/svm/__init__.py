"""Support vector classification."""

from ._classes import SVC, SvcModel, svc_decision, svc_fit
from ._smo import Kernel, KernelCache, SmoResult, dual_objective, smo

__all__ = [
    "Kernel",
    "KernelCache",
    "SVC",
    "SmoResult",
    "SvcModel",
    "dual_objective",
    "smo",
    "svc_decision",
    "svc_fit",
]
