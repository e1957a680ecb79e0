"""Preservation checks, logical preorders and distinguishing formulas."""

from .hm import HM_FRAGMENTS, HMResult, hm_relation
from .preservation import (LogicalPreorderParams, PreconditionError,
                           PreservationReport, preservation_test)
from .sampler import FormulaSampler
from .witness import DistinguishResult, WitnessBuilder, distinguishing_formula

__all__ = [
    "DistinguishResult", "FormulaSampler", "HMResult", "HM_FRAGMENTS",
    "LogicalPreorderParams", "PreconditionError", "PreservationReport", "WitnessBuilder",
    "distinguishing_formula", "hm_relation", "preservation_test",
]
