"""Randomised check that fragment formulas are preserved along a relation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..algebra import Degree, TNorm, format_degree
from ..logic.evaluate import Evaluator
from ..logic.syntax import Formula
from ..model import Flts, degree_pool, require_same_signature
from ..simulation import (CrispRelation, ViolationReport, check_directed_simulation,
                          check_simulation)
from .sampler import FormulaSampler

DIRECTED_FRAGMENTS = ("fpdPDL", "fpdK")
FORWARD_FRAGMENTS = ("fedPDL", "fedKDelta")


@dataclass(frozen=True)
class LogicalPreorderParams:
    fragment: str = "fedKDelta"
    tnorm: TNorm = TNorm.GOEDEL
    max_depth: int = 3
    constants: Optional[Sequence[Degree]] = None  # None: degree pools of both models

    def __post_init__(self):
        if self.fragment not in DIRECTED_FRAGMENTS + FORWARD_FRAGMENTS:
            raise ValueError(f"unknown fragment {self.fragment!r}")
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.constants is not None and any(not 0 <= c <= 1 for c in self.constants):
            raise ValueError("constants must lie in [0, 1]")

    @property
    def directed(self) -> bool:
        return self.fragment in DIRECTED_FRAGMENTS

    def constants_for(self, m: Flts, m2: Flts) -> tuple[Degree, ...]:
        if self.constants is not None:
            return tuple(sorted(set(self.constants)))
        return tuple(sorted(set(degree_pool(m)) | set(degree_pool(m2))))


class PreconditionError(ValueError):
    """The relation handed to a preservation run is not a (directed) simulation."""

    def __init__(self, msg: str, report: ViolationReport):
        super().__init__(msg)
        self.report = report


@dataclass(frozen=True)
class PreservationViolation:
    formula: Formula
    pair: tuple[str, str]
    left: Degree
    right: Degree

    def to_json(self) -> dict:
        return {"formula": str(self.formula), "pair": list(self.pair),
                "left": format_degree(self.left), "right": format_degree(self.right)}


@dataclass
class PreservationReport:
    fragment: str
    tnorm: TNorm
    n_formulas: int = 0
    n_checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"fragment": self.fragment, "tnorm": self.tnorm.value,
                "formulas": self.n_formulas, "checks": self.n_checks,
                "violations": [v.to_json() for v in self.violations]}


def preservation_test(m: Flts, m2: Flts, z: CrispRelation, params: LogicalPreorderParams,
                      n_samples: int = 1000, seed: int = 0) -> PreservationReport:
    """Sample ``n_samples`` formulas of ``params.fragment`` and record every
    pair of ``z`` where the left value exceeds the right one."""
    require_same_signature(m, m2)
    check = check_directed_simulation if params.directed else check_simulation
    report = check(m, m2, z)
    if not report.ok:
        kind = "directed simulation" if params.directed else "simulation"
        raise PreconditionError(f"relation is not a {kind}: {report.violations[0]}", report)
    sampler = FormulaSampler(m.signature, params.fragment, params.constants_for(m, m2),
                             params.max_depth, seed)
    left, right = Evaluator(m, params.tnorm), Evaluator(m2, params.tnorm)
    li = {s: i for i, s in enumerate(m.states)}
    ri = {s: i for i, s in enumerate(m2.states)}
    pairs = z.sorted_pairs()
    out = PreservationReport(params.fragment, params.tnorm)
    for _ in range(n_samples):
        f = sampler.sample()
        lv, rv = left.formula(f), right.formula(f)
        out.n_formulas += 1
        for x, x2 in pairs:
            out.n_checks += 1
            if lv[li[x]] > rv[ri[x2]]:
                out.violations.append(PreservationViolation(f, (x, x2), lv[li[x]], rv[ri[x2]]))
    return out
