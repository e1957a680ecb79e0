"""Distinguishing formulas for pairs outside the largest (directed) simulation.

Each removed pair gets a formula built from the reason it was removed:

* label ``L(x)(p) > L'(x')(p)``: ``D(L(x)(p) -> p)``;
* forward failure on ``x -ρ-> y`` of degree ``a``: ``<ρ>`` of the conjunction
  of ``D(φ(y) -> φ)`` over the witnesses ``φ`` for ``(y, y')``, one per
  ``x' -ρ-> y'`` of degree at least ``a``;
* backward failure on ``x' -ρ-> y'`` of degree ``a``: ``[ρ]`` of the
  disjunction of ``D(φ(y) -> φ)`` over the witnesses for ``(y, y')`` with
  ``x -ρ-> y`` of degree at least ``a``, joined with the constant midway
  between ``a`` and the largest smaller positive ``ρ``-degree out of ``x``.

The sub-witnesses exist because a pair is only removed once every pair it
depends on is already gone. Every conjunct and disjunct is 0/1-valued, which
keeps the witnesses' decisive values independent of the t-norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..algebra import ONE, ZERO, Degree, TNorm, format_degree
from ..logic.evaluate import Evaluator
from ..logic.syntax import (Action, And, Box, Const, Delta, Diamond, Formula,
                            Implies, Or, Prop, big_and, big_or)
from ..model import Flts, require_same_signature
from ..simulation import Refinement, refine


@dataclass(frozen=True)
class DistinguishResult:
    pair: tuple[str, str]
    related: bool
    formula: Optional[Formula] = None
    left: Optional[Degree] = None
    right: Optional[Degree] = None
    fragment: Optional[str] = None
    tnorm: TNorm = TNorm.GOEDEL

    def to_json(self) -> dict:
        if self.related:
            return {"pair": list(self.pair), "related": True}
        return {"pair": list(self.pair), "related": False, "formula": str(self.formula),
                "left": format_degree(self.left), "right": format_degree(self.right),
                "fragment": self.fragment, "tnorm": self.tnorm.value}


class WitnessBuilder:
    """Builds and memoises witnesses for one refinement run.

    Constants inside the witnesses are computed under the Goedel t-norm; the
    results can be evaluated under any t-norm.
    """

    def __init__(self, m: Flts, m2: Flts, directed: bool = False,
                 refinement: Optional[Refinement] = None):
        require_same_signature(m, m2)
        self.m, self.m2 = m, m2
        self.directed = directed
        self.ref = refinement or refine(m, m2, directed)
        self.fragment = "fpdK" if directed else "fedKDelta"
        self._ev = Evaluator(m, TNorm.GOEDEL)
        self._idx = {s: i for i, s in enumerate(m.states)}
        self._memo: dict = {}
        if directed:
            self._top = Const(ONE)
        else:
            self._top = Implies(Const(ZERO), Prop(m.props[0]))

    @property
    def relation(self):
        return self.ref.relation

    def witness(self, x: str, x2: str) -> Optional[Formula]:
        if (x, x2) in self.ref.relation:
            return None
        stack = [(x, x2)]
        # Iterative post-order so long refinement chains do not hit the recursion limit.
        while stack:
            pair = stack[-1]
            if pair in self._memo:
                stack.pop()
                continue
            deps = [d for d in self._deps(pair) if d not in self._memo]
            if deps:
                stack.extend(deps)
                continue
            self._memo[pair] = self._build(pair)
            stack.pop()
        return self._memo[(x, x2)]

    def _deps(self, pair):
        why = self.ref.reasons[pair]
        x, x2 = pair
        if why.condition == "forward":
            return [(why.target, y2) for y2, d2 in self.m2.successors(x2, why.action)
                    if d2 >= why.degree]
        if why.condition == "backward":
            return [(y, why.target) for y, d in self.m.successors(x, why.action)
                    if d >= why.degree]
        return []

    def _crisp(self, pair) -> Formula:
        phi = self._memo[pair]
        c = self._ev.formula(phi)[self._idx[pair[0]]]
        return Delta(Implies(Const(c), phi))

    def _build(self, pair) -> Formula:
        why = self.ref.reasons[pair]
        x, x2 = pair
        if why.condition == "label":
            return Delta(Implies(Const(self.m.label(x, why.prop)), Prop(why.prop)))
        parts = _unique(self._crisp(d) for d in self._deps(pair))
        rho = Action(why.action)
        if why.condition == "forward":
            if self.directed:
                return Diamond(rho, big_and(parts))
            return Diamond(rho, self._conj(parts))
        lower = [d for _, d in self.m.successors(x, why.action) if d < why.degree]
        a_l = max(lower, default=ZERO)
        a_c = (a_l + why.degree) / 2
        return Box(rho, Or(big_or(parts), Const(Fraction(a_c))))

    def _conj(self, parts: list) -> Formula:
        # the conjunction of an empty list must not fall back on a bare constant
        if not parts:
            return self._top
        result = parts[-1]
        for f in reversed(parts[:-1]):
            result = And(f, result)
        return result

    def distinguish(self, x: str, x2: str, kind: TNorm = TNorm.GOEDEL) -> DistinguishResult:
        phi = self.witness(x, x2)
        if phi is None:
            return DistinguishResult((x, x2), True, tnorm=kind)
        left = Evaluator(self.m, kind).formula(phi)[self._idx[x]]
        right = Evaluator(self.m2, kind).formula(phi)[self.m2.states.index(x2)]
        return DistinguishResult((x, x2), False, phi, left, right, self.fragment, kind)


def _unique(formulas) -> list:
    out, seen = [], set()
    for f in formulas:
        key = id(f.arg.right), f.arg.left
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


def distinguishing_formula(m: Flts, x: str, m2: Flts, x2: str, directed: bool = False,
                           kind: TNorm = TNorm.GOEDEL) -> DistinguishResult:
    if x not in m.states or x2 not in m2.states:
        raise ValueError(f"unknown state in pair ({x}, {x2})")
    return WitnessBuilder(m, m2, directed).distinguish(x, x2, kind)
