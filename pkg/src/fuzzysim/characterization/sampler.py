"""Seeded random formulas drawn from one of the positive fragments."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..algebra import Degree
from ..logic.syntax import (Action, And, Box, Compose, Const, Delta, Diamond,
                            Formula, Implies, Or, Program, Prop, Star, Test,
                            Union)
from ..model import Signature

_FORMULA_CTORS = {
    "fedKDelta": ("prop", "delta", "and", "imp", "dia"),
    "fpdK": ("const", "prop", "delta", "and", "or", "imp", "dia", "box"),
    "fedPDL": ("const", "prop", "delta", "and", "or", "imp", "dia"),
    "fpdPDL": ("const", "prop", "delta", "and", "or", "imp", "dia", "box"),
}
_LEAVES = {"const", "prop"}
_PROGRAM_CTORS = ("action", "compose", "union", "star", "test")


@dataclass
class FormulaSampler:
    """Draws formulas of ``fragment`` with nesting depth at most ``max_depth``.

    Every constructor, in formulas and in programs, uses one unit of depth.
    ``weights`` maps constructor names (``prop``, ``dia``, ``test`` ...) to
    relative weights; unspecified ones weigh 1.
    """

    signature: Signature
    fragment: str
    constants: Sequence[Degree]
    max_depth: int = 3
    seed: int = 0
    weights: dict = field(default_factory=dict)
    rng: Optional[random.Random] = None

    def __post_init__(self):
        if self.fragment not in _FORMULA_CTORS:
            raise ValueError(f"unknown fragment {self.fragment!r}")
        if not self.constants:
            raise ValueError("need at least one constant")
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.rng is None:
            self.rng = random.Random(self.seed)
        self._programs = self.fragment in ("fedPDL", "fpdPDL")

    def _pick(self, names):
        w = [self.weights.get(n, 1) for n in names]
        return self.rng.choices(names, weights=w)[0]

    def sample(self) -> Formula:
        return self.formula(self.max_depth)

    def formula(self, depth: int) -> Formula:
        ctors = _FORMULA_CTORS[self.fragment]
        if depth <= 0:
            ctors = tuple(c for c in ctors if c in _LEAVES)
        kind = self._pick(ctors)
        rng = self.rng
        if kind == "const":
            return Const(rng.choice(list(self.constants)))
        if kind == "prop":
            return Prop(rng.choice(self.signature.props))
        if kind == "delta":
            return Delta(self.formula(depth - 1))
        if kind == "and":
            return And(self.formula(depth - 1), self.formula(depth - 1))
        if kind == "or":
            return Or(self.formula(depth - 1), self.formula(depth - 1))
        if kind == "imp":
            return Implies(Const(rng.choice(list(self.constants))), self.formula(depth - 1))
        if kind == "dia":
            return Diamond(self.program(depth - 1, universal=False), self.formula(depth - 1))
        if kind == "box":
            return Box(self.program(depth - 1, universal=True), self.formula(depth - 1))
        raise AssertionError(kind)

    def program(self, depth: int, universal: bool) -> Program:
        if not self._programs or depth <= 0:
            return Action(self.rng.choice(self.signature.actions))
        kind = self._pick(_PROGRAM_CTORS)
        if kind == "action":
            return Action(self.rng.choice(self.signature.actions))
        if kind == "compose":
            return Compose(self.program(depth - 1, universal), self.program(depth - 1, universal))
        if kind == "union":
            return Union(self.program(depth - 1, universal), self.program(depth - 1, universal))
        if kind == "star":
            return Star(self.program(depth - 1, universal))
        cond = self.formula(depth - 1)
        if universal:
            cond = Implies(cond, Const(self.rng.choice(list(self.constants))))
        return Test(cond)
