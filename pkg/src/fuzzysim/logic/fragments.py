"""Membership of formulas and programs in the positive fragments.

Fragment names used throughout the package:

``fdPDL``      the full logic
``fedPDL``     positive existential: no box, implication only as ``a -> φ``
``fedKDelta``  fedPDL restricted to plain actions, without ``|`` and bare constants
``fpdPDL``     positive: diamonds over existential programs, boxes over
               universal programs
``fpdK``       fpdPDL restricted to plain actions

Existential programs (``fpedPDL``) admit tests ``φ?``; universal programs
(``fpudPDL``) admit only tests of the form ``(φ -> a)?``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (Action, And, Box, Compose, Const, Delta, Diamond, Formula,
                     Implies, Or, Program, Prop, Star, Test, Union)

FRAGMENTS = ("fedKDelta", "fpdK", "fedPDL", "fpdPDL")


@dataclass(frozen=True)
class ProgramFlags:
    program: Program
    in_fedPDL: bool
    in_fpedPDL: bool
    in_fpudPDL: bool


@dataclass(frozen=True)
class FragmentReport:
    in_fdPDL: bool
    in_fedPDL: bool
    in_fedKDelta: bool
    in_fpdPDL: bool
    in_fpdK: bool
    programs: tuple[ProgramFlags, ...] = ()

    def member(self, fragment: str) -> bool:
        if fragment == "fdPDL":
            return True
        return getattr(self, f"in_{fragment}")

    def names(self) -> list[str]:
        return [f for f in FRAGMENTS if self.member(f)]


@dataclass(frozen=True)
class _F:
    fed: bool
    fedk: bool
    fpd: bool
    fpdk: bool


@dataclass(frozen=True)
class _P:
    fed: bool
    fped: bool
    fpud: bool
    action: bool


class _Classifier:
    def __init__(self):
        self.fmemo: dict[int, _F] = {}
        self.pmemo: dict[int, _P] = {}
        self.programs: dict[int, ProgramFlags] = {}
        self._keep: list = []

    def formula(self, f: Formula) -> _F:
        key = id(f)
        if key not in self.fmemo:
            self._keep.append(f)
            self.fmemo[key] = self._formula(f)
        return self.fmemo[key]

    def _formula(self, f: Formula) -> _F:
        if isinstance(f, Const):
            return _F(True, False, True, True)
        if isinstance(f, Prop):
            return _F(True, True, True, True)
        if isinstance(f, Delta):
            return self.formula(f.arg)
        if isinstance(f, And):
            a, b = self.formula(f.left), self.formula(f.right)
            return _F(a.fed and b.fed, a.fedk and b.fedk, a.fpd and b.fpd, a.fpdk and b.fpdk)
        if isinstance(f, Or):
            a, b = self.formula(f.left), self.formula(f.right)
            return _F(a.fed and b.fed, False, a.fpd and b.fpd, a.fpdk and b.fpdk)
        if isinstance(f, Implies):
            b = self.formula(f.right)
            self.formula(f.left)
            if not isinstance(f.left, Const):
                return _F(False, False, False, False)
            return b
        if isinstance(f, (Diamond, Box)):
            p = self.program(f.program)
            b = self.formula(f.arg)
            if isinstance(f, Diamond):
                return _F(b.fed and p.fed, b.fedk and p.action,
                          b.fpd and p.fped, b.fpdk and p.action)
            return _F(False, False, b.fpd and p.fpud, b.fpdk and p.action)
        raise TypeError(f"not a formula: {f!r}")

    def program(self, p: Program) -> _P:
        key = id(p)
        if key not in self.pmemo:
            self._keep.append(p)
            flags = self._program(p)
            self.pmemo[key] = flags
            self.programs.setdefault(key, ProgramFlags(p, flags.fed, flags.fped, flags.fpud))
        return self.pmemo[key]

    def _program(self, p: Program) -> _P:
        if isinstance(p, Action):
            return _P(True, True, True, True)
        if isinstance(p, (Compose, Union)):
            a, b = (p.first, p.second) if isinstance(p, Compose) else (p.left, p.right)
            x, y = self.program(a), self.program(b)
            return _P(x.fed and y.fed, x.fped and y.fped, x.fpud and y.fpud, False)
        if isinstance(p, Star):
            x = self.program(p.arg)
            return _P(x.fed, x.fped, x.fpud, False)
        if isinstance(p, Test):
            c = self.formula(p.cond)
            universal = (isinstance(p.cond, Implies) and isinstance(p.cond.right, Const)
                         and self.formula(p.cond.left).fpd)
            return _P(c.fed, c.fpd, universal, False)
        raise TypeError(f"not a program: {p!r}")


def classify(f: Formula) -> FragmentReport:
    c = _Classifier()
    flags = c.formula(f)
    return FragmentReport(True, flags.fed, flags.fedk, flags.fpd, flags.fpdk,
                          tuple(c.programs.values()))


def classify_program(p: Program) -> ProgramFlags:
    c = _Classifier()
    flags = c.program(p)
    return ProgramFlags(p, flags.fed, flags.fped, flags.fpud)


def in_fragment(f: Formula, fragment: str) -> bool:
    return classify(f).member(fragment)
