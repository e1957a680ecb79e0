"""Evaluation of formulas and programs over a finite FLTS.

Suprema and infima range over the finite state set, so they are plain
``max``/``min``. The Kleene star is the least reflexive relation closed under
composition with the argument; since ``a ⊗ b <= min(a, b)`` removing a cycle
never lowers a path's value, so iterating ``R := R ∨ R∘A`` from ``I ∨ A``
reaches the supremum over all paths within ``|S|`` rounds.
"""

from __future__ import annotations

from ..algebra import ONE, ZERO, Degree, TNorm, baaz_delta, residuum_fn, tnorm_fn
from ..model import Flts
from .syntax import (Action, And, Box, Compose, Const, Delta, Diamond, Formula,
                     Implies, Or, Program, Prop, Star, Test, Union, symbols)

Vector = tuple  # of Degree, indexed like Flts.states
Matrix = tuple  # of Vector rows


class EvaluationError(ValueError):
    """Formula mentions a proposition or action outside the model's signature."""


def check_symbols(m: Flts, f: Formula | Program) -> None:
    props, actions = symbols(f)
    unknown_p = sorted(props - set(m.props))
    unknown_a = sorted(actions - set(m.actions))
    if unknown_p:
        raise EvaluationError(f"unknown proposition(s): {', '.join(unknown_p)}")
    if unknown_a:
        raise EvaluationError(f"unknown action(s): {', '.join(unknown_a)}")


class Evaluator:
    """Evaluates many formulas over one model, sharing a memo keyed on node
    identity. Shared sub-DAGs (as produced by witness synthesis) are therefore
    evaluated once."""

    def __init__(self, m: Flts, kind: TNorm = TNorm.GOEDEL):
        self.m = m
        self.kind = kind
        self.n = len(m.states)
        self._t = tnorm_fn(kind)
        self._r = residuum_fn(kind)
        self._fmemo: dict[int, tuple[Formula, Vector]] = {}
        self._pmemo: dict[int, tuple[Program, Matrix]] = {}
        idx = {s: i for i, s in enumerate(m.states)}
        self._actions = {}
        for a in m.actions:
            rows = [[ZERO] * self.n for _ in range(self.n)]
            for (x, b, y), d in m.delta.items():
                if b == a:
                    rows[idx[x]][idx[y]] = d
            self._actions[a] = tuple(tuple(r) for r in rows)
        self._succ = {a: [[(j, d) for j, d in enumerate(row) if d > 0] for row in mat]
                      for a, mat in self._actions.items()}

    def formula(self, f: Formula) -> Vector:
        hit = self._fmemo.get(id(f))
        if hit is not None and hit[0] is f:
            return hit[1]
        v = self._formula(f)
        self._fmemo[id(f)] = (f, v)
        return v

    def program(self, p: Program) -> Matrix:
        hit = self._pmemo.get(id(p))
        if hit is not None and hit[0] is p:
            return hit[1]
        mat = self._program(p)
        self._pmemo[id(p)] = (p, mat)
        return mat

    def _formula(self, f: Formula) -> Vector:
        n = self.n
        if isinstance(f, Const):
            return (f.value,) * n
        if isinstance(f, Prop):
            if f.name not in self.m.props:
                raise EvaluationError(f"unknown proposition: {f.name}")
            return tuple(self.m.label(x, f.name) for x in self.m.states)
        if isinstance(f, Delta):
            return tuple(baaz_delta(v) for v in self.formula(f.arg))
        if isinstance(f, And):
            return tuple(map(min, self.formula(f.left), self.formula(f.right)))
        if isinstance(f, Or):
            return tuple(map(max, self.formula(f.left), self.formula(f.right)))
        if isinstance(f, Implies):
            return tuple(map(self._r, self.formula(f.left), self.formula(f.right)))
        if isinstance(f, Diamond):
            v = self.formula(f.arg)
            if isinstance(f.program, Action):
                succ = self._action_succ(f.program.name)
                t = self._t
                return tuple(max((t(d, v[j]) for j, d in row), default=ZERO) for row in succ)
            mat = self.program(f.program)
            return tuple(max(self._t(row[j], v[j]) for j in range(n)) for row in mat)
        if isinstance(f, Box):
            v = self.formula(f.arg)
            if isinstance(f.program, Action):
                succ = self._action_succ(f.program.name)
                r = self._r
                return tuple(min((r(d, v[j]) for j, d in row), default=ONE) for row in succ)
            mat = self.program(f.program)
            return tuple(min(self._r(row[j], v[j]) for j in range(n)) for row in mat)
        raise TypeError(f"not a formula: {f!r}")

    def _action_succ(self, name: str):
        try:
            return self._succ[name]
        except KeyError:
            raise EvaluationError(f"unknown action: {name}") from None

    def _program(self, p: Program) -> Matrix:
        n = self.n
        if isinstance(p, Action):
            try:
                return self._actions[p.name]
            except KeyError:
                raise EvaluationError(f"unknown action: {p.name}") from None
        if isinstance(p, Test):
            v = self.formula(p.cond)
            return tuple(tuple(v[i] if i == j else ZERO for j in range(n)) for i in range(n))
        if isinstance(p, Union):
            a, b = self.program(p.left), self.program(p.right)
            return tuple(tuple(map(max, ra, rb)) for ra, rb in zip(a, b))
        if isinstance(p, Compose):
            return self._compose(self.program(p.first), self.program(p.second))
        if isinstance(p, Star):
            a = self.program(p.arg)
            rel = tuple(tuple(ONE if i == j else a[i][j] for j in range(n)) for i in range(n))
            for _ in range(n + 1):
                step = self._compose(rel, a)
                nxt = tuple(tuple(map(max, r, s)) for r, s in zip(rel, step))
                if nxt == rel:
                    return rel
                rel = nxt
            raise AssertionError("star iteration failed to stabilise")
        raise TypeError(f"not a program: {p!r}")

    def _compose(self, a: Matrix, b: Matrix) -> Matrix:
        t = self._t
        n = self.n
        return tuple(
            tuple(max(t(a[i][k], b[k][j]) for k in range(n)) for j in range(n))
            for i in range(n))


def eval_formula(m: Flts, f: Formula, kind: TNorm = TNorm.GOEDEL) -> dict[str, Degree]:
    """The fuzzy set ``f^m`` as ``{state: degree}``."""
    check_symbols(m, f)
    return dict(zip(m.states, Evaluator(m, kind).formula(f)))


def eval_program(m: Flts, p: Program, kind: TNorm = TNorm.GOEDEL) -> dict[tuple[str, str], Degree]:
    """The fuzzy relation ``p^m`` as ``{(x, y): degree}`` over all pairs."""
    check_symbols(m, p)
    mat = Evaluator(m, kind).program(p)
    return {(x, y): mat[i][j] for i, x in enumerate(m.states) for j, y in enumerate(m.states)}
