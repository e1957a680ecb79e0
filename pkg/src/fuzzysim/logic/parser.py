"""Recursive-descent parser for formulas and programs.

Formula precedence, loosest first::

    ->  (right-associative)
    |
    &
    D φ, <α>φ, [α]φ, atoms

Programs: ``+`` (union) is loosest, then ``;`` (composition), then postfix
``*``. A test is written ``φ?``; inside a program the parser first tries to
read a formula followed by ``?`` and falls back to a program otherwise, so
``(r ; r)*`` and ``(p -> 0.3)?`` are both read as intended.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..algebra import ONE
from .syntax import (Action, And, Box, Compose, Const, Delta, Diamond, Formula,
                     Implies, Or, Program, Prop, Star, Test, Union)


class FormulaSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        pointer = f"\n  {text}\n  {' ' * pos}^" if text else ""
        super().__init__(f"{msg} at position {pos}{pointer}")
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>->|[&|()<>\[\];+*?])
""", re.VERBOSE)

_KEYWORD_DELTA = "D"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    # helpers
    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, value: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val == value

    def expect(self, value: str):
        if not self.at(value):
            self.fail(f"expected {value!r}")
        self.i += 1

    def fail(self, msg: str):
        kind, val, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(val)
        raise FormulaSyntaxError(f"{msg}, found {found}", self.text, pos)

    def finish(self):
        if self.peek()[0] != "eof":
            self.fail("unexpected trailing input")

    # formulas
    def formula(self) -> Formula:
        left = self.disjunction()
        if self.at("->"):
            self.i += 1
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.at("|"):
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.at("&"):
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, val, pos = self.peek()
        if kind == "ident" and val == _KEYWORD_DELTA:
            self.i += 1
            return Delta(self.unary())
        if self.at("<"):
            self.i += 1
            prog = self.program()
            self.expect(">")
            return Diamond(prog, self.unary())
        if self.at("["):
            self.i += 1
            prog = self.program()
            self.expect("]")
            return Box(prog, self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, val, pos = self.peek()
        if kind == "num":
            self.i += 1
            value = Fraction(val)
            if value > ONE:
                raise FormulaSyntaxError(f"constant {val} outside [0, 1]", self.text, pos)
            return Const(value)
        if kind == "ident":
            self.i += 1
            return Prop(val)
        if self.at("("):
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        self.fail("expected a formula")

    # programs
    def program(self) -> Program:
        p = self.composition()
        while self.at("+"):
            self.i += 1
            p = Union(p, self.composition())
        return p

    def composition(self) -> Program:
        p = self.postfix()
        while self.at(";"):
            self.i += 1
            p = Compose(p, self.postfix())
        return p

    def postfix(self) -> Program:
        p = self.program_atom()
        while self.at("*"):
            self.i += 1
            p = Star(p)
        return p

    def program_atom(self) -> Program:
        start = self.i
        try:
            cond = self.formula()
            if self.at("?"):
                self.i += 1
                return Test(cond)
        except FormulaSyntaxError:
            pass
        self.i = start
        kind, val, _ = self.peek()
        if kind == "ident" and val != _KEYWORD_DELTA:
            self.i += 1
            return Action(val)
        if self.at("("):
            self.i += 1
            p = self.program()
            self.expect(")")
            return p
        self.fail("expected a program")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.finish()
    return f


def parse_program(text: str) -> Program:
    p = _Parser(text)
    prog = p.program()
    p.finish()
    return prog
