"""Formula and program ASTs of fuzzy PDL with the Baaz projection.

Nodes are frozen dataclasses, so structurally equal formulas compare and hash
equal. ``str()`` prints the concrete syntax accepted by
:func:`fuzzysim.logic.parser.parse_formula`, fully parenthesised where
precedence would otherwise matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..algebra import ONE, ZERO, Degree, format_degree


class Formula:
    __slots__ = ()


class Program:
    __slots__ = ()


@dataclass(frozen=True)
class Const(Formula):
    value: Degree

    def __str__(self):
        return format_degree(self.value)


@dataclass(frozen=True)
class Prop(Formula):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Delta(Formula):
    arg: Formula

    def __str__(self):
        if isinstance(self.arg, (And, Or, Implies)):
            return f"D{self.arg}"
        return f"D({self.arg})"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} -> {self.right})"


@dataclass(frozen=True)
class Box(Formula):
    program: Program
    arg: Formula

    def __str__(self):
        return f"[{self.program}]{_modal_arg(self.arg)}"


@dataclass(frozen=True)
class Diamond(Formula):
    program: Program
    arg: Formula

    def __str__(self):
        return f"<{self.program}>{_modal_arg(self.arg)}"


def _modal_arg(f: Formula) -> str:
    text = str(f)
    if isinstance(f, (Const, Prop)):
        return " " + text
    return text


@dataclass(frozen=True)
class Action(Program):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Compose(Program):
    first: Program
    second: Program

    def __str__(self):
        return f"({self.first} ; {self.second})"


@dataclass(frozen=True)
class Union(Program):
    left: Program
    right: Program

    def __str__(self):
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Star(Program):
    arg: Program

    def __str__(self):
        return f"{self.arg}*" if isinstance(self.arg, Action) else f"({self.arg})*"


@dataclass(frozen=True)
class Test(Program):
    __test__ = False  # keep pytest from collecting this class
    cond: Formula

    def __str__(self):
        return f"{_test_arg(self.cond)}?"


def _test_arg(f: Formula) -> str:
    text = str(f)
    if isinstance(f, (Const, Prop)) or text.startswith("("):
        return text
    return f"({text})"


def big_and(formulas: Iterable[Formula]) -> Formula:
    """Right-nested conjunction terminated by the constant 1."""
    result: Formula = Const(ONE)
    for f in reversed(list(formulas)):
        result = And(f, result)
    return result


def big_or(formulas: Iterable[Formula]) -> Formula:
    """Right-nested disjunction terminated by the constant 0."""
    result: Formula = Const(ZERO)
    for f in reversed(list(formulas)):
        result = Or(f, result)
    return result


def modal_depth(f: Formula | Program) -> int:
    """Nesting depth of modal operators, counting those inside tests."""
    if isinstance(f, (Const, Prop, Action)):
        return 0
    if isinstance(f, (Delta,)):
        return modal_depth(f.arg)
    if isinstance(f, (And, Or, Implies)):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, (Box, Diamond)):
        return 1 + max(modal_depth(f.program), modal_depth(f.arg))
    if isinstance(f, Compose):
        return max(modal_depth(f.first), modal_depth(f.second))
    if isinstance(f, Union):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, Star):
        return modal_depth(f.arg)
    if isinstance(f, Test):
        return modal_depth(f.cond)
    raise TypeError(f"not a formula or program: {f!r}")


def symbols(f: Formula | Program) -> tuple[set, set]:
    """``(props, actions)`` mentioned anywhere in ``f``."""
    props: set = set()
    actions: set = set()
    stack = [f]
    seen: set = set()
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        if isinstance(n, Prop):
            props.add(n.name)
        elif isinstance(n, Action):
            actions.add(n.name)
        elif isinstance(n, (Delta, Star)):
            stack.append(n.arg)
        elif isinstance(n, (And, Or, Implies, Union)):
            stack += [n.left, n.right]
        elif isinstance(n, Compose):
            stack += [n.first, n.second]
        elif isinstance(n, (Box, Diamond)):
            stack += [n.program, n.arg]
        elif isinstance(n, Test):
            stack.append(n.cond)
    return props, actions
