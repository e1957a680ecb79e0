"""Fuzzy PDL with the Baaz projection: syntax, parsing, fragments, semantics."""

from .evaluate import EvaluationError, Evaluator, eval_formula, eval_program
from .fragments import (FRAGMENTS, FragmentReport, ProgramFlags, classify,
                        classify_program, in_fragment)
from .parser import FormulaSyntaxError, parse_formula, parse_program
from .syntax import (Action, And, Box, Compose, Const, Delta, Diamond, Formula,
                     Implies, Or, Program, Prop, Star, Test, Union, big_and,
                     big_or, modal_depth)

__all__ = [
    "Action", "And", "Box", "Compose", "Const", "Delta", "Diamond", "EvaluationError",
    "Evaluator", "FRAGMENTS", "Formula", "FormulaSyntaxError", "FragmentReport", "Implies",
    "Or", "Program", "ProgramFlags", "Prop", "Star", "Test", "Union", "big_and", "big_or",
    "classify", "classify_program", "eval_formula", "eval_program", "in_fragment",
    "modal_depth", "parse_formula", "parse_program",
]
