"""Crisp simulations and directed simulations between fuzzy labeled transition
systems, with a t-norm-parameterised fuzzy PDL evaluator."""

__version__ = "0.1.0"
