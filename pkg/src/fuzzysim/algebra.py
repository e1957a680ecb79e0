"""Exact truth-degree arithmetic on [0, 1].

Degrees are :class:`fractions.Fraction` values. The three continuous t-norms
(Goedel, Lukasiewicz, product) and their residua are closed on the rationals,
so every comparison made elsewhere in the package is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

Degree = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DegreeError(ValueError):
    """A value could not be read as a degree in [0, 1]."""


def degree(value: Union[str, int, Fraction]) -> Degree:
    """Parse ``"0.7"``, ``"7/10"``, ints or Fractions into a checked degree.

    Floats are rejected: their binary expansion would silently leak rounding
    error into exact comparisons.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DegreeError(f"refusing non-exact degree {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DegreeError(f"malformed degree {value!r}") from exc
    else:
        result = Fraction(value)
    if not ZERO <= result <= ONE:
        raise DegreeError(f"degree {value!r} outside [0, 1]")
    return result


def format_degree(d: Degree) -> str:
    """Shortest exact text for ``d``: a terminating decimal when one exists,
    otherwise ``num/den``. ``degree(format_degree(d)) == d`` always holds."""
    d = Fraction(d)
    if d.denominator == 1:
        return str(d.numerator)
    den = d.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{d.numerator}/{d.denominator}"
    places = max(twos, fives)
    scaled = d * 10**places
    assert scaled.denominator == 1
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    text = digits[:-places] + "." + digits[-places:]
    return ("-" if d < 0 else "") + text


@dataclass(frozen=True)
class _Ops:
    tnorm: Callable[[Degree, Degree], Degree]
    residuum: Callable[[Degree, Degree], Degree]


def _goedel_res(x: Degree, y: Degree) -> Degree:
    return ONE if x <= y else y


def _luk_tnorm(x: Degree, y: Degree) -> Degree:
    return max(ZERO, x + y - 1)


def _luk_res(x: Degree, y: Degree) -> Degree:
    return min(ONE, 1 - x + y)


def _product_res(x: Degree, y: Degree) -> Degree:
    return ONE if x <= y else y / x


class TNorm(enum.Enum):
    """The built-in left-continuous t-norms.

    Adding a kind means adding a member plus an entry in ``_OPS``; evaluators
    only go through :func:`tnorm` and :func:`residuum`.
    """

    GOEDEL = "godel"
    LUKASIEWICZ = "lukasiewicz"
    PRODUCT = "product"

    @classmethod
    def parse(cls, name: str) -> "TNorm":
        key = name.strip().lower()
        aliases = {"goedel": "godel", "gödel": "godel", "g": "godel",
                   "luk": "lukasiewicz", "l": "lukasiewicz", "p": "product"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown t-norm {name!r}") from None


_OPS = {
    TNorm.GOEDEL: _Ops(min, _goedel_res),
    TNorm.LUKASIEWICZ: _Ops(_luk_tnorm, _luk_res),
    TNorm.PRODUCT: _Ops(lambda x, y: x * y, _product_res),
}


def tnorm(kind: TNorm, a: Degree, b: Degree) -> Degree:
    return _OPS[kind].tnorm(a, b)


def residuum(kind: TNorm, a: Degree, b: Degree) -> Degree:
    """``a => b``; equals 1 exactly when ``a <= b``."""
    return _OPS[kind].residuum(a, b)


def tnorm_fn(kind: TNorm) -> Callable[[Degree, Degree], Degree]:
    return _OPS[kind].tnorm


def residuum_fn(kind: TNorm) -> Callable[[Degree, Degree], Degree]:
    return _OPS[kind].residuum


def baaz_delta(a: Degree) -> Degree:
    return ONE if a == ONE else ZERO
