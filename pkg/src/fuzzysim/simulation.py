"""Largest crisp simulations and directed simulations by greatest-fixpoint
refinement, a relation checker, and an exhaustive oracle.

None of these functions takes a t-norm: the conditions compare degrees with
``<=`` only.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .algebra import Degree, format_degree
from .model import Flts, ModelError, require_same_signature

Pair = tuple[str, str]


@dataclass(frozen=True)
class CrispRelation:
    """A set of pairs ``(x, x')`` with ``x`` in ``left`` and ``x'`` in ``right``."""

    left: Flts
    right: Flts
    pairs: frozenset = frozenset()

    def __post_init__(self):
        pairs = frozenset(self.pairs)
        ls, rs = set(self.left.states), set(self.right.states)
        for x, y in pairs:
            if x not in ls or y not in rs:
                raise ModelError(f"pair ({x}, {y}) not in S x S'")
        object.__setattr__(self, "pairs", pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.sorted_pairs())

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[Pair]:
        lo = {s: i for i, s in enumerate(self.left.states)}
        ro = {s: i for i, s in enumerate(self.right.states)}
        return sorted(self.pairs, key=lambda p: (lo[p[0]], ro[p[1]]))

    def to_json(self) -> list[list[str]]:
        return [list(p) for p in self.sorted_pairs()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self):
        return "{" + ", ".join(f"({x},{y})" for x, y in self.sorted_pairs()) + "}"

    @classmethod
    def identity(cls, m: Flts) -> "CrispRelation":
        return cls(m, m, frozenset((x, x) for x in m.states))

    @classmethod
    def from_json(cls, left: Flts, right: Flts, data: Iterable) -> "CrispRelation":
        return cls(left, right, frozenset((str(a), str(b)) for a, b in data))

    def union(self, other: "CrispRelation") -> "CrispRelation":
        _same_models(self, other)
        return CrispRelation(self.left, self.right, self.pairs | other.pairs)


def _same_models(a: CrispRelation, b: CrispRelation):
    if a.left != b.left or a.right != b.right:
        raise ModelError("relations are over different models")


@dataclass(frozen=True)
class Violation:
    condition: str  # "label", "forward" or "backward"
    pair: Pair
    action: Optional[str]
    transition: Optional[tuple[str, str, str]]
    degree: Optional[Degree]
    prop: Optional[str] = None

    def __str__(self):
        x, y = self.pair
        if self.condition == "label":
            return f"label: ({x},{y}) prop {self.prop}"
        src, act, dst = self.transition
        side = "S" if self.condition == "forward" else "S'"
        return (f"{self.condition}: ({x},{y}) action {act}: {side} transition "
                f"{src}->{dst} ({format_degree(self.degree)}) has no matching partner")

    def to_json(self) -> dict:
        return {"condition": self.condition, "pair": list(self.pair), "action": self.action,
                "transition": list(self.transition) if self.transition else None,
                "degree": format_degree(self.degree) if self.degree is not None else None,
                "prop": self.prop}


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}


def _violations(m: Flts, m2: Flts, pairs, directed: bool) -> Iterator[Violation]:
    """Every failure of the (directed) simulation conditions for ``pairs``."""
    for x, x2 in pairs:
        for p in m.props:
            if m.label(x, p) > m2.label(x2, p):
                yield Violation("label", (x, x2), None, None, None, prop=p)
        for a in m.actions:
            for y, d in m.successors(x, a):
                if not any(d <= d2 and (y, y2) in pairs for y2, d2 in m2.successors(x2, a)):
                    yield Violation("forward", (x, x2), a, (x, a, y), d)
            if directed:
                for y2, d2 in m2.successors(x2, a):
                    if not any(d2 <= d and (y, y2) in pairs for y, d in m.successors(x, a)):
                        yield Violation("backward", (x, x2), a, (x2, a, y2), d2)


def _check(m, m2, z: CrispRelation, directed: bool) -> ViolationReport:
    require_same_signature(m, m2)
    if z.left != m or z.right != m2:
        raise ModelError("relation is not over the given models")
    return ViolationReport(tuple(_violations(m, m2, z.pairs, directed)))


def check_simulation(m: Flts, m2: Flts, z: CrispRelation) -> ViolationReport:
    return _check(m, m2, z, directed=False)


def check_directed_simulation(m: Flts, m2: Flts, z: CrispRelation) -> ViolationReport:
    return _check(m, m2, z, directed=True)


# -- refinement ------------------------------------------------------------

@dataclass(frozen=True)
class Reason:
    """Why a pair was removed: the failed condition and its witness data.

    For ``label`` failures ``prop`` is set; for ``forward`` failures
    ``target`` is the successor ``y`` of ``x``; for ``backward`` failures it is
    the successor ``y'`` of ``x'``. ``degree`` is that transition's degree.
    """

    condition: str
    action: Optional[str] = None
    target: Optional[str] = None
    degree: Optional[Degree] = None
    prop: Optional[str] = None


@dataclass
class Refinement:
    relation: CrispRelation
    reasons: dict = field(default_factory=dict)  # Pair -> Reason, for every removed pair
    rounds: int = 0
    directed: bool = False


def _labels_ok(m, m2, x, x2) -> Optional[str]:
    for p in m.props:
        if m.label(x, p) > m2.label(x2, p):
            return p
    return None


def _forward_failure(m, m2, z, x, x2) -> Optional[Reason]:
    for a in m.actions:
        for y, d in m.successors(x, a):
            if not any(d <= d2 and (y, y2) in z for y2, d2 in m2.successors(x2, a)):
                return Reason("forward", a, y, d)
    return None


def _backward_failure(m, m2, z, x, x2) -> Optional[Reason]:
    for a in m.actions:
        for y2, d2 in m2.successors(x2, a):
            if not any(d2 <= d and (y, y2) in z for y, d in m.successors(x, a)):
                return Reason("backward", a, y2, d2)
    return None


def refine(m: Flts, m2: Flts, directed: bool = False,
           order_seed: Optional[int] = None) -> Refinement:
    """Greatest-fixpoint computation with a record of every deletion.

    Starts from all label-compatible pairs and sweeps, deleting any pair that
    violates the forward (and, if ``directed``, backward) condition against
    the current relation, until a sweep deletes nothing. ``order_seed``
    shuffles the sweep order; the result does not depend on it.
    """
    require_same_signature(m, m2)
    reasons: dict = {}
    z: set = set()
    for x in m.states:
        for x2 in m2.states:
            p = _labels_ok(m, m2, x, x2)
            if p is None:
                z.add((x, x2))
            else:
                reasons[(x, x2)] = Reason("label", prop=p)
    order = [(x, x2) for x in m.states for x2 in m2.states]
    rng = random.Random(order_seed) if order_seed is not None else None
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        if rng is not None:
            rng.shuffle(order)
        for pair in order:
            if pair not in z:
                continue
            why = _forward_failure(m, m2, z, *pair)
            if why is None and directed:
                why = _backward_failure(m, m2, z, *pair)
            if why is not None:
                z.discard(pair)
                reasons[pair] = why
                changed = True
    return Refinement(CrispRelation(m, m2, frozenset(z)), reasons, rounds, directed)


def largest_simulation(m: Flts, m2: Flts) -> CrispRelation:
    return refine(m, m2, directed=False).relation


def largest_directed_simulation(m: Flts, m2: Flts) -> CrispRelation:
    return refine(m, m2, directed=True).relation


class OracleBoundError(ValueError):
    pass


def brute_force_largest(m: Flts, m2: Flts, directed: bool = False,
                        bound: int = 16) -> CrispRelation:
    """Union of every subset of ``S x S'`` that passes the condition check.

    Exhaustive over subsets of the label-compatible pairs (a subset holding a
    label-violating pair can never pass). Subsets already contained in the
    union found so far cannot change the answer and are skipped.
    """
    require_same_signature(m, m2)
    if len(m.states) * len(m2.states) > bound:
        raise OracleBoundError(
            f"|S|*|S'| = {len(m.states) * len(m2.states)} exceeds oracle bound {bound}")
    candidates = [(x, x2) for x in m.states for x2 in m2.states
                  if all(m.label(x, p) <= m2.label(x2, p) for p in m.props)]
    k = len(candidates)
    found = 0
    for mask in range(1, 1 << k):
        if mask & found == mask:
            continue
        pairs = {candidates[i] for i in range(k) if mask >> i & 1}
        if next(_violations(m, m2, pairs, directed), None) is None:
            found |= mask
    return CrispRelation(m, m2, frozenset(candidates[i] for i in range(k) if found >> i & 1))


def compose_relations(z1: CrispRelation, z2: CrispRelation) -> CrispRelation:
    if z1.right != z2.left:
        raise ModelError("cannot compose: middle models differ")
    step: dict = {}
    for y, w in z2.pairs:
        step.setdefault(y, set()).add(w)
    return CrispRelation(z1.left, z2.right,
                         frozenset((x, w) for x, y in z1.pairs for w in step.get(y, ())))
