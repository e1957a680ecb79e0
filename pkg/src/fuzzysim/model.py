"""Finite fuzzy labeled transition systems: representation, JSON I/O and
seeded random generation."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import ONE, ZERO, Degree, DegreeError, degree, format_degree


class ModelError(ValueError):
    """Structural problem in a model (unknown name, bad degree, empty set)."""


class ModelParseError(ModelError):
    """The model text is not well-formed JSON."""

    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Signature:
    actions: tuple[str, ...]
    props: tuple[str, ...]

    def __post_init__(self):
        if not self.actions:
            raise ModelError("empty action set")
        if not self.props:
            raise ModelError("empty proposition set")
        for kind, names in (("action", self.actions), ("proposition", self.props)):
            if len(set(names)) != len(names):
                raise ModelError(f"duplicate {kind} name")


@dataclass(frozen=True, eq=False)
class Flts:
    """A finite FLTS ``<S, delta, L>``.

    ``delta`` maps ``(x, action, y)`` to a positive degree; missing triples
    have degree 0. ``labels`` maps each state to its positive-degree props.
    Zero entries are dropped at construction so that two models with the same
    semantics compare equal.
    """

    signature: Signature
    states: tuple[str, ...]
    delta: Mapping[tuple[str, str, str], Degree]
    labels: Mapping[str, Mapping[str, Degree]]
    _succ: dict = field(init=False, repr=False, compare=False)
    _pred: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.states:
            raise ModelError("empty state set")
        if len(set(self.states)) != len(self.states):
            raise ModelError("duplicate state name")
        known = set(self.states)
        actions = set(self.signature.actions)
        props = set(self.signature.props)
        delta = {}
        for (x, a, y), d in self.delta.items():
            for s in (x, y):
                if s not in known:
                    raise ModelError(f"unknown state {s!r} in transition")
            if a not in actions:
                raise ModelError(f"unknown action {a!r} in transition")
            d = _checked(d, f"transition ({x}, {a}, {y})")
            if d > 0:
                delta[(x, a, y)] = d
        labels = {}
        for x, row in self.labels.items():
            if x not in known:
                raise ModelError(f"unknown state {x!r} in labels")
            clean = {}
            for p, d in row.items():
                if p not in props:
                    raise ModelError(f"unknown proposition {p!r} in labels of {x!r}")
                d = _checked(d, f"label {x}.{p}")
                if d > 0:
                    clean[p] = d
            if clean:
                labels[x] = clean
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "labels", labels)
        succ: dict = {(x, a): [] for x in self.states for a in self.signature.actions}
        pred: dict = {(y, a): [] for y in self.states for a in self.signature.actions}
        order = {s: i for i, s in enumerate(self.states)}
        for (x, a, y), d in sorted(delta.items(), key=lambda kv: (order[kv[0][0]], kv[0][1], order[kv[0][2]])):
            succ[(x, a)].append((y, d))
            pred[(y, a)].append((x, d))
        object.__setattr__(self, "_succ", {k: tuple(v) for k, v in succ.items()})
        object.__setattr__(self, "_pred", {k: tuple(v) for k, v in pred.items()})

    @property
    def actions(self) -> tuple[str, ...]:
        return self.signature.actions

    @property
    def props(self) -> tuple[str, ...]:
        return self.signature.props

    def label(self, x: str, p: str) -> Degree:
        return self.labels.get(x, {}).get(p, ZERO)

    def trans(self, x: str, a: str, y: str) -> Degree:
        return self.delta.get((x, a, y), ZERO)

    def successors(self, x: str, a: str) -> tuple[tuple[str, Degree], ...]:
        """Positive-degree ``a``-successors of ``x`` in state order."""
        return self._succ[(x, a)]

    def __eq__(self, other):
        if not isinstance(other, Flts):
            return NotImplemented
        return (self.signature == other.signature and self.states == other.states
                and self.delta == other.delta and self.labels == other.labels)

    def __hash__(self):
        return hash((self.signature, self.states, frozenset(self.delta.items())))


def _checked(d, where: str) -> Degree:
    try:
        return degree(d)
    except DegreeError as exc:
        raise ModelError(f"{where}: {exc}") from None


def require_same_signature(m: Flts, m2: Flts) -> None:
    if m.signature != m2.signature:
        raise ModelError(
            f"signature mismatch: {m.signature} vs {m2.signature}")


# -- serialization ----------------------------------------------------------

def to_dict(m: Flts) -> dict:
    order = {s: i for i, s in enumerate(m.states)}
    aorder = {a: i for i, a in enumerate(m.actions)}
    transitions = [
        {"from": x, "action": a, "to": y, "degree": format_degree(d)}
        for (x, a, y), d in sorted(
            m.delta.items(), key=lambda kv: (order[kv[0][0]], aorder[kv[0][1]], order[kv[0][2]]))
    ]
    labels = {
        x: {p: format_degree(m.labels[x][p]) for p in m.props if p in m.labels[x]}
        for x in m.states if x in m.labels
    }
    return {
        "actions": list(m.actions),
        "props": list(m.props),
        "states": list(m.states),
        "transitions": transitions,
        "labels": labels,
    }


def dumps(m: Flts) -> str:
    return json.dumps(to_dict(m), indent=2) + "\n"


def from_dict(data: Mapping) -> Flts:
    if not isinstance(data, Mapping):
        raise ModelError("model must be a JSON object")
    for key in ("actions", "props", "states"):
        if key not in data:
            raise ModelError(f"missing key {key!r}")
        if not isinstance(data[key], list) or not all(isinstance(v, str) for v in data[key]):
            raise ModelError(f"{key!r} must be a list of strings")
    sig = Signature(tuple(data["actions"]), tuple(data["props"]))
    delta = {}
    for i, t in enumerate(data.get("transitions", [])):
        try:
            key = (t["from"], t["action"], t["to"])
            raw = t["degree"]
        except (KeyError, TypeError):
            raise ModelError(f"transition #{i} needs from/action/to/degree") from None
        if key in delta:
            raise ModelError(f"duplicate transition {key}")
        delta[key] = _checked(_as_text(raw), f"transition {key}")
    labels = {}
    raw_labels = data.get("labels", {})
    if not isinstance(raw_labels, Mapping):
        raise ModelError("'labels' must be an object")
    for x, row in raw_labels.items():
        if not isinstance(row, Mapping):
            raise ModelError(f"labels of {x!r} must be an object")
        labels[x] = {p: _checked(_as_text(d), f"label {x}.{p}") for p, d in row.items()}
    return Flts(sig, tuple(data["states"]), delta, labels)


def _as_text(raw):
    # JSON numbers arrive as floats; re-reading their repr keeps "0.7" exact.
    if isinstance(raw, float):
        return repr(raw)
    return raw


def load_flts(text: str) -> Flts:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_dict(data)


def read_flts(path) -> Flts:
    with open(path, encoding="utf-8") as fh:
        return load_flts(fh.read())


# -- generation and inspection ----------------------------------------------

def random_flts(n_states: int, signature: Signature, density, degree_grid: Sequence,
                seed: int, state_prefix: str = "s") -> Flts:
    """Random model; each triple is present with probability ``density``.

    Deterministic for a fixed seed (uses a private :class:`random.Random`).
    """
    if n_states < 1:
        raise ModelError("n_states must be >= 1")
    if not 0 <= density <= 1:
        raise ModelError("density must lie in [0, 1]")
    grid = [degree(g) if not isinstance(g, Fraction) else g for g in degree_grid]
    if not grid or any(not (ZERO < g <= ONE) for g in grid):
        raise ModelError("degree_grid must be non-empty and within (0, 1]")
    rng = random.Random(seed)
    states = tuple(f"{state_prefix}{i}" for i in range(n_states))
    delta = {}
    for x in states:
        for a in signature.actions:
            for y in states:
                if rng.random() < density:
                    delta[(x, a, y)] = rng.choice(grid)
    label_grid = [ZERO] + grid
    labels = {x: {p: rng.choice(label_grid) for p in signature.props} for x in states}
    return Flts(signature, states, delta, labels)


def degree_pool(m: Flts) -> tuple[Degree, ...]:
    """All degrees occurring in ``m`` together with 0 and 1, ascending."""
    pool = {ZERO, ONE}
    pool.update(m.delta.values())
    for row in m.labels.values():
        pool.update(row.values())
    return tuple(sorted(pool))


def builtin_model(name: str) -> Flts:
    """Load one of the bundled demonstration models from ``fuzzysim/data``."""
    from importlib import resources
    text = resources.files("fuzzysim").joinpath("data").joinpath(f"{name}.json").read_text("utf-8")
    return load_flts(text)
