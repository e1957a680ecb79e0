"""Logical preorders by bounded enumeration with semantic deduplication.

Formulas are tracked by their value vector over the disjoint union of both
models; two formulas with the same vector are interchangeable everywhere, so
only the first one found is kept.

The enumeration is organised around crisp formulas. Every fuzzy formula ``φ``
contributes its thresholds ``D(c -> φ)`` (value 1 exactly where ``φ >= c``),
the crisp ones are closed under ``&`` (and ``|`` for ``fpdK``), and the next
modal level applies ``<ρ>χ`` and, for ``fpdK``, ``[ρ](χ | c)`` to each crisp
``χ``. Under the Goedel t-norm with the constants drawn from both degree
pools every formula value lies in that pool, and the threshold sets of any
fragment formula of modal depth ``d`` are intersections (unions) of
threshold sets produced here, so the computed relation is exactly the
logical preorder at that depth. For the other t-norms the same family is a
subset of the fragment and the relation is an upper approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import ONE, ZERO, Degree
from ..logic.evaluate import Evaluator
from ..logic.syntax import (Action, And, Box, Const, Delta, Diamond, Formula,
                            Implies, Or, Prop)
from ..model import Flts, require_same_signature
from ..simulation import CrispRelation
from .preservation import LogicalPreorderParams

HM_FRAGMENTS = ("fedKDelta", "fpdK")


@dataclass
class HMResult:
    relation: CrispRelation
    depth: int
    converged: bool
    history: list = field(default_factory=list)  # relation per enumerated depth
    n_formulas: int = 0
    fragment: str = "fedKDelta"

    def to_json(self) -> dict:
        return {"fragment": self.fragment, "relation": self.relation.to_json(),
                "depth": self.depth, "converged": self.converged,
                "sizes": [len(r) for r in self.history], "formulas": self.n_formulas}


class _Enumerator:
    def __init__(self, m: Flts, m2: Flts, params: LogicalPreorderParams):
        self.m, self.m2 = m, m2
        self.positive = params.fragment == "fpdK"
        self.consts = params.constants_for(m, m2)
        self.ev = (Evaluator(m, params.tnorm), Evaluator(m2, params.tnorm))
        self.n1 = len(m.states)
        self.n = self.n1 + len(m2.states)
        self.atoms: dict[tuple, Formula] = {}
        self.crisp: dict[int, Formula] = {}
        self._pending: list[int] = []

    def vector(self, f: Formula) -> tuple:
        return self.ev[0].formula(f) + self.ev[1].formula(f)

    def add_atom(self, f: Formula):
        v = self.vector(f)
        if v in self.atoms:
            return
        self.atoms[v] = f
        for c in self.consts:
            if c == ZERO:
                continue
            g = Delta(f) if c == ONE else Delta(Implies(Const(c), f))
            self.add_crisp(_mask(v, c), g)

    def add_crisp(self, mask: int, f: Formula):
        if mask not in self.crisp:
            self.crisp[mask] = f
            self._pending.append(mask)

    def close(self):
        while self._pending:
            a = self._pending.pop()
            fa = self.crisp[a]
            for b, fb in list(self.crisp.items()):
                self.add_crisp(a & b, And(fa, fb))
                if self.positive:
                    self.add_crisp(a | b, Or(fa, fb))

    def modal_step(self):
        snapshot = list(self.crisp.values())
        for act in self.m.actions:
            rho = Action(act)
            for chi in snapshot:
                self.add_atom(Diamond(rho, chi))
                if self.positive:
                    for c in self.consts:
                        if c < ONE:
                            self.add_atom(Box(rho, chi if c == ZERO else Or(chi, Const(c))))
        self.close()

    def relation(self) -> CrispRelation:
        n1 = self.n1
        pairs = set()
        for i, x in enumerate(self.m.states):
            for j, x2 in enumerate(self.m2.states):
                k = n1 + j
                if any(mask >> i & 1 and not mask >> k & 1 for mask in self.crisp):
                    continue
                if any(v[i] > v[k] for v in self.atoms):
                    continue
                pairs.add((x, x2))
        return CrispRelation(self.m, self.m2, frozenset(pairs))


def _mask(v: tuple, c: Degree) -> int:
    out = 0
    for i, d in enumerate(v):
        if d >= c:
            out |= 1 << i
    return out


def hm_relation(m: Flts, m2: Flts, params: LogicalPreorderParams) -> HMResult:
    """``{(x, x') | φ(x) <= φ(x') for every enumerated φ}`` up to modal depth
    ``params.max_depth``.

    Enumeration stops early once a modal level adds no new value vector;
    from then on nothing new can appear, so ``converged`` is set and
    ``depth`` is the last depth that contributed.
    """
    require_same_signature(m, m2)
    if params.fragment not in HM_FRAGMENTS:
        raise ValueError(f"HM enumeration supports {HM_FRAGMENTS}, not {params.fragment!r}")
    en = _Enumerator(m, m2, params)
    p0 = Prop(m.props[0])
    en.add_crisp((1 << en.n) - 1, Const(ONE) if en.positive else Implies(Const(ZERO), p0))
    for p in m.props:
        en.add_atom(Prop(p))
    if en.positive:
        for c in en.consts:
            en.add_atom(Const(c))
    en.close()
    history = [en.relation()]
    converged = False
    depth = 0
    for d in range(1, params.max_depth + 1):
        before = len(en.crisp) + len(en.atoms)
        en.modal_step()
        if len(en.crisp) + len(en.atoms) == before:
            converged = True
            break
        depth = d
        history.append(en.relation())
    return HMResult(history[-1], depth, converged, history,
                    len(en.atoms) + len(en.crisp), params.fragment)
