"""Acceptance criteria 1-8, one test each, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed past pytest's output capture.
"""

import random
import time
from fractions import Fraction as F

import pytest

from fuzzysim.algebra import ONE, TNorm, residuum, tnorm
from fuzzysim.characterization import (LogicalPreorderParams, WitnessBuilder,
                                       hm_relation, preservation_test)
from fuzzysim.logic import Action, Evaluator, Star, Union, classify
from fuzzysim.model import builtin_model
from fuzzysim.simulation import (brute_force_largest, largest_directed_simulation,
                                 largest_simulation, refine)

from .strategies import GRID, SIG2, random_model, random_pair
from .test_logic import brute_star

KINDS = list(TNorm)
N_ORACLE_PAIRS = 200
N_HM_PAIRS = 60
N_PRESERVE_PAIRS = 60
FORMULAS_PER_RUN = 8  # per pair, t-norm and fragment
N_ALGEBRA = 10_000
N_STAR_MODELS = 120


@pytest.fixture
def verdict(capsys):
    def report(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
        assert ok, detail
    return report


@pytest.fixture(scope="module")
def examples():
    return {name: builtin_model(name) for name in ("s1", "s1_prime", "s2", "s2_prime")}


@pytest.fixture(scope="module")
def oracle_pairs():
    return [random_pair(10_000 + i, max_states=4, grid=GRID) for i in range(N_ORACLE_PAIRS)]


def test_criterion_1_first_example(examples, verdict):
    t0 = time.perf_counter()
    z = largest_simulation(examples["s1"], examples["s1_prime"])
    dt = time.perf_counter() - t0
    ok = z.pairs == {("u2", "v1"), ("u3", "v1"), ("u4", "v2")} and dt < 1
    verdict(1, ok, f"largest simulation {z} in {dt:.3f}s")


def test_criterion_2_second_example(examples, verdict):
    t0 = time.perf_counter()
    z1 = largest_directed_simulation(examples["s1"], examples["s1_prime"])
    z2 = largest_directed_simulation(examples["s2"], examples["s2_prime"])
    dt = time.perf_counter() - t0
    want = {(u, v) for u in ("u2", "u3", "u4") for v in ("v1", "v2")}
    ok = not z1.pairs and z2.pairs == want and dt < 1
    verdict(2, ok, f"directed: {z1} and {z2} in {dt:.3f}s")


def test_criterion_3_oracle_maximality(oracle_pairs, verdict):
    t0 = time.perf_counter()
    mismatches = 0
    for m, m2 in oracle_pairs:
        for directed in (False, True):
            if refine(m, m2, directed).relation != brute_force_largest(m, m2, directed):
                mismatches += 1
    dt = time.perf_counter() - t0
    verdict(3, mismatches == 0 and dt < 60,
            f"{len(oracle_pairs)} pairs x 2 kinds, {mismatches} mismatches, {dt:.1f}s")


def test_criterion_4_preservation(verdict):
    t0 = time.perf_counter()
    formulas = {"fedPDL": 0, "fpdPDL": 0}
    checks = {"fedPDL": 0, "fpdPDL": 0}
    violations = 0
    for i in range(N_PRESERVE_PAIRS):
        m, m2 = random_pair(20_000 + i)
        for fragment, directed in (("fedPDL", False), ("fpdPDL", True)):
            z = refine(m, m2, directed).relation
            for kind in KINDS:
                params = LogicalPreorderParams(fragment, kind, max_depth=3)
                rep = preservation_test(m, m2, z, params, FORMULAS_PER_RUN, seed=i)
                formulas[fragment] += rep.n_formulas
                checks[fragment] += rep.n_checks
                violations += len(rep.violations)
    dt = time.perf_counter() - t0
    ok = (violations == 0 and min(formulas.values()) >= 1000
          and min(checks.values()) > 0 and dt < 120)
    verdict(4, ok, f"formulas {formulas}, checks {checks}, {violations} violations, {dt:.1f}s")


def _hm_pairs(examples):
    pairs = [(examples["s1"], examples["s1_prime"]), (examples["s2"], examples["s2_prime"])]
    grids = [GRID, (F(1, 5), F(2, 5), F(3, 5), F(4, 5), ONE), (F(1, 3), F(2, 3), ONE)]
    for i in range(N_HM_PAIRS):
        pairs.append(random_pair(30_000 + i, max_states=4, grid=grids[i % len(grids)]))
    return pairs


def test_criterion_5_hennessy_milner(examples, verdict):
    t0 = time.perf_counter()
    pairs = _hm_pairs(examples)
    failures = 0
    for m, m2 in pairs:
        for fragment, directed in (("fedKDelta", False), ("fpdK", True)):
            res = hm_relation(m, m2, LogicalPreorderParams(fragment, TNorm.GOEDEL, 20))
            if not res.converged or res.relation != refine(m, m2, directed).relation:
                failures += 1
    dt = time.perf_counter() - t0
    verdict(5, failures == 0 and dt < 120,
            f"{len(pairs)} pairs x 2 fragments, {failures} disagreements, {dt:.1f}s")


def test_criterion_6_witnesses(examples, oracle_pairs, verdict):
    pairs = [(examples["s1"], examples["s1_prime"]),
             (examples["s2"], examples["s2_prime"])] + oracle_pairs
    witnesses = failures = 0
    for m, m2 in pairs:
        for directed in (False, True):
            wb = WitnessBuilder(m, m2, directed)
            fragment = "fpdK" if directed else "fedKDelta"
            for x in m.states:
                for y in m2.states:
                    if (x, y) in wb.relation:
                        continue
                    witnesses += 1
                    if not classify(wb.witness(x, y)).member(fragment):
                        failures += 1
                        continue
                    for kind in KINDS:
                        res = wb.distinguish(x, y, kind)
                        if not res.left > res.right:
                            failures += 1
    verdict(6, failures == 0, f"{witnesses} witnesses x 3 t-norms, {failures} failures")


def _rand_degree(rng):
    den = rng.choice([1, 2, 3, 4, 5, 7, 10, 12, 60, 97])
    return F(rng.randint(0, den), den)


def test_criterion_7_algebra_laws(verdict):
    t0 = time.perf_counter()
    rng = random.Random(7)
    failures = 0
    for kind in KINDS:
        for _ in range(N_ALGEBRA):
            a, b, c = _rand_degree(rng), _rand_degree(rng), _rand_degree(rng)
            t = lambda x, y: tnorm(kind, x, y)  # noqa: E731
            r = lambda x, y: residuum(kind, x, y)  # noqa: E731
            laws = (
                t(a, b) == t(b, a),
                t(a, t(b, c)) == t(t(a, b), c),
                t(a, ONE) == a,
                b > c or t(a, b) <= t(a, c),
                (t(a, b) <= c) == (a <= r(b, c)),
                (r(a, b) == ONE) == (a <= b),
            )
            failures += laws.count(False)
    dt = time.perf_counter() - t0
    verdict(7, failures == 0 and dt < 10,
            f"{N_ALGEBRA} triples x 3 t-norms, {failures} failures, {dt:.1f}s")


def test_criterion_8_star_oracle(verdict):
    mismatches = 0
    alpha = Union(Action("r"), Action("s"))
    for i in range(N_STAR_MODELS):
        m = random_model(40_000 + i, max_states=4, signature=SIG2)
        for kind in KINDS:
            ev = Evaluator(m, kind)
            for prog in (Action("r"), alpha):
                if ev.program(Star(prog)) != brute_star(ev.program(prog), kind):
                    mismatches += 1
    verdict(8, mismatches == 0,
            f"{N_STAR_MODELS} models x 3 t-norms x 2 programs, {mismatches} mismatches")

