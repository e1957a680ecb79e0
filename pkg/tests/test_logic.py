import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzysim.algebra import ONE, ZERO, TNorm, tnorm
from fuzzysim.characterization.sampler import FormulaSampler
from fuzzysim.logic import (Action, And, Box, Compose, Const, Delta, Diamond,
                            EvaluationError, Evaluator, FormulaSyntaxError, Implies,
                            Or, Prop, Star, Test, Union, big_and, big_or, classify,
                            classify_program, eval_formula, eval_program, modal_depth,
                            parse_formula, parse_program)
from fuzzysim.model import degree_pool

from .strategies import SIG2, random_model, seeds

KINDS = list(TNorm)
r = Action("r")
p, q = Prop("p"), Prop("q")


# -- parsing ----------------------------------------------------------------

def test_parse_diamond_example():
    f = parse_formula("<r>(p & D(0.5 -> p))")
    assert f == Diamond(r, And(p, Delta(Implies(Const(F(1, 2)), p))))


def test_parse_box_with_test():
    f = parse_formula("[(p -> 0.3)? ; r] q")
    assert f == Box(Compose(Test(Implies(p, Const(F(3, 10)))), r), q)


@pytest.mark.parametrize("text", ["p & & q", "<r>(p &", "p)", "[r p", "1.5", "<>p", "p ? q", "#"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_syntax_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p & & q")
    assert info.value.pos == 4


@pytest.mark.parametrize("text,expected", [
    ("p & q | q", Or(And(p, q), q)),
    ("p | q & q", Or(p, And(q, q))),
    ("p -> q -> p", Implies(p, Implies(q, p))),
    ("p & q -> p", Implies(And(p, q), p)),
    ("<r>p & q", And(Diamond(r, p), q)),
    ("D p & q", And(Delta(p), q)),
    ("7/10", Const(F(7, 10))),
])
def test_precedence(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize("text,expected", [
    ("r ; r + r", Union(Compose(r, r), r)),
    ("r + r ; r", Union(r, Compose(r, r))),
    ("r ; r*", Compose(r, Star(r))),
    ("(r ; r)*", Star(Compose(r, r))),
    ("p? ; r", Compose(Test(p), r)),
    ("(p?)*", Star(Test(p))),
    ("<r>p?", Test(Diamond(r, p))),
])
def test_program_precedence(text, expected):
    assert parse_program(text) == expected


@settings(max_examples=150)
@given(seed=seeds, fragment=st.sampled_from(["fedPDL", "fpdPDL", "fedKDelta", "fpdK"]))
def test_print_parse_round_trip(seed, fragment):
    f = FormulaSampler(SIG2, fragment, [ZERO, F(1, 3), F(1, 2), ONE], 4, seed).sample()
    assert parse_formula(str(f)) == f


# -- fragments --------------------------------------------------------------

def test_classify_examples():
    assert classify(parse_formula("<r>(p & D(0.5 -> p))")).in_fedKDelta
    boxed = classify(parse_formula("[r]p"))
    assert not boxed.in_fedPDL and boxed.in_fpdK and boxed.in_fpdPDL
    tested = classify(parse_formula("<p? ; r>q"))
    assert tested.in_fedPDL and not tested.in_fpdK


@pytest.mark.parametrize("text,members", [
    ("p", {"fedKDelta", "fedPDL", "fpdK", "fpdPDL"}),
    ("0.5", {"fedPDL", "fpdK", "fpdPDL"}),
    ("p | q", {"fedPDL", "fpdK", "fpdPDL"}),
    ("p -> q", set()),
    ("0.5 -> p", {"fedKDelta", "fedPDL", "fpdK", "fpdPDL"}),
    ("0.5 -> 0.2", {"fedPDL", "fpdK", "fpdPDL"}),
    ("<r*>p", {"fedPDL", "fpdPDL"}),
    ("[r*]p", {"fpdPDL"}),
    ("[p? ; r]q", set()),
    ("[(p -> 0.3)?]q", {"fpdPDL"}),
    ("<(p -> 0.3)?>q", set()),
    ("<(0.3 -> p)?>q", {"fedPDL", "fpdPDL"}),
    ("<([r]p)?>q", {"fpdPDL"}),
    ("D(<r>[r]p)", {"fpdK", "fpdPDL"}),
])
def test_classify_table(text, members):
    assert set(classify(parse_formula(text)).names()) == members


def test_program_flags():
    assert classify_program(parse_program("p?")).in_fpedPDL
    assert not classify_program(parse_program("p?")).in_fpudPDL
    flags = classify_program(parse_program("(p -> 0.5)? ; r*"))
    assert flags.in_fpudPDL and not flags.in_fpedPDL
    rep = classify(parse_formula("[(p -> 0.3)? ; r] q"))
    assert any(pf.in_fpudPDL and isinstance(pf.program, Compose) for pf in rep.programs)


@settings(max_examples=200)
@given(seed=seeds, fragment=st.sampled_from(["fedPDL", "fpdPDL", "fedKDelta", "fpdK"]))
def test_fragment_inclusions(seed, fragment):
    # samples from every fragment, then checks the flags nest as the grammars do
    f = FormulaSampler(SIG2, fragment, [ZERO, F(1, 2), ONE], 4, seed).sample()
    rep = classify(f)
    assert rep.member(fragment)
    if rep.in_fedKDelta:
        assert rep.in_fedPDL and rep.in_fpdK
    if rep.in_fedPDL:
        assert rep.in_fpdPDL
    if rep.in_fpdK:
        assert rep.in_fpdPDL


# -- evaluation -------------------------------------------------------------

@pytest.mark.parametrize("kind,expected", [
    (TNorm.GOEDEL, F("0.6")), (TNorm.PRODUCT, F("0.48")), (TNorm.LUKASIEWICZ, F("0.4")),
])
def test_diamond_example(s1p, kind, expected):
    # v1 -r-> v1 (0.5, p=0.7) and v1 -r-> v2 (0.6, p=0.8)
    assert eval_formula(s1p, Diamond(r, p), kind)["v1"] == expected


def test_box_example(s2):
    assert eval_formula(s2, Box(r, p))["u1"] == F("0.5")


def test_constant(s1):
    assert set(eval_formula(s1, Const(F("0.7"))).values()) == {F("0.7")}


def test_compose_example(s1p):
    assert eval_program(s1p, Compose(r, r))[("v1", "v1")] == F("0.5")


def test_star_is_reflexive(s1):
    rel = eval_program(s1, Star(r), TNorm.PRODUCT)
    assert all(rel[(x, x)] == ONE for x in s1.states)


def test_union_idempotent(s1):
    assert eval_program(s1, Union(r, r)) == eval_program(s1, r)


def test_test_program_is_diagonal(s1):
    rel = eval_program(s1, Test(p))
    for (x, y), d in rel.items():
        assert d == (s1.label(x, "p") if x == y else ZERO)


def test_unknown_symbols(s1):
    with pytest.raises(EvaluationError, match="proposition"):
        eval_formula(s1, Prop("zz"))
    with pytest.raises(EvaluationError, match="action"):
        eval_formula(s1, Diamond(Action("zz"), p))
    with pytest.raises(EvaluationError):
        eval_program(s1, Star(Action("zz")))


def test_big_connectives():
    assert big_and([]) == Const(ONE)
    assert big_and([p, q]) == And(p, And(q, Const(ONE)))
    assert big_or([p]) == Or(p, Const(ZERO))
    assert modal_depth(parse_formula("<r>[r*](p & <(<r>q)?>p)")) == 4


def _sample(seed, fragment="fpdPDL", depth=3):
    return FormulaSampler(SIG2, fragment, [ZERO, F(1, 4), F(1, 2), F(3, 4), ONE], depth,
                          seed).sample()


@settings(max_examples=80, deadline=None)
@given(seed=seeds, kind=st.sampled_from(KINDS))
def test_delta_is_crisp_and_implication_law(seed, kind):
    m = random_model(seed, signature=SIG2)
    f, g = _sample(seed), _sample(seed + 1)
    ev = Evaluator(m, kind)
    assert set(ev.formula(Delta(f))) <= {ZERO, ONE}
    for a, b, c in zip(ev.formula(f), ev.formula(g), ev.formula(Implies(f, g))):
        assert (c == ONE) == (a <= b)


@settings(max_examples=60, deadline=None)
@given(seed=seeds, kind=st.sampled_from(KINDS))
def test_star_properties(seed, kind):
    m = random_model(seed, signature=SIG2)
    alpha = Union(Action("r"), Compose(Test(Prop("p")), Action("s")))
    ev = Evaluator(m, kind)
    a, st_ = ev.program(alpha), ev.program(Star(alpha))
    n = len(m.states)
    for i in range(n):
        assert st_[i][i] == ONE
        for j in range(n):
            assert st_[i][j] >= a[i][j]
    assert ev.program(Star(Star(alpha))) == st_


def brute_star(mat, kind):
    """Maximum over the empty path and every simple path, by enumeration."""
    n = len(mat)
    out = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for length in range(1, n + 1):
        for path in itertools.permutations(range(n), length):
            for end in range(n):
                if end in path[1:] or (end == path[0] and length > 1):
                    continue
                full = path + (end,)
                value = ONE
                for u, w in zip(full, full[1:]):
                    value = tnorm(kind, value, mat[u][w])
                i = full[0]
                out[i][end] = max(out[i][end], value)
    return tuple(tuple(row) for row in out)


@settings(max_examples=60, deadline=None)
@given(seed=seeds, kind=st.sampled_from(KINDS))
def test_star_matches_path_enumeration(seed, kind):
    m = random_model(seed, signature=SIG2)
    ev = Evaluator(m, kind)
    alpha = Union(Action("r"), Action("s"))
    assert ev.program(Star(alpha)) == brute_star(ev.program(alpha), kind)


@settings(max_examples=80, deadline=None)
@given(seed=seeds)
def test_goedel_values_stay_in_pool(seed):
    m = random_model(seed, signature=SIG2)
    consts = [F(1, 3), F(2, 3)]
    f = FormulaSampler(SIG2, "fpdPDL", consts, 4, seed).sample()
    allowed = set(degree_pool(m)) | set(consts)
    assert set(eval_formula(m, f, TNorm.GOEDEL).values()) <= allowed


def test_shared_subformulas_evaluate_once(s1):
    f = p
    for _ in range(200):
        f = And(f, f)  # 2**200 leaves as a tree, 201 nodes as a DAG
    assert eval_formula(s1, f)["u4"] == F("0.8")
