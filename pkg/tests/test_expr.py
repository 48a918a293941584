import random

import pytest

from sl2hecke.centre import x_elem, zeta_elem
from sl2hecke.errors import ExprSyntaxError, UnknownAtom
from sl2hecke.expr import (
    BinOp, Gen, Indexed, Num, Pow, evaluate, eval_expr, format_ast, format_helem, parse_expr, tokenize,
)
from sl2hecke.field import make_field
from sl2hecke.hecke import HElem, e_elem, iota, jmap, tau, tau_omega
from sl2hecke.suites import random_helem


def test_parse_example():
    assert parse_expr("tau0*tau1 + e(0)") == BinOp("+", BinOp("*", Gen("tau0"), Gen("tau1")), Indexed("e", 0))


def test_precedence_and_associativity():
    assert parse_expr("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expr("tau0*tau1^2") == BinOp("*", Gen("tau0"), Pow(Gen("tau1"), 2))


def test_negative_indices_reduce(f5):
    assert eval_expr("X(1)*X(-1)", f5) == x_elem(f5, 1) * x_elem(f5, 3)
    assert eval_expr("w(-1)", f5) == tau_omega(f5, 3)


def test_syntax_error_offset():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("tau0*(")
    assert info.value.offset == 6


@pytest.mark.parametrize("src", ["tau2", "foo(1)", "sigma"])
def test_unknown_atom(src):
    with pytest.raises(UnknownAtom):
        parse_expr(src)


@pytest.mark.parametrize("src", ["", "tau0 +", "e(", "tau0^-1", "(tau0", "tau0 tau1", "3 $ 4"])
def test_syntax_errors(src):
    with pytest.raises(ExprSyntaxError):
        parse_expr(src)


@pytest.mark.parametrize("src", [
    "X(1)*X(3)",
    "zeta - (tau1+e(0))*(tau0+e(0)) - tau0*tau1",
    "e(1)^2 - e(1)",
    "iota(iota(tau0*tau1)) - tau0*tau1",
    "J(tau0) - tau0*w(2)",
])
def test_identities_evaluate_to_zero(f5, src):
    assert format_helem(eval_expr(src, f5)) == "0"


def test_evaluation(f5):
    assert eval_expr("zeta", f5) == zeta_elem(f5)
    assert eval_expr("iota(tau0)", f5) == iota(tau(f5, 0))
    assert eval_expr("J(tau0*tau1)", f5) == jmap(tau(f5, 0) * tau(f5, 1))
    assert eval_expr("3*e(2)", f5) == e_elem(f5, 2).scale(3)
    assert eval_expr("tau0^0", f5) == HElem.one(f5)


def test_printing_sorted(f5):
    h = tau(f5, 1) + tau(f5, 0).scale(2) + HElem.one(f5) + tau(f5, 0) * tau(f5, 1)
    assert format_helem(h) == "w(0) + 2*w(0)*tau0 + w(0)*tau1 + w(0)*tau0*tau1"
    assert format_helem(HElem.zero(f5)) == "0"


def test_round_trip_corpus():
    rng = random.Random(99)
    for p in (5, 7, 13):
        spec = make_field(p)
        for _ in range(50):
            h = random_helem(spec, rng, 4, 4)
            assert eval_expr(format_helem(h), spec) == h


def test_ast_round_trip():
    for src in ["tau0*tau1 + e(0)", "iota(J(X(2)))^3 - 4*w(1)", "(tau0 + tau1)*(zeta - 1)"]:
        ast = parse_expr(src)
        assert parse_expr(format_ast(ast)) == ast


def test_tokenize_offsets():
    assert [t[2] for t in tokenize("tau0 + e(1)")][:3] == [0, 5, 7]
