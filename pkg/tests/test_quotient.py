import json
from pathlib import Path

import pytest
from sympy import Poly, groebner as sym_groebner, symbols

from sl2hecke.centre import ZPrimeElem
from sl2hecke.errors import ClosedFormMismatch, NotPrime, PTooSmall
from sl2hecke.field import is_prime, make_field
from sl2hecke.poly import IdealHandle, MPoly, ideal_equal, intersect, spolys_reduce_to_zero
from sl2hecke.quotient import (
    XY, all_components, annihilator_generators, build_quotient_graph, closed_form, connected_components_check,
    graph_invariants, kermult_generators, multiply_out, project, rprime_component, xi_model,
)
from sl2hecke.render import graph_to_dict

DATA = Path(__file__).parent / "data"
PRIMES_TO_101 = [p for p in range(5, 102) if is_prime(p)]


# component ideals -----------------------------------------------------------------

def test_component_examples(f5):
    x, y = MPoly.gens(f5, XY)
    I = lambda f: IdealHandle(f5, XY, [f])
    assert ideal_equal(rprime_component(f5, 1, 1).ideal, I((x - y) * (x * y - 1)))
    assert ideal_equal(rprime_component(f5, 0, 0).ideal, I(x - y))
    assert rprime_component(f5, 0, 3).ideal.is_unit()
    assert rprime_component(f5, 0, 2).kind == "antidiagonal"


@pytest.mark.parametrize("p", [5, 7, 13])
def test_all_components_match_closed_form(p):
    spec = make_field(p)
    comps = all_components(spec, workers=4)
    assert len(comps) == (p - 1) ** 2
    assert all(spolys_reduce_to_zero(c.ideal.basis) for c in comps)


def test_workers_do_not_change_results():
    spec = make_field(7)
    a = [[g.terms for g in c.ideal.basis] for c in all_components(spec, 1)]
    b = [[g.terms for g in c.ideal.basis] for c in all_components(spec, 3)]
    assert a == b


def test_component_against_sympy_intersection(f5):
    # intersect the projected ideals with sympy's Groebner engine as an oracle
    a, b, u = symbols("x y u")
    for alpha, beta in [(1, 1), (0, 0), (0, 2), (0, 3)]:
        ker = [project(f5, g, alpha, beta) for g in kermult_generators(f5)]
        ann = [project(f5, g, alpha, beta) for g in annihilator_generators(f5)]
        to = lambda f: sum(c * a ** e[0] * b ** e[1] for e, c in f.terms.items())
        gens = [u * to(f) for f in ker] + [(1 - u) * to(f) for f in ann]
        gb = sym_groebner(gens, u, a, b, modulus=5, order="lex")
        kept = [g for g in gb.exprs if u not in g.free_symbols]
        got = IdealHandle(f5, XY, [MPoly(f5, XY, {m: int(c) % 5 for m, c in Poly(g, a, b, modulus=5).terms()}) for g in kept])
        assert ideal_equal(got, closed_form(f5, alpha, beta))


def test_wrong_twist_is_caught(f5):
    # annihilator generators built with the untwisted pairing disagree with the closed form somewhere
    mismatched = []
    for alpha in range(4):
        for beta in range(4):
            ker = IdealHandle(f5, XY, [project(f5, g, alpha, beta) for g in kermult_generators(f5)])
            ann = IdealHandle(f5, XY, [project(f5, g, alpha, beta) for g in annihilator_generators(f5, twist=0)])
            if not ideal_equal(intersect(ker, ann), closed_form(f5, alpha, beta)):
                mismatched.append((alpha, beta))
    assert mismatched


def test_rprime_raises_on_mismatch(f5, monkeypatch):
    import sl2hecke.quotient as qu

    monkeypatch.setattr(qu, "closed_form", lambda spec, a, b, twist=2: IdealHandle(spec, XY, [MPoly.gens(spec, XY)[0]]))
    with pytest.raises(ClosedFormMismatch):
        qu.rprime_component(f5, 1, 1)


def test_kermult_generators_multiply_to_zero(spec):
    for g in kermult_generators(spec):
        assert multiply_out(spec, g) == ZPrimeElem.zero(spec)


# gluing graph ---------------------------------------------------------------------

def test_p13_golden():
    golden = json.loads((DATA / "quotient_p13.json").read_text())
    assert graph_to_dict(build_quotient_graph(13)) == golden


@pytest.mark.parametrize("p,comps", [(5, [[1, 3], [2]]), (7, [[1, 3], [2, 4]]), (13, [[1, 3, 5, 7], [2, 4, 6]])])
def test_components_examples(p, comps):
    assert build_quotient_graph(p).components == comps


def test_p5_edges():
    assert build_quotient_graph(5).glue_edges == [(1, "O", 3, "inf")]


@pytest.mark.parametrize("p", PRIMES_TO_101)
def test_graph_invariants(p):
    g = build_quotient_graph(p)
    for c in graph_invariants(g) + connected_components_check(g):
        assert c.passed, (c.name, c.detail)
    assert len(g.lines) == (p + 1) // 2
    top = (p + 1) // 2
    holder = [r for r in range(1, top + 1) if r % 2 == (1 if p % 4 == 1 else 0)]
    assert holder in g.components and top in holder


@pytest.mark.parametrize("p,exc", [(4, NotPrime), (3, PTooSmall), (9, NotPrime)])
def test_bad_primes(p, exc):
    with pytest.raises(exc):
        build_quotient_graph(p)


def test_xi_model():
    assert xi_model(13)["affine_lines"] == 2 and xi_model(13)["crossing_pairs"] == 5
    assert xi_model(5)["zeta_locus_points"] == 3
    assert xi_model(5)["singular_points"] == 1
