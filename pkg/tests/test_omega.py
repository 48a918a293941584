import pytest

from sl2hecke.field import make_field
from sl2hecke.omega import (
    Character, GroupAlgElem, all_classes, char_eval, character, class_of, idempotent, mu, omega,
    omega_minus_one,
)


def test_char_eval_examples(f5):
    assert int(char_eval(f5, Character(0), omega(f5, 3))) == 1
    assert int(char_eval(f5, Character(2), omega(f5, 1))) == 4
    assert int(char_eval(f5, Character(1), omega_minus_one(f5))) == 4


def test_omega_minus_one_squares_to_one(spec):
    w = omega_minus_one(spec)
    assert spec.gpow(w.exp) == spec.neg(1)


def test_trivial_idempotent_f5(f5):
    assert idempotent(f5, Character(0)).terms == {0: 4, 1: 4, 2: 4, 3: 4}


def test_id_idempotent_f5(f5):
    assert idempotent(f5, Character(1)).terms == {0: 4, 1: 2, 2: 1, 3: 3}


def test_idempotent_coefficients_oracle(spec):
    # coefficient of w(i) in e_l is -l(w(i))^-1, computed here from plain modular arithmetic
    p, g = spec.p, spec.generator
    for j in range(p - 1):
        e = idempotent(spec, Character(j))
        for i in range(p - 1):
            val = pow(g, i * j, p)
            assert e.terms[i] == (-pow(val, -1, p)) % p


def test_idempotents_complete_and_orthogonal(spec):
    es = [idempotent(spec, Character(j)) for j in range(spec.q - 1)]
    total = GroupAlgElem(spec)
    for e in es:
        total = total + e
    assert total == GroupAlgElem.one(spec)
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            assert a * b == (a if i == j else GroupAlgElem(spec))


def test_group_algebra_product(f5):
    assert GroupAlgElem.basis(f5, 1) * GroupAlgElem.basis(f5, 3) == GroupAlgElem.basis(f5, 0)


def test_classes_f5(f5):
    assert class_of(f5, Character(1)) == frozenset({Character(1)})
    assert class_of(f5, Character(0)) == frozenset({Character(0), Character(2)})


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_singleton_classes(p):
    spec = make_field(p)
    singles = sorted(next(iter(c)).exp for c in all_classes(spec) if len(c) == 1)
    assert singles == sorted({1, (p + 1) // 2})
    assert len(all_classes(spec)) == (p + 1) // 2


def test_mu_is_id_squared(f5):
    assert mu(f5) == character(f5, 2)
