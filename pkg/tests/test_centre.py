import pytest

from sl2hecke.centre import (
    ZElem, ZZetaElem, component_keys, epsilon_elem, generators, h_to_z, is_central, is_pair, phi_map, x_elem,
    x_power, z_to_h, zeta_coords, zeta_elem, zeta_in_zzeta,
)
from sl2hecke.errors import NotCentral, NotRecognized
from sl2hecke.hecke import HElem, e_elem, iota, jmap, tau, tau_omega
from sl2hecke.linalg import rank
from sl2hecke.poly import UPoly
from sl2hecke.suites import random_zelem


def test_zeta_formulas_agree(spec):
    t0, t1, e1 = tau(spec, 0), tau(spec, 1), e_elem(spec, 0)
    assert (t0 + e1) * (t1 + e1) + t1 * t0 == (t1 + e1) * (t0 + e1) + t0 * t1


def test_zeta_is_central(spec):
    z = zeta_elem(spec)
    for g in generators(spec) + [tau_omega(spec, k) for k in range(spec.q - 1)]:
        assert z * g == g * z


def test_zeta_length_two_part(spec):
    lens = {(w.len, w.first) for w in zeta_elem(spec).terms}
    assert (2, 0) in lens and (2, 1) in lens


def test_x_elements(spec):
    n = spec.q - 1
    assert x_elem(spec, 0) == e_elem(spec, 0) * zeta_elem(spec)
    total = HElem.zero(spec)
    for j in range(n):
        x = x_elem(spec, j)
        assert is_central(x) is None
        total = total + x
    assert total == zeta_elem(spec)


def test_crossing_products_vanish(spec):
    n = spec.q - 1
    for j in range(n):
        if (2 * j) % n:
            assert (x_elem(spec, j) * x_elem(spec, -j)).is_zero()


def test_f5_crossing(f5):
    assert (x_elem(f5, 1) * x_elem(f5, 3)).is_zero()


def test_involutions_fix_centre(spec):
    for j in range(spec.q - 1):
        x = x_elem(spec, j)
        assert iota(x) == x
        assert jmap(x) == x


def test_not_central_witness(f5):
    assert is_central(tau(f5, 0)) == tau_omega(f5, 1)
    with pytest.raises(NotCentral):
        h_to_z(tau(f5, 0))


def test_component_keys_f5(f5):
    assert component_keys(f5) == [0, 2, 1]
    assert is_pair(f5, 1) and not is_pair(f5, 0)


def test_component_unit_and_x(f5):
    assert z_to_h(ZElem.unit(f5, 0)) == e_elem(f5, 0)
    assert z_to_h(ZElem.x_power(f5, 1, 1)) == x_elem(f5, 1)
    assert z_to_h(ZElem.x_power(f5, 3, 1)) == x_elem(f5, 3)


def test_mixed_monomial_rejected(f5):
    with pytest.raises(ValueError):
        ZElem(f5, {1: {(1, 1): 1}})


def test_h_to_z_examples(spec):
    assert h_to_z(zeta_elem(spec), 2) == zeta_coords(spec)
    assert h_to_z(HElem.one(spec), 1) == ZElem.one(spec)


def test_h_to_z_bound(f5):
    with pytest.raises(NotRecognized):
        h_to_z(x_power(f5, 1, 3), 2)


def test_round_trip(spec, rng):
    for _ in range(10):
        z = random_zelem(spec, rng, 3)
        assert h_to_z(z_to_h(z), 3) == z


def test_z_to_h_is_a_ring_map(spec, rng):
    for _ in range(5):
        a, b = random_zelem(spec, rng, 2), random_zelem(spec, rng, 2)
        assert z_to_h(a * b) == z_to_h(a) * z_to_h(b)
        assert z_to_h(a + b) == z_to_h(a) + z_to_h(b)


def test_powers_independent(spec):
    for j in range(spec.q - 1):
        vecs = [e_elem(spec, j).terms] + [x_power(spec, j, k).terms for k in range(1, 6)]
        assert rank(spec, vecs) == 6


def test_phi(spec):
    n = spec.q - 1
    t, one, zero = UPoly.monomial(spec, 1), UPoly.const(spec, 1), UPoly(spec)
    assert phi_map(zeta_coords(spec)).slots == tuple([t] * n)
    assert phi_map(ZElem.one(spec)).slots == tuple([one] * n)
    assert phi_map(ZElem.x_power(spec, 1, 1)).slots == tuple(t if k == 1 else zero for k in range(n))


def test_epsilon(spec):
    n = spec.q - 1
    total = ZZetaElem.zero(spec)
    for i in range(n):
        total = total + epsilon_elem(spec, i)
        for j in range(n):
            prod = epsilon_elem(spec, i) * epsilon_elem(spec, j)
            assert prod == (epsilon_elem(spec, i) if i == j else ZZetaElem.zero(spec))
    assert total == ZZetaElem.one(spec)
    x1 = ZZetaElem.from_zprime(phi_map(ZElem.x_power(spec, 1, 1)))
    assert epsilon_elem(spec, 1) * zeta_in_zzeta(spec) == x1
