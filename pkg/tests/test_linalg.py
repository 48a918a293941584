import random

import sympy

from sl2hecke.field import make_field
from sl2hecke.linalg import Echelon, nullspace, rank, solve


def _random_vectors(rng, p, count, width, density=0.5):
    return [{k: rng.randrange(1, p) for k in range(width) if rng.random() < density} for _ in range(count)]


def test_rank_against_sympy():
    rng = random.Random(1)
    for p in (5, 7, 13):
        spec = make_field(p)
        for _ in range(20):
            vecs = _random_vectors(rng, p, rng.randint(1, 8), 6)
            M = sympy.Matrix([[v.get(k, 0) for k in range(6)] for v in vecs])
            want = sympy.GF(p)
            dm = sympy.polys.matrices.DomainMatrix.from_Matrix(M).convert_to(want)
            assert rank(spec, vecs) == dm.rank()


def test_nullspace_kills_vectors(f5):
    rng = random.Random(2)
    vecs = _random_vectors(rng, 5, 7, 4)
    for combo in nullspace(f5, vecs):
        total = {}
        for i, c in combo.items():
            for k, v in vecs[i].items():
                total[k] = (total.get(k, 0) + c * v) % 5
        assert not any(total.values())


def test_solve_and_contains(f5):
    vecs = [{0: 1, 1: 2}, {1: 1}]
    sol = solve(f5, vecs, {0: 3, 1: 4})
    assert sol is not None
    assert solve(f5, vecs, {2: 1}) is None
    ech = Echelon(f5)
    for i, v in enumerate(vecs):
        ech.add(v, i)
    assert ech.contains({0: 2, 1: 4}) and ech.rank == 2


def test_zero_entries_ignored(f5):
    assert rank(f5, [{0: 0, 1: 1}, {1: 2}]) == 1
