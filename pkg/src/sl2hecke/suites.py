"""Verification suites: each is a list of check groups run against one prime.

A group is a module-level function ``(p, opts) -> list[Check]`` so the runner
can fan groups out to worker processes; results are reassembled in group
order, so the report does not depend on the worker count.
"""
from __future__ import annotations

import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import appendix, bimodule as bm, centre as ce, coequaliser as co, hecke as hk, quotient as qu
from .errors import NoSolution
from .expr import eval_expr, format_helem
from .field import make_field
from .linalg import Echelon, rank
from .omega import Character, GroupAlgElem, all_classes, idempotent
from .poly import IdealHandle, MPoly, UPoly, intersect, spolys_reduce_to_zero, upoly_gcd
from .report import Check, Report, check

SUITES = ("hecke", "centre", "bimodule", "quotient", "appendix")


@dataclass(frozen=True)
class Options:
    len_bound: int = 3
    deg_bound: int = 20
    fuzz: int = 1000
    pairs: int = 200
    seed: int = 20240601


# random elements ------------------------------------------------------------------

def random_helem(spec, rng: random.Random, max_len: int = 6, max_terms: int = 3) -> hk.HElem:
    n = spec.q - 1
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        ln = rng.randint(0, max_len)
        w = hk.Word(ln, rng.randint(0, 1) if ln else -1, rng.randrange(n))
        terms[w] = rng.randrange(1, spec.q)
    return hk.HElem(spec, terms)


def random_zelem(spec, rng: random.Random, max_deg: int = 4) -> ce.ZElem:
    comps = {}
    for key in ce.component_keys(spec):
        mons = {(0, 0): rng.randrange(spec.q)}
        for k in range(1, max_deg + 1):
            mons[(k, 0)] = rng.randrange(spec.q)
            if ce.is_pair(spec, key):
                mons[(0, k)] = rng.randrange(spec.q)
        comps[key] = mons
    return ce.ZElem(spec, comps)


def _first_failure(items, pred):
    for it in items:
        if not pred(it):
            return it
    return None


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")


def _wit(x) -> str:
    return "" if x is None else f"counterexample {x!r}"


# hecke suite ----------------------------------------------------------------------

def hecke_idempotents(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    es = [idempotent(spec, Character(j)) for j in range(n)]
    zero = GroupAlgElem(spec)
    bad = _first_failure(
        ((i, j) for i in range(n) for j in range(n)),
        lambda ij: es[ij[0]] * es[ij[1]] == (es[ij[0]] if ij[0] == ij[1] else zero),
    )
    total = zero
    for e in es:
        total = total + e
    return [
        check("hecke.idempotents.orthogonal", "e_l e_m = delta(l, m) e_l for all characters", bad is None, _wit(bad)),
        check("hecke.idempotents.sum", "sum of all e_l is 1", total == GroupAlgElem.one(spec)),
        check("hecke.idempotents.count", "e_l has q-1 terms", all(len(e.terms) == n for e in es)),
    ]


def hecke_relations(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    out = []
    e1 = hk.e_elem(spec, 0)
    for i in (0, 1):
        t = hk.tau(spec, i)
        bad = _first_failure(range(n), lambda j: t * hk.e_elem(spec, j) == hk.e_elem(spec, -j) * t)
        out.append(check(f"hecke.relations.tau{i}-idempotent", f"tau{i} e_l = e_(l^-1) tau{i} for all l", bad is None, _wit(bad)))
        out.append(check(f"hecke.relations.tau{i}-quadratic", f"tau{i}^2 = -tau{i} e_1", t * t == -(t * e1)))
        out.append(check(f"hecke.relations.tau{i}-two-sided", f"e_1 tau{i} = tau{i} e_1", e1 * t == t * e1))
        bad = _first_failure(range(n), lambda j: t * hk.tau_omega(spec, j) == hk.tau_omega(spec, -j) * t)
        out.append(check(f"hecke.relations.tau{i}-omega", f"tau{i} tau_w = tau_(w^-1) tau{i} for all w", bad is None, _wit(bad)))
    bad = _first_failure(
        ((a, b) for a in range(n) for b in range(n)),
        lambda ab: hk.tau_omega(spec, ab[0]) * hk.tau_omega(spec, ab[1]) == hk.tau_omega(spec, ab[0] + ab[1]),
    )
    out.append(check("hecke.relations.omega", "tau_w tau_w' = tau_(ww') for all w, w'", bad is None, _wit(bad)))
    return out


def hecke_products(p, opts):
    spec = make_field(p)
    rng = random.Random(opts.seed + p)
    pairs = [(random_helem(spec, rng), random_helem(spec, rng)) for _ in range(opts.pairs)]
    bad = _first_failure(pairs, lambda ab: ab[0] * ab[1] == hk.mul_by_rewriting(ab[0], ab[1]))
    triples = [tuple(random_helem(spec, rng) for _ in range(3)) for _ in range(opts.fuzz)]
    bad3 = _first_failure(triples, lambda t: (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]))
    return [
        check("hecke.product.rewriting", f"closed-form product equals generator rewriting on {len(pairs)} random pairs",
              bad is None, _wit(bad)),
        check("hecke.product.associative", f"(ab)c = a(bc) on {len(triples)} random triples of length <= 6",
              bad3 is None, _wit(bad3)),
    ]


def hecke_cosets(p, opts):
    spec = make_field(p)
    L = 6
    basis = hk.FiltBasis(spec, L - 1)
    sides = []
    for i in (0, 1):
        t = hk.tau(spec, i)
        vecs = [(hk.HElem.basis(spec, w) * t).terms for w in basis]
        sides.append(vecs)
    r0, r1 = rank(spec, sides[0]), rank(spec, sides[1])
    r01 = rank(spec, sides[0] + sides[1])
    words = hk.FiltBasis(spec, L)
    ends = [sum(1 for w in words if w.last == i) for i in (0, 1)]
    last_letter = all(
        all(all(w.last == i for w in v) for v in sides[i]) for i in (0, 1)
    )
    return [
        check("hecke.cosets.intersection", "H tau0 and H tau1 intersect trivially (rank additivity, length <= 6)",
              r01 == r0 + r1, f"ranks {r0} + {r1} vs {r01}"),
        check("hecke.cosets.last-letter", "H tau_i in length <= 6 is the span of words ending in s_i",
              last_letter and [r0, r1] == ends, f"ranks {[r0, r1]}, word counts {ends}"),
    ]


def hecke_involutions(p, opts):
    spec = make_field(p)
    rng = random.Random(opts.seed + 7 * p)
    basis = hk.FiltBasis(spec, 4).elements()
    pairs = [(random_helem(spec, rng), random_helem(spec, rng)) for _ in range(opts.pairs)]
    half = (spec.q - 1) // 2
    out = [
        check("hecke.involutions.iota-square", "iota(iota(h)) = h on all words of length <= 4",
              all(hk.iota(hk.iota(b)) == b for b in basis)),
        check("hecke.involutions.jmap-square", "J(J(h)) = h on all words of length <= 4",
              all(hk.jmap(hk.jmap(b)) == b for b in basis)),
        check("hecke.involutions.iota-multiplicative", f"iota(ab) = iota(a) iota(b) on {len(pairs)} random pairs",
              all(hk.iota(a * b) == hk.iota(a) * hk.iota(b) for a, b in pairs)),
        check("hecke.involutions.jmap-anti", f"J(ab) = J(b) J(a) on {len(pairs)} random pairs",
              all(hk.jmap(a * b) == hk.jmap(b) * hk.jmap(a) for a, b in pairs)),
    ]
    for i in (0, 1):
        t = hk.tau(spec, i)
        out.append(check(f"hecke.involutions.iota-tau{i}", f"iota(tau{i}) = -e_1 - tau{i}",
                         hk.iota(t) == -hk.e_elem(spec, 0) - t))
        out.append(check(f"hecke.involutions.jmap-tau{i}", f"J(tau{i}) = tau{i} tau_(omega_-1)",
                         hk.jmap(t) == t * hk.tau_omega(spec, half)))
        out.append(check(f"hecke.involutions.jmap-square-tau{i}", f"J(tau{i}) J(tau{i}) = J(tau{i}^2)",
                         hk.jmap(t) * hk.jmap(t) == hk.jmap(t * t)))
    return out


def hecke_zeta_decomposition(p, opts):
    spec = make_field(p)
    L = 4
    m_max = L // 2
    t0, t1 = hk.tau(spec, 0), hk.tau(spec, 1)
    tails = [(hk.HElem.one(spec), 0), (t0, 1), (t1, 1), (t0 * t1, 2)]
    vecs = []
    for j in range(spec.q - 1):
        e = hk.e_elem(spec, j)
        for m in range(m_max + 1):
            for tail, ln in tails:
                if 2 * m + ln <= L:
                    vecs.append((e * ce.zeta_power(spec, m) * tail).terms)
    size = len(hk.FiltBasis(spec, L))
    fits = all(max(w.len for w in v) <= L for v in vecs)
    r = rank(spec, vecs)
    return [check("hecke.zeta-decomposition",
                  "e_l zeta^m {1, tau0, tau1, tau0 tau1} is a basis of the length <= 4 piece",
                  fits and r == size == len(vecs), f"rank {r}, pieces {len(vecs)}, dimension {size}")]


def hecke_parser(p, opts):
    spec = make_field(p)
    rng = random.Random(opts.seed + 11 * p)
    corpus = [random_helem(spec, rng, 4, 4) for _ in range(50)]
    bad = _first_failure(corpus, lambda h: eval_expr(format_helem(h), spec) == h)
    return [check("hecke.parser.round-trip", "printed elements parse back to themselves (50 samples)",
                  bad is None, _wit(bad))]


# centre suite ---------------------------------------------------------------------

def centre_zeta(p, opts):
    spec = make_field(p)
    t0, t1, e1 = hk.tau(spec, 0), hk.tau(spec, 1), hk.e_elem(spec, 0)
    z1 = (t0 + e1) * (t1 + e1) + t1 * t0
    z2 = (t1 + e1) * (t0 + e1) + t0 * t1
    z = ce.zeta_elem(spec)
    return [
        check("centre.zeta.two-formulas", "(tau0+e_1)(tau1+e_1) + tau1 tau0 = (tau1+e_1)(tau0+e_1) + tau0 tau1", z1 == z2),
        check("centre.zeta.central", "zeta commutes with tau0, tau1 and tau_g", ce.is_central(z) is None),
        check("centre.zeta.length-two", "zeta has terms tau0 tau1 and tau1 tau0",
              any(w.len == 2 and w.first == 0 for w in z.terms) and any(w.len == 2 and w.first == 1 for w in z.terms)),
    ]


def centre_x(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    z = ce.zeta_elem(spec)
    out = []
    bad = _first_failure(range(n), lambda j: ce.is_central(ce.x_elem(spec, j)) is None)
    out.append(check("centre.x.central", "every X_l commutes with tau0, tau1 and tau_g", bad is None, _wit(bad)))
    total = hk.HElem.zero(spec)
    for j in range(n):
        total = total + ce.x_elem(spec, j)
    out.append(check("centre.x.sum", "sum of all X_l is zeta", total == z))
    self_inv = [j for j in range(n) if (2 * j) % n == 0]
    others = [j for j in range(n) if (2 * j) % n]
    bad = _first_failure(others, lambda j: (hk.e_elem(spec, j) + hk.e_elem(spec, -j)) * z == ce.x_elem(spec, j) + ce.x_elem(spec, -j))
    out.append(check("centre.x.pair-projection", "(e_l + e_(l^-1)) zeta = X_l + X_(l^-1) for l != l^-1", bad is None, _wit(bad)))
    bad = _first_failure(self_inv, lambda j: hk.e_elem(spec, j) * z == ce.x_elem(spec, j))
    out.append(check("centre.x.self-inverse-projection", "e_l zeta = X_l for l = l^-1", bad is None, _wit(bad)))
    bad = _first_failure(others, lambda j: (ce.x_elem(spec, j) * ce.x_elem(spec, -j)).is_zero())
    out.append(check("centre.x.crossing", "X_l X_(l^-1) = 0 for l != l^-1", bad is None, _wit(bad)))
    out.append(check("centre.x.one", "X_1 = e_1 zeta", ce.x_elem(spec, 0) == hk.e_elem(spec, 0) * z))
    return out


def centre_involutions(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    z = ce.zeta_elem(spec)
    xs = [ce.x_elem(spec, j) for j in range(n)]
    return [
        check("centre.involutions.iota", "iota fixes zeta and every X_l", hk.iota(z) == z and all(hk.iota(x) == x for x in xs)),
        check("centre.involutions.jmap", "J fixes zeta and every X_l", hk.jmap(z) == z and all(hk.jmap(x) == x for x in xs)),
    ]


def centre_coordinates(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    N = 5
    ranks_ok = True
    worst = None
    for j in range(n):
        vecs = [hk.e_elem(spec, j).terms] + [ce.x_power(spec, j, k).terms for k in range(1, N + 1)]
        if rank(spec, vecs) != N + 1:
            ranks_ok, worst = False, j
    rng = random.Random(opts.seed + 13 * p)
    samples = [random_zelem(spec, rng, 4) for _ in range(20)]
    bad = _first_failure(samples, lambda zz: ce.h_to_z(ce.z_to_h(zz), 4) == zz)
    zc = ce.h_to_z(ce.zeta_elem(spec), 2)
    return [
        check("centre.coordinates.independent", "e_l, X_l, ..., X_l^5 are linearly independent", ranks_ok, _wit(worst)),
        check("centre.coordinates.round-trip", "coordinates of z_to_h(z) recover z (20 samples, degree <= 4)", bad is None, _wit(bad)),
        check("centre.coordinates.zeta", "zeta has coordinate x in every component", zc == ce.zeta_coords(spec)),
        check("centre.coordinates.one", "1 is the unit of every component", ce.h_to_z(hk.HElem.one(spec), 1) == ce.ZElem.one(spec)),
    ]


def centre_normalisation(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    t = UPoly.monomial(spec, 1)
    phi_zeta = ce.phi_map(ce.zeta_coords(spec))
    rng = random.Random(opts.seed + 17 * p)
    pairs = [(random_zelem(spec, rng, 2), random_zelem(spec, rng, 2)) for _ in range(10)]
    hom = all(ce.phi_map(a * b) == ce.phi_map(a) * ce.phi_map(b) and ce.phi_map(a + b) == ce.phi_map(a) + ce.phi_map(b)
              for a, b in pairs)
    one = ce.ZZetaElem.one(spec)
    total = ce.ZZetaElem.zero(spec)
    for j in range(n):
        total = total + ce.epsilon_elem(spec, j)
    zeta_loc = ce.zeta_in_zzeta(spec)
    eps_ok = all(ce.epsilon_elem(spec, j) * zeta_loc == ce.ZZetaElem.from_zprime(ce.phi_map(ce.ZElem.x_power(spec, j, 1)))
                 for j in range(n))
    orth = all(ce.epsilon_elem(spec, i) * ce.epsilon_elem(spec, j) == (ce.epsilon_elem(spec, i) if i == j else ce.ZZetaElem.zero(spec))
               for i in range(n) for j in range(n))
    return [
        check("centre.normalisation.zeta", "phi(zeta) = t in every slot", all(s == t for s in phi_zeta.slots)),
        check("centre.normalisation.x", "phi(X_l) = t in slot l and 0 elsewhere",
              all(ce.phi_map(ce.ZElem.x_power(spec, j, 1)).slots == tuple(t if k == j else UPoly(spec) for k in range(n))
                  for j in range(n))),
        check("centre.normalisation.homomorphism", "phi respects sums and products (10 random pairs)", hom),
        check("centre.localisation.epsilon", "epsilon_l * zeta = X_l in the localisation", eps_ok),
        check("centre.localisation.partition", "the epsilon_l are orthogonal idempotents summing to 1", orth and total == one),
    ]


def centre_classes(p, opts):
    spec = make_field(p)
    classes = all_classes(spec)
    singles = sorted(next(iter(c)).exp for c in classes if len(c) == 1)
    return [
        check("centre.classes.count", "there are (q+1)/2 classes {a, mu/a}", len(classes) == (spec.q + 1) // 2, f"{len(classes)}"),
        check("centre.classes.singletons", "the singleton classes are id^1 and id^((p+1)/2)",
              singles == sorted({1, (p + 1) // 2}), f"{singles}"),
    ]


# bimodule suite -------------------------------------------------------------------

def _kappa(spec, opts):
    return bm.default_kappa2(spec)


def bimodule_homomorphism(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    K = _kappa(spec, opts)
    out = []
    e1 = K(hk.e_elem(spec, 0))
    for i in (0, 1):
        M = K.gen_matrix(i)
        bad = _first_failure(range(n), lambda j: M * K(hk.e_elem(spec, j)) == K(hk.e_elem(spec, -j)) * M)
        out.append(check(f"bimodule.kappa2.tau{i}-idempotent", f"kappa2 respects tau{i} e_l = e_(l^-1) tau{i}", bad is None, _wit(bad)))
        out.append(check(f"bimodule.kappa2.tau{i}-quadratic", f"kappa2 respects tau{i}^2 = -tau{i} e_1", M * M == -(M * e1)))
        bad = _first_failure(range(n), lambda j: M * K.omega_matrix(j) == K.omega_matrix(-j) * M)
        out.append(check(f"bimodule.kappa2.tau{i}-omega", f"kappa2 respects tau{i} tau_w = tau_(w^-1) tau{i}", bad is None, _wit(bad)))
    bad = _first_failure(((a, b) for a in range(n) for b in range(n)),
                         lambda ab: K.omega_matrix(ab[0]) * K.omega_matrix(ab[1]) == K.omega_matrix(ab[0] + ab[1]))
    out.append(check("bimodule.kappa2.omega", "kappa2 respects tau_w tau_w' = tau_(ww')", bad is None, _wit(bad)))
    idem = _first_failure(range(n), lambda j: K(hk.e_elem(spec, j)) == bm.Mat2.diag(
        bm.HLoc(hk.e_elem(spec, j + K.twist)), bm.HLoc(hk.e_elem(spec, j - K.twist))))
    out.append(check("bimodule.kappa2.idempotents", "kappa2(e_a) = diag(e_(a mu), e_(a/mu))", idem is None, _wit(idem)))
    return out


def bimodule_identities(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    K = _kappa(spec, opts)
    z2 = K.z * K.z
    t01 = hk.tau(spec, 0) * hk.tau(spec, 1)
    t10 = hk.tau(spec, 1) * hk.tau(spec, 0)
    zeta = ce.zeta_elem(spec)
    mu = K.twist
    out = []
    got = K(zeta)
    want = bm.Mat2.diag(z2 * bm.HLoc(hk.iota(t01)), z2 * bm.HLoc(hk.iota(t10)))
    out.append(check("bimodule.kappa2.zeta", "kappa2(zeta) = z^2 diag(iota(tau0 tau1), iota(tau1 tau0))",
                     got == want, got.mismatch(want) or ""))
    bad = None
    for j in range(n):
        got = K(ce.x_elem(spec, j))
        want = bm.Mat2.diag(z2 * bm.HLoc(hk.iota(hk.e_elem(spec, mu - j) * t01)),
                            z2 * bm.HLoc(hk.iota(hk.e_elem(spec, j - mu) * t10)))
        if got != want:
            bad = f"alpha=id^{j}: {got.mismatch(want)}"
            break
    out.append(check("bimodule.kappa2.x", "kappa2(X_a) = z^2 diag(iota(e_(mu/a) tau0 tau1), iota(e_(a/mu) tau1 tau0)) for all a",
                     bad is None, bad or ""))
    one = bm.b_one(spec, K)
    zz = bm.HLoc(zeta * zeta)
    bad = _first_failure(range(n), lambda j: one.right_act(ce.x_elem(spec, j)).left_act(zz) == one.left_act(ce.x_elem(spec, mu - j)))
    out.append(check("bimodule.b.zeta-squared-x", "zeta^2 (1 X_a) = X_(mu/a) 1 in B for all a", bad is None, _wit(bad)))
    gens = bm.module_generators(spec, K)
    bad = _first_failure(range(2), lambda k: gens[k].right_act(zeta).left_act(zeta) == gens[k])
    out.append(check("bimodule.b.zeta-inverse", "zeta (w zeta) = w on both module generators", bad is None, _wit(bad)))
    return out


def bimodule_annihilator(p, opts):
    spec = make_field(p)
    n = spec.q - 1
    K = _kappa(spec, opts)
    zeta = ce.zeta_elem(spec)
    gens = bm.module_generators(spec, K)
    mu = K.twist
    ok_t = all((g.right_act(zeta).left_act(zeta) - g).is_zero() for g in gens)
    bad = None
    for j in range(n):
        for k, g in enumerate(gens):
            if not (bm.left_epsilon(g, j) - bm.right_epsilon(g, mu - j)).is_zero():
                bad = f"alpha=id^{j}, generator {k}"
    wrong = []
    for j in range(n):
        if (mu - j) % n != j % n:
            if any(not (bm.left_epsilon(g, j) - bm.right_epsilon(g, j)).is_zero() for g in gens):
                wrong.append(j)
    expected_wrong = [j for j in range(n) if (mu - j) % n != j % n]
    return [
        check("bimodule.ann.t-t", "t(x)t - 1(x)1 kills both module generators (containment only)", ok_t),
        check("bimodule.ann.twisted-idempotents", "e_a(x)1 - 1(x)e_(mu/a) kills both module generators for all a (containment only)",
              bad is None, bad or ""),
        check("bimodule.ann.untwisted-fails", "e_a(x)1 - 1(x)e_a does not kill B when a != mu/a",
              wrong == expected_wrong, f"fails at {wrong}"),
    ]


def bimodule_uv_crt(p, opts):
    spec = make_field(p)
    K = _kappa(spec, opts)
    zeta = ce.zeta_elem(spec)
    target = zeta * (zeta - hk.HElem.one(spec))
    t0, t1 = hk.tau(spec, 0), hk.tau(spec, 1)
    try:
        u, v = hk.solve_left_combination(target, [t0, t1], opts.len_bound)
    except NoSolution as exc:
        return [check("bimodule.uv", "zeta(zeta-1) = u tau0 + v tau1", False, str(exc))]
    residual = target - u * t0 - v * t1
    out = [check("bimodule.uv", f"uv-decomposition: residual {len(residual.terms)} at length bound {opts.len_bound}",
                 residual.is_zero(), f"u has {len(u.terms)} terms, v has {len(v.terms)} terms")]
    rng = random.Random(opts.seed + 19 * p)
    one_h = hk.HElem.one(spec)
    samples = [(one_h, hk.HElem.zero(spec)), (hk.HElem.zero(spec), one_h)]
    samples += [(random_helem(spec, rng, 3, 2), random_helem(spec, rng, 3, 2)) for _ in range(5)]
    unit = bm.b_one(spec, K)
    bad = None
    for a, b in samples:
        c = a * v * t1 + b * u * t0
        lhs = bm.b_make(a, b, K).left_act(target)
        if lhs != unit.left_act(c):
            bad = f"(a, b) = ({a!r}, {b!r})"
            break
    out.append(check("bimodule.crt", "zeta(zeta-1)(a, b) = c (1, 1) with c = a v tau1 + b u tau0 (generators and 5 samples)",
                     bad is None, bad or ""))
    lam = hk.e_elem(spec, 1) * zeta
    try:
        hk.solve_left_combination(lam, [t0, t1], opts.len_bound)
        ok = True
    except NoSolution:
        ok = False
    out.append(check("bimodule.zeta-e", "zeta e_l lies in H tau0 + H tau1 for l != 1", ok))
    return out


def bimodule_structure(p, opts):
    spec = make_field(p)
    K = _kappa(spec, opts)
    rng = random.Random(opts.seed + 23 * p)
    zeta = ce.zeta_elem(spec)
    basis = hk.FiltBasis(spec, 4).elements()
    vecs = []
    for h in basis:
        w = bm.psi(h, K)
        d = {("u", k): c for k, c in w.u.num.terms.items()}
        d.update({("v", k): c for k, c in w.v.num.terms.items()})
        vecs.append(d)
    r = rank(spec, vecs)
    commute = True
    for _ in range(20):
        a = bm.HLoc(random_helem(spec, rng, 2, 2), rng.randint(0, 1))
        w = bm.b_make(bm.HLoc(random_helem(spec, rng, 2, 2)), bm.HLoc(random_helem(spec, rng, 2, 2)), K)
        h = random_helem(spec, rng, 2, 2)
        if w.right_act(h).left_act(a) != w.left_act(a).right_act(h):
            commute = False
            break
    well = True
    for _ in range(10):
        w = bm.b_make(random_helem(spec, rng, 2, 2), random_helem(spec, rng, 2, 2), K)
        junk = bm.b_make(random_helem(spec, rng, 2, 2) * hk.tau(spec, 0), random_helem(spec, rng, 2, 2) * hk.tau(spec, 1), K)
        shifted = bm.BElem.__new__(bm.BElem)
        shifted.kappa, shifted.u, shifted.v = K, w.u + bm.HLoc(junk.u.num + random_helem(spec, rng, 2, 2) * hk.tau(spec, 0)), w.v
        h = random_helem(spec, rng, 2, 2)
        if shifted.right_act(h) != w.right_act(h):
            well = False
            break
    inv = all(g.right_act(zeta).left_act(zeta) == g and g.left_act(zeta).right_act(zeta) == g
              for g in bm.module_generators(spec, K))
    return [
        check("bimodule.psi-injective", "h -> h (1, 1) is injective on length <= 4", r == len(basis), f"rank {r} of {len(basis)}"),
        check("bimodule.actions-commute", "a (w h) = (a w) h on 20 random triples", commute),
        check("bimodule.right-action-well-defined", "the right action ignores representatives modulo H tau0", well),
        check("bimodule.zeta-invertible", "right zeta and left zeta are mutually inverse on B", inv),
    ]


# quotient suite -------------------------------------------------------------------

def quotient_components(p, opts):
    spec = make_field(p)
    comps = qu.all_components(spec)
    kinds: dict[str, int] = {}
    for c in comps:
        kinds[c.kind] = kinds.get(c.kind, 0) + 1
    gb_ok = all(spolys_reduce_to_zero(c.ideal.basis) for c in comps)
    return [
        check("quotient.components.closed-form",
              "pi(ker mult) cap pi(Ann) = <(x-y)^[a=b] (xy-1)^[a=mu/b]> for every pair of characters",
              len(comps) == (p - 1) ** 2, " ".join(f"{k}={v}" for k, v in sorted(kinds.items()))),
        check("quotient.components.groebner", "every computed basis passes the S-polynomial criterion", gb_ok),
    ]


def quotient_generators(p, opts):
    spec = make_field(p)
    zero = ce.ZPrimeElem.zero(spec)
    ker = qu.kermult_generators(spec)
    return [check("quotient.kermult-generators", "the listed generators of ker mult multiply to zero",
                  all(qu.multiply_out(spec, g) == zero for g in ker))]


def quotient_graph(p, opts):
    g = qu.build_quotient_graph(p)
    out = [check(f"quotient.graph.{_slug(c.name)}", c.name, c.passed, c.detail) for c in qu.graph_invariants(g)]
    out += [check(f"quotient.components.{_slug(c.name.split(' (')[0])}", c.name, c.passed, c.detail)
            for c in qu.connected_components_check(g)]
    xm = qu.xi_model(p)
    out.append(check("quotient.xi.inventory", "Xi has 2 lines, (p-3)/2 crossings, (p+1)/2 points over zeta = 0",
                     xm["affine_lines"] == 2 and xm["crossing_pairs"] == (p - 3) // 2
                     and xm["zeta_locus_points"] == (p + 1) // 2 and xm["t_locus_points"] == p - 1,
                     str({k: v for k, v in xm.items() if k not in ("p", "g")})))
    return out


def quotient_coequaliser(p, opts):
    spec = make_field(p)
    checks = co.coequaliser_exactness_checks(spec, opts.deg_bound)
    checks += co.psi_identity_check(spec)
    return [check(f"quotient.exactness.{_slug(c.name)}", f"{c.name} (bound {c.bound})", c.passed, c.detail)
            for c in checks]


def quotient_engine(p, opts):
    spec = make_field(p)
    rng = random.Random(opts.seed + 29 * p)
    V = ("x",)

    def to_m(u):
        return MPoly(spec, V, {(k,): c for k, c in enumerate(u.coeffs) if c})

    # principal intersections against lcm, and against the product exactly when coprime
    bad = None
    coprime = 0
    for k in range(50):
        f = UPoly(spec, [rng.randrange(p) for _ in range(rng.randint(1, 4))] + [1])
        h = UPoly(spec, [rng.randrange(p) for _ in range(rng.randint(1, 4))] + [1])
        g = upoly_gcd(f, h)
        lcm = (f * h).divmod(g)[0]
        I = intersect(IdealHandle(spec, V, [to_m(f)]), IdealHandle(spec, V, [to_m(h)]))
        is_coprime = g.degree == 0
        coprime += is_coprime
        if I != IdealHandle(spec, V, [to_m(lcm)]) or (I == IdealHandle(spec, V, [to_m(f * h)])) != is_coprime:
            bad = k
            break
    return [
        check("quotient.engine.intersect-product",
              "<f> cap <g> = <lcm(f, g)>, and equals <fg> exactly when gcd = 1, on 50 random pairs",
              bad is None, f"{coprime} coprime pairs" if bad is None else f"pair {bad}"),
        check("quotient.engine.tensor-square", "<x(x)1 - 1(x)x> is the kernel of multiplication on k[x]/<x^3> (x) k[x]/<x^3>",
              tensor_square_oracle(spec)),
    ]


def tensor_square_oracle(spec) -> bool:
    """Compare the ideal generated by x(x)1 - 1(x)x with ker(mult) by linear algebra."""
    V = ("x1", "x2")
    x1, x2 = MPoly.gens(spec, V)
    rel = [x1 ** 3, x2 ** 3]
    basis = [(i, j) for i in range(3) for j in range(3)]
    # kernel of multiplication A(x)A -> A, x1^i x2^j -> x^(i+j)
    vecs = [{i + j: 1} if i + j < 3 else {} for i, j in basis]
    from .linalg import nullspace

    null = nullspace(spec, vecs)
    kernel = [{basis[k]: c for k, c in v.items()} for v in null]
    # ideal generated by x1 - x2 in the tensor square, spanned by monomial multiples
    I = IdealHandle(spec, V, rel + [x1 - x2])
    Q = IdealHandle(spec, V, rel)
    span = Echelon(spec, track=False)
    for i, j in basis:
        f, _ = Q.reduce((x1 - x2) * x1 ** i * x2 ** j)
        span.add({e: c for e, c in f.terms.items()})
    same_dim = span.rank == len(kernel)
    contained = all(span.contains(v) for v in kernel)
    members = all(I.contains(MPoly(spec, V, v)) for v in kernel)
    return same_dim and contained and members


# appendix suite -------------------------------------------------------------------

def appendix_lines(p, opts):
    spec = make_field(p)
    out = []
    for a in (0, 1):
        bad = None
        for b in range(p):
            rep = appendix.appendix_eigenline_check(spec, a, b)
            exp = appendix.expected_lines(spec, a)
            match = len(rep.lines) == len(exp) and all(any(appendix.same_line(x, y) for y in exp) for x in rep.lines)
            if not (rep.passed and match):
                bad = f"b={b}"
                break
        out.append(check(f"appendix.a{a}", f"a={a}: B^2 + aB = 0, B-stable lines as expected, none A-stable (all b)",
                         bad is None, bad or ""))
    return out


GROUPS = {
    "hecke": [hecke_idempotents, hecke_relations, hecke_products, hecke_cosets, hecke_involutions,
              hecke_zeta_decomposition, hecke_parser],
    "centre": [centre_zeta, centre_x, centre_involutions, centre_coordinates, centre_normalisation, centre_classes],
    "bimodule": [bimodule_homomorphism, bimodule_identities, bimodule_annihilator, bimodule_uv_crt, bimodule_structure],
    "quotient": [quotient_components, quotient_generators, quotient_graph, quotient_coequaliser, quotient_engine],
    "appendix": [appendix_lines],
}


def _run_group(args):
    fn, p, opts = args
    t = time.perf_counter()
    checks = fn(p, opts)
    return checks, time.perf_counter() - t


def run_suite(p: int, suite: str = "all", opts: Options | None = None, workers: int = 1) -> Report:
    opts = opts or Options()
    spec = make_field(p)
    names = list(SUITES) if suite == "all" else [suite]
    if any(n not in GROUPS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    if spec.e != 1 and any(n in ("bimodule", "quotient") for n in names):
        bm.require_prime_field(spec)
    jobs = [(fn, p, opts) for n in names for fn in GROUPS[n]]
    start = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_run_group, jobs))
    else:
        results = [_run_group(j) for j in jobs]
    report = Report(suite, p, spec.generator, bounds={"len_bound": opts.len_bound, "deg_bound": opts.deg_bound})
    for (fn, _, _), (checks, dt) in zip(jobs, results):
        report.checks.extend(checks)
        report.timing[fn.__name__] = round(dt, 4)
    report.timing["total"] = round(time.perf_counter() - start, 4)
    return report


__all__ = ["Options", "run_suite", "GROUPS", "SUITES", "random_helem", "random_zelem", "Check"]
