"""Component ideals of the relation on the normalisation, and the gluing graph
of projective lines that presents the quotient space.

Characters are exponents j (meaning id^j) modulo p - 1; the twisting
character is id^2.  Line r (1 <= r <= (p+1)/2) carries the class
{id^r, id^(2-r)}.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .centre import ZPrimeElem
from .errors import ClosedFormMismatch, PTooSmall, NotPrime
from .field import FieldSpec, is_prime, make_field
from .omega import Character, class_of
from .poly import GREVLEX, IdealHandle, MPoly, RatFunc, UPoly, ideal_equal, intersect
from .bimodule import require_prime_field

XY = ("x", "y")
TWIST = 2


# generators in Z' (x) Z' ---------------------------------------------------------

@dataclass(frozen=True)
class TensorTerm:
    coeff: int
    left: ZPrimeElem
    right: ZPrimeElem


def _zp_const(spec: FieldSpec, c: int = 1) -> ZPrimeElem:
    return ZPrimeElem(spec, [UPoly.const(spec, c)] * (spec.q - 1))


def _zp_t(spec: FieldSpec) -> ZPrimeElem:
    return ZPrimeElem(spec, [UPoly.monomial(spec, 1)] * (spec.q - 1))


def _zp_idem(spec: FieldSpec, j: int) -> ZPrimeElem:
    n = spec.q - 1
    return ZPrimeElem(spec, [UPoly.const(spec, 1) if k == j % n else UPoly(spec) for k in range(n)])


def kermult_generators(spec: FieldSpec) -> list[list[TensorTerm]]:
    """t(x)1 - 1(x)t and e_g(x)1 - 1(x)e_g for every character g."""
    one, t, m1 = _zp_const(spec), _zp_t(spec), spec.neg(1)
    gens = [[TensorTerm(1, t, one), TensorTerm(m1, one, t)]]
    for j in range(spec.q - 1):
        e = _zp_idem(spec, j)
        gens.append([TensorTerm(1, e, one), TensorTerm(m1, one, e)])
    return gens


def annihilator_generators(spec: FieldSpec, twist: int = TWIST) -> list[list[TensorTerm]]:
    """t(x)t - 1(x)1 and e_g(x)1 - 1(x)e_(mu/g) for every character g."""
    one, t, m1 = _zp_const(spec), _zp_t(spec), spec.neg(1)
    gens = [[TensorTerm(1, t, t), TensorTerm(m1, one, one)]]
    for j in range(spec.q - 1):
        gens.append([TensorTerm(1, _zp_idem(spec, j), one), TensorTerm(m1, one, _zp_idem(spec, twist - j))])
    return gens


def _upoly_in(f: UPoly, var: str) -> MPoly:
    idx = XY.index(var)
    terms = {}
    for k, c in enumerate(f.coeffs):
        if c:
            e = [0, 0]
            e[idx] = k
            terms[tuple(e)] = c
    return MPoly(f.spec, XY, terms)


def project(spec: FieldSpec, gen: list[TensorTerm], alpha: int, beta: int) -> MPoly:
    """pi_(alpha, beta): a(x)b -> a[alpha](x) * b[beta](y) in k[x, y]."""
    out = MPoly(spec, XY)
    for term in gen:
        out = out + (_upoly_in(term.left.slots[alpha], "x") * _upoly_in(term.right.slots[beta], "y")).scale(term.coeff)
    return out


def multiply_out(spec: FieldSpec, gen: list[TensorTerm]) -> ZPrimeElem:
    """The multiplication map Z'(x)Z' -> Z'."""
    out = ZPrimeElem.zero(spec)
    for term in gen:
        prod = term.left * term.right
        out = out + ZPrimeElem(spec, [s * term.coeff for s in prod.slots])
    return out


def closed_form(spec: FieldSpec, alpha: int, beta: int, twist: int = TWIST) -> IdealHandle:
    """<(x-y)^[alpha = beta] * (xy-1)^[alpha = mu/beta]>."""
    n = spec.q - 1
    x, y = MPoly.gens(spec, XY)
    f = MPoly.const(spec, XY, 1)
    if alpha % n == beta % n:
        f = f * (x - y)
    if (alpha + beta - twist) % n == 0:
        f = f * (x * y - 1)
    return IdealHandle(spec, XY, [f], GREVLEX)


@dataclass
class ComponentIdeal:
    alpha: int
    beta: int
    ideal: IdealHandle
    kind: str  # unit | diagonal | antidiagonal | both


def _kind(spec, alpha, beta, twist=TWIST) -> str:
    n = spec.q - 1
    d1 = alpha % n == beta % n
    d2 = (alpha + beta - twist) % n == 0
    return {(False, False): "unit", (True, False): "diagonal", (False, True): "antidiagonal", (True, True): "both"}[(d1, d2)]


def rprime_component(spec: FieldSpec, alpha: int, beta: int, twist: int = TWIST) -> ComponentIdeal:
    """pi(ker mult) cap pi(Ann) by Groebner bases, checked against the closed form."""
    require_prime_field(spec)
    ker = IdealHandle(spec, XY, [project(spec, g, alpha, beta) for g in kermult_generators(spec)])
    ann = IdealHandle(spec, XY, [project(spec, g, alpha, beta) for g in annihilator_generators(spec, twist)])
    computed = intersect(ker, ann)
    expected = closed_form(spec, alpha, beta, twist)
    if not ideal_equal(computed, expected):
        raise ClosedFormMismatch(computed.basis, expected.basis)
    return ComponentIdeal(alpha, beta, computed, _kind(spec, alpha, beta, twist))


def all_components(spec: FieldSpec, workers: int = 1) -> list[ComponentIdeal]:
    pairs = [(a, b) for a in range(spec.q - 1) for b in range(spec.q - 1)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            return list(ex.map(lambda ab: rprime_component(spec, *ab), pairs))
    return [rprime_component(spec, a, b) for a, b in pairs]


# the gluing graph ------------------------------------------------------------------

@dataclass
class LineNode:
    r: int
    chars: tuple[int, ...]  # exponents j of the characters id^j in the class
    kind: str  # singleton | pair
    # point name ("O" or "inf") -> characters whose origin lands there
    marked: dict[str, list[int]] = field(default_factory=dict)


@dataclass
class GluingGraph:
    p: int
    g: int
    lines: list[LineNode]
    glue_edges: list[tuple[int, str, int, str]]
    components: list[list[int]]
    chain: dict[int, bool]

    def line(self, r: int) -> LineNode:
        return self.lines[r - 1]


def check_prime(p: int):
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5:
        raise PTooSmall(f"p = {p} < 5 is not supported")


def line_classes(p: int) -> list[tuple[int, tuple[int, ...]]]:
    n = p - 1
    out = []
    for r in range(1, (p + 1) // 2 + 1):
        cls = sorted({r % n, (2 - r) % n})
        out.append((r, tuple(cls)))
    return out


def local_coordinate(spec: FieldSpec, r: int, j: int) -> RatFunc:
    """The coordinate of line r pulled back to the affine line of id^j, in t = t_(id^j)."""
    p = spec.p
    t = RatFunc.var(spec)
    one = RatFunc.const(spec, 1)
    if r == 1:
        return t / (t * t + one)
    if r == (p + 1) // 2:
        return t + one / t
    return t if j == r % (p - 1) else one / t


def _value_at_origin(f: RatFunc) -> str:
    """'O' if f(0) = 0, 'inf' if f has a pole at 0."""
    if f.den(0) == 0:
        return "inf"
    if f.num(0) == 0:
        return "O"
    return "other"


def build_quotient_graph(p: int) -> GluingGraph:
    check_prime(p)
    spec = make_field(p)
    n = p - 1
    lines = []
    where: dict[int, tuple[int, str]] = {}
    for r, chars in line_classes(p):
        node = LineNode(r, chars, "singleton" if len(chars) == 1 else "pair")
        for j in chars:
            pt = _value_at_origin(local_coordinate(spec, r, j))
            node.marked.setdefault(pt, []).append(j)
            where[j] = (r, pt)
        lines.append(node)
    # singular points s_j of Xi glue the origins of id^j and id^-j
    edges = []
    for j in range(1, (p - 3) // 2 + 1):
        a, b = where[j], where[(-j) % n]
        edges.append((a[0], a[1], b[0], b[1]))
    comps = _components([r for r, _ in line_classes(p)], edges)
    chain = {min(c): _is_path(c, edges) for c in comps}
    return GluingGraph(p, spec.generator, lines, edges, comps, chain)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _components(nodes, edges) -> list[list[int]]:
    uf = _UnionFind(nodes)
    for r1, _, r2, _ in edges:
        uf.union(r1, r2)
    groups: dict[int, list[int]] = {}
    for x in nodes:
        groups.setdefault(uf.find(x), []).append(x)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _is_path(comp: list[int], edges) -> bool:
    members = set(comp)
    inner = [e for e in edges if e[0] in members]
    deg = {r: 0 for r in comp}
    for r1, _, r2, _ in inner:
        deg[r1] += 1
        deg[r2] += 1
    return len(inner) == len(comp) - 1 and max(deg.values()) <= 2 and len(_components(comp, inner)) == 1


@dataclass
class GraphCheck:
    name: str
    passed: bool
    detail: str = ""


def graph_invariants(graph: GluingGraph) -> list[GraphCheck]:
    p = graph.p
    out = []
    out.append(GraphCheck("line count (p+1)/2", len(graph.lines) == (p + 1) // 2, f"{len(graph.lines)} lines"))
    singles = [ln.r for ln in graph.lines if ln.kind == "singleton"]
    out.append(GraphCheck("singleton lines are r = 1 and r = (p+1)/2", singles == [1, (p + 1) // 2], f"{singles}"))
    out.append(GraphCheck("edge count (p-3)/2", len(graph.glue_edges) == (p - 3) // 2, f"{len(graph.glue_edges)} edges"))
    used: dict[tuple[int, str], int] = {}
    for r1, a, r2, b in graph.glue_edges:
        used[(r1, a)] = used.get((r1, a), 0) + 1
        used[(r2, b)] = used.get((r2, b), 0) + 1
    out.append(GraphCheck("each marked point glued at most once", all(v <= 1 for v in used.values()), ""))
    expected_edges = [(r, "O", r + 2, "inf") for r in range(1, (p - 3) // 2 + 1)]
    out.append(GraphCheck("edges are (O_r, inf_(r+2))", graph.glue_edges == expected_edges, f"{graph.glue_edges}"))
    out.append(GraphCheck("every component is a chain", all(graph.chain.values()), f"{graph.chain}"))
    return out


def connected_components_check(graph: GluingGraph) -> list[GraphCheck]:
    p = graph.p
    top = (p + 1) // 2
    odd = [r for r in range(1, top + 1) if r % 2 == 1]
    even = [r for r in range(1, top + 1) if r % 2 == 0]
    out = [
        GraphCheck("exactly two connected components", len(graph.components) == 2, f"{graph.components}"),
        GraphCheck("components are the odd and even lines", graph.components == [odd, even], f"{graph.components}"),
    ]
    holder = odd if p % 4 == 1 else even
    out.append(GraphCheck(
        f"line {top} closes the {'odd' if p % 4 == 1 else 'even'} chain (p = {p % 4} mod 4)",
        top in holder and (holder in graph.components),
        "",
    ))
    out.append(GraphCheck("components cover all lines", sum(map(len, graph.components)) == top, ""))
    return out


def xi_model(p: int) -> dict:
    """Inventory of the spectrum of the centre and its normalisation."""
    check_prime(p)
    spec = make_field(p)
    from .centre import component_keys, is_pair

    keys = component_keys(spec)
    lines = [k for k in keys if not is_pair(spec, k)]
    crossings = [k for k in keys if is_pair(spec, k)]
    return {
        "p": p,
        "g": spec.generator,
        "affine_lines": len(lines),
        "crossing_pairs": len(crossings),
        "normalisation_lines": p - 1,
        "singular_points": len(crossings),
        "zeta_locus_points": len(lines) + len(crossings),
        "t_locus_points": p - 1,
        "classes": len({class_of(spec, Character(j)) for j in range(p - 1)}),
    }
