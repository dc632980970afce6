"""Quotient singularities on the zero-section curve and the blow-down test.

The surface over the cusp point is modelled by the total space of the dual
Hodge bundle over X(L) (L the reference level, 4 when N = 2) divided by the
image G of the congruence subgroup in SL_2(Z/L).  G fixes points only on the
zero section Z.  At such a point the stabilizer acts diagonally on a chart
(x along Z, t along the fiber), so every local group here is a finite
diagonal abelian group, stored as a set of exponent pairs (u, v) in
(Q/Z)^2 acting by (x, t) -> (e(u) x, e(v) t).

Pipeline for one subgroup:

1. local actions at elliptic points and at cusps;
2. removal of quasi-reflections, leaving a cyclic 1/m(1, q) singularity;
3. Hirzebruch-Jung chain of m/q and the correction -q/m to the
   self-intersection of the proper transform of Z';
4. the intersection graph, iterated contraction of (-1)-curves, and |det|.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .arith import complete_column, mat_mul, sl2_order
from .congruence import (
    Kind,
    SubgroupSpec,
    _contains,
    curve_invariants,
    cusps,
    index_sl2,
    minus_identity_in,
)

# ---------------------------------------------------------------- local actions


@dataclass(frozen=True)
class CyclicActionWeights:
    """The action (x, t) -> (z^w1 x, z^w2 t) with z a primitive m-th root of unity."""

    order: int
    w1: int
    w2: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "w1", self.w1 % self.order)
        object.__setattr__(self, "w2", self.w2 % self.order)

    @property
    def weights(self):
        return (self.w1, self.w2)

    def as_element(self):
        return (Fraction(self.w1, self.order), Fraction(self.w2, self.order))

    @classmethod
    def from_element(cls, u, v):
        m = lcm(u.denominator, v.denominator)
        return cls(m, int(u * m), int(v * m))


def _frac1(x):
    return x - (x.numerator // x.denominator)


def _add(g, h):
    return (_frac1(g[0] + h[0]), _frac1(g[1] + h[1]))


def generate_group(elements):
    """Closure of a set of exponent pairs under addition mod 1."""
    zero = (Fraction(0), Fraction(0))
    group = {zero}
    frontier = [zero]
    gens = [(_frac1(u), _frac1(v)) for u, v in elements]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _add(g, s)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


def _element_order(g):
    return lcm(g[0].denominator, g[1].denominator)


def minimal_generators(group):
    """A short generating list, largest orders first, as CyclicActionWeights."""
    elems = sorted((g for g in group if _element_order(g) > 1),
                   key=lambda g: (-_element_order(g), g))
    gens = []
    span = generate_group([])
    for g in elems:
        if g not in span:
            gens.append(g)
            span = generate_group(gens)
        if len(span) == len(group):
            break
    return tuple(CyclicActionWeights.from_element(*g) for g in gens)


def interior_fixed_point_weights(order: int) -> CyclicActionWeights:
    """Tangent action at a fixed point off the cusps, for a stabilizer of the given order.

    A generator acts by (x, t) -> (x / l^2, t / l) with l a primitive
    ``order``-th root of unity, giving weights (-2, -1) mod order.  Order 4 is
    an elliptic point of type i, order 6 of type rho, order 3 a type-rho point
    of a subgroup not containing -I.
    """
    if order not in (3, 4, 6):
        raise ValueError(f"no elliptic stabilizer of order {order} in SL_2(Z)")
    return CyclicActionWeights(order, -2, -1)


@dataclass(frozen=True)
class CuspAction:
    """Stabilizer action on the (q, s) chart at a cusp of Z."""

    generators: tuple

    @property
    def fixes_fiber(self):
        """True when every element acts as (q, s) -> (z q, s)."""
        return all(g.w2 == 0 for g in self.generators)

    @property
    def group(self):
        return generate_group(g.as_element() for g in self.generators)


def cusp_stabilizer_elements(spec: SubgroupSpec, k: int, m: int):
    """Exponent pairs of the stabilizer in G of the cusp k/m (chart of M with M(oo) = k/m).

    An element A with M^-1 A M = eps * T^j acts by (q, s) -> (zeta^j q, eps s),
    zeta = exp(2 pi i / L).
    """
    L = spec.reference_level
    N = spec.level
    M = tuple(x % L for x in complete_column(k, m))
    Minv = (M[3], -M[1] % L, -M[2] % L, M[0])
    out = []
    for j in range(L):
        for eps in (1, -1):
            B = (eps % L, (eps * j) % L, 0, eps % L)
            A = mat_mul(mat_mul(M, B, L), Minv, L)
            if _contains(spec.kind, N, tuple(x % N for x in A)):
                out.append((Fraction(j, L), Fraction(0 if eps == 1 else 1, 2)))
    return frozenset(out)


def cusp_fixed_point_weights(spec: SubgroupSpec, cusp) -> CuspAction:
    group = cusp_stabilizer_elements(spec, cusp.numerator, cusp.denominator)
    return CuspAction(minimal_generators(generate_group(group)))


def invariant_generators(*actions):
    """Minimal generators of the invariant monomials of a diagonal group.

    Monomials are exponent pairs (a, b) for x^a t^b, sorted by total degree
    and then by decreasing power of x.
    """
    group = generate_group(a.as_element() for a in actions)
    bound = len(group)

    def invariant(a, b):
        return all(_frac1(a * u + b * v) == 0 for u, v in group)

    inv = [(a, b) for a in range(bound + 1) for b in range(bound + 1 - a)
           if (a, b) != (0, 0) and invariant(a, b)]
    inv_set = set(inv)
    gens = []
    for a, b in inv:
        reducible = any(
            (c, d) in inv_set and (a - c, b - d) in inv_set
            for c in range(a + 1) for d in range(b + 1)
            if (c, d) not in ((0, 0), (a, b))
        )
        if not reducible:
            gens.append((a, b))
    return sorted(gens, key=lambda e: (e[0] + e[1], -e[0]))


def format_monomial(exps, names=("x", "t")):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) or "1"


# ---------------------------------------------------------------- resolution


def hirzebruch_jung(m: int, q: int) -> list[int]:
    """[a1, ..., ar] with m/q = a1 - 1/(a2 - 1/(... - 1/ar)), every ai >= 2."""
    if not (0 < q < m and gcd(m, q) == 1):
        raise ValueError(f"need 0 < q < m coprime, got m={m}, q={q}")
    chain = []
    while q:
        a = -(-m // q)
        chain.append(a)
        m, q = q, a * q - m
    return chain


def continued_fraction_value(chain) -> Fraction:
    value = Fraction(chain[-1])
    for a in reversed(chain[:-1]):
        value = a - 1 / value
    return value


@dataclass(frozen=True)
class SingularityRecord:
    """A fixed point on Z and the singularity it leaves in the quotient.

    ``(m, q)`` is the type 1/m(1, q) after removing quasi-reflections, with x
    (the direction along Z) carrying weight 1.  The image of Z meets the first
    curve of ``hj_chain``.
    """

    location: str
    m: int
    q: int
    hj_chain: tuple
    correction: Fraction

    @property
    def smooth(self):
        return self.m == 1

    @property
    def type_label(self):
        return "smooth" if self.m == 1 else f"1/{self.m}(1,{self.q})"


def remove_quasi_reflections(group):
    """Quotient a diagonal group by its reflections; return the residual group.

    Reflections fixing the x-axis (acting on t only) are removed by t -> t^b,
    those fixing the t-axis by x -> x^a, repeated until none remain.
    """
    group = frozenset((_frac1(u), _frac1(v)) for u, v in group)
    while True:
        on_t = [g for g in group if g[0] == 0 and g[1] != 0]
        on_x = [g for g in group if g[1] == 0 and g[0] != 0]
        if not on_t and not on_x:
            return group
        a = len(on_x) + 1
        b = len(on_t) + 1
        group = frozenset((_frac1(a * u), _frac1(b * v)) for u, v in group)


def resolve_cyclic_quotient(*actions, location="") -> SingularityRecord:
    """Singularity type, HJ chain and Z-correction for a diagonal local group."""
    group = generate_group(a.as_element() for a in actions)
    residual = remove_quasi_reflections(group)
    m = len(residual)
    if m == 1:
        return SingularityRecord(location, 1, 0, (), Fraction(0))
    gen = next(g for g in residual if g[0] == Fraction(1, m))
    q = int(gen[1] * m)
    chain = hirzebruch_jung(m, q)
    return SingularityRecord(location, m, q, tuple(-a for a in chain), Fraction(-q, m))


# ---------------------------------------------------------------- self-intersections


def z_self_intersection(N: int) -> Fraction:
    """Self-intersection of the zero section of the dual Hodge bundle on X(N)."""
    if N < 3:
        raise ValueError("the line-bundle model needs N >= 3")
    return Fraction(-sl2_order(N), 24)


def zprime_self_intersection(spec: SubgroupSpec) -> Fraction:
    """(Z')^2 = e^2 Z^2 / deg(pi), with e = 2 iff -I acts (as a reflection along Z)."""
    L = spec.reference_level
    deg_pi = sl2_order(L) // index_sl2(spec)
    e = 2 if minus_identity_in(spec) else 1
    return e * e * z_self_intersection(L) / deg_pi


# ---------------------------------------------------------------- graphs


@dataclass(frozen=True)
class ResolutionGraph:
    """Curves with self-intersections and pairwise intersection numbers."""

    vertices: tuple  # ((name, self_intersection), ...) in display order
    edges: tuple  # ((name_a, name_b, multiplicity), ...)

    @property
    def names(self):
        return [n for n, _ in self.vertices]

    def self_intersection(self, name):
        return dict(self.vertices)[name]

    def matrix(self):
        names = self.names
        pos = {n: i for i, n in enumerate(names)}
        mat = [[Fraction(0)] * len(names) for _ in names]
        for n, w in self.vertices:
            mat[pos[n]][pos[n]] = Fraction(w)
        for a, b, k in self.edges:
            mat[pos[a]][pos[b]] += k
            mat[pos[b]][pos[a]] += k
        return mat

    def integer_matrix(self):
        mat = self.matrix()
        for row in mat:
            for x in row:
                if x.denominator != 1:
                    raise ValueError("intersection matrix is not integral")
        return [[int(x) for x in row] for row in mat]

    def det(self) -> Fraction:
        return determinant(self.matrix())


def determinant(mat) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def singular_points(spec: SubgroupSpec):
    """Every point of Z' with a nontrivial local group, as (location, generators)."""
    inv = curve_invariants(spec)
    minus_in = minus_identity_in(spec)
    points = []
    for _ in range(inv.e2):
        points.append(("elliptic point of order 2", (interior_fixed_point_weights(4),)))
    for _ in range(inv.e3):
        order = 6 if minus_in else 3
        points.append(("elliptic point of order 3", (interior_fixed_point_weights(order),)))
    for c in inv.cusp_classes:
        action = cusp_fixed_point_weights(spec, c)
        if action.generators:
            points.append((f"cusp {c.label}", action.generators))
    return points


def singularities(spec: SubgroupSpec):
    records = []
    for location, gens in singular_points(spec):
        rec = resolve_cyclic_quotient(*gens, location=location)
        if not rec.smooth:
            records.append(rec)
    return records


ZTILDE = "Z~"


def resolution_graph(spec: SubgroupSpec, records=None) -> ResolutionGraph:
    """Proper transform of Z' with one HJ chain hanging off it per singularity."""
    if records is None:
        records = singularities(spec)
    ztilde = zprime_self_intersection(spec) + sum((r.correction for r in records), Fraction(0))
    if ztilde.denominator != 1:
        raise ArithmeticError(f"proper transform of Z' has non-integral square {ztilde} for {spec}")
    vertices = [(ZTILDE, int(ztilde))]
    edges = []
    count = 0
    for r in records:
        prev = ZTILDE
        for a in r.hj_chain:
            count += 1
            name = f"E{count}"
            vertices.append((name, a))
            edges.append((prev, name, 1))
            prev = name
    return ResolutionGraph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class BlowDownResult:
    smooth: bool
    sequence: tuple
    remaining: ResolutionGraph
    det: int


def blow_down(graph: ResolutionGraph) -> BlowDownResult:
    """Contract (-1)-curves (lexicographically first name) until none is left."""
    for name, w in graph.vertices:
        if Fraction(w).denominator != 1:
            raise ValueError(f"self-intersection of {name} is not an integer: {w}")
    det = abs(determinant(graph.matrix()))
    assert det.denominator == 1
    weight = {n: int(w) for n, w in graph.vertices}
    order = [n for n, _ in graph.vertices]
    adj = {n: {} for n in order}
    for a, b, k in graph.edges:
        adj[a][b] = adj[a].get(b, 0) + k
        adj[b][a] = adj[b].get(a, 0) + k
    sequence = []
    while True:
        candidates = sorted(n for n in weight if weight[n] == -1)
        if not candidates:
            break
        v = candidates[0]
        nbrs = adj.pop(v)
        del weight[v]
        for u, k in nbrs.items():
            del adj[u][v]
            weight[u] += k * k
        items = list(nbrs.items())
        for i, (u, ku) in enumerate(items):
            for w, kw in items[i + 1:]:
                adj[u][w] = adj[u].get(w, 0) + ku * kw
                adj[w][u] = adj[w].get(u, 0) + ku * kw
        sequence.append(v)
    rest = [n for n in order if n in weight]
    edges = []
    for i, a in enumerate(rest):
        for b in rest[i + 1:]:
            if adj[a].get(b):
                edges.append((a, b, adj[a][b]))
    remaining = ResolutionGraph(tuple((n, weight[n]) for n in rest), tuple(edges))
    return BlowDownResult(not rest, tuple(sequence), remaining, int(det))


# ---------------------------------------------------------------- verdict

# Singularity types whose Z-correction was checked against worked examples.
VALIDATED_TYPES = {(2, 1), (3, 1), (3, 2)}


@dataclass(frozen=True)
class SmoothnessReport:
    spec: SubgroupSpec
    genus: int
    z_sq: Fraction
    zprime_sq: Fraction
    ztilde_sq: Fraction
    singularities: tuple
    graph: ResolutionGraph
    det: int
    contraction_sequence: tuple
    obstruction: str
    smooth_at_Q: bool
    notes: tuple = field(default=())


def smoothness_verdict(spec: SubgroupSpec) -> SmoothnessReport:
    """Is the surface smooth over the cusp point?

    It is iff Z' is rational and Z' together with the exceptional curves over
    its singular points contracts to a smooth point.
    """
    g = curve_invariants(spec).genus
    records = tuple(singularities(spec))
    graph = resolution_graph(spec, records)
    result = blow_down(graph)
    notes = []
    if spec.kind is Kind.POINT and spec.level == 2:
        notes.append("direct check: the 2-torsion locus y = 0 on the Weierstrass family is smooth")
    if any((r.m, r.q) not in VALIDATED_TYPES for r in records):
        notes.append("contains a singularity type outside the validated -q/m corrections")
    if g > 0:
        obstruction = f"Z' has genus {g}"
        smooth = False
    elif result.smooth:
        obstruction = ""
        smooth = True
    else:
        stuck = ", ".join(f"{n}({w})" for n, w in result.remaining.vertices)
        obstruction = f"no (-1)-curve among {stuck}; |det| = {result.det}"
        smooth = False
    if smooth:
        assert result.det == 1
    return SmoothnessReport(
        spec=spec,
        genus=g,
        z_sq=z_self_intersection(spec.reference_level),
        zprime_sq=zprime_self_intersection(spec),
        ztilde_sq=Fraction(graph.vertices[0][1]),
        singularities=records,
        graph=graph,
        det=result.det,
        contraction_sequence=result.sequence,
        obstruction=obstruction,
        smooth_at_Q=smooth,
        notes=tuple(notes),
    )
