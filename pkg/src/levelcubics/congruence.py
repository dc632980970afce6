"""Congruence subgroups Gamma(N), Gamma1(N), Gamma0(N) of SL_2(Z).

Every subgroup here contains Gamma(N), so all questions about it are
questions about its image in SL_2(Z/N).  The right cosets ``Gamma g`` are
encoded by a *coset key* computed from ``g mod N``:

* Gamma(N): the whole matrix (a, b, c, d);
* Gamma1(N): the bottom row (c, d), i.e. the image of the row vector (0, 1);
* Gamma0(N): the line spanned by (c, d), normalized over the units mod N.

The same keys double as elements of the level-structure fiber sets (see
:mod:`levelcubics.trefoil`), since right multiplication on cosets is the
right action on row vectors.

Quantities come in two flavours: closed forms (``*_closed_form``) and the
brute-force coset oracle built from the permutation action of S and T.
"""
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import (
    ModMatrix2,
    S_MATRIX,
    T_MATRIX,
    complete_column,
    divisors,
    euler_phi,
    legendre,
    mat_mul,
    prime_divisors,
    units,
)
from .config import check_bound, enumeration_bound


class Kind(Enum):
    FULL = "full"
    POINT = "gamma1"
    CYCLIC = "gamma0"

    @property
    def group_name(self):
        return {Kind.FULL: "Gamma", Kind.POINT: "Gamma1", Kind.CYCLIC: "Gamma0"}[self]


@dataclass(frozen=True)
class SubgroupSpec:
    kind: Kind
    level: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.level, int) or self.level < 2:
            raise ValueError(f"level must be an integer >= 2, got {self.level!r}")

    @classmethod
    def full(cls, N):
        return cls(Kind.FULL, N)

    @classmethod
    def gamma1(cls, N):
        return cls(Kind.POINT, N)

    @classmethod
    def gamma0(cls, N):
        return cls(Kind.CYCLIC, N)

    @property
    def reference_level(self):
        """Level of the line-bundle model the quotient is taken from (4 for N = 2)."""
        return 4 if self.level == 2 else self.level

    def __str__(self):
        return f"{self.kind.group_name}({self.level})"


def contains(spec: SubgroupSpec, m: ModMatrix2) -> bool:
    """Whether ``m`` lies in the image of the subgroup in SL_2(Z/N)."""
    N = spec.level
    if m.N != N:
        raise ValueError(f"matrix modulus {m.N} does not match level {N}")
    return _contains(spec.kind, N, m.entries)


def _contains(kind, N, e):
    a, b, c, d = e
    if kind is Kind.FULL:
        return a % N == 1 % N and b % N == 0 and c % N == 0 and d % N == 1 % N
    if kind is Kind.POINT:
        return c % N == 0 and a % N == 1 % N and d % N == 1 % N
    return c % N == 0


def minus_identity_in(spec: SubgroupSpec) -> bool:
    return contains(spec, -ModMatrix2.identity(spec.level))


# ---------------------------------------------------------------- indices

def _prod_fraction(terms):
    result = Fraction(1)
    for t in terms:
        result *= t
    return result


def index_sl2(spec: SubgroupSpec) -> int:
    """[SL_2(Z) : subgroup], by closed form."""
    N = spec.level
    ps = prime_divisors(N)
    if spec.kind is Kind.FULL:
        value = N**3 * _prod_fraction(1 - Fraction(1, p * p) for p in ps)
    elif spec.kind is Kind.POINT:
        value = N**2 * _prod_fraction(1 - Fraction(1, p * p) for p in ps)
    else:
        value = N * _prod_fraction(1 + Fraction(1, p) for p in ps)
    assert value.denominator == 1
    return int(value)


def index_psl2(spec: SubgroupSpec) -> int:
    """Index of the image in PSL_2(Z): halved unless -I is in the subgroup."""
    idx = index_sl2(spec)
    return idx if minus_identity_in(spec) else idx // 2


def deg_lambda(spec: SubgroupSpec) -> Fraction:
    """Degree of the Hodge bundle: one twelfth of the degree over the j-line."""
    return Fraction(index_psl2(spec), 12)


# ---------------------------------------------------------------- coset tables

def coset_key(kind: Kind, N: int, e):
    """Key of the right coset of ``e = (a, b, c, d)`` (entries already mod N)."""
    if kind is Kind.FULL:
        return e
    if kind is Kind.POINT:
        return (e[2], e[3])
    return canonical_line(e[2], e[3], N)


def canonical_line(c, d, N):
    """Lexicographically least unit multiple of the primitive vector (c, d) mod N."""
    return min(((u * c) % N, (u * d) % N) for u in _units(N))


@lru_cache(maxsize=None)
def _units(N):
    return tuple(units(N))


@dataclass(frozen=True)
class CosetTable:
    """Right cosets of the subgroup with the permutation action of S and T.

    ``perm_s[i] == j`` means ``coset_i * S == coset_j``.  ``perm_neg`` is the
    action of -I, which is trivial exactly when -I lies in the subgroup.
    """

    spec: SubgroupSpec
    cosets: tuple
    keys: tuple
    perm_s: tuple
    perm_t: tuple
    perm_neg: tuple
    basepoint: int = 0
    index: dict = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.cosets)

    def index_of(self, m: ModMatrix2) -> int:
        """Index of the coset containing ``m``."""
        return self.index[coset_key(self.spec.kind, self.spec.level, m.entries)]

    def index_of_key(self, key) -> int:
        return self.index[key]


def coset_table(spec: SubgroupSpec) -> CosetTable:
    check_bound(spec.level)
    return _coset_table(spec)


@lru_cache(maxsize=None)
def _coset_table(spec):
    kind, N = spec.kind, spec.level
    s = tuple(x % N for x in S_MATRIX)
    t = tuple(x % N for x in T_MATRIX)
    ident = (1 % N, 0, 0, 1 % N)
    reps = [ident]
    keys = [coset_key(kind, N, ident)]
    index = {keys[0]: 0}
    perm_s, perm_t = [None], [None]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for gen, perm in ((s, perm_s), (t, perm_t)):
            h = mat_mul(reps[i], gen, N)
            key = coset_key(kind, N, h)
            j = index.get(key)
            if j is None:
                j = len(reps)
                index[key] = j
                reps.append(h)
                keys.append(key)
                perm_s.append(None)
                perm_t.append(None)
                queue.append(j)
            perm[i] = j
    neg = []
    for r in reps:
        neg.append(index[coset_key(kind, N, tuple((-x) % N for x in r))])
    return CosetTable(
        spec=spec,
        cosets=tuple(ModMatrix2(N, *r) for r in reps),
        keys=tuple(keys),
        perm_s=tuple(perm_s),
        perm_t=tuple(perm_t),
        perm_neg=tuple(neg),
        index=index,
    )


# ---------------------------------------------------------------- PSL_2 action

@dataclass(frozen=True)
class _PSLAction:
    size: int
    cls: tuple  # SL coset index -> PSL class index
    s: tuple
    st: tuple
    t: tuple


@lru_cache(maxsize=None)
def _psl_action(spec):
    table = _coset_table(spec)
    n = len(table)
    cls = [-1] * n
    count = 0
    for i in range(n):
        if cls[i] < 0:
            cls[i] = cls[table.perm_neg[i]] = count
            count += 1
    s = [0] * count
    st = [0] * count
    t = [0] * count
    for i in range(n):
        c = cls[i]
        s[c] = cls[table.perm_s[i]]
        t[c] = cls[table.perm_t[i]]
        st[c] = cls[table.perm_t[table.perm_s[i]]]
    return _PSLAction(count, tuple(cls), tuple(s), tuple(st), tuple(t))


def _cycles(perm):
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = perm[j]
            cycles.append(cyc)
    return cycles


# ---------------------------------------------------------------- cusps

@dataclass(frozen=True)
class CuspClass:
    """A cusp k/m (``m == 0`` for infinity, stored as 1/0).

    ``width`` is the PSL_2 width: the least h > 0 with M T^h M^-1 in the
    subgroup up to sign, M any matrix sending infinity to k/m.  For an
    irregular cusp (-I not in the subgroup and -M T^h M^-1 in it) the width
    is that h.
    """

    numerator: int
    denominator: int
    width: int
    regular: bool = True

    @property
    def label(self):
        return f"{self.numerator}/{self.denominator}"

    def matrix(self):
        """Integer matrix (a, b, c, d) with first column (k, m)."""
        return complete_column(self.numerator, self.denominator)


@dataclass(frozen=True)
class _CuspData:
    classes: tuple
    of_coset: tuple  # SL coset index -> cusp index


def cusps(spec: SubgroupSpec) -> tuple:
    """Cusp classes in canonical order (lexicographically least (m, k) representative)."""
    check_bound(spec.level)
    return _cusp_data(spec).classes


def cusp_index_of_coset(spec: SubgroupSpec, i: int) -> int:
    check_bound(spec.level)
    return _cusp_data(spec).of_coset[i]


def cusp_index(spec: SubgroupSpec, k: int, m: int) -> int:
    """Index (into :func:`cusps`) of the class containing the cusp k/m."""
    check_bound(spec.level)
    table = _coset_table(spec)
    N = spec.level
    e = tuple(x % N for x in complete_column(k, m))
    return _cusp_data(spec).of_coset[table.index[coset_key(spec.kind, N, e)]]


@lru_cache(maxsize=None)
def _cusp_data(spec):
    table = _coset_table(spec)
    N = spec.level
    n = len(table)
    # orbits of <T, -I> on SL cosets
    orbit = [-1] * n
    orbit_size = []
    regular = []
    for i in range(n):
        if orbit[i] >= 0:
            continue
        oid = len(orbit_size)
        members = _walk(table.perm_t, i, orbit, oid)
        neg = table.perm_neg[i]
        irregular = neg != i and orbit[neg] == oid
        if neg != i and not irregular:
            members += _walk(table.perm_t, neg, orbit, oid)
        orbit_size.append(len(members))
        regular.append(not irregular)
    minus_in = all(table.perm_neg[i] == i for i in range(n))
    widths = [size if minus_in else size // 2 for size in orbit_size]

    # canonical representatives: lexicographically least (m, k)
    count = len(widths)
    rep = [None] * count
    found = 0
    m = 0
    while found < count:
        ks = [1] if m == 0 else [k for k in range(N * m) if gcd(k, m) == 1]
        for k in ks:
            e = tuple(x % N for x in complete_column(k, m))
            oid = orbit[table.index[coset_key(spec.kind, N, e)]]
            if rep[oid] is None:
                rep[oid] = (k, m)
                found += 1
        m += 1
    order = sorted(range(count), key=lambda o: (rep[o][1], rep[o][0]))
    renumber = {old: new for new, old in enumerate(order)}
    classes = tuple(
        CuspClass(rep[o][0], rep[o][1], widths[o], regular[o]) for o in order
    )
    return _CuspData(classes, tuple(renumber[orbit[i]] for i in range(n)))


def _walk(perm, start, orbit, oid):
    members = []
    j = start
    while orbit[j] < 0:
        orbit[j] = oid
        members.append(j)
        j = perm[j]
    return members


def cusp_count_closed_form(spec: SubgroupSpec) -> int:
    """Number of cusps from the standard formulas.

    Only the Gamma0 formula is treated as a primary closed form; the Gamma and
    Gamma1 formulas are textbook values kept as cross-checks of the oracle.
    """
    N = spec.level
    if spec.kind is Kind.CYCLIC:
        return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))
    if spec.kind is Kind.FULL:
        return 3 if N == 2 else index_psl2(spec) // N
    if N <= 4:
        return {2: 2, 3: 2, 4: 3}[N]
    return sum(euler_phi(d) * euler_phi(N // d) for d in divisors(N)) // 2


# ---------------------------------------------------------------- elliptic points

def elliptic_counts_closed_form(spec: SubgroupSpec) -> tuple[int, int]:
    """(e2, e3): numbers of elliptic points of order 2 and 3."""
    N = spec.level
    if spec.kind is Kind.FULL:
        return (0, 0)
    if spec.kind is Kind.POINT:
        return {2: (1, 0), 3: (0, 1)}.get(N, (0, 0))
    ps = prime_divisors(N)
    e2 = 0 if N % 4 == 0 else _prod_int(1 + _kronecker_minus4(p) for p in ps)
    e3 = 0 if N % 9 == 0 else _prod_int(1 + _kronecker_minus3(p) for p in ps)
    return (e2, e3)


def _prod_int(terms):
    result = 1
    for t in terms:
        result *= t
    return result


def _kronecker_minus4(p):
    return 0 if p == 2 else legendre(-1, p)


def _kronecker_minus3(p):
    if p == 2:
        return -1
    return 0 if p == 3 else legendre(-3, p)


def elliptic_counts_oracle(spec: SubgroupSpec) -> tuple[int, int]:
    """(e2, e3) as fixed points of S and ST on the PSL_2 cosets."""
    check_bound(spec.level)
    act = _psl_action(spec)
    e2 = sum(1 for i in range(act.size) if act.s[i] == i)
    e3 = sum(1 for i in range(act.size) if act.st[i] == i)
    return (e2, e3)


def elliptic_cosets(spec: SubgroupSpec, order: int) -> list[int]:
    """SL coset indices, one per elliptic point of the given order (2 or 3).

    The representative g of each returned coset satisfies g X g^-1 in the
    subgroup up to sign, where X = S (order 2) or ST (order 3).
    """
    check_bound(spec.level)
    act = _psl_action(spec)
    perm = {2: act.s, 3: act.st}[order]
    fixed = {c for c in range(act.size) if perm[c] == c}
    out = []
    for i, c in enumerate(act.cls):
        if c in fixed:
            out.append(i)
            fixed.discard(c)
    return out


def _auto_oracle(spec, method):
    if method not in ("auto", "oracle", "closed"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        return spec.level <= enumeration_bound()
    return method == "oracle"


def elliptic_counts(spec: SubgroupSpec, method="auto") -> tuple[int, int]:
    if _auto_oracle(spec, method):
        return elliptic_counts_oracle(spec)
    return elliptic_counts_closed_form(spec)


# ---------------------------------------------------------------- genus

def _genus_formula(mu, e2, e3, c):
    g = 1 + Fraction(mu, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(c, 2)
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"genus formula gave {g} for mu={mu}, e2={e2}, e3={e3}, c={c}")
    return int(g)


def genus_closed_form(spec: SubgroupSpec) -> int:
    e2, e3 = elliptic_counts_closed_form(spec)
    return _genus_formula(index_psl2(spec), e2, e3, cusp_count_closed_form(spec))


def genus_oracle(spec: SubgroupSpec) -> int:
    """Riemann-Hurwitz over the j-line from the cycle types of S, ST and T."""
    check_bound(spec.level)
    act = _psl_action(spec)
    mu = act.size
    ramification = sum(mu - len(_cycles(p)) for p in (act.s, act.st, act.t))
    two_g_minus_2 = -2 * mu + ramification
    assert two_g_minus_2 % 2 == 0
    return two_g_minus_2 // 2 + 1


def genus(spec: SubgroupSpec, method="auto") -> int:
    if _auto_oracle(spec, method):
        return genus_oracle(spec)
    return genus_closed_form(spec)


# ---------------------------------------------------------------- summary

@dataclass(frozen=True)
class CurveInvariants:
    spec: SubgroupSpec
    index_sl2: int
    index_psl2: int
    cusp_classes: tuple
    e2: int
    e3: int
    genus: int

    @property
    def cusp_count(self):
        return len(self.cusp_classes)

    @property
    def irregular_cusps(self):
        return tuple(c for c in self.cusp_classes if not c.regular)


def curve_invariants(spec: SubgroupSpec) -> CurveInvariants:
    e2, e3 = elliptic_counts_oracle(spec)
    cs = cusps(spec)
    inv = CurveInvariants(
        spec=spec,
        index_sl2=index_sl2(spec),
        index_psl2=index_psl2(spec),
        cusp_classes=cs,
        e2=e2,
        e3=e3,
        genus=_genus_formula(index_psl2(spec), e2, e3, len(cs)),
    )
    return inv
