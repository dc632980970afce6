"""Monodromy of the trefoil complement on level-N structures.

The knot group is the braid group B_3 = <x, y | x^3 = y^2>, mapped to
SL_2(Z) by x -> [[0,-1],[1,1]], y -> [[0,-1],[1,0]] and then reduced mod N.
Row vectors in (Z/N)^2 carry the right action.  Around the knot, the
meridian is y x^-1 (acting as [[1,0],[1,1]]) and the chosen longitude is y^2
(acting as -I).
"""
import re
from collections import deque
from dataclasses import dataclass
from math import gcd

from .arith import ModMatrix2, S_MATRIX, sl2_enumerate, xgcd
from .config import check_bound
from .congruence import (
    Kind,
    SubgroupSpec,
    canonical_line,
    contains,
    coset_table,
    cusp_index_of_coset,
    cusps,
)

X_IMAGE = (0, -1, 1, 1)
Y_IMAGE = (0, -1, 1, 0)

_TOKEN = re.compile(r"([xy])(?:\^?(-?\d+))?")


@dataclass(frozen=True)
class BraidWord:
    """A word in x, y and their inverses, as ``((letter, exponent), ...)``."""

    letters: tuple

    @classmethod
    def parse(cls, text):
        """Parse words such as ``"x3"``, ``"y x^-1"`` or ``"yX"`` (capital = inverse)."""
        letters = []
        compact = text.replace(" ", "")
        pos = 0
        while pos < len(compact):
            ch = compact[pos]
            if ch in "XY":
                letters.append((ch.lower(), -1))
                pos += 1
                continue
            match = _TOKEN.match(compact, pos)
            if not match:
                raise ValueError(f"cannot parse braid word {text!r} at {compact[pos:]!r}")
            power = int(match.group(2)) if match.group(2) else 1
            letters.extend([(match.group(1), 1 if power > 0 else -1)] * abs(power))
            pos = match.end()
        return cls(tuple(letters))

    def inverse(self):
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __str__(self):
        return "".join(g if e == 1 else g.upper() for g, e in self.letters) or "1"


MERIDIAN = BraidWord.parse("yX")
LONGITUDE = BraidWord.parse("y2")


def braid_to_sl2(word: BraidWord, N: int) -> ModMatrix2:
    if N < 2:
        raise ValueError("level must be at least 2")
    x = ModMatrix2(N, *X_IMAGE)
    y = ModMatrix2(N, *Y_IMAGE)
    images = {("x", 1): x, ("x", -1): x.inverse(), ("y", 1): y, ("y", -1): y.inverse()}
    result = ModMatrix2.identity(N)
    for letter in word.letters:
        result = result @ images[letter]
    return result


# ---------------------------------------------------------------- fiber sets


def act(kind: Kind, N: int, element, m):
    """Right action of the matrix entries ``m`` on a fiber element."""
    a, b, c, d = m
    if kind is Kind.FULL:
        p1, p2, q1, q2 = element
        return ((p1 * a + p2 * c) % N, (p1 * b + p2 * d) % N,
                (q1 * a + q2 * c) % N, (q1 * b + q2 * d) % N)
    u, v = element
    image = ((u * a + v * c) % N, (u * b + v * d) % N)
    if kind is Kind.CYCLIC:
        return canonical_line(*image, N)
    return image


@dataclass(frozen=True)
class FiberSet:
    """Level-N structures on one smooth fiber.

    Elements: vectors of exact order N (POINT), cyclic subgroups of order N
    given by a normalized generator (CYCLIC), or pairs (p, q) with pairing
    p ^ q = 1 stored as (p1, p2, q1, q2) (FULL).
    """

    kind: Kind
    level: int
    elements: frozenset
    basepoint: tuple

    def __len__(self):
        return len(self.elements)

    @property
    def spec(self):
        return SubgroupSpec(self.kind, self.level)

    def act(self, element, m: ModMatrix2):
        return act(self.kind, self.level, element, m.entries)


def _primitive_vectors(N):
    return [(a, b) for a in range(N) for b in range(N) if gcd(gcd(a, b), N) == 1]


def _symplectic_partner(a, b, N):
    """Some q with a*q2 - b*q1 = 1 mod N, for (a, b) of exact order N."""
    B = b if b else N
    A = a
    while gcd(A, B) != 1:
        A += N
    _, s, t = xgcd(A, B)
    # A*s + B*t = 1  =>  q = (-t, s)
    return (-t % N, s % N)


def fiber_set(kind, N: int) -> FiberSet:
    kind = Kind(kind)
    if N < 2:
        raise ValueError("level must be at least 2")
    check_bound(N)
    prim = _primitive_vectors(N)
    if kind is Kind.POINT:
        return FiberSet(kind, N, frozenset(prim), (0, 1 % N))
    if kind is Kind.CYCLIC:
        return FiberSet(kind, N, frozenset(canonical_line(a, b, N) for a, b in prim),
                        canonical_line(0, 1, N))
    pairs = set()
    for a, b in prim:
        q1, q2 = _symplectic_partner(a, b, N)
        for k in range(N):
            pairs.add((a, b, (q1 + k * a) % N, (q2 + k * b) % N))
    return FiberSet(kind, N, frozenset(pairs), (1 % N, 0, 0, 1 % N))


def pairing(p, q, N):
    return (p[0] * q[1] - p[1] * q[0]) % N


# ---------------------------------------------------------------- orbits


@dataclass(frozen=True)
class OrbitCertificate:
    transitive: bool
    orbit_size: int
    fiber_size: int
    stabilizer_order: int
    stabilizer_is_subgroup: bool


def _orbit(fs, start, gens):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g in gens:
            w = act(fs.kind, fs.level, v, g)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def monodromy_orbits(fs: FiberSet) -> OrbitCertificate:
    """Check that the images of x and y act transitively, and that the
    stabilizer of the basepoint is exactly the congruence subgroup image."""
    N = fs.level
    gens = [tuple(v % N for v in X_IMAGE), tuple(v % N for v in Y_IMAGE)]
    orbit = _orbit(fs, fs.basepoint, gens)
    spec = fs.spec
    stab = 0
    agree = True
    for g in sl2_enumerate(N):
        fixes = act(fs.kind, N, fs.basepoint, g.entries) == fs.basepoint
        stab += fixes
        if fixes != contains(spec, g):
            agree = False
    return OrbitCertificate(
        transitive=orbit == set(fs.elements),
        orbit_size=len(orbit),
        fiber_size=len(fs),
        stabilizer_order=stab,
        stabilizer_is_subgroup=agree,
    )


# ---------------------------------------------------------------- cover over K


@dataclass(frozen=True)
class KComponent:
    """One component of the preimage of a neighbourhood of K.

    ``size`` fiber elements, meridian branch order ``b`` and core degree
    ``d`` (so size == b * d).
    """

    cusp: object
    size: int
    b: int
    d: int


@dataclass(frozen=True)
class KComponentReport:
    spec: SubgroupSpec
    fiber_size: int
    components: tuple

    def branching_profile(self):
        """Sorted list of (b, d) pairs."""
        return sorted((c.b, c.d) for c in self.components)


def cover_over_K(kind, N: int) -> KComponentReport:
    fs = fiber_set(kind, N)
    spec = fs.spec
    mu = braid_to_sl2(MERIDIAN, N).entries
    lam = braid_to_sl2(LONGITUDE, N).entries
    table = coset_table(spec)
    cusp_list = cusps(spec)
    s = tuple(v % N for v in S_MATRIX)
    remaining = set(fs.elements)
    found = []
    while remaining:
        start = min(remaining)
        comp = _orbit(fs, start, [mu, lam])
        remaining -= comp
        b = len(_orbit(fs, start, [mu]))
        d, rem = divmod(len(comp), b)
        assert rem == 0 and d in (1, 2), (spec, len(comp), b)
        # the component through the coset of g lies over the cusp g(0) = (g S)(oo)
        key = act(fs.kind, N, start, s)
        cusp_id = cusp_index_of_coset(spec, table.index_of_key(key))
        found.append((cusp_id, KComponent(cusp_list[cusp_id], len(comp), b, d)))
    found.sort(key=lambda item: item[0])
    ids = [i for i, _ in found]
    assert len(set(ids)) == len(ids)
    return KComponentReport(spec, len(fs), tuple(c for _, c in found))


def monodromy_image(word: BraidWord, N: int, kind=Kind.POINT):
    """Permutation of the fiber set induced by a braid word (dict element -> image)."""
    fs = fiber_set(kind, N)
    m = braid_to_sl2(word, N).entries
    return {v: act(fs.kind, N, v, m) for v in fs.elements}

