"""Exact integer, rational and 2x2 modular-matrix arithmetic.

Everything downstream works with Python integers and
:class:`fractions.Fraction`; nothing in the package touches floating point.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .config import check_bound

Rational = Fraction


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ``[(p, e), ...]`` with increasing p."""
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"factorize expects a positive integer, got {n!r}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p in prime_divisors(n):
        result = result // p * (p - 1)
    return result


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime modulus, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if gcd(u, n) == 1] if n > 1 else [0]


def sl2_order(n: int) -> int:
    """|SL_2(Z/n)| = n^3 prod_{p | n} (1 - 1/p^2)."""
    value = Fraction(n**3) * prod((1 - Fraction(1, p * p) for p in prime_divisors(n)), start=Fraction(1))
    assert value.denominator == 1
    return int(value)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def complete_column(k: int, m: int) -> tuple[int, int, int, int]:
    """An integer matrix ``(k, l, m, n)`` of determinant 1 with first column (k, m).

    This is a matrix sending the cusp infinity to k/m.
    """
    g, s, t = xgcd(k, m)
    if g != 1:
        raise ValueError(f"({k}, {m}) is not a primitive vector")
    # s*k + t*m = 1, so k*s - (-t)*m = 1
    return (k, -t, m, s)


@dataclass(frozen=True, slots=True)
class ModMatrix2:
    """A matrix [[a, b], [c, d]] in SL_2(Z/N), entries reduced to 0..N-1."""

    N: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        N = self.N
        if N < 1:
            raise ValueError("modulus must be positive")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % N)
        if (self.a * self.d - self.b * self.c - 1) % N:
            raise ValueError(f"determinant of {self.entries} is not 1 mod {N}")

    @classmethod
    def identity(cls, N):
        return cls(N, 1, 0, 0, 1)

    @classmethod
    def from_tuple(cls, N, entries):
        return cls(N, *entries)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other):
        if not isinstance(other, ModMatrix2):
            return NotImplemented
        if other.N != self.N:
            raise ValueError(f"modulus mismatch: {self.N} vs {other.N}")
        return ModMatrix2(self.N, *mat_mul(self.entries, other.entries, self.N))

    def __neg__(self):
        return ModMatrix2(self.N, -self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        return ModMatrix2(self.N, self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        result = ModMatrix2.identity(self.N)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def reduce(self, n):
        """Reduce modulo a divisor ``n`` of the modulus."""
        if self.N % n:
            raise ValueError(f"{n} does not divide {self.N}")
        return ModMatrix2(n, *self.entries)

    def trace(self):
        return (self.a + self.d) % self.N

    def __repr__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]] mod {self.N}"


def mat_mul(x, y, N):
    """Product of two 2x2 matrices given as (a, b, c, d) tuples, mod N."""
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % N, (a * f + b * h) % N, (c * e + d * g) % N, (c * f + d * h) % N)


S_MATRIX = (0, -1, 1, 0)
T_MATRIX = (1, 1, 0, 1)


def sl2_enumerate(N: int) -> frozenset:
    """All of SL_2(Z/N), generated as the closure of {S, T}.

    Raises :class:`~levelcubics.config.EnumerationBoundError` when N exceeds
    the configured bound (default 60, where the group has 138240 elements).
    """
    if N < 2:
        raise ValueError(f"level must be at least 2, got {N}")
    check_bound(N)
    return frozenset(ModMatrix2(N, *e) for e in _sl2_closure(N))


def _sl2_closure(N):
    gens = [tuple(x % N for x in S_MATRIX), tuple(x % N for x in T_MATRIX)]
    start = (1, 0, 0, 1)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = mat_mul(g, s, N)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen
