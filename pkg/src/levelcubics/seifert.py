"""Seifert fibrations of the branched covers M(N), M1(N), M0(N) of S^3.

The j-invariant fibres S^3 with K as the fiber over j = oo and exceptional
fibers over j = 0, 1728.  The lifted fibration on a cover has base orbifold
X_Gamma; exceptional fibers sit over elliptic points and over irregular
cusps (lifts of K whose longitude class acts by -T^h).  The rational Euler
number is taken to be (Z')^2, so it is negative.

Recognition uses only base genus, multiplicities and Euler number, and only
asserts a homeomorphism type where those data determine it.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from . import quotient
from .congruence import SubgroupSpec, curve_invariants


@dataclass(frozen=True)
class ExceptionalFiber:
    multiplicity: int
    source: str  # "elliptic-order-2" | "elliptic-order-3" | "irregular-cusp"


@dataclass(frozen=True)
class SeifertData:
    base_genus: int
    exceptional_fibers: tuple
    euler: Fraction

    @property
    def multiplicities(self):
        return tuple(f.multiplicity for f in self.exceptional_fibers)


def seifert_data(spec: SubgroupSpec) -> SeifertData:
    inv = curve_invariants(spec)
    fibers = [ExceptionalFiber(2, "elliptic-order-2")] * inv.e2
    fibers += [ExceptionalFiber(3, "elliptic-order-3")] * inv.e3
    fibers += [ExceptionalFiber(2, "irregular-cusp")] * len(inv.irregular_cusps)
    return SeifertData(inv.genus, tuple(fibers), quotient.zprime_self_intersection(spec))


# ---------------------------------------------------------------- labels


@dataclass(frozen=True)
class Sphere3:
    def describe(self):
        return "S3"


@dataclass(frozen=True)
class LensSpace:
    order: int

    def describe(self):
        return f"lens space with |H1| = {self.order}"


@dataclass(frozen=True)
class CircleBundle:
    genus: int
    euler: Fraction

    def describe(self):
        return f"circle bundle over genus {self.genus} with Euler number {self.euler}"


@dataclass(frozen=True)
class SeifertGeneral:
    data: SeifertData

    def describe(self):
        ms = ",".join(str(m) for m in self.data.multiplicities)
        return (f"Seifert fibered, base genus {self.data.base_genus}, fibers ({ms}), "
                f"Euler number {self.data.euler}; classification not asserted")


@dataclass(frozen=True)
class Unknown:
    reason: str = ""

    def describe(self):
        return "unknown" + (f" ({self.reason})" if self.reason else "")


def h1_order(sd: SeifertData) -> Fraction:
    """|euler| times the product of the multiplicities."""
    return abs(sd.euler) * prod(sd.multiplicities)


def recognize(sd: SeifertData):
    """Homeomorphism label for the Seifert data.

    Over the sphere with at most two exceptional fibers, the space is S^3
    when |euler| * prod(alpha) = 1.  Otherwise a fibration with no exceptional
    fibers is reported as a circle bundle, and one with one or two as a lens
    space of that order.  Anything else is returned as general Seifert data.
    """
    n = len(sd.exceptional_fibers)
    if sd.base_genus == 0 and n <= 2:
        if sd.euler == 0:
            return Unknown("zero Euler number")
        p = h1_order(sd)
        if p.denominator != 1:
            raise ValueError(f"inconsistent Seifert data: |H1| = {p} is not an integer")
        if p == 1:
            return Sphere3()
        if n == 0:
            return CircleBundle(0, sd.euler)
        return LensSpace(int(p))
    if n == 0:
        return CircleBundle(sd.base_genus, sd.euler)
    return SeifertGeneral(sd)
