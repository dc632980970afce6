"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
All comparisons are exact (integers and Fractions); there is no tolerance.
"""
import sys
from fractions import Fraction
from math import prod

import pytest

from levelcubics.arith import prime_divisors
from levelcubics.congruence import (
    Kind,
    SubgroupSpec,
    coset_table,
    cusp_count_closed_form,
    cusps,
    deg_lambda,
    elliptic_counts,
    elliptic_counts_closed_form,
    elliptic_counts_oracle,
    genus,
    genus_closed_form,
    genus_oracle,
    index_sl2,
)
from levelcubics.quotient import CyclicActionWeights, format_monomial, invariant_generators, smoothness_verdict
from levelcubics.seifert import CircleBundle, SeifertGeneral, Sphere3, Unknown, h1_order, recognize, seifert_data
from levelcubics.trefoil import cover_over_K, fiber_set, monodromy_orbits

SWEEP = range(2, 31)
SMOOTH = {Kind.FULL: {2, 3}, Kind.POINT: {2, 3, 4, 5, 6}, Kind.CYCLIC: {2, 4}}


def _line(number, title, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    return f"[{status}] criterion {number}: {title}" + (f" -- {detail}" if detail else "")


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures):
        with capsys.disabled():
            print("\n" + _line(number, title, not failures, "; ".join(map(str, failures[:5]))))
        assert not failures, failures
    return emit


def criterion_1():
    failures = []
    for kind, expected in SMOOTH.items():
        got = {N for N in SWEEP if smoothness_verdict(SubgroupSpec(kind, N)).smooth_at_Q}
        if got != expected:
            failures.append(f"{kind.value}: {sorted(got)}")
    return failures


def criterion_2():
    table = {
        3: (1, 0, Fraction(-2, 3), Fraction(-1)),
        4: (0, 0, Fraction(-1), Fraction(-1)),
        5: (0, 2, Fraction(-1), Fraction(-2)),
        7: (2, 0, Fraction(-4, 3), Fraction(-2)),
        10: (0, 2, Fraction(-3), Fraction(-4)),
        13: (2, 2, Fraction(-7, 3), Fraction(-4)),
        25: (0, 2, Fraction(-5), Fraction(-6)),
    }
    failures = []
    for N, expected in table.items():
        spec = SubgroupSpec.gamma0(N)
        e2, e3 = elliptic_counts(spec)
        rep = smoothness_verdict(spec)
        got = (e3, e2, rep.zprime_sq, rep.ztilde_sq)
        if got != expected:
            failures.append(f"N={N}: {got}")
    return failures


def criterion_3():
    failures = []
    for kind in Kind:
        for N in SWEEP:
            spec = SubgroupSpec(kind, N)
            if index_sl2(spec) != len(coset_table(spec).cosets):
                failures.append(f"{spec} index")
            if cusp_count_closed_form(spec) != len(cusps(spec)):
                failures.append(f"{spec} cusp count")
            if elliptic_counts_closed_form(spec) != elliptic_counts_oracle(spec):
                failures.append(f"{spec} elliptic")
            if genus_closed_form(spec) != genus_oracle(spec):
                failures.append(f"{spec} genus")
    zero = {N for N in SWEEP if genus(SubgroupSpec.gamma0(N)) == 0}
    if zero != set(range(2, 11)) | {12, 13, 16, 18, 25}:
        failures.append(f"genus-0 Gamma0 levels {sorted(zero)}")
    for N in range(2, 11):
        if genus(SubgroupSpec.gamma1(N)) != 0:
            failures.append(f"X1({N}) not rational")
    return failures


def criterion_4():
    failures = []
    for spec in (SubgroupSpec.gamma1(5), SubgroupSpec.gamma1(6), SubgroupSpec.full(3)):
        if deg_lambda(spec) != 1:
            failures.append(f"{spec}: {deg_lambda(spec)}")
    # N = 2 is excluded: -I lies in Gamma1(2), where deg lambda = 3/12 = 1/4
    if deg_lambda(SubgroupSpec.gamma1(2)) != Fraction(1, 4):
        failures.append("Gamma1(2)")
    for N in range(3, 31):
        formula = Fraction(N * N, 24) * prod(1 - Fraction(1, p * p) for p in prime_divisors(N))
        if deg_lambda(SubgroupSpec.gamma1(N)) != formula:
            failures.append(f"Gamma1({N})")
    return failures


def criterion_5():
    cases = [
        ([CyclicActionWeights(6, 4, 5)], ("x", "t"), {"x^3", "x^2t^2", "xt^4", "t^6"}),
        ([CyclicActionWeights(4, 2, 3)], ("x", "t"), {"x^2", "xt^2", "t^4"}),
        ([CyclicActionWeights(3, 1, 2)], ("x", "y"), {"x^3", "xy", "y^3"}),
        ([CyclicActionWeights(2, 1, 0), CyclicActionWeights(2, 1, 1)], ("q", "s"), {"q^2", "s^2"}),
    ]
    failures = []
    for actions, names, expected in cases:
        got = [format_monomial(e, names) for e in invariant_generators(*actions)]
        if len(got) != len(expected) or set(got) != expected:
            failures.append(got)
    return failures


def criterion_6():
    failures = []
    for spec, steps in ((SubgroupSpec.gamma1(3), 3), (SubgroupSpec.gamma1(4), 2), (SubgroupSpec.full(2), 1)):
        rep = smoothness_verdict(spec)
        if not rep.smooth_at_Q or len(rep.contraction_sequence) != steps:
            failures.append(f"{spec}: {rep.contraction_sequence}")
    rep = smoothness_verdict(SubgroupSpec.gamma0(3))
    if rep.smooth_at_Q or rep.det != 2:
        failures.append(f"Gamma0(3): det {rep.det}")
    return failures


def criterion_7():
    failures = []
    for p in (3, 5, 7, 11, 13):
        prof = cover_over_K(Kind.POINT, p).branching_profile()
        half = (p - 1) // 2
        if len(prof) != p - 1 or prof.count((1, 2)) != half or prof.count((p, 2)) != half:
            failures.append(f"p={p}: {prof}")
    for kind in Kind:
        for N in range(2, 21):
            cert = monodromy_orbits(fiber_set(kind, N))
            if not cert.transitive or not cert.stabilizer_is_subgroup:
                failures.append(f"{kind.value}({N})")
    return failures


def criterion_8():
    failures = []
    for kind in Kind:
        for N in SWEEP:
            spec = SubgroupSpec(kind, N)
            sd = seifert_data(spec)
            label = recognize(sd)
            rep = smoothness_verdict(spec)
            if isinstance(label, Sphere3) != (N in SMOOTH[kind]):
                failures.append(f"{spec}: {label.describe()}")
            if not isinstance(label, (SeifertGeneral, Unknown)) and isinstance(label, Sphere3) != rep.smooth_at_Q:
                failures.append(f"{spec}: label vs smoothness")
            if sd.base_genus == 0 and len(sd.exceptional_fibers) <= 2 and h1_order(sd) != rep.det:
                failures.append(f"{spec}: |H1| {h1_order(sd)} vs |det| {rep.det}")
            power = {Kind.FULL: 3, Kind.POINT: 2}.get(kind)
            if power and N >= (4 if kind is Kind.FULL else 7):
                euler = -Fraction(N ** power, 24) * prod(1 - Fraction(1, p * p) for p in prime_divisors(N))
                if label != CircleBundle(sd.base_genus, euler):
                    failures.append(f"{spec}: {label.describe()}, expected euler {euler}")
    return failures


CRITERIA = [
    (1, "smooth sets for N <= 30", criterion_1),
    (2, "Gamma0 fixed-point table", criterion_2),
    (3, "closed forms against coset enumeration", criterion_3),
    (4, "degree of the Hodge bundle", criterion_4),
    (5, "invariant rings", criterion_5),
    (6, "blow-down sequences", criterion_6),
    (7, "branched-cover combinatorics", criterion_7),
    (8, "topology consistency", criterion_8),
]


def test_criterion_1_smooth_sets(verdict):
    verdict(*CRITERIA[0][:2], criterion_1())


def test_criterion_2_gamma0_table(verdict):
    verdict(*CRITERIA[1][:2], criterion_2())


def test_criterion_3_closed_forms(verdict):
    verdict(*CRITERIA[2][:2], criterion_3())


def test_criterion_4_hodge_degree(verdict):
    verdict(*CRITERIA[3][:2], criterion_4())


def test_criterion_5_invariant_rings(verdict):
    verdict(*CRITERIA[4][:2], criterion_5())


def test_criterion_6_blow_downs(verdict):
    verdict(*CRITERIA[5][:2], criterion_6())


def test_criterion_7_covers(verdict):
    verdict(*CRITERIA[6][:2], criterion_7())


def test_criterion_8_topology(verdict):
    verdict(*CRITERIA[7][:2], criterion_8())


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        problems = fn()
        failed += bool(problems)
        print(_line(number, title, not problems, "; ".join(map(str, problems[:5]))))
    sys.exit(1 if failed else 0)
