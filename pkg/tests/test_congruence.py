from fractions import Fraction
from math import gcd

import pytest

from levelcubics.arith import ModMatrix2, sl2_enumerate
from levelcubics.config import EnumerationBoundError, enumeration_bound_override
from levelcubics.congruence import (
    Kind,
    SubgroupSpec,
    contains,
    coset_table,
    curve_invariants,
    cusp_count_closed_form,
    cusps,
    deg_lambda,
    elliptic_counts,
    elliptic_counts_closed_form,
    elliptic_counts_oracle,
    genus,
    genus_closed_form,
    genus_oracle,
    index_psl2,
    index_sl2,
    minus_identity_in,
)

ALL_SPECS = [SubgroupSpec(k, N) for k in Kind for N in range(2, 31)]
SMALL_SPECS = [SubgroupSpec(k, N) for k in Kind for N in range(2, 13)]


def test_spec_validation():
    with pytest.raises(ValueError):
        SubgroupSpec.full(1)
    assert str(SubgroupSpec.gamma0(13)) == "Gamma0(13)"
    assert SubgroupSpec.gamma1(2).reference_level == 4
    assert SubgroupSpec.gamma0(7).reference_level == 7


def test_contains_checks_modulus():
    with pytest.raises(ValueError):
        contains(SubgroupSpec.gamma0(5), ModMatrix2(7, 1, 0, 0, 1))


def test_membership_examples():
    g0 = SubgroupSpec.gamma0(5)
    assert contains(g0, ModMatrix2(5, 2, 1, 0, 3))
    assert not contains(SubgroupSpec.gamma1(5), ModMatrix2(5, 2, 1, 0, 3))
    assert minus_identity_in(SubgroupSpec.gamma1(2))
    assert not minus_identity_in(SubgroupSpec.gamma1(3))
    assert minus_identity_in(SubgroupSpec.full(2))


def brute_image_size(spec):
    return sum(contains(spec, g) for g in sl2_enumerate(spec.level))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_index_against_group_image(spec):
    from levelcubics.arith import sl2_order

    assert index_sl2(spec) * brute_image_size(spec) == sl2_order(spec.level)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_index_matches_coset_table(spec):
    assert index_sl2(spec) == len(coset_table(spec).cosets)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_widths_sum_to_psl_index(spec):
    assert sum(c.width for c in cusps(spec)) == index_psl2(spec)


def test_index_examples():
    assert index_sl2(SubgroupSpec.gamma0(13)) == 14
    assert index_psl2(SubgroupSpec.full(2)) == 6
    assert index_psl2(SubgroupSpec.gamma1(5)) == 12
    assert index_psl2(SubgroupSpec.full(7)) == 168


def _apply(g, v, N):
    a, b, c, d = g.entries
    return ((a * v[0] + b * v[1]) % N, (c * v[0] + d * v[1]) % N)


def _pm(v, N):
    return min(v, ((-v[0]) % N, (-v[1]) % N))


def cusp_oracle(spec):
    """Cusps as orbits on +-primitive column vectors mod N; width = orbit size * N / deg."""
    N = spec.level
    gamma = [g for g in sl2_enumerate(N) if contains(spec, g)]
    pm_image = {g.entries for g in gamma} | {(-g).entries for g in gamma}
    deg = len(pm_image) // (1 if N == 2 else 2)
    orbits = {}
    for rep in cusps(spec):
        v = _pm((rep.numerator % N, rep.denominator % N), N)
        orbit = frozenset(_pm(_apply(g, v, N), N) for g in gamma)
        orbits[orbit] = len(orbit) * N // deg
    return orbits


@pytest.mark.parametrize("spec", SMALL_SPECS + [SubgroupSpec.gamma0(25), SubgroupSpec.gamma1(16)], ids=str)
def test_cusps_against_orbit_oracle(spec):
    N = spec.level
    orbits = cusp_oracle(spec)
    assert len(orbits) == len(cusps(spec))
    assert sorted(orbits.values()) == sorted(c.width for c in cusps(spec))
    # the listed cusps exhaust P^1(Z/N) up to sign
    everything = {_pm((a, c), N) for a in range(N) for c in range(N) if gcd(gcd(a, c), N) == 1}
    assert set().union(*orbits) == everything


def test_cusp_examples():
    g14 = cusps(SubgroupSpec.gamma1(4))
    assert [(c.label, c.width, c.regular) for c in g14] == [("1/0", 1, True), ("0/1", 4, True), ("1/2", 1, False)]
    assert [(c.label, c.width) for c in cusps(SubgroupSpec.gamma0(7))] == [("1/0", 1), ("0/1", 7)]
    assert [c.width for c in cusps(SubgroupSpec.full(2))] == [2, 2, 2]


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_closed_forms_match_oracle(spec):
    assert cusp_count_closed_form(spec) == len(cusps(spec))
    assert elliptic_counts_closed_form(spec) == elliptic_counts_oracle(spec)
    assert genus_closed_form(spec) == genus_oracle(spec)


def test_elliptic_examples():
    assert elliptic_counts(SubgroupSpec.gamma0(13)) == (2, 2)
    assert elliptic_counts(SubgroupSpec.gamma0(25)) == (2, 0)
    assert elliptic_counts(SubgroupSpec.gamma0(4)) == (0, 0)
    assert elliptic_counts(SubgroupSpec.gamma1(2)) == (1, 0)
    assert elliptic_counts(SubgroupSpec.gamma1(3)) == (0, 1)
    for N in range(4, 31):
        assert elliptic_counts(SubgroupSpec.gamma1(N)) == (0, 0)
        assert elliptic_counts(SubgroupSpec.full(N)) == (0, 0)


def test_elliptic_methods_agree():
    spec = SubgroupSpec.gamma0(21)
    assert elliptic_counts(spec, method="oracle") == elliptic_counts(spec, method="closed") == (0, 2)


def test_genus_examples():
    assert genus(SubgroupSpec.full(7)) == 3
    assert genus(SubgroupSpec.full(13)) == 50
    assert genus(SubgroupSpec.gamma1(13)) == 2
    assert genus(SubgroupSpec.gamma0(11)) == 1
    assert genus(SubgroupSpec.gamma0(25)) == 0
    assert genus(SubgroupSpec.gamma1(10)) == 0


def test_genus_zero_lists():
    zero = {N for N in range(2, 31) if genus(SubgroupSpec.gamma0(N)) == 0}
    assert zero == set(range(2, 11)) | {12, 13, 16, 18, 25}
    assert all(genus(SubgroupSpec.gamma1(N)) == 0 for N in range(2, 11))
    assert genus(SubgroupSpec.gamma1(11)) == 1


def test_deg_lambda():
    assert deg_lambda(SubgroupSpec.full(3)) == 1
    assert deg_lambda(SubgroupSpec.gamma1(5)) == 1
    assert deg_lambda(SubgroupSpec.gamma1(6)) == 1
    assert deg_lambda(SubgroupSpec.gamma1(7)) == 2
    assert deg_lambda(SubgroupSpec.gamma1(2)) == Fraction(1, 4)


def test_curve_invariants_bundle():
    inv = curve_invariants(SubgroupSpec.gamma1(4))
    assert inv.cusp_count == 3
    assert [c.label for c in inv.irregular_cusps] == ["1/2"]
    assert (inv.e2, inv.e3, inv.genus) == (0, 0, 0)


def test_bound_overflow():
    with enumeration_bound_override(12):
        with pytest.raises(EnumerationBoundError) as err:
            coset_table(SubgroupSpec.gamma0(13))
        assert err.value.level == 13 and err.value.bound == 12
    # curve data for Gamma1(2) only enumerates at level 2
    with enumeration_bound_override(2):
        assert curve_invariants(SubgroupSpec.gamma1(2)).e2 == 1


def test_bound_from_environment(monkeypatch):
    from levelcubics.config import ENV_VAR, enumeration_bound

    monkeypatch.setenv(ENV_VAR, "17")
    assert enumeration_bound() == 17
    monkeypatch.setenv(ENV_VAR, "nope")
    with pytest.raises(ValueError):
        enumeration_bound()
