from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from schroder_lab import (DomainError, E, F, G, H, PathSpec, VariantConfig, brute_E, brute_G, brute_H,
                          brute_count_parking, chsch, compositions, pascal_twice, psch)
from schroder_lab.parking import multinomial_bar_groups
from schroder_lab.recursions import BetaIndexMode, DegenerateMode, hexagons, oracle_blocks, pentagons

FALLBACK = VariantConfig(BetaIndexMode.PARTIAL_SUM, DegenerateMode.REGION_FALLBACK)


def test_compositions_examples():
    got = list(compositions(3, 2))
    assert {(0, 3), (3, 0), (1, 2)} <= set(got)
    assert len(got) == 4
    assert got == sorted(got)
    assert list(compositions(0, 1)) == [(0,)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []


@given(st.integers(0, 8), st.integers(1, 5))
def test_compositions_count(total, k):
    comps = list(compositions(total, k))
    assert len(comps) == comb(total + k - 1, k - 1) == len(set(comps))
    assert all(sum(c) == total and len(c) == k and min(c) >= 0 for c in comps)


def test_pascal_twice_examples():
    lhs, rhs = pascal_twice(4, 2)
    assert lhs == rhs == comb(6, 3)


def test_g_examples():
    assert G(2, 1, 1, 1, 2) == 4 == brute_G(2, 1, 1, 1, 2)
    assert G(0, 3, 3, 1, 0) == 1
    assert G(2, 2, 0, 1, 0) == 3 == brute_G(2, 2, 0, 1, 0)
    assert brute_G(1, 0, 0, 1, 1) == 1


def test_g_domain_errors():
    with pytest.raises(DomainError):
        G(0, 0, 0, 1, 0)
    with pytest.raises(DomainError, match="negative"):
        G(2, -1, 0, 1, 0)


def test_g_general_case_against_oracle():
    # a - q > r forces the recursive case
    cases = [t for r in (1, 2) for t in pentagons(4, 4, r) if t[0] - t[4] > r and t[2] != t[1]]
    assert cases
    for t in cases:
        assert G(*t) == brute_G(*t), t


def test_g_accepts_rational_p():
    assert G(4, 2, Fraction(1, 2), 2, 1) == brute_G(4, 2, Fraction(1, 2), 2, 1)


def test_e_examples():
    assert E(1, 2, 2, 1, 1) == 3
    assert E(0, 3, 3, 1, 0) == 1
    assert E(2, 2, 1, 1, 1) == brute_E(2, 2, 1, 1, 1)


def test_e_r1_matches_oracle():
    # for r = 1 both orientations coincide and E is correct
    for t in pentagons(4, 4, 1, "integer"):
        assert E(*t) == brute_E(*t), t


def test_e_known_mismatch_for_r2():
    # documented defect: the middle case overcounts once r >= 2
    assert (E(1, 2, 0, 2, 0), brute_E(1, 2, 0, 2, 0)) == (2, 1)


def test_h_base_cases():
    assert H(0, 2, 2, 1, 0, 0) == 1
    assert brute_H(0, 2, 2, 1, 0, 0) == 1


def test_h_oracle_cross_check_has_agreements():
    agree = sum(H(*t) == brute_H(*t) for t in hexagons(2, 2, 1))
    assert agree > 0


def test_brute_h_s0_is_brute_g():
    for t in pentagons(3, 3, 2):
        assert brute_H(*t, 0) == brute_G(*t)


def test_f_trivial():
    assert F(0, 0, 0, 1) == 1


def test_oracle_blocks_sum_to_parking_count():
    for n, d, r in [(2, 2, 1), (2, 2, 2), (3, 2, 2), (2, 0, 2), (3, 6, 2)]:
        spec = PathSpec(n, d, r, "unitfrac")
        total = sum(oracle_blocks(n, d, r).values()) * multinomial_bar_groups(n, d, r)
        assert brute_count_parking(spec) == total, (n, d, r)


def test_psch_boundary_families_in_fallback_mode():
    # d = 0 and d = n r are the families where the fallback is exact
    for n, r in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        for d in (0, n * r):
            assert psch(n, d, r, FALLBACK) == brute_count_parking(PathSpec(n, d, r, "unitfrac")), (n, d, r)


def test_psch_literal_reading_is_recorded_not_raised():
    # the printed formula gives 2 on the one-diagonal family where 1 is right
    assert psch(1, 0, 1) == 2
    assert brute_count_parking(PathSpec(1, 0, 1, "unitfrac")) == 1


def test_psch_middle_family_hits_domain_error():
    with pytest.raises(DomainError, match="G\\("):
        psch(2, 2, 2)


def test_psch_rejects_non_divisible():
    with pytest.raises((ValueError, DomainError)):
        psch(2, 3, 2)


def test_chsch_vacuous_constraint_in_fallback():
    for n, r in [(1, 1), (2, 1), (2, 2)]:
        assert chsch(n, 0, r, n * r, FALLBACK) == psch(n, 0, r, FALLBACK)


def test_variant_config_enumeration():
    allv = VariantConfig.all()
    assert len(allv) == 4 and len(set(allv)) == 4
    assert VariantConfig().beta_index_mode is BetaIndexMode.PARTIAL_SUM
