from fractions import Fraction

import pytest

from schroder_lab import (NonIntegralCount, PathSpec, QPoly, count_fuss_catalan, count_parking_closed,
                          count_paths, count_schroder, gen_poly, parking_closed_exact)


def test_count_schroder_examples():
    assert count_schroder(2, 1, 2) == 4
    assert all(count_schroder(n, 0, r) == 1 for n in range(6) for r in (1, 2, 3))
    assert count_schroder(2, 2, 2) == 3 == count_paths(PathSpec(2, 2, 2))


def test_count_schroder_rejects_bad_args():
    with pytest.raises(ValueError):
        count_schroder(2, 3, 1)


def test_fuss_catalan():
    assert count_fuss_catalan(1, 5) == 1
    assert count_fuss_catalan(3, 1) == 5
    assert count_fuss_catalan(2, 2) == 3
    assert [count_fuss_catalan(n, 1) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_parking_closed_anchors():
    assert count_parking_closed(1, 1, 1) == 1
    assert count_parking_closed(2, 2, 1) == 3
    assert count_parking_closed(3, 3, 1) == 16
    assert all(count_parking_closed(n, n, 1) == (n + 1) ** (n - 1) for n in range(1, 8))


def test_parking_closed_d0_is_rational_but_integral():
    # d = 0 puts m to the power -1; the factor C(m, n) still makes it whole
    assert parking_closed_exact(3, 0, 2) == Fraction(6)


def test_nonintegral_is_reported():
    err = NonIntegralCount(Fraction(1, 2), (1, 0, 1))
    assert err.value == Fraction(1, 2)


def test_gen_poly():
    assert gen_poly(PathSpec(2, 1, 2)).at_t(1) == QPoly([2, 1, 1])
    assert gen_poly(PathSpec(1, 1, 1), "schroder").coeffs == {(0, 0): 1}
    assert gen_poly(PathSpec(3, 3, 1), "schroder").evaluate(1, 1) == 5
