from fractions import Fraction as F

import pytest

from zastava.series import InfSeries, series_expand
from zastava.unipoly import UniPoly


def test_geometric():
    s = series_expand(UniPoly([3]), UniPoly([-2, 1]), 4)
    assert list(s.coeffs) == [3, 6, 12, 24]


def test_partial_fractions_example():
    s = series_expand(UniPoly([1, 1]), UniPoly([3, -4, 1]), 4)
    assert list(s.coeffs) == [1, 5, 17, 53]
    # partial-fraction oracle: -1*1^j + 2*3^j
    for j, c in enumerate(s.coeffs):
        assert c == -1 + 2 * F(3) ** j


def test_zero_numerator():
    s = series_expand(UniPoly.zero(), UniPoly([-1, 1]), 3)
    assert list(s.coeffs) == [0, 0, 0]


def test_degree_precondition():
    with pytest.raises(ValueError):
        series_expand(UniPoly([0, 0, 1]), UniPoly([1, 1]), 3)


def test_truncation_guard():
    s = InfSeries((F(1), F(2)))
    assert s.coeff(1) == 2
    with pytest.raises(IndexError):
        s.coeff(2)


def test_non_monic_denominator():
    # 6/(2z-4) = 3/(z-2): same expansion
    s = series_expand(UniPoly([6]), UniPoly([-4, 2]), 3)
    assert list(s.coeffs) == [3, 6, 12]
