from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from homalg.series import (THEOREM_DEGREES, RationalSeries, TableIncomplete, compare, expand,
                           generator_series, paper_series)
from homalg.tables import HHTable, HomologyTable, WeightTable

t = sympy.symbols("t")
coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=5)
dens = st.lists(st.integers(-5, 5), min_size=0, max_size=4).map(lambda r: [1] + r)


def sympy_taylor(num, den, n):
    f = sum(c * t ** k for k, c in enumerate(num)) / sum(c * t ** k for k, c in enumerate(den))
    s = sympy.series(f, t, 0, n + 1).removeO()
    return [Fraction(int(sympy.Rational(s.coeff(t, k)).p), int(sympy.Rational(s.coeff(t, k)).q))
            for k in range(n + 1)]


@settings(max_examples=40, deadline=None)
@given(coeffs, dens)
def test_expand_matches_sympy(num, den):
    assert expand(RationalSeries(num, den), 6) == sympy_taylor(num, den, 6)


@settings(max_examples=60, deadline=None)
@given(coeffs, dens, coeffs, dens)
def test_arithmetic_is_coefficientwise(n1, d1, n2, d2):
    a, b = RationalSeries(n1, d1), RationalSeries(n2, d2)
    ea, eb = expand(a, 6), expand(b, 6)
    assert expand(a + b, 6) == [x + y for x, y in zip(ea, eb)]
    assert expand(a - a, 6) == [0] * 7
    prod = [sum(ea[i] * eb[k - i] for i in range(k + 1)) for k in range(7)]
    assert expand(a * b, 6) == prod


def test_reduced_form():
    s = RationalSeries([1, -1], [1, -2, 1])
    assert s.numerator == (1,) and s.denominator == (1, -1)
    assert RationalSeries([2, 4], [2]) == RationalSeries([1, 2])
    assert RationalSeries([1], [-1, 1]).denominator[0] > 0
    assert RationalSeries([0, 0]).denominator == (1,)
    with pytest.raises(ZeroDivisionError):
        RationalSeries([1], [0, 1])


def test_fractional_coefficients():
    assert expand(RationalSeries([1], [2]), 1) == [Fraction(1, 2), 0]


def test_paper_series_values():
    # verified by hand against the closed forms
    assert expand(paper_series("PH0"), 8) == [1, 4, 4, 8, 7, 12, 10, 16, 13]
    assert expand(paper_series("PH1"), 8) == [0, 4, 4, 12, 9, 20, 14, 28, 19]
    assert expand(paper_series("PH2"), 8) == [0, 0, 0, 4, 2, 8, 4, 12, 6]
    assert expand(paper_series("PH3"), 8) == [0, 0, 0, 0, 1, 0, 2, 0, 3]
    assert paper_series("HH3") == paper_series("PH4")
    with pytest.raises(ValueError):
        paper_series("PH7")


@pytest.mark.parametrize("i", range(5))
def test_generator_degrees_reproduce_series(i):
    assert generator_series(THEOREM_DEGREES[i]) == paper_series(f"HH{i}")


def test_compare_reports():
    good = WeightTable({(i, d): expand(paper_series(f"PH{i}"), 3)[d] for i in range(5) for d in range(4)})
    rep = compare(good, 3)
    assert rep.passed and rep.verdict == "pass" and not rep.failures()
    bad = HHTable(dict(good.dims))
    bad[2, 3] = 5
    rep = compare(bad, 3)
    assert rep.verdict == "fail"
    assert [(c.i, c.d, c.expected, c.computed) for c in rep.failures()] == [(2, 3, 4, 5)]
    assert "MISMATCH at d=3" in rep.render()
    assert rep.to_dict()["tables"][0]["side"] == "hochschild"
    with pytest.raises(TableIncomplete):
        compare(good, 4)


def test_table_round_trips():
    tab = HomologyTable("hochschild", dims={(0, 0): 1, (1, 1): 4, (4, 4): 1})
    assert HomologyTable.from_json(tab.to_json()) == tab
    assert HomologyTable.from_csv(tab.to_csv(side=True)).side == "hochschild"
    assert HomologyTable.from_csv(tab.to_csv(), side="hochschild") == tab
    assert tab.to_csv().splitlines()[0] == "i,d,dim"
    assert tab.row(1, 2) == [None, 4, None]
    with pytest.raises(KeyError):
        tab[5, 0] = 1
    with pytest.raises(ValueError):
        tab[0, 0] = -1
    assert "hochschild" in tab.format()
