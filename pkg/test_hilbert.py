"""
Testy szeregów Hilberta i kontroli arytmetycznych
"""

import pytest

from src.core.errors import ParameterError
from src.core.hilbert import (
    RationalSeries,
    benson_leading_check,
    ch_freeness_series_check,
    ci_candidate_series,
    compare_with_invariants,
    mu,
    q_valuation_check,
    series_coeffs,
    valuation_sweep,
)


def test_geometric_series():
    assert series_coeffs(RationalSeries(denom_factors=(1,)), 5) == [1] * 6
    # 1 / ((1 - lam)(1 - lam^2))
    assert series_coeffs(RationalSeries(denom_factors=(1, 2)), 5) == [1, 1, 2, 2, 3, 3]
    assert series_coeffs(RationalSeries(numer_poly=mu(3)), 4) == [1, 1, 1, 0, 0]


def test_series_product():
    a = RationalSeries(denom_factors=(1,), numer_poly=(1, 1))
    b = RationalSeries(numer_factors=(2,))
    assert series_coeffs(a * b, 4) == series_coeffs(RationalSeries(numer_poly=(1, 1)) * RationalSeries(numer_poly=(1, 1)), 4)


def test_candidate_factors_n2_q2():
    rs = ci_candidate_series(2, 2)
    assert sorted(rs.numer_factors) == [6, 6, 6]
    assert sorted(rs.denom_factors) == [2, 2, 2, 3, 3, 3, 3]
    with pytest.raises(ParameterError):
        ci_candidate_series(1, 2)


def test_candidate_series_starts_with_one():
    coeffs = series_coeffs(ci_candidate_series(2, 3), 10)
    assert coeffs[0] == 1
    assert all(c >= 0 for c in coeffs)


def test_benson_leading_value_contradiction():
    result = benson_leading_check(2, 2)
    assert result["leadingValue"] == "1/3"
    assert result["oneOverGroupOrder"] == "1/6"
    assert not result["equal"]


@pytest.mark.parametrize("n,q", [(2, 3), (3, 2), (3, 3), (4, 5)])
def test_benson_value_never_matches(n, q):
    assert not benson_leading_check(n, q)["equal"]


def test_q_valuations_n2_q2():
    result = q_valuation_check(2, 2)
    assert result["vNumerator"] == 2
    assert result["vDenominator"] == 2
    assert result["equal"]
    assert result["quotient"] == "3"
    assert not result["quotientEqualsGroupOrder"]


def test_valuation_sweep_all_equal():
    rows = valuation_sweep(range(2, 6), (2, 3, 4, 5, 7, 8, 9))
    assert len(rows) == 4 * 7
    assert all(r["equal"] for r in rows)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_ch_freeness_series(n, q):
    assert ch_freeness_series_check(n, q, 30)


def test_compare_with_invariants_low_degrees(cat22):
    rows = compare_with_invariants(cat22, 3)
    assert [r["degree"] for r in rows] == [0, 1, 2, 3]
    assert rows[0]["invariants"] == 1
    assert rows[1]["invariants"] == 0
    for r in rows:
        assert r["difference"] == r["candidate"] - r["invariants"]


def test_negative_truncation_rejected():
    with pytest.raises(ParameterError):
        series_coeffs(RationalSeries(), -1)
