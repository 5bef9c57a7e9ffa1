"""
Szeregi Hilberta: kandydat pełnego przecięcia, test Bensona, waluacje q-adyczne
i tożsamość szeregów dla bazy Campbella-Hughesa.

Cała arytmetyka jest dokładna (sympy: pierścień QQ[lam] i szeregi obcięte).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import prod
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ, Rational, multiplicity
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import ring

from .errors import ParameterError, PoleOrderError
from .grlin import invariant_dimension
from .matgroup import group_order

_R, _LAM = ring("lam", QQ)


@dataclass(frozen=True)
class RationalSeries:
    """
    prod(1 - lam^m dla m w numer_factors) * numer_poly
    --------------------------------------------------
    prod(1 - lam^m dla m w denom_factors) * denom_poly
    """

    numer_factors: Tuple[int, ...] = ()
    denom_factors: Tuple[int, ...] = ()
    numer_poly: Tuple[int, ...] = (1,)
    denom_poly: Tuple[int, ...] = (1,)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries(
            self.numer_factors + other.numer_factors,
            self.denom_factors + other.denom_factors,
            tuple(_convolve(self.numer_poly, other.numer_poly)),
            tuple(_convolve(self.denom_poly, other.denom_poly)),
        )


def _convolve(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def mu(m: int) -> Tuple[int, ...]:
    """mu(m) = 1 + lam + ... + lam^{m-1}."""
    return (1,) * m


def ci_candidate_series(n: int, q: int) -> RationalSeries:
    """
    Szereg, jaki miałby pierścień niezmienników, gdyby był pełnym przecięciem
    z generatorami Lambda i relacjami T_00, T_j, T*_j.
    """
    if n < 2:
        raise ParameterError(f"Szereg kandydata wymaga n >= 2, otrzymano {n}")
    qn = q**n
    numer = [2 * qn - 2]
    for k in range(1, n):
        numer += [qn + q**k] * 2
    denom = [2]
    for i in range(n):
        denom += [qn - q**i] * 2
    for i in range(1, n):
        denom += [q**i + 1] * 2
    return RationalSeries(tuple(numer), tuple(denom))


def _poly_element(coeffs: Sequence[int]):
    return sum((c * _LAM**k for k, c in enumerate(coeffs) if c), _R.zero)


def _to_int(c) -> int:
    value = QQ.to_sympy(c)
    if value.q != 1:
        raise ParameterError(f"Niecałkowity współczynnik szeregu: {value}")
    return int(value)


def series_coeffs(rs: RationalSeries, D: int) -> List[int]:
    """Pierwsze D + 1 współczynników rozwinięcia w szereg potęgowy."""
    if D < 0:
        raise ParameterError("D musi być >= 0")
    prec = D + 1
    numer = _poly_element(rs.numer_poly)
    for m in rs.numer_factors:
        numer = rs_mul(numer, 1 - _LAM**m, _LAM, prec)
    denom = _poly_element(rs.denom_poly)
    for m in rs.denom_factors:
        denom = rs_mul(denom, 1 - _LAM**m, _LAM, prec)
    series = rs_mul(numer, rs_series_inversion(denom, _LAM, prec), _LAM, prec)
    return [_to_int(series.get((k,), QQ.zero)) for k in range(prec)]


def benson_leading_check(n: int, q: int) -> Dict:
    """
    lim_{lam -> 1} (1 - lam)^{2n} H(lam) dla kandydata pełnego przecięcia.

    Każdy czynnik 1 - lam^m to (1 - lam) mu(m), a mu(m) w lam = 1 daje m.
    """
    rs = ci_candidate_series(n, q)
    if len(rs.numer_factors) + 2 * n != len(rs.denom_factors):
        raise PoleOrderError(
            f"Rząd bieguna: {len(rs.denom_factors)} - {len(rs.numer_factors)} != 2n = {2 * n}"
        )
    value = Rational(prod(rs.numer_factors), prod(rs.denom_factors))
    expected = Rational(1, group_order(n, q))
    return {
        "n": n,
        "q": q,
        "leadingValue": str(value),
        "oneOverGroupOrder": str(expected),
        "equal": value == expected,
    }


def q_valuation_check(n: int, q: int) -> Dict:
    """
    Waluacje q-adyczne prod(q^n - q^i)^2 prod(q^i + 1)^2 oraz (q^n - 1) prod(q^n + q^k)^2.

    Obie równe n^2 - n, więc iloraz jest względnie pierwszy z q, a q dzieli |G|.
    """
    qn = q**n
    numer = prod((qn - q**i) ** 2 for i in range(n)) * prod((q**i + 1) ** 2 for i in range(1, n))
    denom = (qn - 1) * prod((qn + q**k) ** 2 for k in range(1, n))
    v_num = multiplicity(q, numer)
    v_den = multiplicity(q, denom)
    quotient = Rational(numer, denom)
    expected = n * n - n
    return {
        "n": n,
        "q": q,
        "vNumerator": int(v_num),
        "vDenominator": int(v_den),
        "equal": v_num == v_den == expected,
        "quotient": str(quotient),
        "quotientEqualsGroupOrder": quotient == group_order(n, q),
    }


def ch_freeness_series_check(n: int, q: int, D: int) -> bool:
    """
    prod_{i=1}^{n} 1/(1 - lam^{q^{i-1}}) = prod_{i<n} 1/(1 - lam^{q^n - q^i}) * sum_{gamma} lam^{deg gamma}.
    """
    lhs = series_coeffs(RationalSeries(denom_factors=tuple(q ** (i - 1) for i in range(1, n + 1))), D)
    gamma_poly = reduce(
        _convolve,
        (_spread(mu(q ** (n + 1 - i) - 1), q ** (i - 1)) for i in range(1, n + 1)),
        [1],
    )
    rhs_series = RationalSeries(
        denom_factors=tuple(q**n - q**i for i in range(n)),
        numer_poly=tuple(gamma_poly[: D + 1]) or (0,),
    )
    rhs = series_coeffs(rhs_series, D)
    if lhs != rhs:
        logging.debug(f"Szeregi Campbella-Hughesa różnią się: {lhs} vs {rhs}")
    return lhs == rhs


def _spread(coeffs: Sequence[int], step: int) -> List[int]:
    """p(lam) -> p(lam^step)."""
    out = [0] * ((len(coeffs) - 1) * step + 1)
    for k, c in enumerate(coeffs):
        out[k * step] = c
    return out


def valuation_sweep(ns: Iterable[int], qs: Iterable[int]) -> List[Dict]:
    qs = list(qs)
    return [q_valuation_check(n, q) for n in ns for q in qs]


def compare_with_invariants(cat, D: int) -> List[Dict]:
    """
    Współczynniki kandydata obok prawdziwych wymiarów sum_{d1+d2=d} dim F[V + V*]^G_(d1,d2).

    Tylko raport; różnice nie są błędem.
    """
    candidate = series_coeffs(ci_candidate_series(cat.n, cat.q), D)
    rows = []
    for d in range(D + 1):
        true_dim = sum(invariant_dimension(cat.field, cat.n, (d1, d - d1), "G") for d1 in range(d + 1))
        rows.append({"degree": d, "candidate": candidate[d], "invariants": true_dim,
                     "difference": candidate[d] - true_dim})
    return rows
