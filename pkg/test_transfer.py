"""
Testy śladu względnego, operatora Reynoldsa i czyszczenia mianowników
"""

import pytest

from src.core.errors import InvarianceError
from src.core.invariants import build_generator_sets
from src.core.matgroup import checking_elements, enumerate_GL, is_invariant
from src.core.transfer import (
    b_k_membership,
    default_clearing_cap,
    localization_check,
    make_transfer_context,
    minimal_clearing_exponent,
    rel_trace,
    reynolds,
    u_invariance_failures,
)


@pytest.fixture(scope="module")
def ctx23(f3):
    return make_transfer_context(f3, 2)


def test_index_must_be_invertible(f2, f3):
    # [GL_2(F_2) : U] = 3, [GL_3(F_2) : U] = 21
    assert make_transfer_context(f2, 2).cosets.index == 3
    assert make_transfer_context(f2, 3).cosets.index == 21
    assert make_transfer_context(f3, 2).cosets.index == 16


def test_reynolds_fixes_g_invariants(cat23, ctx23):
    assert reynolds(cat23.c(1), ctx23) == cat23.c(1)
    assert reynolds(cat23.u(0), ctx23) == cat23.u(0)


def test_reynolds_image_is_g_invariant(cat23, ctx23):
    elems = checking_elements(cat23.field, 2, "G")
    for f in (cat23.f(2) * cat23.f_star(1), cat23.f(1) ** 2 * cat23.f_star(2), cat23.f(2) ** 2):
        image = reynolds(f, ctx23, verify=True)
        assert is_invariant(image, elems)


def test_trace_rejects_non_u_invariant(cat23, ctx23):
    with pytest.raises(InvarianceError):
        rel_trace(cat23.x(2), ctx23, verify=True)


@pytest.mark.parametrize("a,b", [((1, 0), (0, 1)), ((2, 1), (1, 0)), ((0, 1), (0, 1))])
def test_reynolds_of_omega_lies_in_a(cat23, ctx23, a, b):
    from src.core.grlin import membership

    sets = build_generator_sets(cat23)
    image = reynolds(sets.omega_poly(a, b), ctx23, verify=True)
    assert membership(image, sets.A_gens).member


def test_localization_of_negative_u(cat22, cat23):
    # c_{n,0} u_{-1} wyraża się przez c_{n,i} i u_j, j >= 0 (relacja T_1)
    for cat in (cat22, cat23):
        result = localization_check(cat, 1)
        assert result["exponent"] == 1
        assert result["cap"] == default_clearing_cap(2, cat.q)


def test_clearing_exponent_zero_for_members(cat23):
    gens = cat23.lambda_generators()
    result = minimal_clearing_exponent(cat23.c(1) * cat23.u(0), gens, cat23)
    assert result["exponent"] == 0
    assert result["certificate"]


def test_clearing_cap_reported(cat22):
    gens = [("u0", cat22.u(0))]
    result = minimal_clearing_exponent(cat22.f(1), gens, cat22, cap=2)
    assert result["exponent"] is None
    assert result["cap"] == 2


@pytest.mark.parametrize("k", [0, 1])
def test_negative_u_lies_in_a(cat22, k):
    result = b_k_membership(cat22, k)
    assert result["member"]
    assert result["u"] == f"u{-2 - k}"


def test_u_invariance_failures_lists_offenders(cat23):
    polys = [("x2", cat23.x(2)), ("f2", cat23.f(2)), ("f*1", cat23.f_star(1))]
    assert u_invariance_failures(polys, cat23.field, 2) == ["x2"]
    assert u_invariance_failures(cat23.u_level_generators(), cat23.field, 2) == []


def test_reynolds_is_idempotent(cat23, ctx23):
    for f in (cat23.f(1) * cat23.f_star(1), cat23.f(2) * cat23.f_star(2), cat23.f(1) ** 3):
        once = reynolds(f, ctx23)
        assert reynolds(once, ctx23) == once


def test_rel_trace_invariant_under_full_group(cat32):
    ctx = make_transfer_context(cat32.field, 3)
    elems = enumerate_GL(cat32.field, 3)
    assert len(elems) == 168
    for f in (cat32.f(1), cat32.f(3) * cat32.f_star(1)):
        assert is_invariant(rel_trace(f, ctx, verify=True), elems)


def test_localization_certificate_n2_q2(cat22):
    # c_{2,0} u_{-1} = c_{2,1} u_0^2 + u_1^2
    result = localization_check(cat22, 1)
    assert result["j"] == 1
    assert result["exponent"] == 1
    assert set(result["certificate"]) == {"c2,1*u0^2", "u1^2"}


def test_negative_u_lies_in_a_n2_q3(cat23):
    result = b_k_membership(cat23, 0)
    assert result["u"] == "u-2"
    assert result["member"]
    assert result["certificate"]
