"""
Testy katalogu niezmienników: Dickson, Mui, u_j, zbiory generatorów
"""

import pytest

from src.core.errors import BoundExceededError, ParameterError
from src.core.grlin import poly_bidegree
from src.core.invariants import build_generator_sets, dickson, dickson_dual, mui, u_inv
from src.core.matgroup import checking_elements, is_invariant
from src.core.mpoly import Poly, involution_star, parse_poly


def test_dickson_invariants_n2_q2(cat22, f2):
    assert cat22.c(0) == parse_poly(f2, 2, "x1^2*x2 + x1*x2^2")
    assert cat22.c(1) == parse_poly(f2, 2, "x1^2 + x1*x2 + x2^2")
    assert dickson(cat22, 1) == cat22.c(1)
    assert cat22.c(2).is_constant() and cat22.c(-1).is_zero()


def test_mui_invariants(cat22, f2):
    assert cat22.f(1) == Poly.x(f2, 2, 1)
    assert cat22.f(2) == parse_poly(f2, 2, "x1*x2 + x2^2")
    assert mui(cat22, 2) == cat22.f(2)


@pytest.mark.parametrize("name", ["cat22", "cat23", "cat24", "cat32"])
def test_top_dickson_is_power_of_mui_product(name, request):
    cat = request.getfixturevalue(name)
    product = cat.one()
    for i in range(1, cat.n + 1):
        product = product * cat.f(i)
    assert cat.c(0) == product ** (cat.q - 1)


def test_generator_bidegrees_n2_q3(cat23):
    expected = {
        "c2,0": (8, 0),
        "c2,1": (6, 0),
        "c*2,0": (0, 8),
        "c*2,1": (0, 6),
        "u-1": (1, 3),
        "u0": (1, 1),
        "u1": (3, 1),
    }
    got = {label: poly_bidegree(g) for label, g in cat23.lambda_generators()}
    assert got == expected


@pytest.mark.parametrize("name", ["cat22", "cat23", "cat32"])
def test_lambda_is_fixed_by_whole_group(name, request):
    cat = request.getfixturevalue(name)
    elems = checking_elements(cat.field, cat.n, "G")
    assert len(cat.lambda_generators()) == 4 * cat.n - 1
    for label, g in cat.lambda_generators():
        assert is_invariant(g, elems), label


@pytest.mark.parametrize("name", ["cat22", "cat23", "cat24"])
def test_u_level_generators_fixed_by_unipotent_group(name, request):
    cat = request.getfixturevalue(name)
    elems = checking_elements(cat.field, cat.n, "U")
    for label, g in cat.u_level_generators():
        assert is_invariant(g, elems), label


def test_dual_constructions(cat23):
    assert cat23.c_star(1) == involution_star(cat23.c(1))
    assert dickson_dual(cat23, 0) == cat23.c_star(0)
    assert cat23.f_star(1) == Poly.y(cat23.field, 2, 2)


def test_u_invariants(cat23, f3):
    assert u_inv(cat23, 0) == parse_poly(f3, 2, "x1*y1 + x2*y2")
    assert cat23.u(1) == parse_poly(f3, 2, "x1^3*y1 + x2^3*y2")
    assert cat23.u(-1) == parse_poly(f3, 2, "x1*y1^3 + x2*y2^3")
    with pytest.raises(BoundExceededError):
        cat23.u(13)


def test_labels(cat23):
    assert cat23.canonical_label("c1") == "c2,1"
    assert cat23.canonical_label("c*1,0") == "c*1,0"
    assert cat23.get("c*0") == cat23.c_star(0)
    assert cat23.get("u-1") == cat23.u(-1)
    assert cat23.get("d2,2") == cat23.d(2)
    with pytest.raises(ParameterError):
        cat23.get("z1")
    with pytest.raises(ParameterError):
        cat23.f(3)


def test_subspace_dickson_invariants(cat32):
    # c_{1,0} = x1^{q-1}
    assert cat32.c(0, 1) == Poly.x(cat32.field, 3, 1) ** (cat32.q - 1)
    assert poly_bidegree(cat32.c(1, 2)) == (2, 0)


def test_generator_set_sizes(cat22, cat23):
    sets22 = build_generator_sets(cat22)
    assert sets22.bounds == (2, 0)
    assert sets22.omega_size == 9
    assert sets22.gamma_size == 3
    sets23 = build_generator_sets(cat23)
    assert sets23.bounds == (7, 1)
    assert sets23.omega_size == 256
    assert sets23.omega_poly((1, 0), (0, 1)) == cat23.f(1) * cat23.f_star(2)
    assert sets23.omega_label((1, 0), (0, 1)) == "f^(1,0)*f*^(0,1)"
