"""
Testy wymiarów składowych, przynależności i ideału relacji
"""

import pytest

from src.core.errors import ConjectureRangeError, ParameterError
from src.core.grlin import (
    bideg_component,
    bidegree_sweep,
    ch_freeness_dimension_check,
    check_conjecture,
    component_size,
    default_conjecture_window,
    expected_generators,
    generator_bidegree_check,
    invariant_dimension,
    membership,
    minimal_generators_K,
    poly_bidegree,
    residue_mod_cube,
    subalgebra_span,
    u_level_generation_check,
)
from src.core.mpoly import format_poly
from src.core.presentation import PresentationRing
from src.core.relations import relation_T00_formal, relation_T_formal


def test_component_enumeration():
    assert component_size(2, (2, 1)) == 3 * 2
    component = bideg_component(2, (2, 1))
    assert component.dim == 6
    assert all(m.bidegree == (2, 1) for m in component.basis)
    assert component_size(2, (-1, 3)) == 0


def test_bidegree_sweep_order():
    assert bidegree_sweep(2) == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("name", ["cat22", "cat23"])
def test_invariants_one_dimensional_at_generator_bidegrees(name, request):
    cat = request.getfixturevalue(name)
    for label, g in cat.lambda_generators():
        assert invariant_dimension(cat.field, cat.n, poly_bidegree(g), "G") == 1, label


def test_low_degree_invariant_dimensions(f3):
    assert invariant_dimension(f3, 2, (0, 0), "G") == 1
    assert invariant_dimension(f3, 2, (1, 0), "G") == 0
    assert invariant_dimension(f3, 2, (1, 0), "U") == 1
    assert invariant_dimension(f3, 2, (1, 1), "U") == 2


def test_membership_with_certificate(cat23):
    gens = cat23.lambda_generators()
    f = cat23.c(1) * cat23.u(1) + (cat23.c(0) * cat23.u(0)).scale(2)
    result = membership(f, gens)
    assert result.member
    assert result.bidegree == (9, 1)
    assert set(result.certificate) == {"c2,1*u1", "c2,0*u0"}
    assert not membership(cat23.x(1), gens).member
    assert membership(cat23.one().scale(2), gens).certificate == {"1": "2"}


def test_membership_rejects_inhomogeneous(cat23):
    with pytest.raises(ParameterError):
        membership(cat23.c(1) + cat23.u(0), cat23.lambda_generators())


def test_span_counts_products(cat22):
    span = subalgebra_span(cat22.lambda_generators(), (2, 2))
    # u_0^2 oraz c_{2,1} c*_{2,1}
    assert span.dim == 2


def test_generator_bidegree_check(cat22, cat23):
    for cat in (cat22, cat23):
        result = generator_bidegree_check(cat, 3)
        assert result["passed"]
        kinds = {r["kind"] for r in result["records"]}
        assert kinds == {"generator", "control"}


def test_u_level_generation(cat22, cat23):
    assert u_level_generation_check(cat22, 4)["passed"]
    assert u_level_generation_check(cat23, 3)["passed"]


def test_ch_freeness_dimensions(cat22, cat23):
    assert ch_freeness_dimension_check(cat22, 10)["passed"]
    assert ch_freeness_dimension_check(cat23, 10)["passed"]


def test_no_kernel_in_low_degrees(cat23):
    pres = PresentationRing(cat23)
    report = minimal_generators_K(pres, 6)
    assert report.total_new == 0


def test_expected_generators_n2(cat23):
    pres = PresentationRing(cat23)
    expected = expected_generators(pres)
    labels = [label for label, _, _ in expected]
    assert labels == ["T_1", "T*_1", "T_0,0", "T_0,1", "T_1,0"]
    assert dict((label, bideg) for label, bideg, _ in expected)["T_0,0"] == (8, 8)
    assert default_conjecture_window(2, 3) == 16


def test_conjecture_rejects_q_two(cat22):
    with pytest.raises(ConjectureRangeError):
        check_conjecture(PresentationRing(cat22))


@pytest.mark.slow
def test_conjecture_n2_q3(cat23):
    result = check_conjecture(PresentationRing(cat23))
    assert result["expectedCount"] == 5
    assert result["foundCount"] == 5
    assert result["passed"]


def test_residues_of_formal_relations(cat22, cat23):
    pres22, pres23 = PresentationRing(cat22), PresentationRing(cat23)
    assert residue_mod_cube(relation_T_formal(pres23, 1)) == pres23.C(0) * pres23.U(-1)
    t1 = residue_mod_cube(relation_T_formal(pres22, 1))
    assert t1 == pres22.C(0) * pres22.U(-1) + pres22.U(1, 2)
    assert format_poly(t1) == "C0*U-1 + U1^2"
    t00 = residue_mod_cube(relation_T00_formal(pres22))
    assert t00 == pres22.C(0) * pres22.C_star(0) + pres22.U(-1) * pres22.U(1)
    assert format_poly(t00) == "C0*C*0 + U-1*U1"


@pytest.mark.slow
def test_kernel_n2_q2_has_more_than_three_generators(cat22):
    report = minimal_generators_K(PresentationRing(cat22), 8)
    assert report.total_new == 5
    assert [bideg for bideg, _ in report.generators()] == [(2, 3), (3, 2), (2, 4), (3, 3), (4, 2)]
    residues = {format_poly(r) for record in report.records for r in record.residues}
    assert "C0*U-1 + U1^2" in residues


@pytest.mark.slow
def test_generator_bidegrees_n3_q2(cat32):
    result = generator_bidegree_check(cat32, 4)
    generators = [r for r in result["records"] if r["kind"] == "generator"]
    assert len(generators) == 11
    assert all(r["dim"] == 1 for r in generators)
    assert result["passed"]
