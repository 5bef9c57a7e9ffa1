"""
Testy relacji między generatorami Lambda
"""

import pytest

from src.core.errors import ParameterError
from src.core.presentation import PresentationRing
from src.core.relations import (
    evaluate_relation,
    jacobian_nonzero_check,
    nabla_determinant,
    nabla_identity_check,
    relation_names,
    relation_R,
    relation_suite,
    relation_T,
    relation_T_star,
    resolve_r_pairing,
    star_T_identity,
    star_T_identity_formal,
    u_boundary_from_relations,
    wilkerson_check,
)


@pytest.mark.parametrize("name", ["cat22", "cat23", "cat32"])
def test_relation_suite_vanishes(name, request):
    cat = request.getfixturevalue(name)
    records = relation_suite(cat)
    failed = [r["relation"] for r in records if not r["zero"]]
    assert failed == []
    assert len(records) == len(relation_names(cat.n))


@pytest.mark.slow
@pytest.mark.parametrize("p,e,n", [(2, 2, 2), (3, 1, 3)])
def test_relation_suite_vanishes_larger_cases(p, e, n):
    from src.core.gfq import make_field
    from src.core.invariants import InvariantCatalog

    cat = InvariantCatalog(make_field(p, e), n)
    assert all(r["zero"] for r in relation_suite(cat))


def test_relation_names_order():
    names = relation_names(2)
    assert names[:5] == ["T_0", "T_1", "T_2", "T_3", "T_4"]
    assert "T*_-2" in names and "R_n+" in names
    assert names[-2:] == ["T_00 (S)", "Gwiazdka T (S)"]
    assert relation_names(2, 1)[:2] == ["T_0", "T_1"]


def test_individual_relations(cat24):
    for j in range(4):
        assert relation_T(cat24, j).is_zero()
        assert relation_T_star(cat24, j).is_zero()
    for i in range(3):
        assert wilkerson_check(cat24, i).is_zero()


def test_r_pairing_resolves_to_mixed(cat23, cat32):
    assert resolve_r_pairing(cat23)["resolved"] == "mixed"
    result = resolve_r_pairing(cat32)
    assert result["resolved"] == "mixed"
    assert all(result["results"]["mixed"])
    with pytest.raises(ParameterError):
        relation_R(cat23, 3)
    with pytest.raises(ParameterError):
        relation_R(cat23, 1, pairing="transposed")


def test_u_boundary_matches_frobenius_powers(cat23):
    boundary = u_boundary_from_relations(cat23)
    assert boundary["plusMatches"] and boundary["minusMatches"]
    assert boundary["u_n"] == cat23.u(2)


def test_jacobian_value_nonzero(cat22, cat23):
    for cat in (cat22, cat23):
        result = jacobian_nonzero_check(cat)
        assert not result["skipped"]
        assert result["nonzero"]


def test_nabla(cat23, cat32):
    assert nabla_identity_check(cat23)
    assert nabla_identity_check(cat32)
    assert not nabla_determinant(cat32).is_zero()
    assert evaluate_relation(cat23, "Nabla") is True


def test_star_identity_concrete_and_formal(cat23):
    assert star_T_identity(cat23).is_zero()
    assert star_T_identity_formal(PresentationRing(cat23)).is_zero()


def test_unknown_relation_name(cat22):
    with pytest.raises(ParameterError):
        evaluate_relation(cat22, "Q_1")
