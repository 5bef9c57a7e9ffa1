"""
Testy arytmetyki ciał skończonych
"""

import pytest

from src.core.errors import BoundExceededError, FieldMismatchError, ParameterError, ParseError
from src.core.gfq import (
    embed_field,
    enumerate_field,
    field_arith,
    field_for_order,
    format_element,
    frobenius,
    make_field,
    parse_element,
    primitive_element,
)


def test_smallest_irreducible_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(5).q == 5


def test_field_parameters_rejected():
    with pytest.raises(ParameterError):
        make_field(4)
    with pytest.raises(ParameterError):
        make_field(3, 0)
    with pytest.raises(BoundExceededError):
        make_field(2, 9)
    with pytest.raises(ParameterError):
        field_for_order(6)
    with pytest.raises(ParameterError):
        field_for_order(1)


def test_field_for_order_factors_prime_power():
    f9 = field_for_order(9)
    assert (f9.p, f9.e) == (3, 2)
    assert field_for_order(16) is make_field(2, 4)


def test_f4_generator_relations(f4):
    g = f4.elem(2)
    assert g * g == g + 1
    assert g**3 == f4.one
    assert frobenius(g) == g * g
    assert str(g * g) == "g+1"


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (7, 1)])
def test_every_nonzero_element_is_invertible(p, e):
    field = make_field(p, e)
    for a in enumerate_field(field)[1:]:
        assert a * a.inverse() == field.one
        assert a / a == field.one


def test_division_by_zero(f3):
    with pytest.raises(ZeroDivisionError):
        f3.one / f3.zero
    with pytest.raises(ZeroDivisionError):
        f3.zero.inverse()


def test_primitive_element_generates_multiplicative_group():
    field = make_field(3, 2)
    w = primitive_element(field)
    powers = {(w**k).value for k in range(field.q - 1)}
    assert powers == set(range(1, field.q))


def test_frobenius_fixes_prime_field():
    field = make_field(2, 3)
    fixed = [a for a in enumerate_field(field) if frobenius(a) == a]
    assert [a.value for a in fixed] == [0, 1]


def test_mixed_fields_rejected(f3):
    f5 = make_field(5)
    with pytest.raises(FieldMismatchError):
        field_arith(f3.one, f5.one, "add")
    with pytest.raises(FieldMismatchError):
        f3.one + f5.one


def test_element_text_form(f4):
    assert format_element(f4, 3) == "g+1"
    assert format_element(make_field(3, 2), 5) == "g+2"
    for a in enumerate_field(make_field(3, 2)):
        assert parse_element(a.field, str(a)) == a
    with pytest.raises(ParseError):
        parse_element(make_field(3), "3")
    with pytest.raises(ParseError):
        parse_element(f4, "g^2")


def test_embedding_is_ring_homomorphism(f4):
    big = make_field(2, 4)
    emb = embed_field(f4, big)
    t = big.tables
    assert emb[0] == 0 and emb[1] == 1
    for a in range(4):
        for b in range(4):
            assert emb[f4.tables.mul_l[a][b]] == t.mul_l[emb[a]][emb[b]]
            assert emb[f4.tables.add_l[a][b]] == t.add_l[emb[a]][emb[b]]
    with pytest.raises(FieldMismatchError):
        embed_field(f4, make_field(2, 3))
