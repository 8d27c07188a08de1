import pytest

from ritt_groebner.errors import (
    DegenerateResultantError,
    OrderMismatchError,
    PolynomialDivisionByZeroError,
    SystemParseError,
)
from ritt_groebner.polyring import (
    CoefficientField,
    Monomial,
    Ordering,
    VariableOrder,
    plex_compare,
    pquo,
    prem,
    pseudo_divide,
    resultant,
    resultant_certificate,
)


def test_plex_compares_highest_variable_first(order3):
    assert plex_compare(Monomial(order3, (5, 0, 0)), Monomial(order3, (0, 1, 0))) is Ordering.LESS
    assert plex_compare(Monomial(order3, (0, 1, 0)), Monomial(order3, (1, 1, 0))) is Ordering.LESS
    assert plex_compare(Monomial(order3, (0, 0, 1)), Monomial(order3, (9, 9, 0))) is Ordering.GREATER
    assert plex_compare(Monomial(order3, (1, 2, 3)), Monomial(order3, (1, 2, 3))) is Ordering.EQUAL


def test_terms_are_listed_descending_and_printed(order3, poly):
    p = poly(order3, "x3 - x2 + x1^5")
    assert [str(m) for _, m in p.terms()] == ["x3", "x2", "x1^5"]
    assert str(p) == "x3 - x2 + x1^5"
    assert str(order3.constant(1, 2) * order3.variable("x1")) == "1/2*x1"
    assert str(order3.zero()) == "0"


def test_from_terms(order3):
    p = order3.from_terms([((3, 1), (1, 0, 2)), ((-1, 2), (0, 0, 0))])
    assert str(p) == "3*x1*x3^2 - 1/2"


def test_class_leading_variable_and_initial(order3, poly):
    p = poly(order3, "(x2 + x1)*x3 + x1")
    assert p.cls == 3
    assert p.leading_variable == "x3"
    assert p.leading_degree == 1
    assert p.initial == poly(order3, "x2 + x1")

    c = order3.constant(5)
    assert c.cls == 0
    assert c.leading_variable is None
    assert c.initial == c
    assert order3.zero().degree("x1") == -1


def test_pseudo_divide_by_a_polynomial_of_positive_degree(order3, poly):
    result = pseudo_divide(poly(order3, "x2^2"), poly(order3, "x1*x2"), "x2")
    assert result.power == 2
    assert result.quotient == poly(order3, "x1*x2")
    assert result.remainder.is_zero
    assert result.multiplier == poly(order3, "x1")
    assert result.verify()


def test_pseudo_divide_when_divisor_is_free_of_the_variable(order3, poly):
    result = pseudo_divide(poly(order3, "x2"), poly(order3, "x1"), "x2")
    assert result.power == 2
    assert result.quotient == poly(order3, "x1*x2")
    assert result.remainder.is_zero
    assert result.verify()


def test_pseudo_divide_lower_degree_dividend_is_its_own_remainder(order3, poly):
    result = pseudo_divide(poly(order3, "x1"), poly(order3, "x2^2"), "x2")
    assert result.power == 0
    assert result.remainder == poly(order3, "x1")
    assert result.quotient.is_zero


def test_prem_and_pquo_with_nonconstant_initial(order3, poly):
    G = poly(order3, "x3^2 + x1")
    F = poly(order3, "x2*x3 - 1")
    assert prem(G, F, "x3") == poly(order3, "x1*x2^2 + 1")
    assert pquo(G, F, "x3") == poly(order3, "x2*x3 + 1")
    assert pseudo_divide(G, F, 3).verify()


def test_pseudo_divide_by_zero_raises(order3, poly):
    with pytest.raises(PolynomialDivisionByZeroError):
        pseudo_divide(poly(order3, "x1"), order3.zero(), "x1")


def test_resultants(order3, poly):
    assert resultant(poly(order3, "x2 + x1"), poly(order3, "x1^2"), "x1") == poly(order3, "x2^2")
    assert resultant(poly(order3, "x2 - x1"), poly(order3, "x2 + x1"), "x2") == poly(order3, "2*x1")


def test_resultant_certificate_of_a_common_factor(order3, poly):
    certificate = resultant_certificate(poly(order3, "x2"), poly(order3, "x1*x2"), "x2")
    assert certificate.value.is_zero
    assert certificate.first_cofactor == poly(order3, "-x1")
    assert certificate.second_cofactor == order3.one()
    assert certificate.verify()


def test_resultant_certificate_verifies_for_higher_degrees(order3, poly):
    certificate = resultant_certificate(poly(order3, "x1*x3^2 + x2*x3 - 1"), poly(order3, "x3^3 - x2"), "x3")
    assert certificate.verify()
    assert not certificate.value.depends_on("x3")


def test_resultant_of_two_constants_in_the_variable_raises(order3, poly):
    with pytest.raises(DegenerateResultantError):
        resultant(poly(order3, "x1"), order3.constant(3), "x2")


def test_prime_field_arithmetic():
    order = VariableOrder(("x1",), CoefficientField(7))
    assert order.constant(3) * order.constant(5) == order.one()
    assert order.constant(1, 3) == order.constant(5)
    assert str(order.constant(-1) * order.variable("x1")) == "6*x1"
    with pytest.raises(PolynomialDivisionByZeroError):
        order.constant(1, 7)


def test_field_specs():
    assert CoefficientField.parse("q").characteristic == 0
    assert CoefficientField.parse("Q").characteristic == 0
    assert CoefficientField.parse("fp:32003").characteristic == 32003
    assert str(CoefficientField.parse("fp:7")) == "fp:7"
    for spec in ("fp:8", "fp:0", "fp:x", "r"):
        with pytest.raises(SystemParseError):
            CoefficientField.parse(spec)
    with pytest.raises(ValueError):
        CoefficientField(4)


def test_to_order_moves_exponents_by_name(order3, poly):
    p = poly(order3, "x1*x2^2")
    target = order3.permuted(("x2", "x1", "x3"))
    moved = p.to_order(target)
    assert moved.degree("x2") == 2
    assert moved.cls == 2
    assert moved.leading_variable == "x1"
    assert moved.to_order(order3) == p
    with pytest.raises(OrderMismatchError):
        p.to_order(VariableOrder(("x1", "x2", "y")))


def test_tag_variable_embeds_and_restricts(order3, poly):
    tagged, tag = order3.with_tag()
    assert tag == "_z0"
    assert tagged.names[-1] == tag
    p = poly(order3, "x1*x3 - 2")
    assert p.embed(tagged).restrict(order3) == p
    with pytest.raises(OrderMismatchError):
        tagged.variable(tag).restrict(order3)


def test_mixing_orders_raises(order3, order4):
    with pytest.raises(OrderMismatchError):
        order3.variable("x1") + order4.variable("x1")
