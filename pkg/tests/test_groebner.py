import pytest

from ritt_groebner.errors import EmptyInputError, PolynomialDivisionByZeroError, ZeroIdealError
from ritt_groebner.groebner import (
    elimination_prefix,
    ideal_member,
    is_b_reduced,
    normal_form,
    radical_member,
    reduced_gb,
    s_polynomials_reduce,
    same_ideal,
    saturation_gb,
)
from ritt_groebner.polyring import CoefficientField, VariableOrder


def texts(basis):
    return [str(p) for p in basis]


def test_reduced_basis_of_fixture_a(load_fixture):
    system = load_fixture("a")
    basis = reduced_gb(system.generators)
    assert texts(basis) == ["x1*x2 - 1", "x3 - x2"]
    assert s_polynomials_reduce(basis)


def test_reduced_basis_of_fixture_b(load_fixture):
    assert texts(reduced_gb(load_fixture("b").generators)) == ["x1^2", "x2*x3 + x1*x3 + x1"]


def test_monomial_ideal_is_its_own_basis(load_fixture):
    assert texts(reduced_gb(load_fixture("c").generators)) == ["x1*x2", "x2*x3", "x3*x4"]


def test_reduced_basis_of_fixture_d(load_fixture):
    basis = reduced_gb(load_fixture("d").generators)
    assert texts(basis) == ["x1^4", "x1^3*x2^3", "x2^4", "x1*x2*x3 + x1^2*x3 - x1^3"]
    assert s_polynomials_reduce(basis)


def test_reduced_basis_of_fixture_e_and_elimination(load_fixture, poly):
    system = load_fixture("e")
    basis = reduced_gb(system.generators)
    assert texts(basis) == ["x1*x2", "x3*x4 - x2^2", "x1*x4^2", "x2*x5 + x4^2"]
    assert texts(elimination_prefix(basis, 4)) == ["x1*x2", "x3*x4 - x2^2", "x1*x4^2"]
    assert len(elimination_prefix(basis, 0)) == 0
    assert not ideal_member(poly(system.order, "x1*x5 - x1"), basis)
    with pytest.raises(ValueError):
        elimination_prefix(basis, 6)


def test_membership_in_fixture_e_bar(load_fixture, poly):
    system = load_fixture("e_bar")
    basis = reduced_gb(system.generators)
    assert texts(basis) == ["x1*x2", "x2*x4 - x2^2", "x1*x4^2", "x4^3 - x2^3", "x2*x5 + x4^2"]
    assert ideal_member(poly(system.order, "x1*x4^2"), basis)
    assert basis.contains(poly(system.order, "x1*x2*x3"))


def test_unit_ideal_and_bad_input(order3, poly):
    assert reduced_gb([order3.constant(3), poly(order3, "x1")]).is_unit
    assert reduced_gb([poly(order3, "x1^2 + 1"), poly(order3, "x1 + 1")]).is_unit
    with pytest.raises(EmptyInputError):
        reduced_gb([])
    with pytest.raises(ZeroIdealError):
        reduced_gb([order3.zero()])


def test_basis_depends_on_the_field():
    order = VariableOrder(("x1",), CoefficientField(2))
    x1 = order.variable("x1")
    basis = reduced_gb([x1 ** 2 + 1, x1 + 1])
    assert basis.members == (x1 + 1,)


def test_normal_form_trace(load_fixture, poly):
    system = load_fixture("e")
    basis = reduced_gb(system.generators)
    trace = normal_form(poly(system.order, "x1*x2*x5 + x3"), basis)
    assert trace.normal_form == poly(system.order, "x3")
    assert trace.verify()
    assert is_b_reduced(trace.normal_form, basis)
    assert not is_b_reduced(poly(system.order, "x2*x5"), basis)
    with pytest.raises(PolynomialDivisionByZeroError):
        normal_form(poly(system.order, "x1"), [system.order.zero()])


def test_saturation(order3, poly, load_fixture):
    assert saturation_gb([poly(order3, "x1^2"), poly(order3, "x1*x2")], poly(order3, "x1")).is_unit
    assert texts(saturation_gb([poly(order3, "x1*x2")], poly(order3, "x1"))) == ["x2"]

    system = load_fixture("a")
    basis = reduced_gb(system.generators)
    assert saturation_gb(basis.members, poly(system.order, "x1")).members == basis.members
    with pytest.raises(PolynomialDivisionByZeroError):
        saturation_gb(basis.members, system.order.zero())


def test_radical_membership(order3, poly, load_fixture):
    system = load_fixture("c")
    assert radical_member(poly(system.order, "x1*x2"), system.generators)
    assert radical_member(poly(order3, "x1"), [poly(order3, "x1^2")])
    assert not radical_member(poly(order3, "x2"), [poly(order3, "x1^2")])
    assert radical_member(order3.zero(), [poly(order3, "x1^2")])


def test_basis_is_independent_of_generator_order(load_fixture):
    generators = load_fixture("d").generators
    assert same_ideal(reduced_gb(generators), reduced_gb(tuple(reversed(generators))))
