import pytest

from ritt_groebner.errors import OrderAssumptionError, PreconditionViolationError, StructuralViolationError, ZeroIdealError
from ritt_groebner.groebner import ideal_member, reduced_gb
from ritt_groebner.polyring import VariableOrder
from ritt_groebner.triset import AscendingSet, TriangularSet, classify_chain, prem_triset
from ritt_groebner.wchar import (
    CheckOptions,
    IrregularityCase,
    RittTag,
    WCharacteristicSet,
    charpro_check,
    irregularity_index,
    irregularity_report,
    ritt_charset,
    ritt_check,
    ritt_from_regular,
    ritt_of_elimination,
    star_chain,
    wchar_of_elimination,
    wcharacteristic_set,
)


def analyze(load_fixture, name):
    system = load_fixture(name)
    basis = reduced_gb(system.generators)
    return system, basis, wcharacteristic_set(basis)


def texts(polys):
    return [str(p) for p in polys]


def test_wchar_keeps_the_least_member_per_class(load_fixture):
    _, _, C = analyze(load_fixture, "d")
    assert texts(C.members) == ["x1^4", "x1^3*x2^3", "x1*x2*x3 + x1^2*x3 - x1^3"]
    assert C.parameters == ()
    assert C.order_assumption_holds()


def test_wchar_with_parameters_above_a_leading_variable(load_fixture):
    _, basis, C = analyze(load_fixture, "e")
    assert texts(C.members) == ["x1*x2", "x3*x4 - x2^2", "x2*x5 + x4^2"]
    assert C.leading_variables == ("x2", "x4", "x5")
    assert C.parameters == ("x1", "x3")
    assert not C.order_assumption_holds()
    assert texts(wchar_of_elimination(basis, 4).members) == ["x1*x2", "x3*x4 - x2^2"]


def test_reordering_fixture_b_satisfies_the_order_assumption(load_fixture, poly):
    system, _, C = analyze(load_fixture, "b")
    assert C.parameters == ("x2",)
    assert not C.order_assumption_holds()

    reordered = system.order.permuted(("x2", "x1", "x3"))
    basis = reduced_gb([g.to_order(reordered) for g in system.generators])
    assert basis.members == (
        poly(reordered, "x1^2"),
        poly(reordered, "x2^2*x3 + x1*x2"),
        poly(reordered, "x1*x3 + x2*x3 + x1"),
    )
    C = wcharacteristic_set(basis)
    assert C.members == (poly(reordered, "x1^2"), poly(reordered, "x2^2*x3 + x1*x2"))
    assert C.order_assumption_holds()
    classification = classify_chain(C.chain)
    assert classification.is_normal
    assert classification.is_ascending


def test_unit_ideal_has_a_degenerate_wchar(order3, poly):
    C = wcharacteristic_set(reduced_gb([poly(order3, "x1"), order3.one()]))
    assert C.is_unit
    with pytest.raises(PreconditionViolationError):
        C.chain
    result = ritt_charset(C.basis)
    assert result.tag is RittTag.ASCENDING
    assert result.charset.is_unit


def test_ritt_charset_from_a_regular_wchar(load_fixture, poly):
    system, basis, C = analyze(load_fixture, "a")
    result = ritt_charset(basis)
    assert result.tag is RittTag.REGULAR_STAR
    assert texts(result.charset.members) == ["x1*x2 - 1", "x1*x3 - 1"]
    assert result.alternative is None
    assert all(c.verify() for c in result.star_certificates)
    assert ritt_from_regular(C).members == result.charset.members
    assert ritt_check(basis, result.charset).passed


def test_ritt_charset_of_an_ascending_regular_wchar(load_fixture):
    _, basis, C = analyze(load_fixture, "b")
    result = ritt_charset(basis)
    assert result.tag is RittTag.ASCENDING
    assert result.charset.members == C.members
    assert result.alternative.members == C.members
    assert ritt_check(basis, result.charset).passed


def test_ritt_charset_of_an_ascending_irregular_wchar(load_fixture):
    _, basis, C = analyze(load_fixture, "d")
    result = ritt_charset(basis)
    assert result.tag is RittTag.ASCENDING
    assert result.charset.members == C.members
    assert result.alternative is None
    assert ritt_check(basis, result.charset, CheckOptions(sample_count=3, seed=7)).passed
    with pytest.raises(PreconditionViolationError):
        ritt_from_regular(C)


def test_ritt_charset_of_an_abnormal_wchar(load_fixture):
    _, basis, _ = analyze(load_fixture, "c")
    result = ritt_charset(basis)
    assert result.tag is RittTag.ABNORMAL
    assert result.charset is None
    assert result.report.k == 1


def test_ritt_charset_notes_a_failed_order_assumption(load_fixture):
    _, basis, _ = analyze(load_fixture, "e")
    result = ritt_charset(basis)
    assert result.tag is RittTag.ABNORMAL
    assert result.report is None
    assert "parameters" in result.note


def test_star_chain_certificates(load_fixture):
    _, _, C = analyze(load_fixture, "a")
    members, certificates = star_chain(C)
    assert len(members) == 2
    assert certificates[0].powers == (1,)
    assert certificates[0].verify()


def test_charpro_check_passes_on_fixtures(load_fixture):
    options = CheckOptions(sample_count=4, seed=3)
    for name in ("a", "b", "c", "d", "d_bar"):
        _, basis, C = analyze(load_fixture, name)
        report = charpro_check(basis, C, options)
        assert report.passed, name
        assert len(report.checks) == 2 * len(basis) + options.sample_count + len(C)


def test_charpro_check_reports_a_wrong_chain(load_fixture, poly):
    system, basis, _ = analyze(load_fixture, "a")
    wrong = WCharacteristicSet(basis, (poly(system.order, "x1*x2 - 1"), poly(system.order, "x3 + x2")))
    report = charpro_check(basis, wrong, CheckOptions(sample_count=0), strict=False)
    assert not report.passed
    assert report.failures()[0].name == "prem(basis[1], C) = 0"
    with pytest.raises(StructuralViolationError):
        charpro_check(basis, wrong, CheckOptions(sample_count=0))


def test_charpro_check_rejects_the_unit_ideal(order3, poly):
    basis = reduced_gb([order3.one()])
    with pytest.raises(PreconditionViolationError):
        charpro_check(basis, wcharacteristic_set(basis))


def test_irregularity_report_not_r_reduced(load_fixture, poly):
    system, basis, C = analyze(load_fixture, "c")
    report = irregularity_report(basis, C)
    assert (report.k, report.l) == (1, 1)
    assert report.case is IrregularityCase.NOT_R_REDUCED
    assert report.initial == poly(system.order, "x2")
    assert report.leading_variable == "x2"
    assert report.degree == 1
    assert report.tail.is_zero
    assert report.quotient is None
    assert len(report.relations) == 3
    assert report.all_relations_hold


def test_irregularity_report_r_reduced(load_fixture, poly):
    system, basis, C = analyze(load_fixture, "d")
    report = irregularity_report(basis, C)
    assert (report.k, report.l) == (1, 1)
    assert report.case is IrregularityCase.R_REDUCED
    assert report.initial == poly(system.order, "x1^3")
    assert report.power == 2
    assert report.quotient == poly(system.order, "x1")
    assert report.quotient_initial == system.order.one()
    assert report.alternative == "pseudo_remainder"
    assert report.all_relations_hold
    assert not report.relation("res(ini(I_2)").holds


def test_irregularity_report_with_both_alternatives(load_fixture, poly):
    system, basis, C = analyze(load_fixture, "d_bar")
    assert texts(basis) == ["x1^3", "x2^3", "x1*x2*x3 - x1^2*x2"]
    report = irregularity_report(basis, C)
    assert (report.k, report.l) == (2, 2)
    assert report.case is IrregularityCase.R_REDUCED
    assert report.power == 3
    assert report.quotient == poly(system.order, "x1^2*x2^2")
    assert report.quotient_initial == poly(system.order, "x1^2")
    assert report.alternative == "both"
    assert report.all_relations_hold
    assert all(r.certificate.verify() for r in report.relations)


def test_irregularity_report_order_assumption(load_fixture):
    _, basis, C = analyze(load_fixture, "e")
    with pytest.raises(OrderAssumptionError):
        irregularity_report(basis, C)
    report = irregularity_report(basis, C, check_order=False)
    assert (report.k, report.l) == (2, 1)
    assert report.case is IrregularityCase.NOT_R_REDUCED


def test_irregularity_report_needs_an_abnormal_wchar(load_fixture):
    _, basis, C = analyze(load_fixture, "a")
    with pytest.raises(PreconditionViolationError):
        irregularity_report(basis, C)


def test_ritt_of_elimination_ideals(load_fixture):
    _, basis, _ = analyze(load_fixture, "a")
    with pytest.raises(ZeroIdealError):
        ritt_of_elimination(basis, 1)
    assert texts(ritt_of_elimination(basis, 2).members) == ["x1*x2 - 1"]
    full = ritt_of_elimination(basis, 3)
    assert texts(full.members) == ["x1*x2 - 1", "x1*x3 - 1"]
    assert ritt_check(basis, full).passed

    _, basis, _ = analyze(load_fixture, "d")
    with pytest.raises(ZeroIdealError):
        ritt_of_elimination(basis, 0)
    assert texts(ritt_of_elimination(basis, 1).members) == ["x1^4"]
    for i in (2, 3):
        with pytest.raises(PreconditionViolationError):
            ritt_of_elimination(basis, i)


def test_irregularity_index(load_fixture):
    for name, index in (("a", 4), ("c", 3), ("d", 2), ("d_bar", 3)):
        _, basis, C = analyze(load_fixture, name)
        assert irregularity_index(C) == index, name
        if index <= C.order.n:
            assert irregularity_report(basis, C).index == index


def test_least_members_of_an_elimination_ideal_need_not_be_a_ritt_charset(load_fixture, poly):
    system, basis, _ = analyze(load_fixture, "e_bar")
    order = system.order
    element = poly(order, "x1*x4^2")
    assert ideal_member(element, basis)
    assert not prem_triset(element, TriangularSet(order, (poly(order, "x1*x2"),))).is_zero
    assert not ritt_check(basis, AscendingSet.of([poly(order, "x1*x2")])).passed
