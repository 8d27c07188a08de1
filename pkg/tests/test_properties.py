"""Seeded randomized checks of the algebraic guarantees over Q and F_32003, n = 3 and 4."""

import random

import pytest

from ritt_groebner.decompose import DecomposeOptions, decompose_normal, enforce_order_assumption, make_branch, verify_decomposition
from ritt_groebner.errors import NodeBudgetExceededError, OrderUnstableError
from ritt_groebner.groebner import elimination_prefix, ideal_member, reduced_gb, s_polynomials_reduce, same_ideal, saturation_gb
from ritt_groebner.polyring import CoefficientField, Monomial, Ordering, VariableOrder, plex_compare, pseudo_divide, resultant, resultant_certificate
from ritt_groebner.render_utils import polynomial_payload
from ritt_groebner.sampling_utils import (
    random_coefficient,
    random_exponents,
    random_factored_system,
    random_nonzero_polynomial,
    random_polynomial,
    random_system,
    random_triangular_set,
)
from ritt_groebner.system_file_utils import parse_polynomial
from ritt_groebner.triset import Rank, TriangularSet, classify_chain, prem_triset, rank_compare_asc, res_triset
from ritt_groebner.wchar import (
    CheckOptions,
    charpro_check,
    irregularity_index,
    irregularity_report,
    ritt_charset,
    ritt_check,
    ritt_from_regular,
    ritt_of_elimination,
    wchar_of_elimination,
    wcharacteristic_set,
)

CONFIGS = [(field, n) for field in ("q", "fp:32003") for n in (3, 4)]
SWEEP = 200


@pytest.fixture(params=CONFIGS, ids=[f"{field}-n{n}" for field, n in CONFIGS])
def order(request):
    field, n = request.param
    return VariableOrder(tuple(f"x{i}" for i in range(1, n + 1)), CoefficientField.parse(field))


def dense_systems(order, seed, count):
    rng = random.Random(seed)
    return [random_system(order, rng, rng.randint(2, 3), max_degree=2) for _ in range(count)]


def factored_systems(order, seed, count):
    rng = random.Random(seed)
    return [random_factored_system(order, rng, rng.randint(2, 4)) for _ in range(count)]


# ==============================================================================
# ARITHMETIC
# ==============================================================================

def test_ring_axioms(order):
    rng = random.Random(1)
    for _ in range(20):
        p, q, r = (random_polynomial(order, rng, max_degree=3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero
        assert p * order.one() == p
        assert (p * order.zero()).is_zero


def test_plex_compare_is_a_total_order(order):
    rng = random.Random(2)
    monomials = [Monomial(order, tuple(random_exponents(order, rng, 4))) for _ in range(12)]
    for a in monomials:
        for b in monomials:
            ab = plex_compare(a, b)
            assert plex_compare(b, a).value == -ab.value
            assert (ab is Ordering.EQUAL) == (a.exponents == b.exponents)
            differing = [k for k in range(order.n) if a.exponents[k] != b.exponents[k]]
            if differing:
                top = differing[-1]
                expected = Ordering.LESS if a.exponents[top] < b.exponents[top] else Ordering.GREATER
                assert ab is expected
            for c in monomials:
                if ab is Ordering.LESS and plex_compare(b, c) is Ordering.LESS:
                    assert plex_compare(a, c) is Ordering.LESS


def test_polynomials_survive_printing_and_parsing(order):
    rng = random.Random(3)
    for _ in range(25):
        p = random_polynomial(order, rng, max_degree=3, max_terms=4)
        assert parse_polynomial(str(p), order) == p
        terms = polynomial_payload(p)["terms"]
        assert order.from_terms(((num, den), exps) for num, den, exps in terms) == p


def test_pseudo_division_and_resultant_certificates(order):
    rng = random.Random(11)
    for _ in range(30):
        G = random_nonzero_polynomial(order, rng, max_degree=3)
        F = random_nonzero_polynomial(order, rng, max_degree=3)
        var = rng.randint(1, order.n)
        if F.degree(var) > 0:
            assert pseudo_divide(G, F, var).verify()
        if F.degree(var) > 0 or G.degree(var) > 0:
            assert resultant_certificate(F, G, var).verify()


def test_resultant_sign_symmetry(order):
    rng = random.Random(4)
    checked = 0
    for _ in range(40):
        F = random_nonzero_polynomial(order, rng, max_degree=2)
        G = random_nonzero_polynomial(order, rng, max_degree=2)
        var = rng.randint(1, order.n)
        m, n = F.degree(var), G.degree(var)
        if m < 1 or n < 1:
            continue
        assert resultant(F, G, var) == (-1) ** (m * n) * resultant(G, F, var)
        checked += 1
    assert checked


# ==============================================================================
# TRIANGULAR SETS
# ==============================================================================

def test_chain_certificates(order):
    rng = random.Random(12)
    for _ in range(20):
        T = random_triangular_set(order, rng, rng.randint(1, order.n))
        P = random_nonzero_polynomial(order, rng, max_degree=3)
        assert prem_triset(P, T).verify()
        assert res_triset(P, T).verify()


def test_normal_chains_are_regular(order):
    rng = random.Random(13)
    for _ in range(40):
        classification = classify_chain(random_triangular_set(order, rng, rng.randint(1, order.n)))
        if classification.is_normal:
            assert classification.is_regular


def test_rank_comparison_is_a_total_preorder(order):
    rng = random.Random(14)
    chains = [random_triangular_set(order, rng, rng.randint(1, order.n)) for _ in range(10)]
    at_most = (Rank.LOWER, Rank.SAME)
    for A in chains:
        assert rank_compare_asc(A, A) is Rank.SAME
        for B in chains:
            ab = rank_compare_asc(A, B)
            assert rank_compare_asc(B, A).value == -ab.value
            for C in chains:
                bc = rank_compare_asc(B, C)
                if ab in at_most and bc in at_most:
                    ac = rank_compare_asc(A, C)
                    assert ac in at_most
                    if Rank.LOWER in (ab, bc):
                        assert ac is Rank.LOWER


def _regular_chain_below_top(order, rng):
    while True:
        T = random_triangular_set(order, rng, rng.randint(1, order.n - 1))
        if T[len(T) - 1].cls < order.n and classify_chain(T).is_regular:
            return T


def _coefficient_below_top(order, rng, T, in_ideal):
    lower = range(1, order.n)
    if not in_ideal:
        return random_nonzero_polynomial(order, rng, max_degree=2, variables=lower)
    element = order.zero()
    for t in T:
        element = element + random_polynomial(order, rng, 1, 2, variables=lower) * t
    return element


def test_regular_chain_prem_splits_over_top_coefficients(order):
    rng = random.Random(15)
    x = order.variable(order.n)
    for _ in range(15):
        T = _regular_chain_below_top(order, rng)
        degree = rng.randint(1, 2)
        coefficients = [_coefficient_below_top(order, rng, T, rng.random() < 0.7) for _ in range(degree + 1)]
        if coefficients[-1].is_zero:
            continue
        P = order.zero()
        for e, c in enumerate(coefficients):
            P = P + c * x ** e
        vanishing = [prem_triset(c, T).is_zero for c in coefficients]
        assert prem_triset(P, T).is_zero == all(vanishing)

        zero_prem = [c for c, v in zip(coefficients, vanishing) if v]
        for a in zero_prem:
            for b in zero_prem:
                assert prem_triset(a + b, T).is_zero


# ==============================================================================
# GROEBNER BASES
# ==============================================================================

def test_reduced_basis_properties(order):
    rng = random.Random(21)
    for generators in dense_systems(order, seed=21, count=8) + factored_systems(order, seed=21, count=8):
        basis = reduced_gb(generators)
        assert same_ideal(basis, reduced_gb(list(reversed(generators))))
        rescaled = [random_coefficient(rng, 5) * g for g in generators]
        assert same_ideal(basis, reduced_gb(rescaled))
        if basis.is_unit:
            continue
        assert s_polynomials_reduce(basis)
        assert same_ideal(reduced_gb(basis.members), basis)
        C = wcharacteristic_set(basis)
        for i in range(order.n + 1):
            prefix = elimination_prefix(basis, i)
            assert wchar_of_elimination(basis, i).members == C.prefix(i)
            if len(prefix):
                assert same_ideal(reduced_gb(prefix.members), prefix)


def test_saturation_by_a_variable_of_a_monomial_ideal(order):
    rng = random.Random(22)
    for _ in range(10):
        generators = []
        while len(generators) < 3:
            exponents = random_exponents(order, rng, 3)
            if any(exponents):
                generators.append(order.from_terms([((1, 1), exponents)]))
        f = order.variable(rng.randint(1, order.n))
        ideal = reduced_gb(generators)
        saturated = saturation_gb(generators, f)
        for g in generators:
            assert ideal_member(g, saturated)
        for g in saturated.members:
            assert any(ideal_member(f ** q * g, ideal) for q in range(4))


# ==============================================================================
# CHARACTERISTIC SETS
# ==============================================================================

def _characteristic_checks(basis, options):
    C = wcharacteristic_set(basis)
    assert charpro_check(basis, C, options, strict=False).passed
    classification = classify_chain(C.chain)
    if classification.is_regular:
        assert rank_compare_asc(ritt_from_regular(C), C.chain) is Rank.SAME
    result = ritt_charset(basis, check_order=False)
    if result.charset is not None and not result.charset.is_unit:
        assert ritt_check(basis, result.charset, options).passed

    for i in range(1, basis.order.n + 1):
        members = C.prefix(i)
        if not members or not classify_chain(TriangularSet(basis.order, members)).is_regular:
            continue
        assert ritt_check(elimination_prefix(basis, i), ritt_of_elimination(basis, i), options).passed


def test_characteristic_properties(order):
    options = CheckOptions(sample_count=2, seed=1)
    for generators in dense_systems(order, seed=23, count=5) + factored_systems(order, seed=23, count=5):
        basis = reduced_gb(generators)
        if not basis.is_unit:
            _characteristic_checks(basis, options)


def _abnormal_case(generators):
    """Reduced basis and W-characteristic set under a stable order when abnormal, else None."""
    basis = reduced_gb(generators)
    if basis.is_unit:
        return None
    C = wcharacteristic_set(basis)
    if not C.order_assumption_holds():
        try:
            branch = enforce_order_assumption(make_branch(basis.members, basis=basis))
        except OrderUnstableError:
            return None
        basis, C = branch.basis, branch.wchar
    if classify_chain(C.chain).is_normal:
        return None
    return basis, C


def _check_irregularities(systems):
    abnormal = 0
    for generators in systems:
        case = _abnormal_case(generators)
        if case is None:
            continue
        basis, C = case
        report = irregularity_report(basis, C)
        assert report.all_relations_hold, [r.label for r in report.relations if not r.holds]
        assert report.index == irregularity_index(C) <= basis.order.n
        abnormal += 1
    return abnormal


def test_irregularity_relations_hold_on_abnormal_systems(order):
    assert _check_irregularities(factored_systems(order, seed=24, count=40)) > 0


# ==============================================================================
# DECOMPOSITION
# ==============================================================================

def assert_sound(generators, max_nodes):
    try:
        result = decompose_normal(generators, DecomposeOptions(max_nodes=max_nodes))
    except NodeBudgetExceededError:
        return False
    report = verify_decomposition(generators, result)
    for category in ("containment", "cover", "growth", "normality"):
        assert report.category_passed(category), category
    unstable = {b.path for b in result.unstable}
    assert all(c.path in unstable for c in report.category("completeness") if not c.passed)
    return True


def test_decomposition_is_sound(order):
    systems = dense_systems(order, seed=31, count=3) + factored_systems(order, seed=31, count=4)
    finished = [assert_sound(generators, 200) for generators in systems]
    assert any(finished)


# ==============================================================================
# SWEEPS
# ==============================================================================

@pytest.mark.slow
def test_characteristic_sweep(order):
    options = CheckOptions(sample_count=2, seed=2)
    for generators in dense_systems(order, seed=41, count=SWEEP // 2) + factored_systems(order, seed=41, count=SWEEP // 2):
        basis = reduced_gb(generators)
        if not basis.is_unit:
            _characteristic_checks(basis, options)


@pytest.mark.slow
def test_irregularity_sweep(order):
    assert _check_irregularities(factored_systems(order, seed=42, count=SWEEP)) > 0


@pytest.mark.slow
def test_decomposition_sweep(order):
    systems = dense_systems(order, seed=43, count=SWEEP // 2) + factored_systems(order, seed=43, count=SWEEP // 2)
    finished = [assert_sound(generators, 300) for generators in systems]
    assert any(finished)
