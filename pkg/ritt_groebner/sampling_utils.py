"""
Seeded random polynomials, systems, ideal elements and triangular sets.

Every function takes an explicit ``random.Random`` so callers control the
seed and two runs with the same seed produce the same objects.
"""

import random
from typing import List, Optional, Sequence

from .constants import SAMPLE_COEFFICIENT_BOUND, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS
from .polyring import Polynomial, VariableOrder
from .triset import TriangularSet


def random_exponents(order: VariableOrder, rng: random.Random, max_degree: int,
                     variables: Optional[Sequence[int]] = None) -> List[int]:
    """
    Exponent vector of total degree at most ``max_degree``.

    Args:
        order: The variable order
        rng: Source of randomness
        max_degree: Bound on the total degree
        variables: 1-based indices allowed to occur (default: all)

    Returns:
        List[int]: Exponents of x_1..x_n
    """
    allowed = list(range(1, order.n + 1)) if variables is None else list(variables)
    exponents = [0] * order.n
    if not allowed:
        return exponents
    for _ in range(rng.randint(0, max_degree)):
        exponents[rng.choice(allowed) - 1] += 1
    return exponents


def random_coefficient(rng: random.Random, bound: int) -> int:
    value = rng.randint(1, bound)
    return value if rng.random() < 0.5 else -value


def random_polynomial(order: VariableOrder, rng: random.Random, max_degree: int = SAMPLE_MAX_DEGREE,
                      max_terms: int = SAMPLE_MAX_TERMS, coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND,
                      variables: Optional[Sequence[int]] = None) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exponents = random_exponents(order, rng, max_degree, variables)
        terms.append(((random_coefficient(rng, coefficient_bound), 1), exponents))
    return order.from_terms(terms)


def random_nonzero_polynomial(order: VariableOrder, rng: random.Random, **kwargs) -> Polynomial:
    while True:
        p = random_polynomial(order, rng, **kwargs)
        if not p.is_zero:
            return p


def random_system(order: VariableOrder, rng: random.Random, count: int, max_degree: int = 3,
                  max_terms: int = SAMPLE_MAX_TERMS,
                  coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND) -> List[Polynomial]:
    """``count`` nonzero generators, at least one of them nonconstant."""
    while True:
        system = [
            random_nonzero_polynomial(order, rng, max_degree=max_degree, max_terms=max_terms,
                                      coefficient_bound=coefficient_bound)
            for _ in range(count)
        ]
        if any(not p.is_constant for p in system):
            return system


def random_ideal_element(generators: Sequence[Polynomial], rng: random.Random,
                         max_degree: int = SAMPLE_MAX_DEGREE, max_terms: int = SAMPLE_MAX_TERMS,
                         coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND) -> Polynomial:
    """Sum of h_i * g_i with random multipliers h_i."""
    order = generators[0].order
    element = order.zero()
    for g in generators:
        h = random_polynomial(order, rng, max_degree, max_terms, coefficient_bound)
        element = element + h * g
    return element


def random_triangular_set(order: VariableOrder, rng: random.Random, length: int,
                          max_degree: int = 2, max_terms: int = 2,
                          coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND) -> TriangularSet:
    """Random chain whose members have the sampled classes as leading variables."""
    classes = sorted(rng.sample(range(1, order.n + 1), min(length, order.n)))
    members = []
    for c in classes:
        lower = list(range(1, c))
        x = order.variable(c)
        d = rng.randint(1, max_degree)
        initial = random_nonzero_polynomial(order, rng, max_degree=max_degree, max_terms=max_terms,
                                            coefficient_bound=coefficient_bound, variables=lower)
        member = initial * x ** d
        for e in range(d):
            coefficient = random_polynomial(order, rng, max_degree, max_terms, coefficient_bound, lower)
            member = member + coefficient * x ** e
        members.append(member)
    return TriangularSet(order, tuple(members))


def random_factor(order: VariableOrder, rng: random.Random, coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND) -> Polynomial:
    """A variable, optionally shifted by a constant or by another variable."""
    x = order.variable(rng.randint(1, order.n))
    shape = rng.random()
    if shape < 0.5:
        return x
    if shape < 0.75:
        return x + random_coefficient(rng, coefficient_bound)
    return x + random_coefficient(rng, coefficient_bound) * order.variable(rng.randint(1, order.n))


def random_factored_system(order: VariableOrder, rng: random.Random, count: int, factors: int = 2,
                           coefficient_bound: int = SAMPLE_COEFFICIENT_BOUND) -> List[Polynomial]:
    """
    ``count`` generators, each a product of up to ``factors`` sparse factors.

    Such systems share factors between generators far more often than dense
    ones, so their W-characteristic sets are frequently abnormal.
    """
    while True:
        system = []
        for _ in range(count):
            g = order.one()
            for _ in range(rng.randint(1, factors)):
                g = g * random_factor(order, rng, coefficient_bound)
            if not g.is_zero:
                system.append(g)
        if any(not p.is_constant for p in system):
            return system
