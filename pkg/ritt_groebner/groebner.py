"""
Reduced plex Gröbner bases by Buchberger's algorithm.

Pairs are treated with the normal selection strategy (plex-smallest lcm
first) and pruned with the Gebauer-Möller form of the coprime and chain
criteria. Also provides normal forms with cofactor traces, ideal membership,
elimination prefixes, saturation and radical membership via a tag variable.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Set, Tuple, Union

from sympy.polys.rings import PolyElement

from .errors import EmptyInputError, OrderMismatchError, PolynomialDivisionByZeroError, ZeroIdealError
from .polyring import Monomial, Polynomial, VariableOrder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    """Monic, mutually B-reduced members sorted ascending by leading monomial."""

    order: VariableOrder
    members: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def is_unit(self) -> bool:
        return len(self.members) == 1 and self.members[0].is_constant

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(p.lpp for p in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Polynomial:
        return self.members[i]

    def contains(self, P: Polynomial) -> bool:
        return ideal_member(P, self)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.members) + "}"


@dataclass(frozen=True)
class ReductionTrace:
    """polynomial = sum(cofactors[i] * divisors[i]) + normal_form."""

    polynomial: Polynomial
    divisors: Tuple[Polynomial, ...]
    cofactors: Tuple[Polynomial, ...]
    normal_form: Polynomial

    def verify(self) -> bool:
        combination = self.normal_form
        for Q, P in zip(self.cofactors, self.divisors):
            combination = combination + Q * P
        if not (combination - self.polynomial).is_zero:
            return False
        leading = [P.lpp for P in self.divisors]
        return not any(lm.divides(m) for _, m in self.normal_form.terms() for lm in leading)


# ==============================================================================
# REDUCTION
# ==============================================================================

def _reduce(p: PolyElement, divisors: Sequence[PolyElement], track: bool = False):
    """
    Full reduction of p, always attacking the greatest reducible term.

    Terms above the current leading term are already irreducible, so peeling
    them off into the residue keeps the greatest-first rule. Ties go to the
    lowest divisor index.
    """
    ring = p.ring
    domain = ring.domain
    heads = [(g.LM, g.LC, g) for g in divisors]
    cofactors: List[Dict[Tuple[int, ...], object]] = [{} for _ in divisors]
    residue = {}
    p = p.copy()
    while p:
        monom, coeff = p.LT
        for i, (lm, lc, g) in enumerate(heads):
            shift = ring.monomial_div(monom, lm)
            if shift is not None:
                factor = domain.quo(coeff, lc)
                p = p - g.mul_term((shift, factor))
                if track:
                    cofactors[i][shift] = cofactors[i].get(shift, domain.zero) + factor
                break
        else:
            residue[monom] = coeff
            del p[monom]
    remainder = ring.from_dict(residue)
    if track:
        return remainder, [ring.from_dict(c) for c in cofactors]
    return remainder


def _divisor_list(B: Union[ReducedGroebnerBasis, Sequence[Polynomial]]) -> Tuple[Polynomial, ...]:
    divisors = tuple(B.members if isinstance(B, ReducedGroebnerBasis) else B)
    if any(P.is_zero for P in divisors):
        raise PolynomialDivisionByZeroError("cannot reduce by the zero polynomial")
    return divisors


def normal_form(G: Polynomial, B: Union[ReducedGroebnerBasis, Sequence[Polynomial]]) -> ReductionTrace:
    """
    Normal form of G with respect to B, with the cofactor trace.

    Args:
        G: The polynomial to reduce
        B: A basis or any list of nonzero polynomials under G's order

    Returns:
        ReductionTrace: Cofactors per divisor and the B-reduced remainder
    """
    divisors = _divisor_list(B)
    for P in divisors:
        if P.order != G.order:
            raise OrderMismatchError(f"divisor {P} is not under {G.order}")
    remainder, cofactors = _reduce(G.rep, [P.rep for P in divisors], track=True)
    return ReductionTrace(
        polynomial=G,
        divisors=divisors,
        cofactors=tuple(Polynomial(G.order, c) for c in cofactors),
        normal_form=Polynomial(G.order, remainder),
    )


def ideal_member(P: Polynomial, B: ReducedGroebnerBasis) -> bool:
    if not B.members:
        return P.is_zero
    return not _reduce(P.rep, [g.rep for g in B.members])


def is_b_reduced(P: Polynomial, B: ReducedGroebnerBasis) -> bool:
    """No term of P is divisible by a leading monomial of B."""
    leading = B.leading_monomials
    return not any(lm.divides(m) for _, m in P.terms() for lm in leading)


# ==============================================================================
# BUCHBERGER'S ALGORITHM
# ==============================================================================

def s_polynomial(f: PolyElement, g: PolyElement) -> PolyElement:
    """S-polynomial of two monic polynomials."""
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(ring.monomial_div(lcm, f.LM)) - g.mul_monom(ring.monomial_div(lcm, g.LM))


def _select(basis: List[PolyElement], pairs: Set[Tuple[int, int]]) -> Tuple[int, int]:
    ring = basis[0].ring
    return min(pairs, key=lambda p: (ring.order(ring.monomial_lcm(basis[p[0]].LM, basis[p[1]].LM)), p))


def _update(basis: List[PolyElement], pairs: Set[Tuple[int, int]], f: PolyElement):
    """Add f to the basis and prune pairs with the Gebauer-Möller criteria."""
    ring = f.ring
    lcm, mul, div = ring.monomial_lcm, ring.monomial_mul, ring.monomial_div
    lmf = f.LM
    lms = [g.LM for g in basis]

    pairs = {
        (i, j) for (i, j) in pairs
        if div(lcm(lms[i], lms[j]), lmf) is None
        or lcm(lms[i], lms[j]) == lcm(lms[i], lmf)
        or lcm(lms[i], lms[j]) == lcm(lms[j], lmf)
    }
    by_lcm: Dict[Tuple[int, ...], List[int]] = {}
    for i, lm in enumerate(lms):
        by_lcm.setdefault(lcm(lm, lmf), []).append(i)
    minimal: List[Tuple[int, ...]] = []
    for L in sorted(by_lcm, key=ring.order):
        if all(div(L, M) is None for M in minimal):
            minimal.append(L)
    fresh = set()
    for L in minimal:
        if not any(lcm(lms[i], lmf) == mul(lms[i], lmf) for i in by_lcm[L]):
            fresh.add((min(by_lcm[L]), len(basis)))
    return basis + [f], pairs | fresh


def _minimalize(basis: List[PolyElement]) -> List[PolyElement]:
    ring = basis[0].ring
    kept: List[PolyElement] = []
    for f in sorted(basis, key=lambda h: ring.order(h.LM)):
        if all(ring.monomial_div(f.LM, g.LM) is None for g in kept):
            kept.append(f)
    return kept


def _interreduce(basis: List[PolyElement]) -> List[PolyElement]:
    return [_reduce(g, basis[:i] + basis[i + 1:]).monic() for i, g in enumerate(basis)]


def _buchberger(generators: Sequence[PolyElement]) -> Tuple[List[PolyElement], int]:
    basis: List[PolyElement] = []
    pairs: Set[Tuple[int, int]] = set()
    for f in generators:
        if f.is_ground:
            return [f.ring.one], 0
        basis, pairs = _update(basis, pairs, f.monic())

    processed = 0
    while pairs:
        i, j = _select(basis, pairs)
        pairs.remove((i, j))
        processed += 1
        r = _reduce(s_polynomial(basis[i], basis[j]), basis)
        if r:
            if r.is_ground:
                return [r.ring.one], processed
            basis, pairs = _update(basis, pairs, r.monic())

    return _interreduce(_minimalize(basis)), processed


def reduced_gb(gens: Sequence[Polynomial]) -> ReducedGroebnerBasis:
    """
    Reduced plex Gröbner basis of the ideal generated by ``gens``.

    Args:
        gens: Generators under one order; at least one nonzero

    Returns:
        ReducedGroebnerBasis: Members sorted ascending by leading monomial; [1] for the unit ideal
    """
    gens = list(gens)
    if not gens:
        raise EmptyInputError("reduced_gb needs at least one generator")
    order = gens[0].order
    for g in gens:
        if g.order != order:
            raise OrderMismatchError(f"generator {g} is not under {order}")
    reps = [g.rep for g in gens if not g.is_zero]
    if not reps:
        raise ZeroIdealError("all generators are zero")

    members, processed = _buchberger(reps)
    ring = order.ring
    members.sort(key=lambda h: ring.order(h.LM))
    logger.debug(
        f"[reduced_gb]: generators={len(reps)}, pairs_processed={processed}, basis_size={len(members)}"
    )
    return ReducedGroebnerBasis(order, tuple(Polynomial(order, m) for m in members))


def s_polynomials_reduce(B: ReducedGroebnerBasis) -> bool:
    """Buchberger's criterion on every pair of members."""
    reps = [g.rep for g in B.members]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if _reduce(s_polynomial(reps[i], reps[j]), reps):
                return False
    return True


# ==============================================================================
# ELIMINATION, SATURATION AND RADICAL MEMBERSHIP
# ==============================================================================

def elimination_prefix(B: ReducedGroebnerBasis, i: int) -> ReducedGroebnerBasis:
    """B ∩ k[x_1..x_i]; already the reduced basis of the elimination ideal."""
    if not 0 <= i <= B.order.n:
        raise ValueError(f"elimination index {i} outside 0..{B.order.n}")
    return ReducedGroebnerBasis(B.order, tuple(p for p in B.members if p.cls <= i))


def _with_tag(gens: Sequence[Polynomial], f: Polynomial, sign: int) -> Tuple[VariableOrder, List[Polynomial]]:
    order = f.order
    tagged, tag = order.with_tag()
    lifted = [g.embed(tagged) for g in gens if not g.is_zero]
    z = tagged.variable(tag)
    lifted.append(sign * (z * f.embed(tagged) - 1))
    return tagged, lifted


def saturation_gb(gens: Sequence[Polynomial], f: Polynomial) -> ReducedGroebnerBasis:
    """
    Reduced basis of <gens> : f^oo.

    Adjoins z*f - 1 for a fresh plex-greatest z and keeps the z-free members.
    """
    if f.is_zero:
        raise PolynomialDivisionByZeroError("cannot saturate by the zero polynomial")
    order = f.order
    tagged, lifted = _with_tag(gens, f, 1)
    basis = reduced_gb(lifted)
    members = tuple(p.restrict(order) for p in basis.members if p.cls < tagged.n)
    logger.debug(f"[saturation_gb]: generators={len(lifted) - 1}, saturation_size={len(members)}")
    return ReducedGroebnerBasis(order, members)


def radical_member(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """True iff f lies in the radical of <gens>, i.e. 1 in <gens, 1 - z*f>."""
    if f.is_zero:
        return True
    _, lifted = _with_tag(gens, f, -1)
    return reduced_gb(lifted).is_unit


def same_ideal(A: ReducedGroebnerBasis, B: ReducedGroebnerBasis) -> bool:
    return A.order == B.order and A.members == B.members
