"""
Triangular and ascending sets over a fixed plex order.

Provides shape and rank comparisons, pseudo-remainders and iterated
resultants over triangular sets (each with a re-verifiable certificate), and
the regular/normal classification of chains.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple, Union

from .errors import (
    EmptyInputError,
    NotAscendingError,
    NotTriangularError,
    OrderMismatchError,
    PreconditionViolationError,
    ZeroRankError,
)
from .polyring import Polynomial, VariableOrder, product, pseudo_divide, resultant_certificate

logger = logging.getLogger(__name__)


class Shape(Enum):
    NOT_TRIANGULAR = "not-triangular"
    TRIANGULAR = "triangular"
    ASCENDING = "ascending"


class Rank(Enum):
    LOWER = -1
    SAME = 0
    HIGHER = 1


# ==============================================================================
# SHAPES
# ==============================================================================

@dataclass(frozen=True)
class ShapeReport:
    shape: Shape
    witness: Optional[Tuple[int, int]] = None
    reason: str = ""


def _r_reduced(P: Polynomial, T: Polynomial) -> bool:
    return P.degree(T.cls) < T.leading_degree


def classify_shape(polys: Sequence[Polynomial]) -> ShapeReport:
    """
    Classify a polynomial list as not-triangular, triangular or ascending.

    Witness pairs are 1-based (i, j) with i < j; for ascending failures T_j is
    not R-reduced with respect to T_i.
    """
    polys = list(polys)
    if not polys:
        raise EmptyInputError("cannot classify an empty list")
    if len(polys) == 1 and polys[0].is_constant:
        if polys[0].is_zero:
            return ShapeReport(Shape.NOT_TRIANGULAR, (1, 1), "zero polynomial")
        return ShapeReport(Shape.ASCENDING, None, "single nonzero constant")

    for i, p in enumerate(polys, start=1):
        if p.is_constant:
            return ShapeReport(Shape.NOT_TRIANGULAR, (i, i), f"member {i} is constant")
    for i in range(1, len(polys)):
        if polys[i - 1].cls >= polys[i].cls:
            return ShapeReport(
                Shape.NOT_TRIANGULAR,
                (i, i + 1),
                f"classes {polys[i - 1].cls} and {polys[i].cls} do not increase",
            )

    for j in range(1, len(polys)):
        for i in range(j):
            if not _r_reduced(polys[j], polys[i]):
                return ShapeReport(
                    Shape.TRIANGULAR,
                    (i + 1, j + 1),
                    f"member {j + 1} has degree {polys[j].degree(polys[i].cls)} "
                    f"in {polys[i].leading_variable}, not below {polys[i].leading_degree}",
                )
    return ShapeReport(Shape.ASCENDING)


# ==============================================================================
# TRIANGULAR AND ASCENDING SETS
# ==============================================================================

@dataclass(frozen=True)
class TriangularSet:
    """[T_1..T_r] with 0 < cls(T_1) < ... < cls(T_r); the empty chain is allowed."""

    order: VariableOrder
    members: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for p in self.members:
            if p.order != self.order:
                raise OrderMismatchError(f"member {p} is not under {self.order}")
        if self.members:
            report = classify_shape(self.members)
            if report.shape is Shape.NOT_TRIANGULAR:
                raise NotTriangularError(f"not a triangular set: {report.reason}")

    @classmethod
    def of(cls, polys: Sequence[Polynomial]) -> "TriangularSet":
        polys = list(polys)
        if not polys:
            raise EmptyInputError("TriangularSet.of needs at least one member")
        return cls(polys[0].order, tuple(polys))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Polynomial:
        return self.members[i]

    def prefix(self, i: int) -> "TriangularSet":
        return TriangularSet(self.order, self.members[:i])

    @property
    def classes(self) -> Tuple[int, ...]:
        return tuple(p.cls for p in self.members)

    @property
    def leading_variables(self) -> Tuple[str, ...]:
        return tuple(p.leading_variable for p in self.members)

    @property
    def initials(self) -> Tuple[Polynomial, ...]:
        return tuple(p.initial for p in self.members)

    def initial_product(self) -> Polynomial:
        return product(self.initials, self.order)

    def is_ascending(self) -> bool:
        return bool(self.members) and classify_shape(self.members).shape is Shape.ASCENDING

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.members) + "]"


@dataclass(frozen=True)
class AscendingSet:
    """Either a single nonzero constant or a pairwise R-reduced triangular set."""

    order: VariableOrder
    members: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise EmptyInputError("an ascending set has at least one member")
        report = classify_shape(self.members)
        if report.shape is not Shape.ASCENDING:
            raise NotAscendingError(f"not an ascending set: {report.reason} (pair {report.witness})")

    @classmethod
    def of(cls, polys: Sequence[Polynomial]) -> "AscendingSet":
        polys = list(polys)
        if not polys:
            raise EmptyInputError("AscendingSet.of needs at least one member")
        return cls(polys[0].order, tuple(polys))

    @property
    def is_unit(self) -> bool:
        return len(self.members) == 1 and self.members[0].is_constant

    def triangular(self) -> TriangularSet:
        if self.is_unit:
            raise PreconditionViolationError("the constant ascending set is not triangular")
        return TriangularSet(self.order, self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.members)

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.members) + "]"


# ==============================================================================
# PSEUDO-REMAINDERS AND RESULTANTS OVER CHAINS
# ==============================================================================

@dataclass(frozen=True)
class PremCertificate:
    """I_1^q_1 ... I_r^q_r * P = Q_1*T_1 + ... + Q_r*T_r + R."""

    polynomial: Polynomial
    chain: TriangularSet
    powers: Tuple[int, ...]
    cofactors: Tuple[Polynomial, ...]
    remainder: Polynomial

    @property
    def is_zero(self) -> bool:
        return self.remainder.is_zero

    def verify(self) -> bool:
        order = self.polynomial.order
        multiplier = product((I ** q for I, q in zip(self.chain.initials, self.powers)), order)
        combination = self.remainder
        for Q, T in zip(self.cofactors, self.chain):
            combination = combination + Q * T
        if not (multiplier * self.polynomial - combination).is_zero:
            return False
        return all(self.remainder.degree(T.cls) < T.leading_degree for T in self.chain)


def prem_triset(P: Polynomial, T: TriangularSet) -> PremCertificate:
    """
    Pseudo-remainder of P with respect to T, reducing by T_r first.

    Args:
        P: The polynomial to reduce
        T: The triangular set

    Returns:
        PremCertificate: Powers, cofactors and the R-reduced remainder
    """
    if P.order != T.order:
        raise OrderMismatchError(f"{P} is not under {T.order}")
    r = len(T)
    powers = [0] * r
    cofactors = [T.order.zero()] * r
    remainder = P
    for i in range(r - 1, -1, -1):
        member = T[i]
        step = pseudo_divide(remainder, member, member.cls)
        if step.power:
            scale = step.multiplier ** step.power
            for j in range(i + 1, r):
                cofactors[j] = cofactors[j] * scale
        cofactors[i] = step.quotient
        powers[i] = step.power
        remainder = step.remainder
    return PremCertificate(P, T, tuple(powers), tuple(cofactors), remainder)


def prem_chain(P: Polynomial, polys: Sequence[Polynomial]) -> Polynomial:
    return prem_triset(P, TriangularSet(P.order, tuple(polys))).remainder


@dataclass(frozen=True)
class ResCertificate:
    """N = A*F + B_1*T_1 + ... + B_r*T_r with N free of every lv(T_i)."""

    polynomial: Polynomial
    chain: TriangularSet
    value: Polynomial
    cofactor: Polynomial
    chain_cofactors: Tuple[Polynomial, ...]

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def verify(self) -> bool:
        combination = self.cofactor * self.polynomial
        for B, T in zip(self.chain_cofactors, self.chain):
            combination = combination + B * T
        if not (combination - self.value).is_zero:
            return False
        return not any(self.value.depends_on(T.cls) for T in self.chain)


def res_triset(F: Polynomial, T: TriangularSet) -> ResCertificate:
    """
    Iterated resultant res(...res(F, T_r)..., T_1).

    A step whose current value has degree 0 in lv(T_i) leaves the value
    unchanged, so constants pass through with cofactor 1.
    """
    if F.order != T.order:
        raise OrderMismatchError(f"{F} is not under {T.order}")
    order = T.order
    r = len(T)
    value = F
    cofactor = order.one()
    chain_cofactors = [order.zero()] * r
    for i in range(r - 1, -1, -1):
        member = T[i]
        if value.is_zero or not value.depends_on(member.cls):
            continue
        step = resultant_certificate(value, member, member.cls)
        alpha, beta = step.first_cofactor, step.second_cofactor
        cofactor = alpha * cofactor
        for j in range(i, r):
            chain_cofactors[j] = alpha * chain_cofactors[j]
        chain_cofactors[i] = chain_cofactors[i] + beta
        value = step.value
    return ResCertificate(F, T, value, cofactor, tuple(chain_cofactors))


# ==============================================================================
# RANKS
# ==============================================================================

def rank_compare_poly(F: Polynomial, G: Polynomial) -> Rank:
    if F.is_zero or G.is_zero:
        raise ZeroRankError("the zero polynomial has no rank")
    if F.cls != G.cls:
        return Rank.LOWER if F.cls < G.cls else Rank.HIGHER
    if F.cls == 0 or F.leading_degree == G.leading_degree:
        return Rank.SAME
    return Rank.LOWER if F.leading_degree < G.leading_degree else Rank.HIGHER


def rank_compare_asc(A: Union[AscendingSet, TriangularSet], B: Union[AscendingSet, TriangularSet]) -> Rank:
    """Lower if some first differing pair is lower, or if A strictly extends B rank-wise."""
    for a, b in zip(A.members, B.members):
        rank = rank_compare_poly(a, b)
        if rank is not Rank.SAME:
            return rank
    if len(A) == len(B):
        return Rank.SAME
    return Rank.LOWER if len(A) > len(B) else Rank.HIGHER


# ==============================================================================
# REGULAR AND NORMAL CHAINS
# ==============================================================================

@dataclass(frozen=True)
class ChainWitness:
    index: int
    polynomial: Polynomial
    detail: str
    earlier: Optional[int] = None


@dataclass(frozen=True)
class ChainClassification:
    chain: TriangularSet
    is_ascending: bool
    is_regular: bool
    is_normal: bool
    ascending_witness: Optional[Tuple[int, int]] = None
    regular_witness: Optional[ChainWitness] = None
    normal_witness: Optional[ChainWitness] = None
    resultants: Tuple[ResCertificate, ...] = field(default=(), repr=False)

    @property
    def normal_prefix_length(self) -> int:
        """Largest k such that [T_1..T_k] is normal."""
        if self.is_normal:
            return len(self.chain)
        return self.normal_witness.index - 1


def _first_abnormal(T: TriangularSet) -> Optional[ChainWitness]:
    for j in range(1, len(T)):
        initial = T[j].initial
        for i in range(j):
            if initial.depends_on(T[i].cls):
                return ChainWitness(
                    index=j + 1,
                    polynomial=initial,
                    detail=f"ini(T_{j + 1}) = {initial} involves {T[i].leading_variable}",
                    earlier=i + 1,
                )
    return None


def classify_chain(T: TriangularSet) -> ChainClassification:
    if not len(T):
        raise EmptyInputError("cannot classify an empty chain")
    shape = classify_shape(T.members)
    normal_witness = _first_abnormal(T)

    resultants = []
    regular_witness = None
    for j in range(1, len(T)):
        certificate = res_triset(T[j].initial, T.prefix(j))
        resultants.append(certificate)
        if certificate.is_zero:
            regular_witness = ChainWitness(
                index=j + 1,
                polynomial=T[j].initial,
                detail=f"res(ini(T_{j + 1}), [T_1..T_{j}]) = 0",
            )
            break

    classification = ChainClassification(
        chain=T,
        is_ascending=shape.shape is Shape.ASCENDING,
        is_regular=regular_witness is None,
        is_normal=normal_witness is None,
        ascending_witness=shape.witness if shape.shape is not Shape.ASCENDING else None,
        regular_witness=regular_witness,
        normal_witness=normal_witness,
        resultants=tuple(resultants),
    )
    logger.debug(
        f"[classify_chain]: size={len(T)}, ascending={classification.is_ascending}, "
        f"regular={classification.is_regular}, normal={classification.is_normal}"
    )
    return classification


def sat_member_regular(P: Polynomial, T: TriangularSet) -> bool:
    """Membership in sat(T) by a zero pseudo-remainder; valid for regular T only."""
    classification = classify_chain(T)
    if not classification.is_regular:
        raise PreconditionViolationError(
            f"{T} is not regular ({classification.regular_witness.detail}); "
            "use groebner.saturation_gb for membership"
        )
    return prem_triset(P, T).is_zero

