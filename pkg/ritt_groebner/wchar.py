"""
W-characteristic sets of reduced plex Gröbner bases.

For each occupied class the plex-least basis member is kept; the resulting
triangular set C drives the Ritt characteristic set construction
(ascending C, or C* for regular C) and, when C is abnormal, the
irregularity report that the decomposition engine splits on.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from .constants import DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, SAMPLE_MAX_DEGREE, SAMPLE_MAX_TERMS
from .errors import OrderAssumptionError, PreconditionViolationError, StructuralViolationError, ZeroIdealError
from .groebner import ReducedGroebnerBasis, elimination_prefix, ideal_member, normal_form, saturation_gb
from .polyring import Polynomial, VariableOrder, pseudo_divide
from .sampling_utils import random_ideal_element
from .triset import (
    AscendingSet,
    ChainClassification,
    PremCertificate,
    ResCertificate,
    TriangularSet,
    classify_chain,
    prem_triset,
    res_triset,
)

logger = logging.getLogger(__name__)


class CheckOptions(BaseModel):
    """Sampling knobs for checks of universally quantified properties."""
    sample_count: int = Field(default=DEFAULT_SAMPLE_COUNT, ge=0, description="Random ideal elements tested per check.")
    sample_degree: int = Field(default=SAMPLE_MAX_DEGREE, ge=0, description="Total degree bound of the random multipliers h_i.")
    sample_terms: int = Field(default=SAMPLE_MAX_TERMS, ge=1, description="Term count bound of the random multipliers h_i.")
    seed: int = Field(default=DEFAULT_SEED, description="Seed of the sampling generator.")


# ==============================================================================
# W-CHARACTERISTIC SETS
# ==============================================================================

@dataclass(frozen=True)
class WCharacteristicSet:
    basis: ReducedGroebnerBasis
    members: Tuple[Polynomial, ...]

    @property
    def order(self) -> VariableOrder:
        return self.basis.order

    @property
    def is_unit(self) -> bool:
        return self.basis.is_unit

    @property
    def chain(self) -> TriangularSet:
        if self.is_unit:
            raise PreconditionViolationError("the unit ideal has no triangular W-characteristic set")
        return TriangularSet(self.order, self.members)

    @property
    def leading_variables(self) -> Tuple[str, ...]:
        return tuple(p.leading_variable for p in self.members if not p.is_constant)

    @property
    def parameters(self) -> Tuple[str, ...]:
        leading = set(self.leading_variables)
        return tuple(name for name in self.order.names if name not in leading)

    def prefix(self, i: int) -> Tuple[Polynomial, ...]:
        """Members of class at most i."""
        return tuple(p for p in self.members if p.cls <= i)

    def order_assumption_holds(self) -> bool:
        """Every leading variable outranks every parameter."""
        if self.is_unit or not self.members:
            return True
        lowest_leading = min(p.cls for p in self.members)
        highest_parameter = max((self.order.index(u) for u in self.parameters), default=0)
        return lowest_leading > highest_parameter

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.members) + "]"


def wcharacteristic_set(B: ReducedGroebnerBasis) -> WCharacteristicSet:
    """
    Plex-least member of every occupied class of B, in plex order.

    Args:
        B: A reduced basis; the unit ideal yields the degenerate set [1]

    Returns:
        WCharacteristicSet: The selected members with B as their source
    """
    if B.is_unit:
        return WCharacteristicSet(B, B.members)
    chosen = {}
    for p in B.members:
        chosen.setdefault(p.cls, p)
    members = tuple(chosen[c] for c in sorted(chosen))
    logger.debug(f"[wcharacteristic_set]: basis_size={len(B)}, classes={sorted(chosen)}")
    return WCharacteristicSet(B, members)


def wchar_of_elimination(B: ReducedGroebnerBasis, i: int) -> WCharacteristicSet:
    return wcharacteristic_set(elimination_prefix(B, i))


# ==============================================================================
# CHARACTERISTIC-PROPERTY CHECKS
# ==============================================================================

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    certificate: object = field(default=None, repr=False)


@dataclass(frozen=True)
class CheckReport:
    subject: str
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _prem_check(name: str, P: Polynomial, chain: TriangularSet) -> CheckResult:
    certificate = prem_triset(P, chain)
    passed = certificate.is_zero and certificate.verify()
    detail = f"prem({P}, C) = {certificate.remainder}"
    return CheckResult(name, passed, detail, certificate)


def _sampled_elements(B: ReducedGroebnerBasis, options: CheckOptions) -> List[Polynomial]:
    rng = random.Random(options.seed)
    return [
        random_ideal_element(B.members, rng, options.sample_degree, options.sample_terms)
        for _ in range(options.sample_count)
    ]


def charpro_check(B: ReducedGroebnerBasis, C: WCharacteristicSet,
                  options: Optional[CheckOptions] = None, strict: bool = True) -> CheckReport:
    """
    Check the characteristic properties of C inside <B>.

    Zero pseudo-remainders for basis members and sampled ideal elements,
    <C> in <B> by normal forms, and <B> in sat(C) through the saturation basis.
    With ``strict`` the first failure raises StructuralViolationError.
    """
    options = options or CheckOptions()
    if B.is_unit:
        raise PreconditionViolationError("charpro_check needs a proper ideal")
    chain = C.chain
    checks = [_prem_check(f"prem(basis[{i}], C) = 0", g, chain) for i, g in enumerate(B.members)]
    for s, h in enumerate(_sampled_elements(B, options)):
        checks.append(_prem_check(f"prem(sample[{s}], C) = 0", h, chain))
    for i, c in enumerate(C.members):
        trace = normal_form(c, B)
        checks.append(CheckResult(f"C_{i + 1} in <B>", trace.normal_form.is_zero and trace.verify(),
                                  f"nf(C_{i + 1}, B) = {trace.normal_form}", trace))
    saturation = saturation_gb(chain.members, chain.initial_product())
    for i, g in enumerate(B.members):
        inside = ideal_member(g, saturation)
        checks.append(CheckResult(f"basis[{i}] in sat(C)", inside, f"{g} {'in' if inside else 'not in'} sat(C)",
                                  saturation))

    report = CheckReport("charpro", tuple(checks))
    logger.debug(f"[charpro_check]: checks={len(checks)}, passed={report.passed}")
    if strict and not report.passed:
        failure = report.failures()[0]
        raise StructuralViolationError(f"characteristic property failed: {failure.name}", failure.detail)
    return report


def ritt_check(B: ReducedGroebnerBasis, A: AscendingSet, options: Optional[CheckOptions] = None) -> CheckReport:
    """Membership of A in <B> and zero pseudo-remainders of basis members and samples."""
    options = options or CheckOptions()
    if A.is_unit:
        inside = B.is_unit
        return CheckReport("ritt", (CheckResult("unit charset", inside, f"basis is {B}"),))
    chain = A.triangular()
    checks = []
    for i, a in enumerate(A.members):
        inside = ideal_member(a, B)
        checks.append(CheckResult(f"A_{i + 1} in <B>", inside, f"{a} {'in' if inside else 'not in'} <B>"))
    checks.extend(_prem_check(f"prem(basis[{i}], A) = 0", g, chain) for i, g in enumerate(B.members))
    for s, h in enumerate(_sampled_elements(B, options)):
        checks.append(_prem_check(f"prem(sample[{s}], A) = 0", h, chain))
    return CheckReport("ritt", tuple(checks))


# ==============================================================================
# RITT CHARACTERISTIC SETS
# ==============================================================================

def star_chain(C: WCharacteristicSet) -> Tuple[Tuple[Polynomial, ...], Tuple[PremCertificate, ...]]:
    """[C_1, prem(C_2, [C_1]), ..., prem(C_r, [C_1..C_{r-1}])] with certificates."""
    chain = C.chain
    members = [chain[0]]
    certificates = []
    for i in range(1, len(chain)):
        certificate = prem_triset(chain[i], chain.prefix(i))
        certificates.append(certificate)
        members.append(certificate.remainder)
    return tuple(members), tuple(certificates)


def ritt_from_regular(C: WCharacteristicSet) -> AscendingSet:
    if C.is_unit:
        return AscendingSet(C.order, C.members)
    classification = classify_chain(C.chain)
    if not classification.is_regular:
        raise PreconditionViolationError(
            f"C is not regular ({classification.regular_witness.detail}); C* is only defined for regular C"
        )
    members, _ = star_chain(C)
    return AscendingSet(C.order, members)


def ritt_of_elimination(B: ReducedGroebnerBasis, i: int) -> AscendingSet:
    """
    Ritt characteristic set of <B> ∩ k[x_1..x_i] read off the W-characteristic
    set of B: its members of class at most i form the W-characteristic set of
    the elimination ideal, and C* of that prefix is returned when it is regular.

    Raises:
        ZeroIdealError: The elimination ideal is zero
        PreconditionViolationError: The prefix is irregular
    """
    eliminated = elimination_prefix(B, i)
    members = wcharacteristic_set(B).prefix(i)
    if not members:
        raise ZeroIdealError(f"the elimination ideal in {B.order.names[:i]} is zero")
    return ritt_from_regular(WCharacteristicSet(eliminated, members))


class RittTag(Enum):
    ASCENDING = "ascending"
    REGULAR_STAR = "regular_star"
    ABNORMAL = "abnormal"


@dataclass(frozen=True)
class RittResult:
    tag: RittTag
    wchar: WCharacteristicSet
    charset: Optional[AscendingSet] = None
    alternative: Optional[AscendingSet] = None
    classification: Optional[ChainClassification] = field(default=None, repr=False)
    star_certificates: Tuple[PremCertificate, ...] = field(default=(), repr=False)
    report: Optional["IrregularityReport"] = None
    note: str = ""


def ritt_charset(B: ReducedGroebnerBasis, check_order: bool = True) -> RittResult:
    """
    Ritt characteristic set of <B> when the W-characteristic set allows one.

    Ascending C is returned as is (with C* as the rank-equal alternative when
    C is also regular); regular C yields C*; otherwise only the irregularity
    report is produced and no charset is claimed.
    """
    C = wcharacteristic_set(B)
    if C.is_unit:
        return RittResult(RittTag.ASCENDING, C, AscendingSet(C.order, C.members))

    classification = classify_chain(C.chain)
    star, certificates = (None, ())
    if classification.is_regular:
        members, certificates = star_chain(C)
        star = AscendingSet(C.order, members)

    if classification.is_ascending:
        charset = AscendingSet(C.order, C.members)
        return RittResult(RittTag.ASCENDING, C, charset, star, classification, certificates)
    if classification.is_regular:
        return RittResult(RittTag.REGULAR_STAR, C, star, None, classification, certificates)

    try:
        report = irregularity_report(B, C, check_order=check_order)
        note = ""
    except OrderAssumptionError as error:
        report, note = None, str(error)
    return RittResult(RittTag.ABNORMAL, C, None, None, classification, (), report, note)


# ==============================================================================
# IRREGULARITY REPORTS
# ==============================================================================

class IrregularityCase(Enum):
    NOT_R_REDUCED = "c"
    R_REDUCED = "d"


@dataclass(frozen=True)
class VerifiedRelation:
    label: str
    value: Polynomial
    holds: bool
    required: bool
    certificate: Union[PremCertificate, ResCertificate] = field(repr=False)


def _relation(label: str, certificate: Union[PremCertificate, ResCertificate], required: bool = True) -> VerifiedRelation:
    value = certificate.remainder if isinstance(certificate, PremCertificate) else certificate.value
    return VerifiedRelation(label, value, value.is_zero and certificate.verify(), required, certificate)


@dataclass(frozen=True)
class IrregularityReport:
    k: int
    l: int
    index: int
    case: IrregularityCase
    initial: Polynomial
    leading_variable: str
    degree: int
    tail: Polynomial
    relations: Tuple[VerifiedRelation, ...]
    power: Optional[int] = None
    quotient: Optional[Polynomial] = None
    quotient_initial: Optional[Polynomial] = None
    alternative: Optional[str] = None

    @property
    def all_relations_hold(self) -> bool:
        required = all(r.holds for r in self.relations if r.required)
        if self.case is IrregularityCase.R_REDUCED:
            return required and self.alternative is not None
        return required

    def relation(self, label_prefix: str) -> VerifiedRelation:
        for r in self.relations:
            if r.label.startswith(label_prefix):
                return r
        raise KeyError(label_prefix)


def irregularity_index(C: WCharacteristicSet) -> int:
    """
    Class of the first member of C whose initial involves an earlier leading
    variable; n + 1 when C is normal, in which case the basis is called regular.
    """
    if C.is_unit:
        return C.order.n + 1
    classification = classify_chain(C.chain)
    if classification.is_normal:
        return C.order.n + 1
    return C.chain[classification.normal_prefix_length].cls


def irregularity_report(B: ReducedGroebnerBasis, C: WCharacteristicSet, check_order: bool = True) -> IrregularityReport:
    """
    Locate the irregularity of an abnormal W-characteristic set and verify the
    pseudo-divisibility relations that hold there.

    Args:
        B: The reduced basis C was extracted from
        C: Its W-characteristic set, abnormal
        check_order: Require every leading variable to outrank every parameter

    Returns:
        IrregularityReport: k, l, the case and certificate-backed relations
    """
    chain = C.chain
    classification = classify_chain(chain)
    if classification.is_normal:
        raise PreconditionViolationError("the W-characteristic set is normal; nothing is irregular")
    if check_order and not C.order_assumption_holds():
        raise OrderAssumptionError(
            f"parameters {C.parameters} are not all below leading variables {C.leading_variables} in {C.order}"
        )

    order = C.order
    k = classification.normal_prefix_length
    top = chain[k]
    initial = top.initial
    l = next((i + 1 for i in range(k) if chain[i].cls == initial.cls), None)
    if l is None:
        raise OrderAssumptionError(f"ini(C_{k + 1}) = {initial} has a parameter as leading variable")
    pivot = chain[l - 1]
    y = pivot.leading_variable
    d = top.leading_degree
    tail = top - initial * order.variable(top.cls) ** d

    relations = [
        _relation(f"res(I_{k + 1}, [C_1..C_{k}]) = 0", res_triset(initial, chain.prefix(k))),
    ]
    if initial.degree(y) >= pivot.leading_degree:
        relations.append(_relation(f"prem(I_{k + 1}, [C_1..C_{l}]) = 0", prem_triset(initial, chain.prefix(l))))
        relations.append(_relation(f"prem(C_{k + 1}, [C_1..C_{k}]) = 0", prem_triset(top, chain.prefix(k))))
        report = IrregularityReport(
            k, l, top.cls, IrregularityCase.NOT_R_REDUCED, initial, y, d, tail, tuple(relations),
        )
    else:
        head = chain.members[: l - 1]
        substituted = TriangularSet(order, head + (initial,))
        relations.append(_relation(f"prem(C_{l}, [C_1..C_{l - 1}, I_{k + 1}]) = 0", prem_triset(pivot, substituted)))

        division = pseudo_divide(pivot, initial, y)
        Q = division.quotient
        Q_initial = Q.leading_coefficient(y)
        by_resultant = _relation(
            f"res(ini(I_{k + 1}), [C_1..C_{l - 1}]) = 0",
            res_triset(initial.initial, chain.prefix(l - 1)),
            required=False,
        )
        widened = TriangularSet(order, head + (initial,) + chain.members[l:k])
        by_remainder = _relation(
            f"prem(C_{k + 1}, [C_1..C_{l - 1}, I_{k + 1}, C_{l + 1}..C_{k}]) = 0",
            prem_triset(top, widened),
            required=False,
        )
        relations.extend([by_resultant, by_remainder])
        relations.append(_relation(f"prem(Q*C_{k + 1}, [C_1..C_{k}]) = 0", prem_triset(Q * top, chain.prefix(k))))
        relations.append(_relation(
            f"res(ini(Q), [C_1..C_{l - 1}]) = 0",
            res_triset(Q_initial, chain.prefix(l - 1)),
            required=False,
        ))
        fired = [name for name, r in (("resultant", by_resultant), ("pseudo_remainder", by_remainder)) if r.holds]
        alternative = "both" if len(fired) == 2 else (fired[0] if fired else None)
        report = IrregularityReport(
            k, l, top.cls, IrregularityCase.R_REDUCED, initial, y, d, tail, tuple(relations),
            power=division.power, quotient=Q, quotient_initial=Q_initial, alternative=alternative,
        )

    logger.debug(
        f"[irregularity_report]: k={k}, l={l}, case={report.case.value}, holds={report.all_relations_hold}"
    )
    return report
