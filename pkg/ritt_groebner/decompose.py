"""
Decomposition of polynomial systems into normal triangular sets.

Each branch carries a reduced basis and its W-characteristic set. Abnormal
branches are split by adjoining B-reduced polynomials read off the
irregularity report, so every child ideal strictly contains its parent and
the process stops by the ascending chain condition. Optionally leaves are
made strong (sat(C) = <G>). Every split carries a radical-membership cover
certificate that ``verify_decomposition`` re-checks.
"""

import itertools
import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from .constants import DEFAULT_MAX_NODES, DEFAULT_WORKERS, ORDER_FUEL_FACTOR
from .errors import (
    EmptyInputError,
    InternalConsistencyError,
    NodeBudgetExceededError,
    OrderUnstableError,
    PreconditionViolationError,
    ZeroIdealError,
)
from .groebner import (
    ReducedGroebnerBasis,
    ideal_member,
    is_b_reduced,
    normal_form,
    radical_member,
    reduced_gb,
    saturation_gb,
)
from .polyring import Polynomial, VariableOrder, product
from .triset import classify_chain, prem_triset
from .wchar import IrregularityCase, IrregularityReport, WCharacteristicSet, irregularity_report, wcharacteristic_set

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]


class DecomposeOptions(BaseModel):
    """Knobs of the splitting engine."""
    max_nodes: int = Field(default=DEFAULT_MAX_NODES, ge=1, description="Maximum number of branches processed.")
    strong: bool = Field(default=False, description="Refine normal leaves until sat(C) equals the branch ideal.")
    workers: int = Field(default=DEFAULT_WORKERS, ge=1, description="Threads evaluating one wave of pending branches.")
    fuel_factor: int = Field(default=ORDER_FUEL_FACTOR, ge=0, description="Reorder passes allowed per variable.")


class BranchStatus(Enum):
    PENDING = "pending"
    NORMAL_LEAF = "normal_leaf"
    STRONG_LEAF = "strong_leaf"
    UNIT = "unit"
    ORDER_UNSTABLE = "order_unstable"


class SplitKind(Enum):
    STEP_1 = "step_1"
    STEP_2 = "step_2"
    STEP_3 = "step_3"
    SATURATION = "saturation"


def path_label(path: Path) -> str:
    return "root" if not path else "root." + ".".join(str(i) for i in path)


# ==============================================================================
# BRANCHES
# ==============================================================================

@dataclass(frozen=True)
class DecompositionBranch:
    path: Path
    generators: Tuple[Polynomial, ...]
    basis: ReducedGroebnerBasis
    wchar: WCharacteristicSet
    lineage: Tuple[Polynomial, ...] = ()
    status: BranchStatus = BranchStatus.PENDING
    note: str = ""

    @property
    def order(self) -> VariableOrder:
        return self.basis.order

    @property
    def label(self) -> str:
        return path_label(self.path)


def make_branch(generators: Sequence[Polynomial], path: Path = (), lineage: Sequence[Polynomial] = (),
                basis: Optional[ReducedGroebnerBasis] = None) -> DecompositionBranch:
    generators = tuple(generators)
    basis = basis if basis is not None else reduced_gb(generators)
    status = BranchStatus.UNIT if basis.is_unit else BranchStatus.PENDING
    return DecompositionBranch(path, generators, basis, wcharacteristic_set(basis), tuple(lineage), status)


def enforce_order_assumption(branch: DecompositionBranch, fuel: Optional[int] = None) -> DecompositionBranch:
    """
    Reorder variables until every leading variable outranks every parameter.

    Parameters move below the leading variables, each group keeping its
    relative order; the basis and W-characteristic set are recomputed after
    every pass.

    Args:
        branch: The branch to check
        fuel: Reorder passes allowed (default: fuel factor times n)

    Returns:
        DecompositionBranch: The branch itself when the assumption already holds
    """
    fuel = ORDER_FUEL_FACTOR * branch.order.n if fuel is None else fuel
    current = branch
    for attempt in range(fuel + 1):
        if current.basis.is_unit or current.wchar.order_assumption_holds():
            return current
        if attempt == fuel:
            break
        target = current.order.permuted(current.wchar.parameters + current.wchar.leading_variables)
        logger.debug(f"[enforce_order_assumption]: path={current.label}, order={target}")
        moved = tuple(g.to_order(target) for g in current.basis.members)
        current = replace(make_branch(moved, current.path, current.lineage), note=f"reordered to {target}")
    raise OrderUnstableError(f"no stable variable order for {branch.label} within {fuel} reorder passes")


# ==============================================================================
# SPLITTING
# ==============================================================================

@dataclass(frozen=True)
class SplitPlan:
    kind: SplitKind
    adjoin: Tuple[Tuple[Polynomial, ...], ...]


def split_branch(branch: DecompositionBranch, report: IrregularityReport) -> SplitPlan:
    """
    Polynomials to adjoin to an abnormal branch, one child per entry.

    Candidates are replaced by their normal form modulo the branch basis, so
    every adjoined polynomial is B-reduced. Nonzero constants are skipped.
    """
    chain = branch.wchar.chain
    initials = chain.initials
    l = report.l
    if report.case is IrregularityCase.NOT_R_REDUCED:
        kind = SplitKind.STEP_1
        candidates = initials[:l] + (report.initial,)
    elif prem_triset(report.quotient_initial, chain.prefix(l - 1)).is_zero:
        kind = SplitKind.STEP_2
        candidates = initials[: l - 1] + (report.initial.initial,)
    else:
        kind = SplitKind.STEP_3
        reduced_quotient = prem_triset(report.quotient, chain.prefix(l - 1)).remainder
        candidates = initials[:l] + (reduced_quotient, report.initial)

    adjoin = []
    for candidate in candidates:
        if candidate.is_constant and not candidate.is_zero:
            continue
        if not is_b_reduced(candidate, branch.basis):
            reduced = normal_form(candidate, branch.basis).normal_form
            logger.debug(f"[split_branch]: path={branch.label}, reduced {candidate} to {reduced}")
            candidate = reduced
        if candidate.is_zero:
            raise InternalConsistencyError(f"split polynomial lies in the branch ideal on {branch.label}")
        if candidate.is_constant:
            continue
        adjoin.append((candidate,))
    if not adjoin:
        raise InternalConsistencyError(f"no nonconstant split polynomial on {branch.label}")
    logger.debug(f"[split_branch]: path={branch.label}, kind={kind.value}, children={len(adjoin)}")
    return SplitPlan(kind, tuple(adjoin))


def strong_regularize(leaf: DecompositionBranch) -> List[DecompositionBranch]:
    """
    Make a normal leaf strong, or split it in two.

    Returns [leaf as strong_leaf] when sat(C) = <G>; otherwise the branch of
    sat(C) and the branch G + {F}, F the product of the initials of C.
    """
    if leaf.status is not BranchStatus.NORMAL_LEAF:
        raise PreconditionViolationError(f"{leaf.label} is {leaf.status.value}, not a normal leaf")
    chain = leaf.wchar.chain
    F = chain.initial_product()
    saturated = saturation_gb(chain.members, F)
    if saturated.members == leaf.basis.members:
        return [replace(leaf, status=BranchStatus.STRONG_LEAF)]

    extras = tuple(p for p in saturated.members if not ideal_member(p, leaf.basis))
    saturated_child = make_branch(saturated.members, leaf.path + (0,), leaf.lineage + extras, basis=saturated)
    if _is_strong(saturated_child):
        saturated_child = replace(saturated_child, status=BranchStatus.STRONG_LEAF)
    product_child = make_branch(leaf.basis.members + (F,), leaf.path + (1,), leaf.lineage + (F,))
    logger.debug(f"[strong_regularize]: path={leaf.label}, saturation_extras={len(extras)}")
    return [saturated_child, product_child]


def _is_strong(branch: DecompositionBranch) -> bool:
    if branch.basis.is_unit or not branch.wchar.order_assumption_holds():
        return False
    chain = branch.wchar.chain
    if not classify_chain(chain).is_normal:
        return False
    return saturation_gb(chain.members, chain.initial_product()).members == branch.basis.members


# ==============================================================================
# RESULTS AND CERTIFICATES
# ==============================================================================

@dataclass(frozen=True)
class SplitRecord:
    path: Path
    kind: SplitKind
    parent_basis: ReducedGroebnerBasis
    adjoined: Tuple[Tuple[Polynomial, ...], ...]
    child_paths: Tuple[Path, ...]
    child_bases: Tuple[ReducedGroebnerBasis, ...] = field(repr=False)
    report: Optional[IrregularityReport] = field(default=None, repr=False)


@dataclass(frozen=True)
class CoverCertificate:
    """Zero(parent) lies in the union of the children's zero sets."""

    path: Path
    kind: SplitKind
    products: Tuple[Polynomial, ...]
    holds: bool


def cover_products(record: SplitRecord) -> Tuple[Polynomial, ...]:
    """One product per choice of an adjoined polynomial from every child."""
    order = record.parent_basis.order
    return tuple(product(choice, order) for choice in itertools.product(*record.adjoined))


def certify_cover(record: SplitRecord) -> CoverCertificate:
    products = cover_products(record)
    parent = record.parent_basis.members
    holds = all(radical_member(p, parent) for p in products)
    return CoverCertificate(record.path, record.kind, products, holds)


@dataclass(frozen=True)
class DecompositionResult:
    generators: Tuple[Polynomial, ...]
    leaves: Tuple[DecompositionBranch, ...]
    splits: Tuple[SplitRecord, ...] = ()
    cover_certificates: Tuple[CoverCertificate, ...] = ()
    units: Tuple[DecompositionBranch, ...] = ()
    unstable: Tuple[DecompositionBranch, ...] = ()
    nodes: int = 0

    @property
    def order(self) -> VariableOrder:
        return self.generators[0].order


@dataclass
class _Outcome:
    terminal: Optional[DecompositionBranch] = None
    split: Optional[SplitRecord] = None
    certificate: Optional[CoverCertificate] = None
    children: List[DecompositionBranch] = field(default_factory=list)


def _split_abnormal(branch: DecompositionBranch) -> _Outcome:
    report = irregularity_report(branch.basis, branch.wchar)
    plan = split_branch(branch, report)
    children = [
        make_branch(branch.basis.members + adjoin, branch.path + (i,), branch.lineage + adjoin)
        for i, adjoin in enumerate(plan.adjoin)
    ]
    record = SplitRecord(
        path=branch.path,
        kind=plan.kind,
        parent_basis=branch.basis,
        adjoined=plan.adjoin,
        child_paths=tuple(c.path for c in children),
        child_bases=tuple(c.basis for c in children),
        report=report,
    )
    return _Outcome(split=record, certificate=certify_cover(record), children=children)


def _split_saturation(leaf: DecompositionBranch, children: List[DecompositionBranch]) -> _Outcome:
    saturated, with_product = children
    adjoin = (saturated.lineage[len(leaf.lineage):], with_product.lineage[len(leaf.lineage):])
    record = SplitRecord(
        path=leaf.path,
        kind=SplitKind.SATURATION,
        parent_basis=leaf.basis,
        adjoined=adjoin,
        child_paths=(saturated.path, with_product.path),
        child_bases=(saturated.basis, with_product.basis),
    )
    return _Outcome(split=record, certificate=certify_cover(record), children=children)


def _process(branch: DecompositionBranch, options: DecomposeOptions) -> _Outcome:
    if branch.basis.is_unit:
        return _Outcome(terminal=replace(branch, status=BranchStatus.UNIT))
    try:
        branch = enforce_order_assumption(branch, options.fuel_factor * branch.order.n)
    except OrderUnstableError as error:
        logger.warning(f"[decompose_normal]: path={branch.label}, status=order_unstable, message={error}")
        return _Outcome(terminal=replace(branch, status=BranchStatus.ORDER_UNSTABLE, note=str(error)))

    if classify_chain(branch.wchar.chain).is_normal:
        leaf = replace(branch, status=BranchStatus.NORMAL_LEAF)
        if not options.strong:
            return _Outcome(terminal=leaf)
        refined = strong_regularize(leaf)
        if len(refined) == 1:
            return _Outcome(terminal=refined[0])
        return _split_saturation(leaf, refined)
    return _split_abnormal(branch)


def decompose_normal(gens: Sequence[Polynomial], options: Optional[DecomposeOptions] = None) -> DecompositionResult:
    """
    Split <gens> into branches whose W-characteristic sets are normal.

    Pending branches are handled in FIFO waves; a wave is evaluated by a
    thread pool and its outcomes are merged in lineage order, so the result
    does not depend on thread timing.

    Args:
        gens: Generators under one order, not all zero
        options: Node budget, strong mode, worker count and reorder fuel

    Returns:
        DecompositionResult: Leaves, split records, cover certificates, units and unstable branches
    """
    options = options or DecomposeOptions()
    gens = tuple(gens)
    if not gens:
        raise EmptyInputError("decompose_normal needs at least one generator")
    if all(g.is_zero for g in gens):
        raise ZeroIdealError("all generators are zero")

    leaves: List[DecompositionBranch] = []
    units: List[DecompositionBranch] = []
    unstable: List[DecompositionBranch] = []
    splits: List[SplitRecord] = []
    certificates: List[CoverCertificate] = []
    queue = deque([make_branch(gens)])
    nodes = 0

    while queue:
        wave = list(queue)
        queue.clear()
        nodes += len(wave)
        if nodes > options.max_nodes:
            logger.warning(f"[decompose_normal]: status=node_budget_exceeded, max_nodes={options.max_nodes}")
            raise NodeBudgetExceededError(f"more than {options.max_nodes} branches without finishing")

        outcomes: Dict[Path, _Outcome] = {}
        with ThreadPoolExecutor(max_workers=min(len(wave), options.workers)) as executor:
            future_to_path = {executor.submit(_process, branch, options): branch.path for branch in wave}
            for future in as_completed(future_to_path):
                outcomes[future_to_path[future]] = future.result()

        for path in sorted(outcomes):
            outcome = outcomes[path]
            if outcome.terminal is not None:
                status = outcome.terminal.status
                if status is BranchStatus.UNIT:
                    units.append(outcome.terminal)
                elif status is BranchStatus.ORDER_UNSTABLE:
                    unstable.append(outcome.terminal)
                else:
                    leaves.append(outcome.terminal)
                continue
            splits.append(outcome.split)
            certificates.append(outcome.certificate)
            for child in outcome.children:
                if child.status is BranchStatus.STRONG_LEAF:
                    leaves.append(child)
                else:
                    queue.append(child)

    leaves.sort(key=lambda b: b.path)
    logger.info(
        f"[decompose_normal]: nodes={nodes}, leaves={len(leaves)}, splits={len(splits)}, "
        f"units={len(units)}, unstable={len(unstable)}"
    )
    return DecompositionResult(
        generators=gens,
        leaves=tuple(leaves),
        splits=tuple(splits),
        cover_certificates=tuple(certificates),
        units=tuple(units),
        unstable=tuple(unstable),
        nodes=nodes,
    )


# ==============================================================================
# VERIFICATION
# ==============================================================================

@dataclass(frozen=True)
class VerificationCheck:
    category: str
    path: Path
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[VerificationCheck, ...]
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[VerificationCheck]:
        return [c for c in self.checks if not c.passed]

    def category(self, name: str) -> List[VerificationCheck]:
        return [c for c in self.checks if c.category == name]

    def category_passed(self, name: str) -> bool:
        return all(c.passed for c in self.category(name))


CATEGORIES = ("containment", "cover", "growth", "completeness", "normality", "strong")


def _check_leaf(gens: Sequence[Polynomial], leaf: DecompositionBranch) -> List[VerificationCheck]:
    checks = []
    outside = [g for g in gens if not ideal_member(g.to_order(leaf.order), leaf.basis)]
    checks.append(VerificationCheck(
        "containment", leaf.path, not outside,
        "all generators reduce to 0" if not outside else f"generator {outside[0]} has nonzero normal form",
    ))
    if leaf.basis.is_unit:
        checks.append(VerificationCheck("normality", leaf.path, False, "leaf basis is the unit ideal"))
        return checks
    chain = leaf.wchar.chain
    classification = classify_chain(chain)
    checks.append(VerificationCheck(
        "normality", leaf.path, classification.is_normal,
        "W-characteristic set is normal" if classification.is_normal else classification.normal_witness.detail,
    ))
    if leaf.status is BranchStatus.STRONG_LEAF:
        saturated = saturation_gb(chain.members, chain.initial_product())
        equal = saturated.members == leaf.basis.members
        checks.append(VerificationCheck(
            "strong", leaf.path, equal,
            "sat(C) equals the leaf ideal" if equal else f"sat(C) basis {saturated} differs from {leaf.basis}",
        ))
    return checks


def _check_split(record: SplitRecord) -> Tuple[List[VerificationCheck], List[str]]:
    certificate = certify_cover(record)
    failing = [p for p in certificate.products if not radical_member(p, record.parent_basis.members)]
    checks = [VerificationCheck(
        "cover", record.path, certificate.holds,
        f"{len(certificate.products)} cover products in the radical" if certificate.holds
        else f"cover product {failing[0]} not in the radical of the parent",
    )]
    for child_path, adjoined, basis in zip(record.child_paths, record.adjoined, record.child_bases):
        parent_inside = all(ideal_member(p, basis) for p in record.parent_basis.members)
        grows = any(not ideal_member(a, record.parent_basis) for a in adjoined)
        checks.append(VerificationCheck(
            "growth", child_path, parent_inside and grows,
            "child ideal strictly contains its parent" if parent_inside and grows
            else "child ideal does not strictly contain its parent",
        ))

    notes = []
    for i in range(1, len(record.adjoined)):
        for j in range(i):
            if all(ideal_member(a, record.child_bases[j]) for a in record.adjoined[i]):
                notes.append(
                    f"{path_label(record.child_paths[i])} is redundant next to {path_label(record.child_paths[j])}"
                )
                break
    return checks, notes


def verify_decomposition(gens: Sequence[Polynomial], result: DecompositionResult,
                         workers: int = DEFAULT_WORKERS) -> VerificationReport:
    """
    Re-check a decomposition from scratch.

    Containment of every generator in every leaf, radical cover of every
    split, strict growth, completeness of the branch tree, normality of every
    leaf and, for strong leaves, sat(C) = <G>. Leaves and splits are checked
    in parallel and reported in lineage order.
    """
    gens = tuple(gens)
    jobs = [(leaf.path, 0, _check_leaf, (gens, leaf)) for leaf in result.leaves]
    jobs += [(record.path, 1, _check_split, (record,)) for record in result.splits]

    collected: Dict[Tuple[Path, int], object] = {}
    if jobs:
        with ThreadPoolExecutor(max_workers=min(len(jobs), max(workers, 1))) as executor:
            future_to_key = {executor.submit(fn, *args): (path, kind) for path, kind, fn, args in jobs}
            for future in as_completed(future_to_key):
                collected[future_to_key[future]] = future.result()

    checks: List[VerificationCheck] = []
    notes: List[str] = []
    for key in sorted(collected):
        value = collected[key]
        if key[1] == 0:
            checks.extend(value)
        else:
            split_checks, split_notes = value
            checks.extend(split_checks)
            notes.extend(split_notes)

    terminal = {b.path for b in result.leaves} | {b.path for b in result.units}
    split_paths = {record.path for record in result.splits}
    unstable_paths = {b.path for b in result.unstable}
    expected = {()} | {p for record in result.splits for p in record.child_paths}
    for path in sorted(expected):
        if path in unstable_paths:
            checks.append(VerificationCheck("completeness", path, False, "branch is order-unstable"))
        elif path not in terminal and path not in split_paths:
            checks.append(VerificationCheck("completeness", path, False, f"missing branch {path_label(path)}"))
    if not any(c.category == "completeness" for c in checks):
        checks.append(VerificationCheck("completeness", (), True, f"{len(expected)} branches accounted for"))

    checks.sort(key=lambda c: (CATEGORIES.index(c.category), c.path))
    report = VerificationReport(tuple(checks), tuple(notes))
    logger.info(f"[verify_decomposition]: checks={len(checks)}, passed={report.passed}, notes={len(notes)}")
    return report
