"""
Deterministic rendering of engine results.

Engine objects are first turned into JSON-ready payload dictionaries with a
fixed key order; the command line prints them either as JSON or as labelled
text sections, and the web explorer returns them as is.
"""

import json
from typing import Any, Dict, List, Optional, Sequence, TypedDict, Union

from .decompose import DecompositionBranch, DecompositionResult, VerificationReport, path_label
from .groebner import ReducedGroebnerBasis
from .polyring import Polynomial, VariableOrder
from .triset import ChainClassification, PremCertificate, ResCertificate, ShapeReport
from .wchar import CheckReport, IrregularityReport, RittResult, WCharacteristicSet

Payload = Dict[str, Any]


class PolynomialPayload(TypedDict):
    text: str
    terms: List[List[Union[int, List[int]]]]


def polynomial_payload(p: Polynomial) -> PolynomialPayload:
    """Display string plus [numerator, denominator, exponents] terms, descending in plex."""
    terms = []
    for coeff, monomial in p.terms():
        numerator, denominator = p.order.field.to_pair(coeff)
        terms.append([numerator, denominator, list(monomial.exponents)])
    return {"text": str(p), "terms": terms}


def polynomials_payload(polys: Sequence[Polynomial]) -> List[PolynomialPayload]:
    return [polynomial_payload(p) for p in polys]


def _certificate_payload(certificate: Union[PremCertificate, ResCertificate]) -> Payload:
    if isinstance(certificate, PremCertificate):
        return {
            "kind": "prem",
            "powers": list(certificate.powers),
            "cofactors": polynomials_payload(certificate.cofactors),
            "remainder": polynomial_payload(certificate.remainder),
        }
    return {
        "kind": "res",
        "cofactor": polynomial_payload(certificate.cofactor),
        "chain_cofactors": polynomials_payload(certificate.chain_cofactors),
        "value": polynomial_payload(certificate.value),
    }


# ==============================================================================
# PAYLOADS
# ==============================================================================

def header_payload(command: str, order: VariableOrder) -> Payload:
    return {"command": command, "order": str(order), "field": str(order.field)}


def basis_payload(basis: ReducedGroebnerBasis) -> List[PolynomialPayload]:
    return polynomials_payload(basis.members)


def wchar_payload(C: WCharacteristicSet) -> Payload:
    return {
        "members": polynomials_payload(C.members),
        "leading_variables": list(C.leading_variables),
        "parameters": list(C.parameters),
        "order_assumption": C.order_assumption_holds(),
    }


def classification_summary(classification: ChainClassification, report: Optional[IrregularityReport] = None) -> str:
    summary = (
        f"{'normal' if classification.is_normal else 'abnormal'}, "
        f"{'regular' if classification.is_regular else 'irregular'}"
    )
    if report is not None:
        summary += f"; k={report.k}, case ({report.case.value})"
    return summary


def classification_payload(shape: ShapeReport, classification: ChainClassification,
                           report: Optional[IrregularityReport] = None) -> Payload:
    return {
        "summary": classification_summary(classification, report),
        "shape": shape.shape.value,
        "shape_witness": list(shape.witness) if shape.witness else None,
        "ascending": classification.is_ascending,
        "regular": classification.is_regular,
        "normal": classification.is_normal,
        "regular_witness": classification.regular_witness.detail if classification.regular_witness else None,
        "normal_witness": classification.normal_witness.detail if classification.normal_witness else None,
    }


def report_payload(report: IrregularityReport, certificates: bool = False) -> Payload:
    payload: Payload = {
        "k": report.k,
        "l": report.l,
        "index": report.index,
        "case": report.case.value,
        "initial": polynomial_payload(report.initial),
        "leading_variable": report.leading_variable,
        "degree": report.degree,
        "tail": polynomial_payload(report.tail),
    }
    if report.quotient is not None:
        payload["power"] = report.power
        payload["quotient"] = polynomial_payload(report.quotient)
        payload["quotient_initial"] = polynomial_payload(report.quotient_initial)
        payload["alternative"] = report.alternative
    relations = []
    for relation in report.relations:
        entry: Payload = {
            "label": relation.label,
            "value": polynomial_payload(relation.value),
            "holds": relation.holds,
            "required": relation.required,
        }
        if certificates:
            entry["certificate"] = _certificate_payload(relation.certificate)
        relations.append(entry)
    payload["relations"] = relations
    payload["all_relations_hold"] = report.all_relations_hold
    return payload


def ritt_payload(result: RittResult, certificates: bool = False) -> Payload:
    payload: Payload = {
        "tag": result.tag.value,
        "charset": polynomials_payload(result.charset.members) if result.charset else None,
        "alternative": polynomials_payload(result.alternative.members) if result.alternative else None,
        "note": result.note,
    }
    if certificates and result.star_certificates:
        payload["star_certificates"] = [_certificate_payload(c) for c in result.star_certificates]
    return payload


def check_report_payload(report: CheckReport) -> Payload:
    return {
        "subject": report.subject,
        "passed": report.passed,
        "checks": len(report.checks),
        "failures": [{"name": c.name, "detail": c.detail} for c in report.failures()],
    }


def _branch_payload(branch: DecompositionBranch) -> Payload:
    return {
        "path": branch.label,
        "status": branch.status.value,
        "order": str(branch.order),
        "basis": basis_payload(branch.basis),
        "wchar": polynomials_payload(branch.wchar.members),
    }


def decomposition_payload(result: DecompositionResult, certificates: bool = False) -> Payload:
    payload: Payload = {
        "nodes": result.nodes,
        "leaves": [_branch_payload(b) for b in result.leaves],
        "units": [b.label for b in result.units],
        "unstable": [{"path": b.label, "note": b.note} for b in result.unstable],
        "splits": [
            {
                "path": path_label(record.path),
                "kind": record.kind.value,
                "adjoined": [polynomials_payload(a) for a in record.adjoined],
                "children": [path_label(p) for p in record.child_paths],
            }
            for record in result.splits
        ],
    }
    if certificates:
        payload["cover_certificates"] = [
            {
                "path": path_label(c.path),
                "kind": c.kind.value,
                "products": polynomials_payload(c.products),
                "holds": c.holds,
            }
            for c in result.cover_certificates
        ]
    return payload


def verification_payload(report: VerificationReport) -> Payload:
    return {
        "passed": report.passed,
        "checks": [
            {"category": c.category, "path": path_label(c.path), "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
        "notes": list(report.notes),
    }


# ==============================================================================
# OUTPUT
# ==============================================================================

def render_json(payload: Payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def _texts(polys: Sequence[PolynomialPayload]) -> List[str]:
    return [p["text"] for p in polys]


def _list_section(title: str, polys: Optional[Sequence[PolynomialPayload]]) -> List[str]:
    lines = [f"{title}:"]
    lines.extend(f"  {text}" for text in _texts(polys or []))
    return lines


def _report_lines(report: Payload) -> List[str]:
    lines = [
        "irregularity:",
        f"  k={report['k']}, l={report['l']}, case ({report['case']}), index={report['index']}",
        f"  I_{report['k'] + 1} = {report['initial']['text']}",
    ]
    if "quotient" in report:
        lines.append(f"  Q = {report['quotient']['text']}, ini(Q) = {report['quotient_initial']['text']}")
        lines.append(f"  alternative: {report['alternative'] or 'none'}")
    for relation in report["relations"]:
        mark = "holds" if relation["holds"] else "fails"
        kind = "" if relation["required"] else " (optional)"
        lines.append(f"  {relation['label']}: {mark}{kind}")
        certificate = relation.get("certificate")
        if certificate and certificate["kind"] == "prem":
            lines.append(f"    powers={certificate['powers']}, cofactors=[{', '.join(_texts(certificate['cofactors']))}]")
        elif certificate:
            lines.append(
                f"    A={certificate['cofactor']['text']}, B=[{', '.join(_texts(certificate['chain_cofactors']))}]"
            )
    return lines


def _branch_lines(branch: Payload) -> List[str]:
    lines = [f"  {branch['path']} ({branch['status']}, {branch['order']}):"]
    lines.append(f"    basis: {{{', '.join(_texts(branch['basis']))}}}")
    lines.append(f"    W-characteristic set: [{', '.join(_texts(branch['wchar']))}]")
    return lines


def _analysis_lines(payload: Payload) -> List[str]:
    lines: List[str] = []
    if "wchar" in payload:
        wchar = payload["wchar"]
        lines.extend(_list_section("W-characteristic set", wchar["members"]))
        if wchar["parameters"]:
            lines.append(f"  parameters: {', '.join(wchar['parameters'])}")
    if payload.get("classification"):
        classification = payload["classification"]
        lines.append("classification:")
        lines.append(f"  {classification['summary']}")
        witness = classification["shape_witness"]
        suffix = f" (pair {witness[0]}, {witness[1]})" if witness else ""
        lines.append(f"  shape: {classification['shape']}{suffix}")
        if "irregularity_index" in payload:
            regular = " (regular basis)" if payload.get("regular_basis") else ""
            lines.append(f"  irregularity index: {payload['irregularity_index']}{regular}")
    if payload.get("ritt"):
        ritt = payload["ritt"]
        lines.append(f"ritt: {ritt['tag']}")
        if ritt["charset"] is not None:
            lines.append(f"  charset: [{', '.join(_texts(ritt['charset']))}]")
        if ritt["alternative"] is not None:
            lines.append(f"  alternative: [{', '.join(_texts(ritt['alternative']))}]")
        if ritt["note"]:
            lines.append(f"  note: {ritt['note']}")
    if payload.get("irregularity"):
        lines.extend(_report_lines(payload["irregularity"]))
    if payload.get("note"):
        lines.append(f"note: {payload['note']}")
    return lines


def render_text(payload: Payload) -> str:
    """Labelled sections for whichever keys the payload carries."""
    lines: List[str] = []
    if "order" in payload:
        lines.append(f"order: {payload['order']}")
        lines.append(f"field: {payload['field']}")
    if "basis" in payload:
        lines.extend(_list_section("basis", payload["basis"]))
    lines.extend(_analysis_lines(payload))
    if payload.get("reordered"):
        reordered = payload["reordered"]
        if reordered["order"] is None:
            lines.append(f"reordered: none ({reordered['note']})")
        else:
            lines.append(f"reordered: {reordered['order']}")
            lines.extend(f"  {line}" for line in _list_section("basis", reordered["basis"]))
            lines.extend(f"  {line}" for line in _analysis_lines(reordered))
    if "decomposition" in payload:
        decomposition = payload["decomposition"]
        lines.append(f"leaves: {len(decomposition['leaves'])} (nodes={decomposition['nodes']})")
        for branch in decomposition["leaves"]:
            lines.extend(_branch_lines(branch))
        for path in decomposition["units"]:
            lines.append(f"  {path}: unit ideal")
        for entry in decomposition["unstable"]:
            lines.append(f"  {entry['path']}: order-unstable ({entry['note']})")
        if decomposition["splits"]:
            lines.append("splits:")
        for split in decomposition["splits"]:
            adjoined = "; ".join(", ".join(_texts(group)) for group in split["adjoined"])
            lines.append(f"  {split['path']} {split['kind']}: {adjoined}")
        for certificate in decomposition.get("cover_certificates", []):
            mark = "holds" if certificate["holds"] else "fails"
            lines.append(f"  cover {certificate['path']}: {mark} [{', '.join(_texts(certificate['products']))}]")
    for key in ("charpro", "ritt_check"):
        if payload.get(key):
            check = payload[key]
            lines.append(f"{key}: {'passed' if check['passed'] else 'failed'} ({check['checks']} checks)")
            lines.extend(f"  {f['name']}: {f['detail']}" for f in check["failures"])
    if "verification" in payload:
        verification = payload["verification"]
        lines.append(f"verification: {'passed' if verification['passed'] else 'failed'}")
        for check in verification["checks"]:
            if not check["passed"]:
                lines.append(f"  {check['category']} {check['path']}: {check['detail']}")
        lines.extend(f"  note: {note}" for note in verification["notes"])
    return "\n".join(lines)
