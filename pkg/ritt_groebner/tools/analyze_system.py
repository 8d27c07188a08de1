import logging
from typing import Any, Dict, Optional

from ..decompose import enforce_order_assumption, make_branch
from ..errors import AlgebraError, OrderAssumptionError, OrderUnstableError
from ..groebner import ReducedGroebnerBasis, reduced_gb
from ..render_utils import (
    basis_payload,
    classification_payload,
    header_payload,
    report_payload,
    ritt_payload,
    wchar_payload,
)
from ..system_file_utils import parse_system
from ..triset import classify_chain, classify_shape
from ..wchar import WCharacteristicSet, irregularity_index, irregularity_report, ritt_charset, wcharacteristic_set
from .run_options import RunOptions

logger = logging.getLogger(__name__)

ANALYSIS_COMMANDS = ("gb", "wchar", "classify", "ritt")


def _classify(basis: ReducedGroebnerBasis, C: WCharacteristicSet, certificates: bool) -> Dict[str, Any]:
    classification = classify_chain(C.chain)
    index = irregularity_index(C)
    report, note = None, ""
    if not classification.is_normal:
        try:
            report = irregularity_report(basis, C)
        except OrderAssumptionError as error:
            note = str(error)
    return {
        "classification": classification_payload(classify_shape(C.members), classification, report),
        "irregularity_index": index,
        "regular_basis": index > C.order.n,
        "irregularity": report_payload(report, certificates) if report else None,
        "note": note,
    }


def _reordered(basis: ReducedGroebnerBasis, command: str, certificates: bool) -> Dict[str, Any]:
    """Recompute under an order where every leading variable outranks every parameter."""
    try:
        branch = enforce_order_assumption(make_branch(basis.members, basis=basis))
    except OrderUnstableError as error:
        logger.warning(f"[analyze_system]: status=order_unstable, message={error}")
        return {"order": None, "note": str(error)}

    logger.info(f"[analyze_system]: reordered to {branch.order}")
    payload: Dict[str, Any] = {
        "order": str(branch.order),
        "basis": basis_payload(branch.basis),
        "wchar": wchar_payload(branch.wchar),
    }
    if command == "classify":
        payload.update(_classify(branch.basis, branch.wchar, certificates))
    else:
        result = ritt_charset(branch.basis)
        payload["ritt"] = ritt_payload(result, certificates)
        payload["irregularity"] = report_payload(result.report, certificates) if result.report else None
    return payload


def analyze_system(system_text: str, command: str, options: Optional[RunOptions] = None) -> Dict[str, Any]:
    """
    Compute the reduced basis of a system and, depending on ``command``, its
    W-characteristic set, classification with irregularity report, or Ritt
    characteristic set.

    When leading variables do not all outrank the parameters, classify and
    ritt also report the result under the reordered variables.

    Args:
        system_text (str): Contents of a system file
        command (str): One of gb, wchar, classify, ritt
        options (RunOptions): Field override and certificate flag

    Returns:
        Dict[str, Any]: {"status": "success", "payload": ...} or {"status": "error", "message": ...}
    """
    options = options or RunOptions()
    logger.info(f"[analyze_system]: command={command}, field={options.field}, certificates={options.certificates}")
    if command not in ANALYSIS_COMMANDS:
        message = f"unknown analysis command {command!r}"
        logger.info(f"[analyze_system]: status=error, message={message}")
        return {"status": "error", "message": message}

    try:
        system = parse_system(system_text, options.field)
        basis = reduced_gb(system.generators)
        payload = header_payload(command, system.order)
        payload["basis"] = basis_payload(basis)
        if command == "gb":
            logger.info(f"[analyze_system]: status=success, basis_size={len(basis)}")
            return {"status": "success", "payload": payload, "message": f"reduced basis with {len(basis)} members"}

        C = wcharacteristic_set(basis)
        payload["wchar"] = wchar_payload(C)
        if command == "classify":
            if C.is_unit:
                payload["note"] = "unit ideal"
            else:
                payload.update(_classify(basis, C, options.certificates))
        elif command == "ritt":
            result = ritt_charset(basis)
            payload["ritt"] = ritt_payload(result, options.certificates)
            payload["irregularity"] = report_payload(result.report, options.certificates) if result.report else None
        if command in ("classify", "ritt") and not C.order_assumption_holds():
            payload["reordered"] = _reordered(basis, command, options.certificates)

        logger.info(f"[analyze_system]: status=success, command={command}")
        return {"status": "success", "payload": payload, "message": f"{command} computed"}

    except AlgebraError as error:
        logger.info(f"[analyze_system]: status=error, message={error}")
        return {"status": "error", "message": str(error)}
