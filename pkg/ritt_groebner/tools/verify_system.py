import logging
from typing import Any, Dict, List, Optional

from ..decompose import decompose_normal, verify_decomposition
from ..errors import AlgebraError
from ..groebner import reduced_gb
from ..render_utils import (
    check_report_payload,
    decomposition_payload,
    header_payload,
    report_payload,
    ritt_payload,
    verification_payload,
)
from ..system_file_utils import parse_system
from ..wchar import charpro_check, ritt_charset, ritt_check, wcharacteristic_set
from .run_options import RunOptions

logger = logging.getLogger(__name__)


def verify_system(system_text: str, options: Optional[RunOptions] = None) -> Dict[str, Any]:
    """
    End-to-end verification of a system.

    Runs the characteristic-property checks on the W-characteristic set, the
    charset checks on any Ritt characteristic set produced, the relations of
    the irregularity report, and a full decomposition followed by its
    verification.

    Args:
        system_text (str): Contents of a system file
        options (RunOptions): Seed, sample count, node budget, workers, strong mode

    Returns:
        Dict[str, Any]: Status "success" when every check passes, "failed" with the
                        failing checks otherwise, "error" when the input is unusable
    """
    options = options or RunOptions()
    logger.info(f"[verify_system]: seed={options.seed}, strong={options.strong}, max_nodes={options.max_nodes}")
    try:
        system = parse_system(system_text, options.field)
        basis = reduced_gb(system.generators)
        payload = header_payload("verify", system.order)
        failures: List[str] = []

        C = wcharacteristic_set(basis)
        if not C.is_unit:
            charpro = charpro_check(basis, C, options.check_options(), strict=False)
            payload["charpro"] = check_report_payload(charpro)
            failures.extend(f"charpro: {c.name}" for c in charpro.failures())

        ritt = ritt_charset(basis)
        payload["ritt"] = ritt_payload(ritt, options.certificates)
        if ritt.charset is not None and not ritt.charset.is_unit:
            charset_report = ritt_check(basis, ritt.charset, options.check_options())
            payload["ritt_check"] = check_report_payload(charset_report)
            failures.extend(f"ritt_check: {c.name}" for c in charset_report.failures())
        if ritt.report is not None:
            payload["irregularity"] = report_payload(ritt.report, options.certificates)
            if not ritt.report.all_relations_hold:
                failures.append("irregularity: a required relation does not hold")

        result = decompose_normal(system.generators, options.decompose_options())
        verification = verify_decomposition(system.generators, result, options.workers)
        payload["decomposition"] = decomposition_payload(result, options.certificates)
        payload["verification"] = verification_payload(verification)
        failures.extend(f"{c.category} {c.path}: {c.detail}" for c in verification.failures())

        if failures:
            logger.info(f"[verify_system]: status=failed, failures={len(failures)}")
            return {"status": "failed", "payload": payload, "failures": failures,
                    "message": f"{len(failures)} checks failed"}
        logger.info("[verify_system]: status=success")
        return {"status": "success", "payload": payload, "failures": [], "message": "all checks passed"}

    except AlgebraError as error:
        logger.info(f"[verify_system]: status=error, message={error}")
        return {"status": "error", "message": str(error)}
