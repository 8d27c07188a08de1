import logging
from typing import Any, Dict, Optional

from ..decompose import decompose_normal
from ..errors import AlgebraError
from ..render_utils import decomposition_payload, header_payload
from ..system_file_utils import parse_system
from .run_options import RunOptions

logger = logging.getLogger(__name__)


def decompose_system(system_text: str, options: Optional[RunOptions] = None) -> Dict[str, Any]:
    """
    Decompose a system into branches with normal W-characteristic sets.

    Args:
        system_text (str): Contents of a system file
        options (RunOptions): Node budget, worker count, strong mode, certificates

    Returns:
        Dict[str, Any]: {"status": "success", "payload": ...} or {"status": "error", "message": ...}
    """
    options = options or RunOptions()
    logger.info(
        f"[decompose_system]: strong={options.strong}, max_nodes={options.max_nodes}, workers={options.workers}"
    )
    try:
        system = parse_system(system_text, options.field)
        result = decompose_normal(system.generators, options.decompose_options())
        payload = header_payload("decompose", system.order)
        payload["strong"] = options.strong
        payload["decomposition"] = decomposition_payload(result, options.certificates)
        logger.info(f"[decompose_system]: status=success, leaves={len(result.leaves)}")
        return {
            "status": "success",
            "payload": payload,
            "message": f"{len(result.leaves)} leaves from {result.nodes} branches",
        }
    except AlgebraError as error:
        logger.info(f"[decompose_system]: status=error, message={error}")
        return {"status": "error", "message": str(error)}
