import os
import sys
from typing import Any, Dict, Tuple

from flask import Flask, jsonify, request
from pydantic import ValidationError

# Add parent directory to Python path to allow imports from ritt_groebner
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ritt_groebner.cli import COMMAND_HELP, dispatch_command
from ritt_groebner.constants import EXPLORER_HOST, EXPLORER_PORT
from ritt_groebner.tools import RunOptions

# ==============================================================================
# FLASK APP SETUP
# ==============================================================================

app = Flask(__name__)

# ==============================================================================
# UTILITY FUNCTIONS
# ==============================================================================

def to_response(result: Dict[str, Any]) -> Tuple[Dict[str, Any], int]:
    """Status dictionary to a JSON body and HTTP code; verification failures are still 200."""
    if result["status"] == "error":
        return {"status": "error", "error": result["message"]}, 422
    body = dict(result["payload"])
    body["status"] = result["status"]
    if result["status"] == "failed":
        body["failures"] = result["failures"]
    return body, 200

# ==============================================================================
# WEB ROUTES
# ==============================================================================

@app.route('/api/commands', methods=['GET'])
def api_commands():
    """List the available commands."""
    return jsonify({"commands": [{"name": name, "description": text} for name, text in COMMAND_HELP.items()]})


@app.route('/api/<command>', methods=['POST'])
def api_run(command: str):
    """
    Run one command on a posted system.

    Body: {"system": "<system file text>", "options": {...RunOptions fields...}}
    Returns the payload the command line prints with --json, plus "status".
    """
    if command not in COMMAND_HELP:
        return jsonify({"status": "error", "error": f"Unknown command: {command}"}), 404

    data = request.get_json(silent=True) or {}
    system_text = data.get('system', '')
    if not isinstance(system_text, str) or not system_text.strip():
        return jsonify({"status": "error", "error": "System text is required"}), 400

    try:
        options = RunOptions(**(data.get('options') or {}))
    except (ValidationError, TypeError) as error:
        return jsonify({"status": "error", "error": f"Invalid options: {error}"}), 400

    body, code = to_response(dispatch_command(command, system_text, options))
    return jsonify(body), code

# ==============================================================================
# MAIN APPLICATION
# ==============================================================================

if __name__ == '__main__':
    app.run(debug=True, host=EXPLORER_HOST, port=EXPLORER_PORT)
