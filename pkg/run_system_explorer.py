#!/usr/bin/env python3
"""
Launch the System Explorer web API
"""

import sys
import os

# Add the current directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from ritt_groebner.constants import EXPLORER_HOST, EXPLORER_PORT
from system_explorer.app import app

if __name__ == "__main__":
    print("Starting the System Explorer web API...")
    print(f"Commands: http://{EXPLORER_HOST}:{EXPLORER_PORT}/api/commands")
    print("Press Ctrl+C to stop")
    print("-" * 50)

    app.run(debug=True, host=EXPLORER_HOST, port=EXPLORER_PORT)
