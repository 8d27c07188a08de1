"""
Status-returning entry points over the engine.

Every tool logs its input at the start and its status at the end, and turns
engine errors into {"status": "error", "message": ...} dictionaries.
"""

from .analyze_system import ANALYSIS_COMMANDS, analyze_system
from .decompose_system import decompose_system
from .run_options import RunOptions
from .verify_system import verify_system

__all__ = ['ANALYSIS_COMMANDS', 'RunOptions', 'analyze_system', 'decompose_system', 'verify_system']
