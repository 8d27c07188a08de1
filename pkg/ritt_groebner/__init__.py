"""
Exact Gröbner bases, W-characteristic sets and normal decompositions.

This package computes reduced plex Gröbner bases, extracts their
W-characteristic sets, classifies triangular sets as ascending, regular or
normal, derives Ritt characteristic sets where possible, reports where and how
regularity fails, and splits systems into normal triangular sets with
re-checkable certificates.
"""

from . import polyring
from . import triset
from . import groebner
from . import wchar
from . import decompose
from . import system_file_utils
from . import render_utils
from . import tools
from . import constants
from . import errors

__all__ = [
    "polyring",
    "triset",
    "groebner",
    "wchar",
    "decompose",
    "system_file_utils",
    "render_utils",
    "tools",
    "constants",
    "errors",
]
