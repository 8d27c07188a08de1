"""
Constants used across the ritt-groebner project.

This module centralizes defaults for checks, decomposition, the command line
and the web explorer so that the engine, the tools and the front-ends agree.
"""

# Coefficient fields
RATIONAL_FIELD_SPEC = "q"
PRIME_FIELD_PREFIX = "fp:"
MAX_PRIME = 2**31

# Randomized checks
DEFAULT_SEED = 0
DEFAULT_SAMPLE_COUNT = 8
SAMPLE_MAX_DEGREE = 2
SAMPLE_MAX_TERMS = 3
SAMPLE_COEFFICIENT_BOUND = 5

# Saturation / radical membership tag variable
TAG_VARIABLE_PREFIX = "_z"

# Decomposition
DEFAULT_MAX_NODES = 100
ORDER_FUEL_FACTOR = 2
DEFAULT_WORKERS = 4

# Command line
EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
FIXTURES_DIR = "fixtures"

# Web explorer
EXPLORER_HOST = "127.0.0.1"
EXPLORER_PORT = 5000
