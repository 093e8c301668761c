#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Package-wide limits and defaults.
"""

# largest admissible modulus of a prime field
MAX_PRIME = 2**31

# guard for the exhaustive orbit partition of p_n(F_p)*
ORACLE_MAX_POINTS = 10**7

# guard for enumerations of GL(n, F_p)-orbits and of commutant algebras
ORBIT_MAX_POINTS = 10**6

# randomised property sweeps
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000
RANDOM_BOUND = 5

JSON_INDENT = 2

PICKLE_PROTOCOL = 4

# Mackey strata are cross-checked against the F_p partition up to this size
MACKEY_CENSUS_MAX_N = 3
