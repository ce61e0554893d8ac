from typing import List, Tuple

# --- Exact Engine ---
# Number of retained coefficients when a caller does not state an order.
DEFAULT_ORDER = 32

# --- Moments ---
# Largest path length the brute-force Motzkin enumeration will accept.
PATH_ENUMERATION_BOUND = 18

# Default number of terms printed by the CLI moment table.
DEFAULT_MOMENT_TERMS = 6

# --- Quadrature ---
QUAD_REL_TOL = 1e-10
QUAD_REL_TOL_RANGE: Tuple[float, float] = (1e-14, 1e-2)
QUAD_SUBDIVISION_LIMIT = 200
QUAD_MAX_MOMENT = 12

# --- Weight CSV ---
CSV_HEADER: Tuple[str, str] = ("t", "omega")
CSV_SIGNIFICANT_DIGITS = 12
DEFAULT_WEIGHT_SAMPLES = 101

# --- Verification Grids ---
# (h, k) pairs, k != 0, ordered lexicographically.
SMALL_HK_GRID: List[Tuple[int, int]] = [
    (h, k) for h in range(-2, 3) for k in range(-2, 3) if k != 0
]
FULL_HK_GRID: List[Tuple[int, int]] = [
    (h, k) for h in range(-3, 4) for k in range(-3, 4) if k != 0
]

# Highest moment index checked by the five-route agreement suite.
SMALL_MOMENT_N = 12
FULL_MOMENT_N = 24
PATH_ORACLE_N = 14

# Catalan identity ranges.
CATALAN_CORE_M = 100
CATALAN_K_FORM_M = 30

# Weight suite grid: h in {0,1,2}, k in {1,2,4}.
WEIGHT_GRID: List[Tuple[int, int]] = [(h, k) for h in (0, 1, 2) for k in (1, 2, 4)]

# --- Logging ---
LOG_FILENAME = "motzkin_log.txt"
