"""
Configuration file for the simpord termination-order workbench
Paths, CLI defaults and the desk-scale universe bounds
"""

import os
import warnings
from pathlib import Path

# Project Root
PROJECT_ROOT = Path(__file__).parent.parent

# Directory Paths
DATA_DIR = PROJECT_ROOT / "data"
FIXTURES_DIR = DATA_DIR / "fixtures"
PROCESSED_DATA_DIR = DATA_DIR / "processed"
SYNTHETIC_DATA_DIR = DATA_DIR / "synthetic"
OUTPUT_DIR = PROJECT_ROOT / "outputs"
FIGURES_DIR = OUTPUT_DIR / "figures"
REPORTS_DIR = OUTPUT_DIR / "reports"
DOCS_DIR = PROJECT_ROOT / "docs"


def ensure_output_dirs() -> None:
    """Create the output directories if they don't exist"""
    for directory in [PROCESSED_DATA_DIR, SYNTHETIC_DATA_DIR, FIGURES_DIR, REPORTS_DIR]:
        directory.mkdir(parents=True, exist_ok=True)


# ===== CLI DEFAULTS =====
DEFAULT_MAX_SIZE = 5          # term universe: node count bound
DEFAULT_BUDGET = 100_000      # wfp visits / sampled triples
DEFAULT_FORMAT = 'text'       # text | json
DEFAULT_SEED = 42
DEFAULT_ORDER = 'theta'       # theta | lpo
DEFAULT_K = 1                 # F_k for --order theta

ORDER_NAMES = ['theta', 'lpo']
OUTPUT_FORMATS = ['text', 'json']
BUDGET_ENV_VAR = 'SIMPORD_BUDGET'


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    """
    Resolve the default budget, honouring the SIMPORD_BUDGET override

    Args:
        default: Budget used when the variable is unset or unusable

    Returns:
        Budget as a non-negative integer
    """
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        warnings.warn(f"⚠️  Ignoring {BUDGET_ENV_VAR}={raw!r}: not an integer")
        return default
    if value < 0:
        warnings.warn(f"⚠️  Ignoring {BUDGET_ENV_VAR}={raw!r}: negative")
        return default
    return value


# ===== EXIT CODES =====
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

# ===== THETA CONTEXT =====
F_PREFIX = 'f_'         # f_0 ... f_k
G_SYMBOL = 'g'          # binary natural-sum symbol
ONE_SYMBOL = '1'        # the constant

# ===== DESK-SCALE UNIVERSES =====
# Total-order / embedding suites over notations
ORDINAL_MAX_NODES = 7
ORDINAL_MAX_VECTOR_LEN = 3
TRANSITIVITY_TRIPLES = 100_000
ORDINAL_EXHAUSTIVE_NODES = 5   # all pairs up to here, sampled pairs above
PAIR_SAMPLES = 200_000
HEATMAP_MAX_NODES = 3

# Condition checkers over term universes
CHECK_MAX_K = 2
CHECK_MAX_SIZE = 5
CHAIN_SEARCH_MAX_SIZE = 4

# Multiset agreement carrier
MULTISET_CARRIER_SIZE = 50

# Well-founded-part oracle run
RANDOM_GRAPH_COUNT = 500
RANDOM_GRAPH_MAX_NODES = 10
RANDOM_GRAPH_EDGE_PROB = 0.2

# Negative control
CHAIN_MAX_LEN = 10

# ===== VISUALIZATION SETTINGS =====
COLOR_SCHEME = {
    'primary': '#2E2E2E',
    'secondary': '#37352F',
    'accent': '#EB5757',      # fail
    'success': '#0F7B6C',     # pass
    'warning': '#FFA344',     # inconclusive
    'info': '#0B6E99',
    'background': '#FFFFFF',
    'text': '#37352F'
}

STATUS_COLORS = {
    'PASS': COLOR_SCHEME['success'],
    'FAIL': COLOR_SCHEME['accent'],
    'INCONCLUSIVE': COLOR_SCHEME['warning'],
}

CHART_STYLE = {
    'font_family': 'Inter, -apple-system, BlinkMacSystemFont, "Segoe UI", sans-serif',
    'title_size': 18,
    'axis_title_size': 14,
    'label_size': 12,
}
