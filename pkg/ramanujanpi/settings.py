import os
from pathlib import Path

ROOT_DIR = Path(os.path.dirname(os.path.abspath(__file__))).parent
DATA_DIR = Path(os.path.dirname(os.path.abspath(__file__))) / "data"
SINGULAR_VALUES_FILE = DATA_DIR / "singular_values.json"

# precision policy
MIN_DIGITS = 16
DEFAULT_GUARD = 10
GUARD_SCALING_THRESHOLD = 10**4

# cli
DIGITS_CAP = int(os.environ.get("RAMANUJANPI_DIGITS_CAP", 10**6))
COMPUTE_EXTRA_DIGITS = 20
TERM_BUDGET = 10**9
BENCH_TERM_BUDGET = 10**7
VERIFY_DIGITS = 100
VERIFY_MIN_DIGITS = 30

RANDOM_SEED = 1729
