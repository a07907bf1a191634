"""Constants used throughout the landscape package."""

# Environment variables
ENV_THREADS = "LANDSCAPE_THREADS"
ENV_ORACLE_CAP = "LANDSCAPE_ORACLE_CAP"
ENV_MAX_CYCLE_LEN = "LANDSCAPE_MAX_CYCLE_LEN"
ENV_CHUNK_SIZE = "LANDSCAPE_CHUNK_SIZE"
ENV_LOG_LEVEL = "LANDSCAPE_LOG_LEVEL"

# Configuration paths
CONFIG_DIR = ".config/landscape"
CONFIG_FILE = ".env"
CONFIG_PATH_TEMPLATE = "~/%s/%s" % (CONFIG_DIR, CONFIG_FILE)

# Default values
DEFAULT_THREADS = 1
DEFAULT_ORACLE_CAP = 20
DEFAULT_MAX_CYCLE_LEN = 6
DEFAULT_CHUNK_SIZE = 500
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_VERIFY_PAIRS = 10

# Statistics
POISSON_BINS = 5  # j = 0..3 plus a pooled tail bin
MIN_EXPECTED_COUNT = 5.0
MIN_COMPARISON_SAMPLE = 1000

# File extensions
EXT_DIMACS = (".cnf", ".dimacs")
EXT_CSV = ".csv"
EXT_JSON = ".json"

# Native formula format
NATIVE_HEADER = "loci"
NATIVE_COMMENT = "#"

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE_ERROR = 2
EXIT_MISMATCH = 3

NOT_CONNECTED_TEXT = "not connected"
