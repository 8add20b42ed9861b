"""Application constants."""

# Field defaults
DEFAULT_P = 3
DEFAULT_E = 1

# Carlitz tower guard
DEFAULT_TOWER_CAP = 12
TOWER_CAP_ENV = "CARLITZ_CACHE_CAP"

# Verification defaults
DEFAULT_MAX_N = 16
DEFAULT_PREC = 33
DEFAULT_K_MAX = 2
DEFAULT_SEED = 2017
DEFAULT_SUITE_FIELDS = [(2, 1), (3, 1)]
MAX_FAILURES_PER_IDENTITY = 5

# Environment overrides for the suite
MAX_N_ENV = "CARLITZ_MAX_N"
PREC_ENV = "CARLITZ_PREC"
SEED_ENV = "CARLITZ_SEED"

# CLI
CLI_COMMANDS = ["compute", "verify", "series"]
OUTPUT_FORMATS = ["text", "json", "latex"]
SERIES_NAMES = ["eC", "logC", "zOverLogC", "zOverEC", "logCPow"]
CLI_MAX_N_CAP = 64  # lifted by --unsafe-large
CLI_PREC_CAP = 200

# File Configuration
CONFIG_FILE = "carlitz_config.json"
LOG_LEVEL_ENV = "CARLITZ_LOG_LEVEL"

# Exit codes
EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
