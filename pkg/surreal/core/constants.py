"""Constants shared across the surreal packages."""

# Arena
DEFAULT_NODE_BUDGET = 2 ** 22
DEFAULT_RECURSION_LIMIT = 20000
NODE_BUDGET_ENV = "SURREAL_NODE_BUDGET"

# Configuration
DEFAULT_CONFIG_PATH = ".surreal/config.yml"

# Law harness
DEFAULT_COUNTEREXAMPLE_LIMIT = 10
DEFAULT_TUPLE_LIMIT = 2_000_000
LOCK_TIMEOUT_SECONDS = 30

# CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
