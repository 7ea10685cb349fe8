"""Runtime configuration for minorforge.

Values are read once from the environment (and an optional ``.env`` file).
Library functions use these as defaults; the CLI overrides them with flags.
"""

import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Search budget (node expansions) used when a caller does not pass one
DEFAULT_BUDGET = int(os.getenv("MINORFORGE_BUDGET", "200000"))

# Seed for every randomized heuristic
DEFAULT_SEED = int(os.getenv("MINORFORGE_SEED", "0"))

# Worker count for parallel root branching
DEFAULT_JOBS = int(os.getenv("MINORFORGE_JOBS", "1"))

# Largest society accepted by the exact depth computation
DEPTH_LIMIT = int(os.getenv("MINORFORGE_DEPTH_LIMIT", "12"))

LOG_LEVEL = os.getenv("MINORFORGE_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

AUDIT_ENABLED = os.getenv("MINORFORGE_AUDIT", "0") == "1"
AUDIT_FILE = os.getenv("MINORFORGE_AUDIT_FILE", os.path.join("logs", "audit_trail.json"))

API_HOST = os.getenv("MINORFORGE_API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("MINORFORGE_API_PORT", "8000"))

# Largest society accepted by the exhaustive separation scan
SEPARATION_LIMIT = int(os.getenv("MINORFORGE_SEPARATION_LIMIT", "40"))
