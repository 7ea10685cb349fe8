"""Launcher: `python minorforge.py <command> ...` runs the CLI, `python minorforge.py serve` the HTTP service."""

import os
import subprocess
import sys
from pathlib import Path

# Get project root directory
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))


def run_fastapi() -> int:
    """Run the FastAPI service."""
    from src.utils import config

    print("=" * 70)
    print(f"minorforge API on http://{config.API_HOST}:{config.API_PORT}")
    print("=" * 70)
    os.chdir(PROJECT_ROOT)
    try:
        return subprocess.run(
            [
                sys.executable,
                "-m",
                "uvicorn",
                "src.api.main:app",
                "--host",
                config.API_HOST,
                "--port",
                str(config.API_PORT),
            ],
            check=False,
        ).returncode
    except KeyboardInterrupt:
        print("\nService stopped.")
        return 0


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "serve":
        sys.exit(run_fastapi())

    from src.cli.main import main

    sys.exit(main(sys.argv[1:]))
