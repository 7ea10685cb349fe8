"""Write every canonical fixture as JSON and DOT into data/fixtures/.

Each JSON file re-parses through the library before it is written.
"""

import json
import sys
from pathlib import Path

# Add src to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.synthesis.fixtures import FIXTURES, build_fixture
from src.utils.serialization import load_graph


def main():
    """Export all fixtures."""
    print("=" * 70)
    print("minorforge: exporting canonical fixtures")
    print("=" * 70)
    print()

    output_dir = project_root / "data" / "fixtures"
    output_dir.mkdir(parents=True, exist_ok=True)
    print(f"Output directory: {output_dir}")
    print()

    for name in sorted(FIXTURES):
        fx = build_fixture(name)
        data = fx.to_dict()
        # graph keys must survive a parse before we publish the file
        load_graph(data)

        json_path = output_dir / f"{name}.json"
        with open(json_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2)

        labels = None
        if fx.society is not None:
            labels = {v: f"{v} ω{i}" for i, v in enumerate(fx.society.omega.to_list())}
        dot_path = output_dir / f"{name}.dot"
        dot_path.write_text(fx.graph.to_dot(name.replace("-", "_"), labels), encoding="utf-8")

        print(f"  {name:<24} {fx.graph.order():>4} vertices {fx.graph.edge_count():>5} edges")

    print()
    print("=" * 70)
    print(f"Exported {len(FIXTURES)} fixtures")
    print("=" * 70)


if __name__ == "__main__":
    main()
