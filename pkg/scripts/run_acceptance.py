"""Seeded acceptance sweeps with a summary table.

Sample sizes are the full acceptance counts multiplied by --scale
(default MINORFORGE_TEST_SCALE or 1.0). Results are saved to
logs/acceptance_results.json.
"""

import argparse
import json
import logging
import os
import random
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import networkx as nx

# Add src to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.configurations.checkers import verify_certificate
from src.graph.graph import Graph, complete_graph, subdivide_edges
from src.graph.minors import find_k6_minor, verify_minor_model
from src.planarity.apex import is_apex
from src.planarity.embedding import is_planar
from src.society.depth import depth_exact
from src.society.society import Society
from src.society.transactions import max_transaction
from src.synthesis.fixtures import NEST_FIXTURES, build_fixture, subdivided
from src.synthesis.k6 import k6_from_certificate_nest, k6_from_wall_two_crosses
from src.utils import config
from src.utils.errors import BudgetExceeded, TooLarge
from src.walls.arithmetic import rural_vertex_bound
from src.walls.detect import find_wall, verify_wall_embedding
from src.walls.elementary import gen_elementary_wall

logger = logging.getLogger(__name__)

Sweep = Callable[[random.Random, float], Tuple[int, int]]


def _count(scale: float, full: int) -> int:
    return max(1, int(round(full * scale)))


def random_society(rng: random.Random, max_n: int, max_omega: int) -> Society:
    n = rng.randint(3, max_n)
    h = nx.gnp_random_graph(n, rng.uniform(0.2, 0.6), seed=rng.randrange(2**32))
    omega = rng.sample(range(n), rng.randint(1, min(n, max_omega)))
    return Society.of(Graph(n, sorted(h.edges())), omega)


def sweep_apex(rng: random.Random, scale: float) -> Tuple[int, int]:
    checks = [not is_apex(complete_graph(6))[0], is_apex(complete_graph(5))[0]]
    icosa = nx.icosahedral_graph()
    edges = list(icosa.edges()) + [(12, v) for v in range(12)]
    checks.append(is_apex(Graph(13, edges))[0])
    return sum(checks), len(checks)


def sweep_walls(rng: random.Random, scale: float) -> Tuple[int, int]:
    passed = total = 0
    for h in (2, 4, 6) if scale >= 1 else (2, 4):
        g, _ = gen_elementary_wall(h)
        for host in (g, subdivide_edges(g)[0]):
            total += 1
            ok = g.order() == (2 * h + 2) * (h + 1) - 2 and is_planar(host)
            w = find_wall(host, h)
            passed += ok and w is not None and verify_wall_embedding(host, w)
    return passed, total


def sweep_depth_sandwich(rng: random.Random, scale: float) -> Tuple[int, int]:
    passed = total = 0
    for _ in range(_count(scale, 300)):
        s = random_society(rng, 10, 8)
        try:
            d, _ = depth_exact(s, budget=config.DEFAULT_BUDGET)
        except (BudgetExceeded, TooLarge):
            continue
        k, _ = max_transaction(s)
        total += 1
        passed += d <= k <= 2 * d
    return passed, total


def sweep_fixtures(rng: random.Random, scale: float) -> Tuple[int, int]:
    passed = total = 0
    for name in ("turtle", "three-crossed", "gridlet", "doublecross", "leap-5", "windmill", "fan"):
        fx = build_fixture(name)
        total += 1
        passed += verify_certificate(fx.society, fx.certificate)
    return passed, total


def sweep_synthesis(rng: random.Random, scale: float) -> Tuple[int, int]:
    passed = total = 0
    for name in NEST_FIXTURES:
        base = build_fixture(name)
        for fx in (base, subdivided(base)):
            total += 1
            model = k6_from_certificate_nest(fx.society, fx.certificate, fx.neighborhood, fx.nest)
            passed += verify_minor_model(fx.society.graph, model)
    crossed_grid = build_fixture("two-crosses-grid")
    total += 1
    model = k6_from_wall_two_crosses(crossed_grid.graph, *crossed_grid.walls, *crossed_grid.crosses)
    passed += verify_minor_model(crossed_grid.graph, model)
    total += 1
    model = find_k6_minor(crossed_grid.graph)
    passed += model is not None and verify_minor_model(crossed_grid.graph, model)
    return passed, total


def sweep_arithmetic(rng: random.Random, scale: float) -> Tuple[int, int]:
    return int(rural_vertex_bound(12) == 19), 1


SWEEPS: Dict[str, Sweep] = {
    "apex": sweep_apex,
    "wall round-trip": sweep_walls,
    "depth/transaction sandwich": sweep_depth_sandwich,
    "planted certificates": sweep_fixtures,
    "K6 synthesis": sweep_synthesis,
    "boundary bound": sweep_arithmetic,
}


def print_summary(rows: List[Dict[str, object]]) -> None:
    """Print acceptance results."""
    print("\n" + "=" * 70)
    print("ACCEPTANCE RESULTS")
    print("=" * 70)
    for row in rows:
        status = "[OK]" if row["passed"] == row["total"] else "[X]"
        print(f"  {row['sweep']:30s} {row['passed']:>5}/{row['total']:<5} {row['seconds']:>8.2f}s  {status}")
    print("-" * 70)
    failed = [row["sweep"] for row in rows if row["passed"] != row["total"]]
    print("Overall: " + ("ALL PASSED" if not failed else f"FAILED ({', '.join(failed)})"))
    print("=" * 70 + "\n")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=float, default=float(os.getenv("MINORFORGE_TEST_SCALE", "1.0")))
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--only", nargs="*", choices=sorted(SWEEPS), help="run only these sweeps")
    args = parser.parse_args()
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)

    print("=" * 70)
    print(f"minorforge acceptance sweeps (scale {args.scale}, seed {args.seed})")
    print("=" * 70)

    rows: List[Dict[str, object]] = []
    for name, sweep in SWEEPS.items():
        if args.only and name not in args.only:
            continue
        print(f"[*] {name}...", flush=True)
        start = time.perf_counter()
        passed, total = sweep(random.Random(args.seed), args.scale)
        rows.append({"sweep": name, "passed": passed, "total": total, "seconds": time.perf_counter() - start})

    print_summary(rows)

    output_path = project_root / "logs" / "acceptance_results.json"
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump({"seed": args.seed, "scale": args.scale, "results": rows}, f, indent=2)
    print(f"[OK] Detailed results saved to: {output_path}\n")
    return 0 if all(row["passed"] == row["total"] for row in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
