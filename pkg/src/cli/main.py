"""
minorforge command line.

Every command reads JSON (a file given with --input, stdin by default) and
writes one JSON document to stdout. Logs go to stderr.

Exit codes: 0 completed, 2 budget exceeded, 3 malformed input or unmet
premise, 64 usage error.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

import networkx as nx

from src.configurations.certificate import KINDS, SIZED_KINDS
from src.configurations.checkers import explain_certificate
from src.configurations.finders import find_certificate
from src.configurations.leaps import classify_leap_outcomes
from src.configurations.orderly import OrderlyTransaction, t_obstructions
from src.decomposition.wars import explain_war
from src.graph.graph import Graph, grid_graph
from src.graph.minors import explain_minor_model, find_k6_minor
from src.graph.paths import PathSystem
from src.planarity.apex import is_apex, is_internally_4_connected
from src.planarity.embedding import is_planar
from src.society.depth import depth_exact
from src.society.nest import Nest
from src.society.rural import is_nearly_rural, is_rural
from src.society.society import Neighborhood, explain_planar_truncation
from src.society.transactions import max_transaction
from src.synthesis.fixtures import FIXTURES, build_fixture
from src.synthesis.k6 import synthesize_certificate_nest, synthesize_wall_two_crosses
from src.targets.target import explain_target
from src.utils import config
from src.utils.audit_logger import log_verification
from src.utils.budget import Budget
from src.utils.errors import (
    BudgetExceeded,
    HypothesisUnmet,
    InvalidWitnessError,
    MalformedInputError,
    NoModel,
    PerpendicularityRequired,
    TooLarge,
)
from src.utils.serialization import (
    dumps,
    load_certificate,
    load_graph,
    load_minor_model,
    load_society,
    load_target,
    load_truncation_witness,
    load_war,
    read_json,
)
from src.walls.detect import WallEmbedding
from src.walls.elementary import gen_elementary_wall, gen_pinwheel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_MALFORMED = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with the sysexits usage code instead of 2."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ----------------------------------------------------------------------
# input helpers
# ----------------------------------------------------------------------
def _document(args) -> Dict[str, Any]:
    data = read_json(args.input)
    if not isinstance(data, dict):
        raise MalformedInputError("expected a JSON object")
    return data


def _witness(args, doc: Dict[str, Any], key: str) -> Any:
    """The witness from --witness, else the key of the input document."""
    if args.witness:
        return read_json(args.witness)
    if key not in doc:
        raise MalformedInputError(f"no --witness given and the input has no '{key}' entry")
    return doc[key]


def _budget(args, where: str) -> Budget:
    return Budget(args.budget, where=where)


def _audit(operation: str, verdict: Any, payload: Any, violated: Optional[str], budget: Optional[Budget] = None):
    log_verification(operation, verdict, payload, violated, budget.to_dict() if budget else None)


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------
def cmd_gen(args) -> Dict[str, Any]:
    if args.what == "wall":
        g, _ = gen_elementary_wall(args.height)
        return g.to_dict()
    if args.what == "pinwheel":
        return gen_pinwheel(args.vanes).to_dict()
    if args.what == "grid":
        return grid_graph(args.rows, args.cols).to_dict()
    if args.what == "random":
        h = nx.gnp_random_graph(args.n, args.p, seed=args.seed)
        return Graph(args.n, sorted(h.edges())).to_dict()
    if args.what == "fixture":
        if not args.name:
            raise UsageError(f"gen fixture needs a name: {', '.join(sorted(FIXTURES))}")
        try:
            return build_fixture(args.name).to_dict()
        except ValueError as e:
            raise UsageError(str(e)) from e
    raise UsageError(f"unknown generator {args.what}")


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------
def _k6(args, doc: Dict[str, Any]) -> Dict[str, Any]:
    budget = _budget(args, "analyze k6")
    if {"certificate", "neighborhood", "nest"} <= doc.keys() and "omega" in doc:
        s = load_society(doc)
        try:
            result = synthesize_certificate_nest(
                s,
                load_certificate(doc["certificate"]),
                Neighborhood.from_dict(doc["neighborhood"]),
                Nest.from_dict(doc["nest"]),
                budget,
            )
        except NoModel as e:
            return {"k6_minor": False, "reason": str(e), "diagnostics": e.diagnostics}
        return {"k6_minor": True, "model": result.model.to_dict(), "provenance": result.to_dict()["provenance"]}
    g = load_graph(doc)
    if "walls" in doc and len(doc["walls"]) == 2:
        walls = [WallEmbedding.from_dict(g, w) for w in doc["walls"]]
        crosses = [PathSystem.of(c["paths"]) if c else None for c in doc.get("crosses", [None, None])]
        try:
            result = synthesize_wall_two_crosses(g, walls[0], walls[1], crosses[0], crosses[1], budget=budget)
        except NoModel as e:
            return {"k6_minor": False, "reason": str(e), "diagnostics": e.diagnostics}
        return {"k6_minor": True, "model": result.model.to_dict(), "provenance": result.to_dict()["provenance"]}
    model = find_k6_minor(g, budget)
    out: Dict[str, Any] = {"k6_minor": model is not None, "spent": budget.spent}
    if model is not None:
        out["model"] = model.to_dict()
    return out


def cmd_analyze(args) -> Dict[str, Any]:
    doc = _document(args)
    if args.what == "k6":
        return _k6(args, doc)
    g = load_graph(doc)
    if args.what == "planar":
        return {"planar": is_planar(g)}
    if args.what == "apex":
        apex, witness = is_apex(g)
        return {"apex": apex, "witness": witness}
    if args.what == "i4c":
        return {"internally_4_connected": is_internally_4_connected(g)}
    raise UsageError(f"unknown analysis {args.what}")


# ----------------------------------------------------------------------
# society
# ----------------------------------------------------------------------
def cmd_society(args) -> Dict[str, Any]:
    doc = _document(args)
    s = load_society(doc)
    if args.what == "rural":
        return {"rural": is_rural(s)}
    if args.what == "nearly-rural":
        ok, witness = is_nearly_rural(s)
        return {"nearly_rural": ok, "witness": witness}
    if args.what == "depth":
        depth, ld = depth_exact(s, limit=args.limit, budget=_budget(args, "society depth"))
        return {"depth": depth, "decomposition": ld.to_dict()}
    if args.what == "transaction":
        k, paths = max_transaction(s)
        return {"max_transaction": k, "paths": [list(p) for p in paths.paths]}
    if args.what == "obstructions":
        t = OrderlyTransaction.from_dict(_witness(args, doc, "transaction"))
        report = t_obstructions(s, t, _budget(args, "society obstructions"))
        return dict(report.to_dict(), found=not report.is_empty())
    if args.what == "leap":
        return classify_leap_outcomes(s, _budget(args, "society leap")).to_dict()
    raise UsageError(f"unknown society metric {args.what}")


# ----------------------------------------------------------------------
# detect
# ----------------------------------------------------------------------
def cmd_detect(args) -> Dict[str, Any]:
    if args.kind not in KINDS:
        raise UsageError(f"unknown kind {args.kind!r}; choose from {', '.join(KINDS)}")
    if args.kind in SIZED_KINDS and args.size is None:
        raise UsageError(f"{args.kind} needs --size")
    s = load_society(_document(args))
    found = find_certificate(s, args.kind, args.size, _budget(args, f"detect {args.kind}"))
    if found is None:
        return {"found": False}
    return found.to_dict()


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------
def _verify_model(args, doc) -> Optional[str]:
    return explain_minor_model(load_graph(doc), load_minor_model(_witness(args, doc, "model")))


def _verify_certificate(args, doc) -> Optional[str]:
    return explain_certificate(load_society(doc), load_certificate(_witness(args, doc, "certificate")))


def _verify_war(args, doc) -> Optional[str]:
    w = load_war(_witness(args, doc, "war"))
    return explain_war(load_society(doc), w, args.strength, _budget(args, "verify war"))


def _verify_truncation(args, doc) -> Optional[str]:
    witness = load_truncation_witness(_witness(args, doc, "truncation"))
    return explain_planar_truncation(load_society(doc), witness)


def _verify_target(args, doc) -> Optional[str]:
    """The target's host defaults to the input society."""
    data = dict(_witness(args, doc, "target"))
    data.setdefault("host", {k: doc[k] for k in ("n", "edges", "vertices", "omega") if k in doc})
    return explain_target(load_target(data))


VERIFIERS: Dict[str, Callable[[Any, Dict[str, Any]], Optional[str]]] = {
    "model": _verify_model,
    "certificate": _verify_certificate,
    "war": _verify_war,
    "truncation": _verify_truncation,
    "target": _verify_target,
}


def cmd_verify(args) -> Dict[str, Any]:
    doc = _document(args)
    reason = VERIFIERS[args.what](args, doc)
    _audit(f"verify_{args.what}", reason is None, doc, reason)
    return {"valid": reason is None, "violated": reason}


# ----------------------------------------------------------------------
# export
# ----------------------------------------------------------------------
def cmd_export(args) -> str:
    doc = _document(args)
    g = load_graph(doc)
    labels = None
    if "omega" in doc:
        labels = {v: f"{v} ω{i}" for i, v in enumerate(doc["omega"])}
    return g.to_dot(args.name, labels)


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minorforge", description="Graph minors, societies and configuration certificates")
    parser.add_argument("--budget", type=int, default=config.DEFAULT_BUDGET, help="search node limit")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="seed for random generators")
    parser.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="worker count")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (stderr)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--input", "-i", default="-", help="JSON input file, '-' for stdin")
        return p

    gen = sub.add_parser("gen", help="generate graphs and fixtures")
    gen.add_argument("what", choices=["wall", "pinwheel", "grid", "random", "fixture"])
    gen.add_argument("name", nargs="?", help="fixture name")
    gen.add_argument("--height", type=int, default=4)
    gen.add_argument("--vanes", type=int, default=4)
    gen.add_argument("--rows", type=int, default=6)
    gen.add_argument("--cols", type=int, default=10)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--p", type=float, default=0.3)
    gen.set_defaults(handler=cmd_gen)

    analyze = with_input(sub.add_parser("analyze", help="planarity, apex, internal 4-connectivity, K6 minors"))
    analyze.add_argument("what", choices=["planar", "apex", "i4c", "k6"])
    analyze.set_defaults(handler=cmd_analyze)

    society = with_input(sub.add_parser("society", help="society metrics"))
    society.add_argument("what", choices=["rural", "nearly-rural", "depth", "transaction", "obstructions", "leap"])
    society.add_argument("--limit", type=int, default=config.DEPTH_LIMIT, help="largest society for depth")
    society.add_argument("--witness", help="orderly transaction JSON for obstructions")
    society.set_defaults(handler=cmd_society)

    detect = with_input(sub.add_parser("detect", help="search for a certificate"))
    detect.add_argument("kind")
    detect.add_argument("--size", type=int)
    detect.set_defaults(handler=cmd_detect)

    verify = with_input(sub.add_parser("verify", help="check a witness against its host"))
    verify.add_argument("what", choices=sorted(VERIFIERS))
    verify.add_argument("--witness", help="witness JSON; defaults to the matching key of the input")
    verify.add_argument("--strength", type=int, default=0, help="separation strength for wars")
    verify.set_defaults(handler=cmd_verify)

    export = with_input(sub.add_parser("export", help="export a graph"))
    export.add_argument("format", choices=["dot"])
    export.add_argument("--name", default="G")
    export.set_defaults(handler=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format=config.LOG_FORMAT, stream=sys.stderr)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if args.jobs > 1:
        logger.info(f"--jobs {args.jobs}: commands run sequentially")

    try:
        result = args.handler(args)
    except UsageError as e:
        print(f"minorforge: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, TooLarge) as e:
        logger.error(f"{args.command}: {e}")
        print(dumps({"error": "budget", "message": str(e)}))
        return EXIT_BUDGET
    except (MalformedInputError, InvalidWitnessError, PerpendicularityRequired, HypothesisUnmet) as e:
        logger.error(f"{args.command}: {e}")
        print(dumps({"error": "malformed", "message": str(e)}))
        return EXIT_MALFORMED
    except ValueError as e:
        print(f"minorforge: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(result if isinstance(result, str) else dumps(result))
    return EXIT_OK


cli_dispatch = main


if __name__ == "__main__":
    sys.exit(main())
