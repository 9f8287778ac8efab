# SPDX-License-Identifier: MIT
# Copyright (c) 2026 Cisco Systems, Inc. and its affiliates

"""
Command-line interface for topo-metrics

Exit codes: 0 success, 1 input/config/argument error, 2 computation error.
"""
import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional

from dotenv import load_dotenv

from topo_metrics import __version__
from topo_metrics.config import Settings
from topo_metrics.core import METRIC_NAMES, DistanceKind
from topo_metrics.data import (
    CloudShape,
    EmbeddingFormat,
    load_embeddings,
    load_evaluation_config,
    load_runs,
    save_embeddings,
    synth_cloud,
)
from topo_metrics.engine import MetricEngine, evaluation_report, scaling_report
from topo_metrics.errors import ComputationError, InputError
from topo_metrics.utils.report import write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COMPUTATION = 2

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the input-error exit code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"error: {message}\n")


def _name_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in _name_list(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_compute(args: argparse.Namespace, engine: MetricEngine) -> int:
    """Compute metrics for one embedding file"""
    fmt = EmbeddingFormat(args.format) if args.format else EmbeddingFormat.infer(args.input)
    emb = load_embeddings(args.input, fmt)
    result = engine.compute(
        emb,
        metrics=args.metrics,
        kind=DistanceKind(args.distance),
        subsample=args.subsample,
        seed=args.seed,
        use_subsample=not args.no_subsample,
        with_diagrams=args.diagrams,
        oracle=args.oracle,
    )
    write_report(result.as_report(args.input, fmt.value, args.diagrams), args.output)
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace, engine: MetricEngine) -> int:
    """Correlate unsupervised metrics with downstream scores"""
    config = load_evaluation_config(args.config)
    table = load_runs(args.runs, config)
    summary = engine.evaluate(table, config.metrics, config.tasks, config.quality_aggregation)
    write_report(evaluation_report(summary), args.output)
    return EXIT_OK


def cmd_scaling(args: argparse.Namespace, engine: MetricEngine) -> int:
    """Fit the growth exponent of persistence0 for each dimension"""
    seed = engine.settings.seed if args.seed is None else args.seed
    results = engine.scaling(args.dims, args.n_grid, args.trials, seed)
    write_report(scaling_report(results, seed, args.trials), args.output)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace, engine: MetricEngine) -> int:
    """Write a synthetic point cloud"""
    seed = engine.settings.seed if args.seed is None else args.seed
    emb = synth_cloud(CloudShape(args.shape), args.n, args.d, args.noise, args.clusters, seed)
    save_embeddings(emb, args.output, args.format)
    logger.info(f"Wrote {args.shape} cloud to {args.output}")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, MetricEngine], int]] = {
    "compute": cmd_compute,
    "evaluate": cmd_evaluate,
    "scaling": cmd_scaling,
    "synth": cmd_synth,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="topo-metrics",
        description="topo-metrics - label-free embedding quality metrics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # All nine metrics of an embedding
  topo-metrics compute --input embeddings.csv --output report.json

  # Topological metrics only, cosine distance, 1000-point subsample
  topo-metrics compute --input emb.bin --metrics persistence0,persistence1 \\
      --distance cosine --subsample 1000 --seed 7

  # Rank metrics against downstream scores
  topo-metrics evaluate --runs runs.csv --config evaluation.yaml

  # Growth exponent of persistence0 on the unit square and cube
  topo-metrics scaling --dims 2,3 --n-grid 100,200,400,800,1600 --trials 10 --seed 0

  # Noisy circle
  topo-metrics synth --shape circle --n 200 --d 2 --noise 0.05 --seed 1 --output circle.csv

Environment:
  TOPO_METRICS_THREADS, TOPO_METRICS_SUBSAMPLE, TOPO_METRICS_SEED, TOPO_METRICS_LOG_LEVEL
  (also read from a .env file in the working directory)
        """,
    )
    parser.add_argument("--version", action="version", version=f"topo-metrics {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        help="Logging level (default: TOPO_METRICS_LOG_LEVEL or WARNING)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    compute = subparsers.add_parser("compute", help="Compute metrics of an embedding file")
    compute.add_argument("--input", required=True, help="Embedding file (CSV or binary)")
    compute.add_argument(
        "--format", choices=[f.value for f in EmbeddingFormat], help="Input format"
    )
    compute.add_argument(
        "--metrics",
        type=_name_list,
        help=f"Comma-separated metrics (default: all of {','.join(METRIC_NAMES)})",
    )
    compute.add_argument(
        "--distance",
        choices=[k.value for k in DistanceKind],
        default=DistanceKind.EUCLIDEAN.value,
        help="Distance for the persistence metrics",
    )
    compute.add_argument("--subsample", type=int, help="Cap on the number of points used")
    compute.add_argument(
        "--no-subsample", action="store_true", help="Use every point regardless of the cap"
    )
    compute.add_argument("--seed", type=int, help="Subsampling seed")
    compute.add_argument("--output", help="Report path (default: stdout)")
    compute.add_argument(
        "--diagrams", action="store_true", help="Include H0/H1 (birth, death) pairs"
    )
    compute.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    evaluate = subparsers.add_parser("evaluate", help="Correlate metrics with downstream scores")
    evaluate.add_argument("--runs", required=True, help="Runs manifest (CSV/TSV)")
    evaluate.add_argument("--config", required=True, help="Evaluation config (YAML)")
    evaluate.add_argument("--output", help="Report path (default: stdout)")

    scaling = subparsers.add_parser("scaling", help="Persistence0 growth-exponent experiment")
    scaling.add_argument("--dims", type=_int_list, required=True, help="e.g. 2,3")
    scaling.add_argument(
        "--n-grid", type=_int_list, required=True, help="e.g. 100,200,400,800,1600"
    )
    scaling.add_argument("--trials", type=int, default=10, help="Samples per grid point")
    scaling.add_argument("--seed", type=int, help="Root seed")
    scaling.add_argument("--output", help="Report path (default: stdout)")

    synth = subparsers.add_parser("synth", help="Generate a synthetic point cloud")
    synth.add_argument("--shape", choices=[s.value for s in CloudShape], required=True)
    synth.add_argument("--n", type=int, required=True, help="Number of points")
    synth.add_argument("--d", type=int, required=True, help="Ambient dimension")
    synth.add_argument("--noise", type=float, default=0.0, help="Gaussian noise scale")
    synth.add_argument("--clusters", type=int, default=3, help="Cluster count (clusters shape)")
    synth.add_argument("--seed", type=int, help="Generator seed")
    synth.add_argument("--output", required=True, help="Output embedding file")
    synth.add_argument(
        "--format", choices=[f.value for f in EmbeddingFormat], help="Output format"
    )

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    load_dotenv(dotenv_path=os.path.join(os.getcwd(), ".env"), override=False)

    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    try:
        settings = Settings.from_env()
        if args.log_level:
            settings.log_level = args.log_level
        settings.validate()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    logging.basicConfig(level=settings.log_level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, MetricEngine(settings))
    except ComputationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    except (InputError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
