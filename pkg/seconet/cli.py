"""
SeCoNet — command-line interface

Usage:
    seconet generate --config c.json [--seed N] [--out DIR] [--sweep-id K]
    seconet simulate --config c.json --strategy NAME [--seed N] [--out DIR] [--dump-scores]
    seconet sweep    --config c.json [--seed N] [--replicates N] [--parallel N] [--strategy NAME ...] [--out DIR]
    seconet plot     --summary out/summary.csv (--epi M --topo M | --all) [--bins N] [--out DIR]
    seconet report   --summary out/summary.csv [--out DIR]
    seconet version

Exit codes: 0 success, 1 configuration or usage error, 2 runtime error.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from seconet.constants import (
    APP_DESCRIPTION,
    APP_NAME,
    AUDIT_FILE_NAME,
    CLI_LOGGER_NAME,
    CORRELATION_FILE_NAME,
    DAILY_FILE_NAME,
    EDGES_FILE_NAME,
    EPI_COLUMNS,
    EXIT_CONFIG_ERROR,
    EXIT_OK,
    NODES_FILE_NAME,
    PLOTS_DIR_NAME,
    SCORES_DIR_NAME,
    SIGN_TEST_FILE_NAME,
    STRATEGIES,
    SUMMARY_FILE_NAME,
    TOPOLOGY_COLUMNS,
    TOPOLOGY_FILE_NAME,
)
from seconet.exceptions import ConfigurationError
from seconet.logger import setup_logging
from seconet.utils.decorators import exit_codes

logger = logging.getLogger(CLI_LOGGER_NAME)

DEFAULT_OUT = "output"


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level)

    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_CONFIG_ERROR

    return args.func(args)


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="seconet",
        description=APP_DESCRIPTION,
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging verbosity (default: $SECONET_LOG or WARNING)",
    )

    sub = parser.add_subparsers(title="commands", parser_class=_Parser)

    # ---- version ----
    ver = sub.add_parser("version", help="Print version and exit")
    ver.set_defaults(func=_cmd_version)

    # ---- generate ----
    gen = sub.add_parser("generate", help="Grow one network and export its snapshot and topology")
    _add_run_arguments(gen)
    gen.add_argument("--audit", action="store_true", help="Check bipartiteness after every growth step")
    gen.set_defaults(func=_cmd_generate)

    # ---- simulate ----
    sim = sub.add_parser("simulate", help="Run one simulation and write the per-day CSV")
    _add_run_arguments(sim)
    sim.add_argument("--strategy", required=True, metavar="NAME", help=f"One of: {', '.join(STRATEGIES)}")
    sim.add_argument(
        "--dump-scores",
        action="store_true",
        help="Write the centrality scores computed at every session as node_id,score CSVs",
    )
    sim.set_defaults(func=_cmd_simulate)

    # ---- sweep ----
    swp = sub.add_parser("sweep", help="Run every sweep point x strategy x replicate")
    swp.add_argument("--config", required=True, metavar="PATH", help="Scenario JSON/YAML file")
    swp.add_argument("--seed", type=int, default=None, metavar="N", help="Base seed (default: from config)")
    swp.add_argument("--out", default=DEFAULT_OUT, metavar="DIR", help=f"Output directory (default: {DEFAULT_OUT})")
    swp.add_argument("--replicates", type=int, default=None, metavar="N", help="Replicates per sweep point")
    swp.add_argument("--parallel", type=int, default=None, metavar="N", help="Worker processes")
    swp.add_argument(
        "--strategy",
        action="append",
        default=None,
        metavar="NAME",
        help="Restrict to this strategy (repeatable; default: all in config)",
    )
    swp.set_defaults(func=_cmd_sweep)

    # ---- plot ----
    pl = sub.add_parser("plot", help="Render SVG figures from a summary CSV")
    pl.add_argument("--summary", required=True, metavar="PATH", help="Summary CSV written by 'sweep'")
    pl.add_argument("--epi", default=None, metavar="METRIC", help=f"One of: {', '.join(EPI_COLUMNS)}")
    pl.add_argument("--topo", default=None, metavar="METRIC", help=f"One of: {', '.join(TOPOLOGY_COLUMNS)}")
    pl.add_argument("--all", action="store_true", help="Render every epidemic x topology metric pair")
    pl.add_argument("--bins", type=int, default=None, metavar="N", help="Binned-mean bins (default: plot_bins from --config, else 8)")
    pl.add_argument("--config", default=None, metavar="PATH", help="Scenario file supplying plot_bins")
    pl.add_argument("--out", default=DEFAULT_OUT, metavar="DIR", help=f"Output directory (default: {DEFAULT_OUT})")
    pl.set_defaults(func=_cmd_plot)

    # ---- report ----
    rep = sub.add_parser("report", help="Sign tests and topology correlations from a summary CSV")
    rep.add_argument("--summary", required=True, metavar="PATH", help="Summary CSV written by 'sweep'")
    rep.add_argument("--out", default=DEFAULT_OUT, metavar="DIR", help=f"Output directory (default: {DEFAULT_OUT})")
    rep.set_defaults(func=_cmd_report)

    return parser


def _add_run_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", required=True, metavar="PATH", help="Scenario JSON/YAML file")
    p.add_argument("--seed", type=int, default=None, metavar="N", help="Run seed (default: from config)")
    p.add_argument("--out", default=DEFAULT_OUT, metavar="DIR", help=f"Output directory (default: {DEFAULT_OUT})")
    p.add_argument("--sweep-id", type=int, default=0, metavar="K", help="Sweep point to use (default: 0)")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_version(args) -> int:
    from seconet.__version__ import __version__
    print(f"{APP_NAME}  v{__version__}")
    return EXIT_OK


@exit_codes
def _cmd_generate(args) -> int:
    """Grow one network with the growth stream of ``--seed`` and export it."""
    from seconet.analysis.topology import summarize
    from seconet.core.growth import grow_network
    from seconet.export.csv_writer import write_edges, write_json, write_nodes
    from seconet.harness.simulation import derive_streams

    config = _load_config(args)
    scenario = config.scenario
    point = _sweep_point(scenario, args.sweep_id)
    growth = scenario.growth_for(point)

    network = grow_network(growth, derive_streams(scenario.seed, args.sweep_id).growth, audit=args.audit)
    summary = summarize(network, scenario.topology)

    write_edges(network, os.path.join(args.out, EDGES_FILE_NAME))
    write_nodes(network, os.path.join(args.out, NODES_FILE_NAME))
    write_json(
        os.path.join(args.out, TOPOLOGY_FILE_NAME),
        {
            "seed": scenario.seed,
            "sweep_id": args.sweep_id,
            "links": network.link_count,
            "frozen_link_count": network.frozen_link_count,
            "steady_since": network.steady_since,
            "topology": summary,
        },
    )
    logger.info("Generate complete — %d links written to %s", network.link_count, args.out)
    return EXIT_OK


@exit_codes
def _cmd_simulate(args) -> int:
    """One run; writes the daily series, the session audit and optionally score dumps."""
    from seconet.analysis.topology import summarize
    from seconet.export.csv_writer import write_audit, write_daily, write_json, write_scores
    from seconet.harness.metrics import compute_metrics
    from seconet.harness.simulation import run_simulation

    _check_strategies([args.strategy])
    config = _load_config(args)
    scenario = config.scenario
    _sweep_point(scenario, args.sweep_id)

    result = run_simulation(
        scenario, args.strategy, scenario.seed, sweep_id=args.sweep_id, keep_scores=args.dump_scores
    )

    write_daily(result.series, os.path.join(args.out, DAILY_FILE_NAME))
    write_audit(result.campaign.audit, os.path.join(args.out, AUDIT_FILE_NAME))
    write_json(
        os.path.join(args.out, TOPOLOGY_FILE_NAME),
        {
            "seed": scenario.seed,
            "sweep_id": args.sweep_id,
            "strategy": args.strategy,
            "topology": summarize(result.network, scenario.topology),
            "metrics": compute_metrics(result.series),
        },
    )
    if args.dump_scores:
        for scores in result.campaign.scores:
            name = f"{scores.kind.value}_day{scores.computed_at}.csv"
            write_scores(scores, os.path.join(args.out, SCORES_DIR_NAME, name))

    logger.info("Simulate complete — %d days written to %s", len(result.series), args.out)
    return EXIT_OK


@exit_codes
def _cmd_sweep(args) -> int:
    from seconet.export.csv_writer import write_summary
    from seconet.harness.sweep import sweep

    if args.strategy:
        _check_strategies(args.strategy)
    config = _load_config(args, replicates=args.replicates, parallel=args.parallel)
    scenario = config.scenario
    strategies = [s for s in STRATEGIES if s in args.strategy] if args.strategy else None

    records = sweep(scenario, strategies=strategies)
    path = os.path.join(args.out, SUMMARY_FILE_NAME)
    write_summary(records, path)

    failed = sum(1 for r in records if r.failed)
    logger.info(
        "Sweep complete — %d records written to %s%s",
        len(records), path, f", {failed} failed" if failed else "",
    )
    return EXIT_OK


@exit_codes
def _cmd_plot(args) -> int:
    from seconet.constants import DEFAULT_PLOT_BINS
    from seconet.export.csv_writer import read_summary
    from seconet.export.plot import plot, plot_all

    records = read_summary(args.summary)
    bins = args.bins
    if bins is None:
        bins = _load_config(args).scenario.plot_bins if args.config else DEFAULT_PLOT_BINS
    if bins < 1:
        raise ConfigurationError(f"--bins must be >= 1, got {bins}")
    out_dir = os.path.join(args.out, PLOTS_DIR_NAME)

    if args.all:
        paths = plot_all(records, out_dir, bins)
        logger.info("Plot complete — %d figures in %s", len(paths), out_dir)
        return EXIT_OK

    if not args.epi or not args.topo:
        raise ConfigurationError("plot needs --epi and --topo, or --all")
    path = os.path.join(out_dir, f"{args.epi}_vs_{args.topo}.svg")
    plot(records, args.epi, args.topo, path, bins)
    return EXIT_OK


@exit_codes
def _cmd_report(args) -> int:
    from seconet.analysis.comparison import correlations, sign_tests
    from seconet.export.csv_writer import read_summary, write_correlations, write_sign_tests

    records = read_summary(args.summary)
    if not records:
        raise ConfigurationError(f"{args.summary} holds no records")
    write_sign_tests(sign_tests(records), os.path.join(args.out, SIGN_TEST_FILE_NAME))
    write_correlations(correlations(records), os.path.join(args.out, CORRELATION_FILE_NAME))
    logger.info("Report complete — written to %s", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _load_config(args, **overrides):
    """Load the scenario and apply ``--seed`` plus any other flag overrides."""
    from seconet.config import ConfigManager

    config = ConfigManager.from_file(args.config)
    config = config.with_overrides(seed=getattr(args, "seed", None), **overrides)
    config.validate()
    return config


def _check_strategies(names: List[str]) -> None:
    unknown = [n for n in names if n not in STRATEGIES]
    if unknown:
        raise ConfigurationError(
            f"unknown strategy {', '.join(unknown)}; valid strategies: {', '.join(STRATEGIES)}"
        )


def _sweep_point(scenario, sweep_id: int):
    if not 0 <= sweep_id < len(scenario.sweep):
        raise ConfigurationError(f"--sweep-id {sweep_id} out of range (0..{len(scenario.sweep) - 1})")
    return scenario.sweep[sweep_id]


if __name__ == "__main__":
    sys.exit(main())
