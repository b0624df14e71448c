#!/usr/bin/env python3
"""
symdetect - Main Entry Point

Detects and recognizes NE/E/M, partial and total symmetries of single- and
multi-output Boolean functions given as truth vectors, PLA or BLIF files.
"""

import argparse
import sys
from dataclasses import dataclass, field
from enum import IntEnum
from typing import List, Optional

import config
from matchers.symmetry import detect_circuit
from matchers.variable_matcher import VariableMatcher
from measures.entropy import cond_entropy_set, profile
from operations.bench_runner import render_bench, run_bench
from operations.report_writer import (REPORT_FORMATS, EntropyTable, build_document, emit_entropy,
                                      emit_reports)
from oracle.differential import run_selftest
from parsers import FORMATS, load_circuit
from utils.errors import InvariantError, LimitError, SymdetectError
from utils.logger import configure_cli_logging, setup_logger

logger = setup_logger()


class ExitCode(IntEnum):
    """Process exit codes."""

    OK = 0
    PARSE_ERROR = 1
    LIMIT = 2
    INVARIANT = 3


@dataclass
class CliConfig:
    """Parsed command line."""

    command: str
    inputs: List[str] = field(default_factory=list)
    input_format: str = "auto"
    output_format: str = "text"
    use_filter: bool = True
    include_vacuous: bool = False
    per_output: bool = False
    max_vars: int = config.MAX_VARS
    condition: Optional[str] = None
    workers: int = config.BENCH_WORKERS
    seed: int = 0
    samples: int = 200
    selftest_vars: int = 6
    debug: bool = False


class SymmetryAnalyzer:
    """Runs one CLI command and maps library errors to exit codes."""

    def __init__(self, cli: CliConfig):
        """
        Initialize analyzer.

        Args:
            cli: Parsed command line
        """
        self.cli = cli
        self.stats = {"circuits": 0, "outputs": 0, "failed": 0}

    def _write(self, data: bytes) -> None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()

    def _log_configuration(self) -> None:
        """Log effective settings at DEBUG level."""
        logger.debug("=" * 60)
        logger.debug(f"symdetect {config.TOOL_VERSION} - {self.cli.command}")
        logger.debug(f"  • Input format: {self.cli.input_format}")
        logger.debug(f"  • Report format: {self.cli.output_format}")
        logger.debug(f"  • Entropy filter: {'Enabled' if self.cli.use_filter else 'Disabled'}")
        logger.debug(f"  • Vacuous pairs: {'Included' if self.cli.include_vacuous else 'Excluded'}")
        logger.debug(f"  • Max variables: {self.cli.max_vars}")
        logger.debug("=" * 60)

    def run(self) -> int:
        """
        Execute the configured command.

        Returns:
            ExitCode value
        """
        for issue in config.validate_config():
            logger.warning(f"Configuration: {issue}")
        self._log_configuration()

        commands = {
            "analyze": self.analyze,
            "entropy": self.entropy,
            "bench": self.bench,
            "selftest": self.selftest,
        }
        try:
            return commands[self.cli.command]()
        except LimitError as e:
            self._report_failure(e)
            return ExitCode.LIMIT
        except InvariantError as e:
            self._report_failure(e)
            return ExitCode.INVARIANT
        except SymdetectError as e:
            self._report_failure(e)
            return ExitCode.PARSE_ERROR

    def _report_failure(self, error: Exception) -> None:
        if self.cli.debug:
            logger.exception(f"{type(error).__name__}: {error}")
        else:
            logger.error(str(error))

    def analyze(self) -> int:
        """Parse each input, detect symmetries and print one report for all of them."""
        docs = []
        for path in self.cli.inputs:
            circuit = load_circuit(path, self.cli.input_format, self.cli.max_vars)
            logger.info(f"Analyzing {circuit}")
            report = detect_circuit(circuit.functions, self.cli.use_filter, self.cli.include_vacuous)
            circuit.manager.log_stats()
            docs.append(build_document(
                circuit.name, circuit.inputs, circuit.outputs, report,
                include_vacuous=self.cli.include_vacuous,
                per_output=self.cli.per_output,
            ))
            self.stats["circuits"] += 1
            self.stats["outputs"] += len(circuit.outputs)
        self._write(emit_reports(docs, self.cli.output_format))
        logger.info(f"Analyzed {self.stats['circuits']} circuit(s), {self.stats['outputs']} output(s)")
        return ExitCode.OK

    def entropy(self) -> int:
        """Print the entropy table of every output, plus H(f | S) with --set."""
        tables = []
        for path in self.cli.inputs:
            circuit = load_circuit(path, self.cli.input_format, self.cli.max_vars)
            condition = ()
            if self.cli.condition:
                condition = tuple(VariableMatcher(circuit.inputs).resolve_list(self.cli.condition))
            for name, f in zip(circuit.outputs, circuit.functions):
                tables.append(EntropyTable(
                    circuit=circuit.name,
                    output=name,
                    inputs=tuple(circuit.inputs),
                    profile=profile(f),
                    condition=condition,
                    conditional_entropy=cond_entropy_set(f, condition) if condition else None,
                ))
        self._write(emit_entropy(tables, self.cli.output_format))
        return ExitCode.OK

    def bench(self) -> int:
        """Analyze every circuit file of a directory; one row per circuit."""
        directory = self.cli.inputs[0]
        succeeded, failed = run_bench(
            directory,
            fmt=self.cli.input_format,
            max_vars=self.cli.max_vars,
            use_filter=self.cli.use_filter,
            include_vacuous=self.cli.include_vacuous,
            workers=self.cli.workers,
        )
        self.stats["circuits"] = len(succeeded)
        self.stats["failed"] = len(failed)
        if not succeeded:
            logger.error(f"No parsable circuit files in {directory}")
            return ExitCode.PARSE_ERROR
        # The bench table is CSV unless JSON is asked for
        fmt = "json" if self.cli.output_format == "json" else "csv"
        self._write(render_bench(succeeded, fmt))
        logger.info(f"Bench: {len(succeeded)} analyzed, {len(failed)} skipped")
        return ExitCode.OK

    def selftest(self) -> int:
        """Randomized differential check of the BDD engine against the oracle."""
        mismatches = run_selftest(self.cli.seed, self.cli.samples, self.cli.selftest_vars)
        for mismatch in mismatches:
            logger.error(mismatch)
        self._write(
            f"selftest: {self.cli.samples} functions, seed {self.cli.seed}, "
            f"{len(mismatches)} mismatch(es)\n".encode("utf-8")
        )
        return ExitCode.INVARIANT if mismatches else ExitCode.OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the analyze, entropy, bench and selftest subcommands."""
    parser = argparse.ArgumentParser(
        prog="symdetect",
        description="Symmetry detection for Boolean functions via entropy measures on BDDs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s analyze ex4.tt                 # Pairs, groups and (S,N) summary
  %(prog)s analyze ex5.tt --output json   # Machine-readable report
  %(prog)s entropy ex8.pla --set x1,x2    # Entropy table and H(f|x1,x2)
  %(prog)s bench circuits/ --workers 4    # One CSV row per circuit
  %(prog)s selftest --seed 7              # BDD engine vs truth-table oracle

Exit codes:
  0 ok, 1 parse error, 2 resource limit, 3 internal invariant violation

Configuration:
  Set SYMDETECT_* environment variables (or a .env file) to change limits.
        """
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.TOOL_VERSION}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="input_format", choices=FORMATS, default="auto",
                        help="Input format (default: by file extension)")
    common.add_argument("--output", dest="output_format", choices=REPORT_FORMATS, default="text",
                        help="Report format")
    common.add_argument("--no-filter", action="store_true",
                        help="Run every exact check instead of screening by entropy")
    common.add_argument("--include-vacuous", action="store_true",
                        help="Keep pairs of variables the function does not depend on")
    common.add_argument("--per-output", action="store_true",
                        help="Show every output's own pairs and groups")
    common.add_argument("--max-vars", type=int, default=config.MAX_VARS,
                        help=f"Refuse circuits with more inputs (default: {config.MAX_VARS})")
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized modes")
    common.add_argument("--quiet", action="store_true", help="Only warnings and errors on stderr")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Detect symmetries of circuit files")
    analyze.add_argument("inputs", nargs="+", help="Circuit files")

    entropy = commands.add_parser("entropy", parents=[common], help="Print entropy measures")
    entropy.add_argument("inputs", nargs="+", help="Circuit files")
    entropy.add_argument("--set", dest="condition", help="Comma-separated variables for H(f | set)")

    bench = commands.add_parser("bench", parents=[common], help="Analyze a directory of circuits")
    bench.add_argument("inputs", nargs=1, metavar="directory", help="Directory of circuit files")
    bench.add_argument("--workers", type=int, default=config.BENCH_WORKERS,
                       help="Worker processes (default: %(default)s)")

    selftest = commands.add_parser("selftest", parents=[common], help="Differential check against the oracle")
    selftest.add_argument("--samples", type=int, default=200, help="Random functions to compare")
    selftest.add_argument("--vars", dest="selftest_vars", type=int, default=6,
                          help="Largest variable count (default: %(default)s)")
    return parser


def parse_cli(argv: Optional[List[str]] = None) -> CliConfig:
    """Parse argv into a CliConfig."""
    args = build_parser().parse_args(argv)
    configure_cli_logging(debug=args.debug, quiet=args.quiet)
    return CliConfig(
        command=args.command,
        inputs=list(getattr(args, "inputs", [])),
        input_format=args.input_format,
        output_format=args.output_format,
        use_filter=not args.no_filter,
        include_vacuous=args.include_vacuous,
        per_output=args.per_output,
        max_vars=args.max_vars,
        condition=getattr(args, "condition", None),
        workers=getattr(args, "workers", config.BENCH_WORKERS),
        seed=args.seed,
        samples=getattr(args, "samples", 200),
        selftest_vars=getattr(args, "selftest_vars", 6),
        debug=args.debug,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for CLI.

    Returns:
        Exit code
    """
    return int(SymmetryAnalyzer(parse_cli(argv)).run())


if __name__ == "__main__":
    sys.exit(main())
