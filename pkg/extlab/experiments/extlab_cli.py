# Copyright (C) 2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# extlab Software in commercial settings.
#
# END COPYRIGHT
from typing import Any
from typing import Dict
from typing import List

import argparse
import sys

from pathlib import Path

from extlab.experiments.convergence_sweep import ConvergenceSweep
from extlab.experiments.example_one import ExampleOne
from extlab.experiments.example_two import ExampleTwo
from extlab.experiments.extlab_logging import ExtLabLogging
from extlab.experiments.report_writer import ReportWriter
from extlab.experiments.self_test import SelfTest
from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_config_factory import SweepConfigFactory
from extlab.experiments.sweep_report import SweepReport
from extlab.interfaces.error_formatter import ErrorFormatter
from extlab.internals.errors.config_error import ConfigError
from extlab.internals.errors.error_formatter_factory import ErrorFormatterFactory
from extlab.internals.errors.extlab_error import ExtLabError


class ExtLabCli:
    """
    Command line tool for the extension calculus experiments:

        extlab sweep      convergence sweep of the imaginary boundary maps
        extlab example1   the Friedrichs extension on the half-line
        extlab example2   the point interactions S_alpha
        extlab selftest   oracle suites of the numerical kernel
    """

    EXIT_PASS: int = 0
    EXIT_CONFIG: int = 2
    EXIT_FAILURE: int = 3

    def __init__(self):
        """
        Constructor
        """
        self.args = None
        self.writer = ReportWriter()

    def main(self, argv: List[str] = None) -> int:
        """
        Main entry point for command line user interaction.

        :param argv: The arguments, without the program name.  None means sys.argv.
        :return: The process exit code
        """
        self.parse_args(argv)
        formatter: ErrorFormatter = ErrorFormatterFactory.create_formatter("json" if self.args.json else "string")
        try:
            config: SweepConfig = self.create_config()
            ExtLabLogging().setup_logging(self.args.command, config.run_id())
            report: SweepReport = self.run_command(config)
            self.write_outputs(report, config)
        except ConfigError as exception:
            print(formatter.format_error(self.args.command, exception), file=sys.stderr)
            return self.EXIT_CONFIG
        except ExtLabError as exception:
            print(formatter.format_error(self.args.command, exception), file=sys.stderr)
            return self.EXIT_FAILURE
        except (OSError, ValueError) as exception:
            # Unwritable report paths and numerical failures outside ExtLabError
            print(formatter.format_error(self.args.command, exception), file=sys.stderr)
            return self.EXIT_FAILURE

        self.print_summary(report)
        if report.passed():
            return self.EXIT_PASS
        return self.EXIT_FAILURE

    def parse_args(self, argv: List[str] = None):
        """
        Parse command line arguments into member variables
        """
        arg_parser = argparse.ArgumentParser(prog="extlab",
                                             description="Self-adjoint extension parametrisation experiments")
        self.add_args(arg_parser)
        self.args = arg_parser.parse_args(argv)

    def add_args(self, arg_parser: argparse.ArgumentParser):
        """
        Adds arguments.  Allows subclasses a chance to add their own.
        :param arg_parser: The argparse.ArgumentParser to add.
        """
        arg_parser.add_argument("--json", default=False, action="store_true",
                                help="Print the machine-readable JSON summary on stdout")

        # Options shared by every sub-command.  SUPPRESS keeps a top-level --json in effect.
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", default=argparse.SUPPRESS, action="store_true",
                            help="Print the machine-readable JSON summary on stdout")
        common.add_argument("--config", type=str, default=None,
                            help="A .hocon or .json config file layered over the shipped defaults")
        common.add_argument("--seed", type=int, default=None,
                            help="Seed of the probe generator")

        runs = argparse.ArgumentParser(add_help=False)
        group = runs.add_argument_group("run options")
        group.add_argument("--eps", type=str, default=None,
                           help="The eps grid as start:stop:count, geometric from start down to stop")
        group.add_argument("--probes", type=int, default=None,
                           help="Number of probe vectors per model")
        group.add_argument("--workers", type=int, default=None,
                           help="Threads computing the eps grid in parallel")
        group.add_argument("--out", type=str, default=None,
                           help="""
Path of the CSV report.  The JSON summary is written next to it with a .json suffix.
""")

        subparsers = arg_parser.add_subparsers(dest="command", required=True)

        sweep = subparsers.add_parser("sweep", parents=[common, runs],
                                      help="Convergence sweep of the imaginary boundary maps")
        sweep.add_argument("--model", type=str, default=None,
                           help="The model: halfline or twohalflines")
        sweep.add_argument("--extension", type=str, default=None,
                           help="The extension: friedrichs or salpha:<alpha>")

        subparsers.add_parser("example1", parents=[common, runs],
                              help="The Friedrichs extension of the half-line model")

        example2 = subparsers.add_parser("example2", parents=[common, runs],
                                         help="The point interactions S_alpha on two half-lines")
        example2.add_argument("--alpha", type=str, default=None,
                              help="Comma separated couplings, e.g. -2,-1,0,1,3")

        selftest = subparsers.add_parser("selftest", parents=[common],
                                         help="Oracle suites of the numerical kernel")
        selftest.add_argument("--pairs", type=int, default=200,
                              help="Randomized pairs for the quadrature oracle")

    def get_overrides(self) -> Dict[str, Any]:
        """
        :return: The nested config dictionary given by command line flags
        """
        args: Dict[str, Any] = vars(self.args)
        overrides: Dict[str, Any] = {}
        for key in ("model", "extension", "probes", "seed", "workers"):
            if args.get(key) is not None:
                overrides[key] = args.get(key)
        if args.get("eps") is not None:
            overrides["eps"] = SweepConfigFactory.parse_eps(args.get("eps"))
        if args.get("out") is not None:
            csv_path = Path(args.get("out"))
            overrides["output"] = {"csv": str(csv_path), "json": str(csv_path.with_suffix(".json"))}
        if args.get("alpha") is not None:
            overrides["alphas"] = self.parse_alphas(args.get("alpha"))
        return overrides

    @staticmethod
    def parse_alphas(alpha_spec: str) -> List[float]:
        """
        :param alpha_spec: Comma separated couplings
        :return: The list of couplings
        """
        try:
            return [float(part) for part in str(alpha_spec).split(",") if len(part.strip()) > 0]
        except ValueError as exception:
            raise ConfigError(f"--alpha must be a comma separated list of numbers, got {alpha_spec!r}") \
                from exception

    def create_config(self) -> SweepConfig:
        """
        :return: The SweepConfig of this run
        """
        return SweepConfigFactory.create_config(self.args.config, self.get_overrides())

    def run_command(self, config: SweepConfig) -> SweepReport:
        """
        :param config: The validated config
        :return: The report of the selected sub-command
        """
        command: str = self.args.command
        if command == "sweep":
            return ConvergenceSweep(config).run()
        if command == "example1":
            return ExampleOne(config).run()
        if command == "example2":
            return ExampleTwo(config).run()
        return SelfTest(seed=config.seed, pairs=self.args.pairs).run()

    def write_outputs(self, report: SweepReport, config: SweepConfig):
        """
        Writes the CSV and JSON reports where the config says so
        """
        if config.output.csv is not None:
            self.writer.write_csv(report, config.output.csv)
        if config.output.json_path is not None:
            self.writer.write_json(report, config.output.json_path)

    def print_summary(self, report: SweepReport):
        """
        Prints the summary of a finished run on stdout
        """
        if self.args.json:
            print(self.writer.summary_text(report))
            return

        verdict: str = "PASS" if report.passed() else "FAIL"
        print(f"{report.command}: {verdict} ({len(report.verdicts)} checks, {len(report.slopes)} slope fits,"
              f" {len(report.rows)} rows)")
        for failure in report.failures():
            print(f"    failed: {failure}")


def main():
    """
    Console script entry point
    """
    sys.exit(ExtLabCli().main())


if __name__ == '__main__':
    main()
